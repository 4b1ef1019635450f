//! Polynomials, multivectors, the graded bracket and Poisson obstructions.

use hochhodge::poisson::{
    cyclic_jacobi_defect, is_poisson, jacobiator, pair_with_gradients, poisson_bracket,
    Multivector, Poly,
};
use hochhodge::{int, rat, Rat};

fn x() -> Poly<Rat> {
    Poly::var(3, 0)
}
fn y() -> Poly<Rat> {
    Poly::var(3, 1)
}
fn z() -> Poly<Rat> {
    Poly::var(3, 2)
}

#[test]
fn polynomial_arithmetic() {
    let p = x().mul(&x()).add(&y().scale(&int::<Rat>(3)));
    assert_eq!(p.degree(), Some(2));
    assert_eq!(p.partial(0), x().scale(&int::<Rat>(2)));
    assert_eq!(p.partial(1), Poly::constant(3, int(3)));
    assert!(p.partial(2).is_zero());
    let q = p.sub(&p);
    assert!(q.is_zero());
    assert_eq!(q.degree(), None);
    let point = [int::<Rat>(2), int::<Rat>(1), int::<Rat>(0)];
    assert_eq!(p.eval(&point), int::<Rat>(7));
}

#[test]
fn polynomial_display_is_readable() {
    let p = x().mul(&x()).sub(&y());
    let s = format!("{p}");
    assert!(s.contains("x^2"), "{s}");
    assert!(s.contains('y'), "{s}");
}

#[test]
fn multivector_term_validation() {
    let mut mv = Multivector::<Rat>::zero(3, 2);
    // A repeated direction is an antisymmetric zero, not an error.
    mv.add_term(&[0, 0], &x()).unwrap();
    assert!(mv.is_zero());
    assert!(mv.add_term(&[0, 1, 2], &x()).is_err());
    assert!(mv.add_term(&[0, 5], &x()).is_err());
    mv.add_term(&[1, 0], &x()).unwrap();
    // Unsorted directions are normalized with a sign.
    assert_eq!(mv.component(&[0, 1]), x().scale(&int::<Rat>(-1)));
    assert_eq!(mv.signed_component(&[1, 0]), x());
}

#[test]
fn wedge_of_coordinate_fields() {
    let mut dx = Multivector::<Rat>::zero(3, 1);
    dx.add_term(&[0], &Poly::one(3)).unwrap();
    let mut dy = Multivector::<Rat>::zero(3, 1);
    dy.add_term(&[1], &Poly::one(3)).unwrap();
    let w = dx.wedge(&dy).unwrap();
    assert_eq!(w.degree(), 2);
    assert_eq!(w.component(&[0, 1]), Poly::one(3));
    let back = dy.wedge(&dx).unwrap();
    assert_eq!(back.component(&[0, 1]), Poly::one(3).scale(&int::<Rat>(-1)));
    // Wedging a repeated direction kills the term.
    assert!(dx.wedge(&dx).unwrap().is_zero());
}

#[test]
fn bracket_of_vector_fields_is_the_commutator() {
    // [x d_y, d_x] acts on f as x d_y(d_x f) - d_x(x d_y f) = -d_y f.
    let mut xdy = Multivector::<Rat>::zero(3, 1);
    xdy.add_term(&[1], &x()).unwrap();
    let mut dx = Multivector::<Rat>::zero(3, 1);
    dx.add_term(&[0], &Poly::one(3)).unwrap();
    let b = xdy.sn_bracket(&dx).unwrap();
    let mut expected = Multivector::<Rat>::zero(3, 1);
    expected.add_term(&[1], &Poly::one(3).scale(&int::<Rat>(-1))).unwrap();
    assert_eq!(b, expected);
}

#[test]
fn bracket_against_functions_is_directional_derivative() {
    let mut v = Multivector::<Rat>::zero(3, 1);
    v.add_term(&[0], &y()).unwrap();
    let f = x().mul(&x());
    // [y d_x, f] = y d_x(f) as a function.
    let lhs = v.sn_bracket(&Multivector::function(f.clone())).unwrap();
    assert_eq!(lhs, Multivector::function(y().mul(&x()).scale(&int::<Rat>(2))));
    // And the opposite order flips the sign.
    let rhs = Multivector::function(f).sn_bracket(&v).unwrap();
    assert_eq!(rhs, lhs.scale(&int::<Rat>(-1)));
}

#[test]
fn canonical_plane_bracket() {
    let mut gamma = Multivector::<Rat>::zero(2, 2);
    gamma.add_term(&[0, 1], &Poly::one(2)).unwrap();
    let q = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    assert_eq!(poisson_bracket(&gamma, &q, &p).unwrap(), Poly::one(2));
    assert_eq!(
        poisson_bracket(&gamma, &p, &q).unwrap(),
        Poly::one(2).scale(&int::<Rat>(-1))
    );
    assert!(poisson_bracket(&gamma, &q, &q).unwrap().is_zero());
    // {q, p^2} = 2p.
    assert_eq!(
        poisson_bracket(&gamma, &q, &p.mul(&p)).unwrap(),
        p.scale(&int::<Rat>(2))
    );
    assert!(is_poisson(&gamma).unwrap());
}

#[test]
fn gradient_pairing_is_a_determinant() {
    let mut w = Multivector::<Rat>::zero(3, 2);
    w.add_term(&[0, 1], &Poly::one(3)).unwrap();
    // Pairing dx^dy against (f, g) takes the Jacobian minor.
    let f = x().mul(&y());
    let g = y();
    let paired = pair_with_gradients(&w, &[f, g]).unwrap();
    // d_x(xy) d_y(y) - d_y(xy) d_x(y) = y.
    assert_eq!(paired, y());
}

#[test]
fn rotation_bivector_is_poisson() {
    let mut gamma = Multivector::<Rat>::zero(3, 2);
    gamma.add_term(&[0, 1], &z()).unwrap();
    gamma.add_term(&[1, 2], &x()).unwrap();
    gamma.add_term(&[2, 0], &y()).unwrap();
    assert!(is_poisson(&gamma).unwrap());
    assert!(jacobiator(&gamma).unwrap().is_zero());
    assert!(cyclic_jacobi_defect(&gamma, &x(), &y(), &z()).unwrap().is_zero());
    // The Casimir x^2 + y^2 + z^2 brackets to zero with everything linear.
    let casimir = x().mul(&x()).add(&y().mul(&y())).add(&z().mul(&z()));
    for f in [x(), y(), z()] {
        assert!(poisson_bracket(&gamma, &casimir, &f).unwrap().is_zero());
    }
}

#[test]
fn obstructed_bivector_has_the_frozen_jacobiator() {
    let mut gamma = Multivector::<Rat>::zero(3, 2);
    gamma.add_term(&[0, 1], &y().mul(&y())).unwrap();
    gamma.add_term(&[1, 2], &x()).unwrap();
    assert!(!is_poisson(&gamma).unwrap());
    let j = jacobiator(&gamma).unwrap();
    assert_eq!(j.degree(), 3);
    let expected = Poly::<Rat>::monomial(3, vec![1, 1, 0], int(-2));
    assert_eq!(j.component(&[0, 1, 2]), expected);
    // The coordinate cyclic sum reproduces exactly that component.
    assert_eq!(cyclic_jacobi_defect(&gamma, &x(), &y(), &z()).unwrap(), expected);
}

#[test]
fn jacobiator_scales_quadratically() {
    let mut gamma = Multivector::<Rat>::zero(3, 2);
    gamma.add_term(&[0, 1], &y().mul(&y())).unwrap();
    gamma.add_term(&[1, 2], &x()).unwrap();
    let doubled = gamma.scale(&int::<Rat>(2));
    let j1 = jacobiator(&gamma).unwrap();
    let j4 = jacobiator(&doubled).unwrap();
    assert_eq!(j4, j1.scale(&int::<Rat>(4)));
}

#[test]
fn self_bracket_matches_jacobiator_twice() {
    let mut gamma = Multivector::<Rat>::zero(3, 2);
    gamma.add_term(&[0, 1], &y().mul(&y())).unwrap();
    gamma.add_term(&[1, 2], &x()).unwrap();
    let sb = gamma.sn_bracket(&gamma).unwrap();
    assert_eq!(sb, jacobiator(&gamma).unwrap().scale(&int::<Rat>(2)));
}

#[test]
fn bracket_rejects_mismatched_variable_counts() {
    let a = Multivector::<Rat>::zero(2, 1);
    let b = Multivector::<Rat>::zero(3, 1);
    assert!(a.sn_bracket(&b).is_err());
    assert!(a.wedge(&b).is_err());
    assert!(a.add(&b).is_err());
}

#[test]
fn fractional_coefficients_survive_the_calculus() {
    let mut gamma = Multivector::<Rat>::zero(2, 2);
    gamma.add_term(&[0, 1], &Poly::constant(2, rat(1, 3))).unwrap();
    let q = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    assert_eq!(
        poisson_bracket(&gamma, &q, &p).unwrap(),
        Poly::constant(2, rat(1, 3))
    );
}
