//! Associativity defects, flatness and truncated star products.

use std::sync::Arc;

use hochhodge::cochain::Cochain;
use hochhodge::deform::{
    assoc_defect, mc_defect, star_assoc_defect, star_commutator, star_product, star_series,
    ConstantBivector, FormalSeries,
};
use hochhodge::hochschild::{circle, d};
use hochhodge::poisson::Poly;
use hochhodge::{corpus, int, rat, Rat, RatAlgebra};

fn arc(name: &str) -> Arc<RatAlgebra> {
    Arc::new(corpus::by_name::<Rat>(name).unwrap())
}

fn plane() -> ConstantBivector<Rat> {
    ConstantBivector::new(
        2,
        vec![
            vec![int(0), int(1)],
            vec![int(-1), int(0)],
        ],
    )
    .unwrap()
}

#[test]
fn built_in_products_are_associative() {
    for (_, algebra) in corpus::all::<Rat>() {
        let algebra = Arc::new(algebra);
        let mult = Cochain::multiplication(algebra.clone()).unwrap();
        assert!(assoc_defect(&mult).unwrap().is_zero());
    }
    // Matrix units associate even though they fail commutativity.
    let m = Arc::new(corpus::matrix_square::<Rat>());
    let mult = Cochain::multiplication(m).unwrap();
    assert!(assoc_defect(&mult).unwrap().is_zero());
}

#[test]
fn a_broken_product_has_a_nonzero_defect() {
    let a = arc("dual-numbers");
    let mut mu = Cochain::zero(a.clone(), 2).unwrap();
    mu.set(&[0, 0], 0, int(1));
    mu.set(&[1, 0], 0, int(1));
    let defect = assoc_defect(&mu).unwrap();
    assert!(!defect.is_zero());
    // (x x) 1 - x (x 1) = mu(0, 1) - mu(x, 1) = -1.
    assert_eq!(*defect.get(&[1, 1, 0], 0), int::<Rat>(-1));
}

#[test]
fn flatness_equation_expands_as_written() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let a = arc("split-pair");
    for _ in 0..6 {
        let gamma = Cochain::random(a.clone(), 2, &mut rng).unwrap();
        let direct = mc_defect(&gamma).unwrap();
        let expanded = d(&gamma)
            .unwrap()
            .add(&circle(&gamma, &gamma).unwrap())
            .unwrap();
        assert_eq!(direct, expanded);
    }
}

#[test]
fn flat_deformations_deform_associatively() {
    let a = arc("dual-numbers");
    let mult = Cochain::multiplication(a.clone()).unwrap();
    // Turning x^2 = 0 into x^2 = 1 keeps the product associative.
    let mut gamma = Cochain::zero(a.clone(), 2).unwrap();
    gamma.set(&[1, 1], 0, int(1));
    assert!(mc_defect(&gamma).unwrap().is_zero());
    assert!(assoc_defect(&mult.add(&gamma).unwrap()).unwrap().is_zero());
    // A curved direction: sending 1*1 to 1 + x bends associativity off the
    // flat locus unless the defect agrees, and here it does not vanish.
    let mut eta = Cochain::zero(a.clone(), 2).unwrap();
    eta.set(&[0, 1], 0, int(1));
    let curved = mc_defect(&eta).unwrap();
    assert!(!curved.is_zero());
    let minus_defect = assoc_defect(&mult.add(&eta).unwrap())
        .unwrap()
        .scale(&int::<Rat>(-1));
    assert_eq!(curved, minus_defect);
}

#[test]
fn bivector_constructor_enforces_antisymmetry() {
    assert!(ConstantBivector::new(2, vec![vec![int::<Rat>(0), int(1)], vec![int(1), int(0)]]).is_err());
    assert!(ConstantBivector::new(2, vec![vec![int::<Rat>(1), int(0)], vec![int(0), int(0)]]).is_err());
    assert!(ConstantBivector::new(2, vec![vec![int::<Rat>(0); 3]; 2]).is_err());
    let pi = plane();
    assert_eq!(*pi.get(0, 1), int::<Rat>(1));
    assert_eq!(*pi.get(1, 0), int::<Rat>(-1));
    let mv = pi.to_multivector();
    assert_eq!(mv.degree(), 2);
    assert_eq!(mv.component(&[0, 1]), Poly::one(2));
}

#[test]
fn series_bookkeeping() {
    let f = Poly::<Rat>::var(2, 0);
    let s = FormalSeries::from_poly(f.clone(), 2);
    assert_eq!(s.order(), 2);
    assert_eq!(*s.coeff(0), f);
    assert!(s.coeff(1).is_zero() && s.coeff(2).is_zero());
    let t = FormalSeries::from_coeffs(2, vec![Poly::zero(2), f.clone()]).unwrap();
    assert_eq!(t.order(), 1);
    assert!(s.add(&t).is_err());
    assert!(FormalSeries::<Rat>::from_coeffs(2, vec![]).is_err());
}

#[test]
fn plane_star_products_have_frozen_coefficients() {
    let x = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    let xp = x.mul(&p);
    let s = star_product(&plane(), &x, &p, 3).unwrap();
    assert_eq!(*s.coeff(0), xp);
    assert_eq!(*s.coeff(1), Poly::one(2));
    assert!(s.coeff(2).is_zero() && s.coeff(3).is_zero());

    let r = star_product(&plane(), &p, &x, 3).unwrap();
    assert_eq!(*r.coeff(1), Poly::one(2).scale(&int::<Rat>(-1)));

    let sq = star_product(&plane(), &x.mul(&x), &p.mul(&p), 3).unwrap();
    assert_eq!(*sq.coeff(0), xp.mul(&xp));
    assert_eq!(*sq.coeff(1), xp.scale(&int::<Rat>(4)));
    assert_eq!(*sq.coeff(2), Poly::constant(2, int(2)));
    assert!(sq.coeff(3).is_zero());
}

#[test]
fn star_series_matches_star_product() {
    let x = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    let fs = FormalSeries::from_poly(x.clone(), 3);
    let ps = FormalSeries::from_poly(p.clone(), 3);
    let via_series = star_series(&plane(), &fs, &ps, 3).unwrap();
    let direct = star_product(&plane(), &x, &p, 3).unwrap();
    assert_eq!(via_series, direct);
}

#[test]
fn star_respects_scalar_bilinearity() {
    let x = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    let scaled = star_product(&plane(), &x.scale(&rat(2, 3)), &p, 2).unwrap();
    let plain = star_product(&plane(), &x, &p, 2).unwrap().scale(&rat(2, 3));
    assert_eq!(scaled, plain);
}

#[test]
fn star_commutator_leading_terms() {
    let x = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    let c = star_commutator(&plane(), &x, &p, 3).unwrap();
    assert!(c.coeff(0).is_zero());
    assert_eq!(*c.coeff(1), Poly::constant(2, int(2)));
    assert!(c.coeff(2).is_zero());
    // Star commutators of a function with itself vanish identically.
    let selfc = star_commutator(&plane(), &x.mul(&p), &x.mul(&p), 3).unwrap();
    assert!(selfc.is_zero());
}

#[test]
fn truncated_star_is_associative_through_its_order() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let pi = ConstantBivector::<Rat>::random(3, &mut rng);
        let f = Poly::<Rat>::random(3, 2, &mut rng);
        let g = Poly::<Rat>::random(3, 2, &mut rng);
        let h = Poly::<Rat>::random(3, 2, &mut rng);
        assert!(star_assoc_defect(&pi, &f, &g, &h, 3).unwrap().is_zero());
    }
}

#[test]
fn star_product_requires_matching_variable_counts() {
    let f = Poly::<Rat>::var(2, 0);
    let g = Poly::<Rat>::var(3, 0);
    assert!(star_product(&plane(), &f, &g, 2).is_err());
}
