//! Multiplication tables: axiom checking, trace forms and quotient builders.

use hochhodge::algebra::{Algebra, Violation};
use hochhodge::{corpus, int, Rat, RatAlgebra};
use proptest::prelude::*;

#[test]
fn corpus_tables_satisfy_all_axioms() {
    for (name, algebra) in corpus::all::<Rat>() {
        let violations = algebra.validate();
        assert!(violations.is_empty(), "{name}: {violations:?}");
    }
}

#[test]
fn corpus_dimensions_and_names() {
    let expected = [
        ("rationals", 1),
        ("dual-numbers", 2),
        ("nilpotent-cubic", 3),
        ("split-pair", 2),
        ("split-triple", 3),
        ("planar-fat-point", 3),
    ];
    let all = corpus::all::<Rat>();
    assert_eq!(all.len(), expected.len());
    for ((name, algebra), (want_name, want_dim)) in all.iter().zip(expected) {
        assert_eq!(*name, want_name);
        assert_eq!(algebra.dim(), want_dim);
        assert_eq!(algebra.basis_names().len(), want_dim);
    }
    assert!(corpus::by_name::<Rat>("split-pair").is_some());
    assert!(corpus::by_name::<Rat>("octonions").is_none());
}

#[test]
fn matrix_table_fails_commutativity_only() {
    let a = corpus::matrix_square::<Rat>();
    let violations = a.validate();
    assert!(!violations.is_empty());
    assert!(violations
        .iter()
        .all(|v| matches!(v, Violation::Commutativity { .. })));
}

#[test]
fn broken_unit_is_reported() {
    // Two-dimensional table where the declared unit only fixes e0.
    let mut table = vec![int::<Rat>(0); 8];
    table[0] = int::<Rat>(1); // e0*e0 = e0
    let a = Algebra::new(
        2,
        table,
        vec![int::<Rat>(1), int::<Rat>(0)],
        vec!["1".into(), "x".into()],
    )
    .unwrap();
    assert!(a
        .validate()
        .iter()
        .any(|v| matches!(v, Violation::Unit { i: 1, .. })));
}

#[test]
fn trace_form_detects_separability() {
    let flags = [
        ("rationals", true),
        ("dual-numbers", false),
        ("nilpotent-cubic", false),
        ("split-pair", true),
        ("split-triple", true),
        ("planar-fat-point", false),
    ];
    for (name, expect) in flags {
        let a = corpus::by_name::<Rat>(name).unwrap();
        assert_eq!(a.is_etale(), expect, "{name}");
        let t = a.trace_form();
        assert_eq!(t, t.transpose(), "{name}: trace form must be symmetric");
    }
}

#[test]
fn split_pair_trace_form_values() {
    // On 1 and the idempotent t the regular traces are tr(1) = 2, tr(t) = 1.
    let a = corpus::split_pair::<Rat>();
    let t = a.trace_form();
    assert_eq!(*t.get(0, 0), int::<Rat>(2));
    assert_eq!(*t.get(0, 1), int::<Rat>(1));
    assert_eq!(*t.get(1, 0), int::<Rat>(1));
    assert_eq!(*t.get(1, 1), int::<Rat>(1));
}

#[test]
fn quotient_by_square_matches_dual_numbers() {
    let q = Algebra::<Rat>::quotient_poly_univar(&[int(0), int(0), int(1)]).unwrap();
    let d = corpus::dual_numbers::<Rat>();
    assert_eq!(q.dim(), d.dim());
    assert_eq!(q.table(), d.table());
    assert_eq!(q.unit(), d.unit());
}

#[test]
fn quotient_constructor_rejects_bad_polynomials() {
    assert!(Algebra::<Rat>::quotient_poly_univar(&[int(1)]).is_err());
    assert!(Algebra::<Rat>::quotient_poly_univar(&[int(0), int(2)]).is_err());
}

#[test]
fn quotient_reduction_rule() {
    // t^2 = t + 1 in the quotient by t^2 - t - 1.
    let a = Algebra::<Rat>::quotient_poly_univar(&[int(-1), int(-1), int(1)]).unwrap();
    let t = a.basis_vector(1);
    let sq = a.multiply(&t, &t).unwrap();
    assert_eq!(sq, vec![int::<Rat>(1), int::<Rat>(1)]);
    assert!(a.validate().is_empty());
    // The golden-ratio quotient is a field, so its trace form is regular.
    assert!(a.is_etale());
}

#[test]
fn truncated_polynomials_in_two_variables() {
    let a = Algebra::<Rat>::truncated_poly(2, 1).unwrap();
    assert_eq!(a.dim(), 3);
    assert!(a.validate().is_empty());
    let p = corpus::planar_fat_point::<Rat>();
    assert_eq!(a.table(), p.table());
    // x*y = 0 above the truncation degree.
    let xy = a.multiply(&a.basis_vector(1), &a.basis_vector(2)).unwrap();
    assert!(xy.iter().all(|c| c == &int::<Rat>(0)));
}

#[test]
fn shape_validation_in_constructor() {
    assert!(Algebra::<Rat>::new(0, vec![], vec![], vec![]).is_err());
    assert!(Algebra::<Rat>::new(1, vec![int(1); 2], vec![int(1)], vec!["1".into()]).is_err());
    assert!(Algebra::<Rat>::new(1, vec![int(1)], vec![], vec!["1".into()]).is_err());
    assert!(Algebra::<Rat>::new(1, vec![int(1)], vec![int(1)], vec![]).is_err());
}

fn arb_truncation() -> impl Strategy<Value = RatAlgebra> {
    (2usize..=6).prop_map(|k| {
        let mut coeffs = vec![int::<Rat>(0); k + 1];
        coeffs[k] = int(1);
        Algebra::quotient_poly_univar(&coeffs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn univariate_truncation_matches_quotient(a in arb_truncation()) {
        // x^k = 0 described as a quotient agrees with the truncated ring.
        let t = Algebra::<Rat>::truncated_poly(1, a.dim() - 1).unwrap();
        prop_assert_eq!(a.table(), t.table());
        prop_assert!(a.validate().is_empty());
        prop_assert!(!a.is_etale());
    }

    #[test]
    fn left_multiplication_is_linear(c in -3i64..=3) {
        let a = corpus::split_triple::<Rat>();
        let x = a.basis_vector(1);
        let scaled: Vec<Rat> = x.iter().map(|v| v.clone() * int::<Rat>(c)).collect();
        let lx = a.left_mult_matrix(&x).unwrap();
        let ls = a.left_mult_matrix(&scaled).unwrap();
        prop_assert_eq!(lx.scale(&int::<Rat>(c)), ls);
    }
}
