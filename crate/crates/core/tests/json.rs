//! JSON encoding: exact round-trips and strict rejection of bad input.

use std::sync::Arc;

use hochhodge::cochain::Cochain;
use hochhodge::deform::{ConstantBivector, FormalSeries};
use hochhodge::json::{
    algebra_from_str, algebra_from_value, algebra_to_value, cochain_from_value, cochain_to_value,
    constant_bivector_from_value, constant_bivector_to_value, multivector_from_value,
    multivector_to_value, poly_from_value, poly_to_value, rat_from_value, rat_to_value,
    series_from_value, series_to_value, violations_to_value,
};
use hochhodge::poisson::{Multivector, Poly};
use hochhodge::{corpus, int, rat, Rat};
use serde_json::json;

#[test]
fn rationals_round_trip_bit_exactly() {
    for r in [
        int::<Rat>(0),
        int::<Rat>(7),
        int::<Rat>(-3),
        rat(1, 2),
        rat(-22, 7),
        rat(10_000_000_000, 3),
    ] {
        let v = rat_to_value(&r);
        assert_eq!(rat_from_value(&v).unwrap(), r);
    }
    // Integers are stored as JSON numbers, fractions as strings.
    assert!(rat_to_value(&int::<Rat>(5)).is_number());
    assert!(rat_to_value(&rat(1, 2)).is_string());
    // Unreduced and signed fraction strings normalize on parse.
    assert_eq!(rat_from_value(&json!("2/4")).unwrap(), rat(1, 2));
    assert_eq!(rat_from_value(&json!("-6/4")).unwrap(), rat(-3, 2));
}

#[test]
fn bad_rationals_are_rejected() {
    for bad in [json!(1.5), json!("1/0"), json!("a/b"), json!(null), json!([1])] {
        assert!(rat_from_value(&bad).is_err(), "{bad}");
    }
}

#[test]
fn algebras_round_trip() {
    for (name, algebra) in corpus::all::<Rat>() {
        let v = algebra_to_value(&algebra);
        let back = algebra_from_value(&v).unwrap();
        assert_eq!(back.dim(), algebra.dim(), "{name}");
        assert_eq!(back.table(), algebra.table(), "{name}");
        assert_eq!(back.unit(), algebra.unit(), "{name}");
        assert_eq!(back.basis_names(), algebra.basis_names(), "{name}");
        // Serialization itself is deterministic.
        let s1 = serde_json::to_string(&v).unwrap();
        let s2 = serde_json::to_string(&algebra_to_value(&back)).unwrap();
        assert_eq!(s1, s2, "{name}");
    }
}

#[test]
fn malformed_algebras_are_rejected() {
    assert!(algebra_from_str("{").is_err());
    assert!(algebra_from_str("[]").is_err());
    let missing = json!({ "dim": 1, "basis": ["1"], "unit": [1] });
    assert!(algebra_from_value(&missing).is_err());
    let short_table = json!({
        "dim": 2,
        "basis": ["1", "x"],
        "unit": [1, 0],
        "table": [[[1, 0], [0, 1]]],
    });
    assert!(algebra_from_value(&short_table).is_err());
    let float_entry = json!({
        "dim": 1,
        "basis": ["1"],
        "unit": [1.0],
        "table": [[[1]]],
    });
    assert!(algebra_from_value(&float_entry).is_err());
}

#[test]
fn cochains_round_trip() {
    let a = Arc::new(corpus::dual_numbers::<Rat>());
    let mut c = Cochain::zero(a.clone(), 2).unwrap();
    c.set(&[1, 1], 0, rat(3, 2));
    c.set(&[0, 1], 1, int(-2));
    let v = cochain_to_value(&c);
    let back = cochain_from_value(a.clone(), &v).unwrap();
    assert_eq!(back, c);
    // A coefficient list of the wrong length fails.
    let bad = json!({ "arity": 2, "coeffs": [1, 2, 3] });
    assert!(cochain_from_value(a, &bad).is_err());
}

#[test]
fn polynomials_round_trip() {
    let p = Poly::<Rat>::var(3, 0)
        .mul(&Poly::var(3, 1))
        .add(&Poly::constant(3, rat(5, 3)));
    let v = poly_to_value(&p);
    assert_eq!(poly_from_value(3, &v).unwrap(), p);
    // Exponent vectors must match the declared variable count.
    let bad = json!([{ "exponents": [1], "coeff": 1 }]);
    assert!(poly_from_value(3, &bad).is_err());
}

#[test]
fn multivectors_round_trip() {
    let mut mv = Multivector::<Rat>::zero(3, 2);
    mv.add_term(&[0, 1], &Poly::var(3, 2)).unwrap();
    mv.add_term(&[1, 2], &Poly::constant(3, rat(-1, 4))).unwrap();
    let v = multivector_to_value(&mv);
    assert_eq!(multivector_from_value(&v).unwrap(), mv);
    let bad = json!({ "vars": 3, "degree": 2, "components": [
        { "directions": [0, 0], "poly": [{ "exponents": [0, 0, 0], "coeff": 1 }] }
    ]});
    assert!(multivector_from_value(&bad).is_err());
}

#[test]
fn bivectors_round_trip_and_validate() {
    let pi = ConstantBivector::new(
        2,
        vec![vec![int::<Rat>(0), rat(1, 2)], vec![rat(-1, 2), int(0)]],
    )
    .unwrap();
    let v = constant_bivector_to_value(&pi);
    let back = constant_bivector_from_value(&v).unwrap();
    assert_eq!(*back.get(0, 1), rat(1, 2));
    let bad = json!({ "vars": 2, "matrix": [[0, 1], [1, 0]] });
    assert!(constant_bivector_from_value(&bad).is_err());
}

#[test]
fn series_round_trip() {
    let s = FormalSeries::from_coeffs(
        2,
        vec![
            Poly::var(2, 0),
            Poly::zero(2),
            Poly::constant(2, rat(7, 2)),
        ],
    )
    .unwrap();
    let v = series_to_value(&s);
    assert_eq!(series_from_value(&v).unwrap(), s);
}

#[test]
fn violation_reports_serialize_with_counts() {
    let a = corpus::matrix_square::<Rat>();
    let violations = a.validate();
    let v = violations_to_value(&violations);
    assert_eq!(v["count"].as_u64().unwrap() as usize, violations.len());
    assert!(v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|item| item["kind"] == "commutativity"));
}
