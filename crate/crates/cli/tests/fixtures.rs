//! The shipped fixture files are exactly the built-in corpus: parsing each
//! file must reproduce the corresponding constructor, and the multivector
//! fixtures must carry the documented Jacobi behavior.

use std::path::PathBuf;

use hochhodge::corpus;
use hochhodge::json;
use hochhodge::poisson::{is_poisson, jacobiator, Multivector, Poly};
use hochhodge::{int, Rat};

fn read(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(path).expect("fixture file exists")
}

#[test]
fn algebra_fixtures_match_the_corpus() {
    for (name, expected) in corpus::all::<Rat>() {
        let parsed = json::algebra_from_str(&read(&format!("{name}.json"))).unwrap();
        assert!(parsed == expected, "{name}.json drifts from the constructor");
        assert!(parsed.validate().is_empty());
    }
}

#[test]
fn matrix_fixture_is_the_noncommutative_witness() {
    let parsed = json::algebra_from_str(&read("matrix2.json")).unwrap();
    assert!(parsed == corpus::matrix_square::<Rat>());
    let violations = parsed.validate();
    assert_eq!(violations.len(), 5, "expected the commutativity failures");
}

#[test]
fn corrupt_fixture_is_rejected() {
    assert!(json::algebra_from_str(&read("corrupt.json")).is_err());
}

#[test]
fn bivector_fixtures_have_the_documented_jacobi_behavior() {
    let so3 = json::multivector_from_str(&read("so3.json")).unwrap();
    let x = Poly::<Rat>::var(3, 0);
    let y = Poly::<Rat>::var(3, 1);
    let z = Poly::<Rat>::var(3, 2);
    let mut expected = Multivector::zero(3, 2);
    expected.add_term(&[0, 1], &z).unwrap();
    expected.add_term(&[1, 2], &x).unwrap();
    expected.add_term(&[2, 0], &y).unwrap();
    assert!(so3 == expected, "so3.json drifts from the rotation bivector");
    assert!(is_poisson(&so3).unwrap());

    let bad = json::multivector_from_str(&read("non-poisson.json")).unwrap();
    let mut witness = Multivector::zero(3, 2);
    witness.add_term(&[0, 1], &y.mul(&y)).unwrap();
    witness.add_term(&[1, 2], &x).unwrap();
    assert!(bad == witness, "non-poisson.json drifts from the witness");
    assert!(!is_poisson(&bad).unwrap());
    assert_eq!(
        jacobiator(&bad).unwrap().component(&[0, 1, 2]),
        Poly::monomial(3, vec![1, 1, 0], int::<Rat>(-2))
    );
}
