//! Built-in example algebras used by the tests and the command-line tool.

use crate::algebra::Algebra;
use crate::{int, Scalar};

/// The ground field itself, presented as a one-dimensional algebra.
pub fn rationals<S: Scalar>() -> Algebra<S> {
    Algebra::quotient_poly_univar(&[S::zero(), S::one()]).expect("valid presentation")
}

/// Dual numbers: one nilpotent generator squaring to zero.
pub fn dual_numbers<S: Scalar>() -> Algebra<S> {
    Algebra::quotient_poly_univar(&[S::zero(), S::zero(), S::one()])
        .expect("valid presentation")
        .renamed(vec!["1".into(), "x".into()])
        .expect("two names")
}

/// Third-order jets on a line: one generator with vanishing cube.
pub fn nilpotent_cubic<S: Scalar>() -> Algebra<S> {
    Algebra::quotient_poly_univar(&[S::zero(), S::zero(), S::zero(), S::one()])
        .expect("valid presentation")
        .renamed(vec!["1".into(), "x".into(), "x^2".into()])
        .expect("three names")
}

/// Product of two copies of the ground field, via an idempotent generator.
pub fn split_pair<S: Scalar>() -> Algebra<S> {
    Algebra::quotient_poly_univar(&[S::zero(), -S::one(), S::one()]).expect("valid presentation")
}

/// Product of three copies of the ground field.
pub fn split_triple<S: Scalar>() -> Algebra<S> {
    Algebra::quotient_poly_univar(&[S::zero(), -S::one(), S::zero(), S::one()])
        .expect("valid presentation")
}

/// First-order neighborhood of the origin in the plane: two generators with
/// all pairwise products zero.
pub fn planar_fat_point<S: Scalar>() -> Algebra<S> {
    Algebra::truncated_poly(2, 1).expect("valid presentation")
}

/// Every built-in algebra, paired with a short stable name.
pub fn all<S: Scalar>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("rationals", rationals()),
        ("dual-numbers", dual_numbers()),
        ("nilpotent-cubic", nilpotent_cubic()),
        ("split-pair", split_pair()),
        ("split-triple", split_triple()),
        ("planar-fat-point", planar_fat_point()),
    ]
}

/// Built-in algebra by name, if any.
pub fn by_name<S: Scalar>(name: &str) -> Option<Algebra<S>> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

/// A noncommutative table (two-by-two matrices) for exercising validation.
pub fn matrix_square<S: Scalar>() -> Algebra<S> {
    // Basis E11, E12, E21, E22 with E_ij E_kl = [j == k] E_il.
    let dim = 4;
    let pos = |r: usize, c: usize| r * 2 + c;
    let mut table = vec![S::zero(); dim * dim * dim];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if j == k {
                        let a = pos(i, j);
                        let b = pos(k, l);
                        let c = pos(i, l);
                        table[(a * dim + b) * dim + c] = S::one();
                    }
                }
            }
        }
    }
    let unit = vec![int(1), int(0), int(0), int(1)];
    let names = vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()];
    Algebra::new(dim, table, unit, names).expect("well-shaped table")
}
