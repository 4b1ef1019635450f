//! Exact workbench for the Hochschild cochain complex of a finite-dimensional
//! commutative unital algebra.
//!
//! The crate builds multilinear cochains over an explicit multiplication
//! table, equips them with the Hodge bigrading coming from the shuffle
//! filtration on tensor powers, and verifies the differential calculus on the
//! resulting bicomplex: the Hochschild differential `d`, the arity-lowering
//! unit-insertion differential `d'`, the contracting homotopy for `d'`, the
//! Gerstenhaber bracket, Maurer-Cartan theory, Schouten-Nijenhuis brackets of
//! polynomial multivector fields and truncated Moyal star products.
//!
//! Everything is generic over a [`Scalar`] field type; the concrete aliases
//! at the crate root fix arbitrary-precision rationals, which is what the
//! command-line workbench and the test corpus use. No floating point is
//! involved anywhere in the checks: every identity is asserted with exact
//! equality.

pub mod algebra;
pub mod bicomplex;
pub mod cochain;
pub mod corpus;
pub mod deform;
pub mod error;
pub mod hochschild;
pub mod json;
pub mod linalg;
pub mod multiindex;
pub mod poisson;
pub mod shuffle;
pub mod suite;
pub mod tensor;

use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};

/// Field scalar used by all linear and multilinear algebra in this crate.
///
/// The bound set is structural: any numeric type with exact field semantics
/// works (`BigRational` is the intended instantiation; `f64` satisfies the
/// bounds for approximate experiments). Division must be exact for the
/// rank computations to be meaningful.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display
{
}

/// Arbitrary-precision rational scalar, the default ground field.
pub type Rat = num_rational::BigRational;

/// Dense matrix over the default ground field.
pub type RatMatrix = linalg::Matrix<Rat>;

/// Structure-constant algebra over the default ground field.
pub type RatAlgebra = algebra::Algebra<Rat>;

/// Hochschild cochain over the default ground field.
pub type RatCochain = cochain::Cochain<Rat>;

/// Convenience constructor for a rational from a numerator/denominator pair.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}

/// Embeds a machine integer into any scalar type.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("integer embeds into scalar")
}

/// `(-1)^k` for a possibly negative exponent.
pub fn sign_pow<S: Scalar>(k: i64) -> S {
    if k.rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    }
}
