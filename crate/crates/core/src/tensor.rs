//! Elements of tensor powers of the underlying module and their signed
//! shuffle products.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::multiindex::{combinations, decode, encode, tuple_count};
use crate::{sign_pow, Scalar};

/// Element of the `n`-th tensor power of the algebra's underlying module,
/// stored as a dense coefficient vector indexed big-endian by basis tuples.
#[derive(Clone, Debug)]
pub struct Tensor<S> {
    algebra: Arc<Algebra<S>>,
    arity: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> Tensor<S> {
    /// Zero tensor of the given arity.
    pub fn zero(algebra: Arc<Algebra<S>>, arity: usize) -> Self {
        let len = tuple_count(algebra.dim(), arity);
        Self {
            algebra,
            arity,
            coeffs: vec![S::zero(); len],
        }
    }

    /// Tensor from an explicit coefficient vector.
    pub fn from_coeffs(algebra: Arc<Algebra<S>>, arity: usize, coeffs: Vec<S>) -> Result<Self> {
        let len = tuple_count(algebra.dim(), arity);
        if coeffs.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "tensor of arity {arity} needs {len} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self {
            algebra,
            arity,
            coeffs,
        })
    }

    /// Basis tensor `e_{t_1} (x) .. (x) e_{t_n}`.
    pub fn basis(algebra: Arc<Algebra<S>>, tuple: &[usize]) -> Self {
        let mut t = Self::zero(algebra, tuple.len());
        let idx = encode(t.algebra.dim(), tuple);
        t.coeffs[idx] = S::one();
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn algebra(&self) -> &Arc<Algebra<S>> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Sum of two tensors of equal arity.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(format!(
                "cannot add arities {} and {}",
                self.arity, other.arity
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self {
            algebra: self.algebra.clone(),
            arity: self.arity,
            coeffs,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &S) -> Self {
        Self {
            algebra: self.algebra.clone(),
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|a| c.clone() * a.clone()).collect(),
        }
    }

    /// Signed shuffle product.
    ///
    /// The sum runs over all interleavings of the two factors that keep each
    /// factor's internal order; each interleaving contributes the sign of the
    /// permutation that produces it from the concatenation.
    pub fn shuffle_product(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let m = self.algebra.dim();
        let p = self.arity;
        let q = other.arity;
        let mut out = Self::zero(self.algebra.clone(), p + q);
        for (ia, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let left = decode(m, p, ia);
            for (ib, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let right = decode(m, q, ib);
                let c = ca.clone() * cb.clone();
                for positions in combinations(p + q, p) {
                    let mut inversions = 0i64;
                    for (k, &pos) in positions.iter().enumerate() {
                        inversions += (pos - k) as i64;
                    }
                    let mut word = vec![0usize; p + q];
                    let mut taken = vec![false; p + q];
                    for (k, &pos) in positions.iter().enumerate() {
                        word[pos] = left[k];
                        taken[pos] = true;
                    }
                    let mut r = 0;
                    for (pos, slot) in word.iter_mut().enumerate() {
                        if !taken[pos] {
                            *slot = right[r];
                            r += 1;
                        }
                    }
                    let idx = encode(m, &word);
                    let term = sign_pow::<S>(inversions) * c.clone();
                    out.coeffs[idx] = out.coeffs[idx].clone() + term;
                }
            }
        }
        Ok(out)
    }
}
