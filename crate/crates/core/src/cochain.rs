//! Multilinear cochains on a structure-constant algebra.
//!
//! An arity-`n` cochain is a multilinear map from `n` algebra arguments to
//! the algebra. Coefficients are stored densely: the entry for argument
//! basis tuple `t` and output coordinate `k` sits at `encode(t) * m + k`,
//! so the argument tuple is big-endian and the output index is the least
//! significant digit.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multiindex::{encode, tuple_count, tuples};
use crate::tensor::Tensor;
use crate::{int, Scalar};

/// Largest coefficient-space dimension (`m^(n+1)`) a cochain may occupy.
/// Guards the CLI and the test-suite against accidental exponential blowups.
pub const DIM_BOUND: usize = 3000;

/// Dense multilinear cochain of fixed arity.
#[derive(Clone, Debug)]
pub struct Cochain<S> {
    algebra: Arc<Algebra<S>>,
    arity: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> PartialEq for Cochain<S> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
            && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> Cochain<S> {
    /// Coefficient-space dimension for the given algebra and arity, after
    /// the resource guard.
    pub fn coeff_len(algebra: &Algebra<S>, arity: usize) -> Result<usize> {
        let dim = tuple_count(algebra.dim(), arity + 1);
        if dim > DIM_BOUND {
            return Err(Error::ResourceBound {
                dim,
                arity,
                bound: DIM_BOUND,
            });
        }
        Ok(dim)
    }

    /// Zero cochain.
    pub fn zero(algebra: Arc<Algebra<S>>, arity: usize) -> Result<Self> {
        let len = Self::coeff_len(&algebra, arity)?;
        Ok(Self {
            algebra,
            arity,
            coeffs: vec![S::zero(); len],
        })
    }

    /// Cochain from an explicit coefficient vector.
    pub fn from_coeffs(algebra: Arc<Algebra<S>>, arity: usize, coeffs: Vec<S>) -> Result<Self> {
        let len = Self::coeff_len(&algebra, arity)?;
        if coeffs.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "arity-{arity} cochain needs {len} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self {
            algebra,
            arity,
            coeffs,
        })
    }

    /// The delta cochain sending the basis tuple `args` to `e_k` and every
    /// other basis tuple to zero.
    pub fn delta(algebra: Arc<Algebra<S>>, args: &[usize], k: usize) -> Result<Self> {
        let mut c = Self::zero(algebra, args.len())?;
        let m = c.algebra.dim();
        let idx = encode(m, args) * m + k;
        c.coeffs[idx] = S::one();
        Ok(c)
    }

    /// Arity-0 cochain holding the unit element.
    pub fn unit_element(algebra: Arc<Algebra<S>>) -> Result<Self> {
        let coeffs = algebra.unit().to_vec();
        Self::from_coeffs(algebra, 0, coeffs)
    }

    /// Arity-1 identity map.
    pub fn identity_map(algebra: Arc<Algebra<S>>) -> Result<Self> {
        let m = algebra.dim();
        let mut c = Self::zero(algebra, 1)?;
        for i in 0..m {
            c.coeffs[i * m + i] = S::one();
        }
        Ok(c)
    }

    /// The multiplication of the algebra as an arity-2 cochain.
    pub fn multiplication(algebra: Arc<Algebra<S>>) -> Result<Self> {
        let m = algebra.dim();
        let mut c = Self::zero(algebra.clone(), 2)?;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c.coeffs[(i * m + j) * m + k] = algebra.structure(i, j, k).clone();
                }
            }
        }
        Ok(c)
    }

    /// Cochain with coefficients drawn uniformly from `{-2, .., 2}`.
    pub fn random<R: Rng>(algebra: Arc<Algebra<S>>, arity: usize, rng: &mut R) -> Result<Self> {
        let len = Self::coeff_len(&algebra, arity)?;
        let coeffs = (0..len).map(|_| int::<S>(rng.gen_range(-2..=2))).collect();
        Self::from_coeffs(algebra, arity, coeffs)
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

    /// Coefficient of output coordinate `k` on the basis tuple `args`.
    pub fn get(&self, args: &[usize], k: usize) -> &S {
        let m = self.algebra.dim();
        &self.coeffs[encode(m, args) * m + k]
    }

    pub fn set(&mut self, args: &[usize], k: usize, v: S) {
        let m = self.algebra.dim();
        let idx = encode(m, args) * m + k;
        self.coeffs[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub(crate) fn same_algebra(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

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

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            algebra: self.algebra.clone(),
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|a| c.clone() * a.clone()).collect(),
        }
    }

    /// Evaluates the cochain on coordinate-vector arguments.
    pub fn evaluate(&self, args: &[Vec<S>]) -> Result<Vec<S>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch(format!(
                "arity-{} cochain applied to {} arguments",
                self.arity,
                args.len()
            )));
        }
        let m = self.algebra.dim();
        for a in args {
            if a.len() != m {
                return Err(Error::DimensionMismatch("argument of wrong length".into()));
            }
        }
        let mut out = vec![S::zero(); m];
        for (row, tuple) in tuples(m, self.arity).enumerate() {
            let mut weight = S::one();
            let mut zero = false;
            for (slot, &t) in tuple.iter().enumerate() {
                if args[slot][t].is_zero() {
                    zero = true;
                    break;
                }
                weight = weight * args[slot][t].clone();
            }
            if zero {
                continue;
            }
            for (k, slot) in out.iter_mut().enumerate() {
                let c = &self.coeffs[row * m + k];
                if !c.is_zero() {
                    *slot = slot.clone() + weight.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }

    /// Pairs the cochain with a tensor of matching arity, returning an
    /// algebra element.
    pub fn pair_with(&self, tensor: &Tensor<S>) -> Result<Vec<S>> {
        if tensor.arity() != self.arity {
            return Err(Error::ArityMismatch(format!(
                "arity-{} cochain paired with arity-{} tensor",
                self.arity,
                tensor.arity()
            )));
        }
        let m = self.algebra.dim();
        let mut out = vec![S::zero(); m];
        for (row, w) in tensor.coeffs().iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (k, slot) in out.iter_mut().enumerate() {
                let c = &self.coeffs[row * m + k];
                if !c.is_zero() {
                    *slot = slot.clone() + w.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }

    /// Precomposes the cochain with an operator on the argument tensor
    /// power: the result evaluates on `v` as the original did on `op(v)`.
    pub fn precompose(&self, op: &Matrix<S>) -> Result<Self> {
        let m = self.algebra.dim();
        let args = tuple_count(m, self.arity);
        if op.rows() != args || op.cols() != args {
            return Err(Error::DimensionMismatch(format!(
                "argument operator is {}x{}, expected {args}x{args}",
                op.rows(),
                op.cols()
            )));
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len()];
        for t in 0..args {
            for k in 0..m {
                let mut acc = S::zero();
                for s in 0..args {
                    let p = op.get(s, t);
                    if p.is_zero() {
                        continue;
                    }
                    let c = &self.coeffs[s * m + k];
                    if !c.is_zero() {
                        acc = acc + c.clone() * p.clone();
                    }
                }
                coeffs[t * m + k] = acc;
            }
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            arity: self.arity,
            coeffs,
        })
    }

    /// Whether the cochain kills every row of the given span of argument
    /// tensors.
    pub fn vanishes_on(&self, span: &Matrix<S>) -> Result<bool> {
        let m = self.algebra.dim();
        let args = tuple_count(m, self.arity);
        for r in 0..span.rows() {
            if span.cols() != args {
                return Err(Error::DimensionMismatch(
                    "span lives in a different tensor power".into(),
                ));
            }
            let row = span.row(r);
            for k in 0..m {
                let mut acc = S::zero();
                for (t, w) in row.iter().enumerate() {
                    if !w.is_zero() {
                        let c = &self.coeffs[t * m + k];
                        if !c.is_zero() {
                            acc = acc + w.clone() * c.clone();
                        }
                    }
                }
                if !acc.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
