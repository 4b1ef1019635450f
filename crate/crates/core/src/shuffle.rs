//! Shuffle spans, the signed total shuffle operator and its spectral
//! projectors.
//!
//! On the `n`-th tensor power the sum of all signed deconcatenation shuffles
//! acts semisimply with eigenvalues `2^p - 2` for `p = 1, .., n`. Lagrange
//! interpolation in this operator yields the projectors onto the eigenspaces;
//! these cut out the argument-side grading used for the cochain bigrading.
//! Independently, the span of all `p`-fold shuffle products gives a concrete
//! filtration the projectors can be checked against.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multiindex::{compositions, tuple_count, tuples};
use crate::tensor::Tensor;
use crate::{int, Scalar};

/// Eigenvalue of the signed total shuffle operator on the `p`-th piece.
pub fn shuffle_eigenvalue<S: Scalar>(p: usize) -> S {
    int::<S>(1 << p) - int::<S>(2)
}

/// Row basis of the span of all `p`-fold shuffle products inside the `n`-th
/// tensor power.
pub fn sh_span<S: Scalar>(algebra: &Arc<Algebra<S>>, n: usize, p: usize) -> Result<Matrix<S>> {
    let m = algebra.dim();
    let width = tuple_count(m, n);
    if p == 0 || p > n {
        return Ok(Matrix::zero(0, width));
    }
    let mut rows: Vec<Vec<S>> = Vec::new();
    for comp in compositions(n, p) {
        // All choices of a basis tensor for each of the p blocks.
        let mut block_choices: Vec<Vec<Tensor<S>>> = Vec::with_capacity(p);
        for &len in &comp {
            let choices = tuples(m, len)
                .map(|w| Tensor::basis(algebra.clone(), &w))
                .collect();
            block_choices.push(choices);
        }
        let mut selector = vec![0usize; p];
        loop {
            let mut product = block_choices[0][selector[0]].clone();
            for b in 1..p {
                product = product.shuffle_product(&block_choices[b][selector[b]])?;
            }
            rows.push(product.coeffs().to_vec());
            // Advance the mixed-radix selector over block choices.
            let mut carry = true;
            for (sel, choices) in selector.iter_mut().zip(&block_choices) {
                if !carry {
                    break;
                }
                *sel += 1;
                if *sel == choices.len() {
                    *sel = 0;
                } else {
                    carry = false;
                }
            }
            if carry {
                break;
            }
        }
    }
    Ok(Matrix::from_rows(rows)?.row_space_basis())
}

/// Matrix of the signed total shuffle operator on the `n`-th tensor power:
/// the sum over all proper deconcatenations of the word followed by the
/// signed shuffle of the two halves.
pub fn signed_shuffle_operator<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
) -> Result<Matrix<S>> {
    let m = algebra.dim();
    let dim = tuple_count(m, n);
    let mut op = Matrix::zero(dim, dim);
    for (col, word) in tuples(m, n).enumerate() {
        let mut image = Tensor::zero(algebra.clone(), n);
        for split in 1..n {
            let left = Tensor::basis(algebra.clone(), &word[..split]);
            let right = Tensor::basis(algebra.clone(), &word[split..]);
            image = image.add(&left.shuffle_product(&right)?)?;
        }
        for (row, c) in image.coeffs().iter().enumerate() {
            if !c.is_zero() {
                op.set(row, col, c.clone());
            }
        }
    }
    Ok(op)
}

/// Spectral projectors of the signed total shuffle operator for `p = 1..n`
/// (`projectors[p-1]` belongs to eigenvalue `2^p - 2`).
///
/// The minimal polynomial claim is verified on the spot: if the product of
/// all `(S - lambda_p)` fails to vanish the decomposition would be wrong, and
/// the function refuses to return projectors.
pub fn eulerian_projectors<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
) -> Result<Vec<Matrix<S>>> {
    let m = algebra.dim();
    let dim = tuple_count(m, n);
    let op = signed_shuffle_operator(algebra, n)?;
    let id = Matrix::identity(dim);
    let mut annihilator = id.clone();
    for j in 1..=n {
        let factor = op.sub(&id.scale(&shuffle_eigenvalue::<S>(j)))?;
        annihilator = annihilator.mul(&factor)?;
    }
    if !annihilator.is_zero() {
        return Err(Error::DimensionMismatch(format!(
            "shuffle operator at arity {n} is not annihilated by its expected minimal polynomial"
        )));
    }
    let mut projectors = Vec::with_capacity(n);
    for p in 1..=n {
        let mut proj = id.clone();
        let mut denom = S::one();
        for j in 1..=n {
            if j == p {
                continue;
            }
            let factor = op.sub(&id.scale(&shuffle_eigenvalue::<S>(j)))?;
            proj = proj.mul(&factor)?;
            denom = denom * (shuffle_eigenvalue::<S>(p) - shuffle_eigenvalue::<S>(j));
        }
        projectors.push(proj.scale(&(S::one() / denom)));
    }
    Ok(projectors)
}

/// Dimensions of the eigenspace pieces of the `n`-th tensor power,
/// indexed by `p = 1..n`.
pub fn component_dims<S: Scalar>(algebra: &Arc<Algebra<S>>, n: usize) -> Result<Vec<usize>> {
    Ok(eulerian_projectors::<S>(algebra, n)?
        .iter()
        .map(Matrix::rank)
        .collect())
}
