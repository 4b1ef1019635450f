//! Dense exact linear algebra over a field scalar.
//!
//! Everything reduces to Gauss-Jordan elimination with exact division, so
//! ranks, kernels and subspace dimensions are exact answers, not numerical
//! estimates. Matrices are row-major; row spaces are the preferred carrier
//! for subspaces throughout the crate.

use crate::error::{Error, Result};
use crate::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Dimensions of a pair of row spaces and of their intersection and sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceDims {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_intersection: usize,
    pub dim_sum: usize,
}

impl<S: Scalar> Matrix<S> {
    /// Builds a matrix from row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// All-zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r);
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    /// Borrow of one row.
    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![S::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = S::zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc = acc + a.clone() * v[j].clone();
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Scales every entry.
    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| c.clone() * self.get(i, j).clone())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum shape mismatch".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + other.get(i, j).clone()
        }))
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix difference shape mismatch".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - other.get(i, j).clone()
        }))
    }

    /// Stacks two matrices vertically.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::DimensionMismatch("vstack column mismatch".into()));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Stacks two matrices horizontally.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row mismatch".into()));
        }
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Pivoting picks the first row with a nonzero entry in the current
    /// column, which keeps the result deterministic across runs.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = S::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{x : self * x = 0}`, returned as rows.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            rows.push(v);
        }
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        Self {
            rows: n,
            cols: self.cols,
            data,
        }
    }

    /// Basis of the row space: the nonzero rows of the reduced echelon form.
    pub fn row_space_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        let data = r.data[..k * r.cols].to_vec();
        Self {
            rows: k,
            cols: r.cols,
            data,
        }
    }

    /// Whether `v` lies in the row space.
    pub fn in_row_span(&self, v: &[S]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("span test length mismatch".into()));
        }
        let base = self.rank();
        let extended = self.vstack(&Matrix::from_rows(vec![v.to_vec()])?)?;
        Ok(extended.rank() == base)
    }
}

/// Dimensions of the row spaces of `a` and `b`, of their intersection and of
/// their sum.
pub fn subspace_dims<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<SubspaceDims> {
    if a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0 {
        return Err(Error::DimensionMismatch("subspaces of different ambient spaces".into()));
    }
    let dim_a = a.rank();
    let dim_b = b.rank();
    let dim_sum = a.vstack(b)?.rank();
    Ok(SubspaceDims {
        dim_a,
        dim_b,
        dim_intersection: dim_a + dim_b - dim_sum,
        dim_sum,
    })
}

/// Dimension of `map^{-1}(W)` where `W` is the row space of `target_rows`.
///
/// Works through the annihilator: `x` lies in `W` exactly when every kernel
/// vector of `target_rows` pairs to zero with `x`, so the preimage is the
/// kernel of the composite of `map` with those pairings.
pub fn preimage_dim<S: Scalar>(map: &Matrix<S>, target_rows: &Matrix<S>) -> Result<usize> {
    if target_rows.rows() != 0 && target_rows.cols() != map.rows() {
        return Err(Error::DimensionMismatch(
            "target subspace lives in a different space than the map's codomain".into(),
        ));
    }
    if target_rows.rows() == 0 {
        // The zero subspace: preimage is the kernel of the map itself.
        return Ok(map.cols() - map.rank());
    }
    let annihilator = target_rows.kernel_basis();
    if annihilator.rows() == 0 {
        return Ok(map.cols());
    }
    let composite = annihilator.mul(map)?;
    Ok(map.cols() - composite.rank())
}

/// Matrix of a linear map given by its action on standard basis vectors.
pub fn operator_matrix<S: Scalar>(
    domain_dim: usize,
    codomain_dim: usize,
    mut image_of_basis: impl FnMut(usize) -> Vec<S>,
) -> Result<Matrix<S>> {
    let mut m = Matrix::zero(codomain_dim, domain_dim);
    for j in 0..domain_dim {
        let col = image_of_basis(j);
        if col.len() != codomain_dim {
            return Err(Error::DimensionMismatch(format!(
                "operator image has length {}, expected {}",
                col.len(),
                codomain_dim
            )));
        }
        for (i, v) in col.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}
