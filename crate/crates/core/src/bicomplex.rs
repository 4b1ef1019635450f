//! The bigraded complex assembled from the two differentials: first pages of
//! both filtrations and the parity-graded cohomology of the total complex on
//! a finite arity window.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::cochain::Cochain;
use crate::error::Result;
use crate::hochschild::{
    d_matrix, d_prime_matrix, hodge_cochain_bases, hodge_cohomology_dims,
};
use crate::linalg::Matrix;
use crate::shuffle::sh_span;
use crate::Scalar;

/// Table of bigraded dimensions, keyed by `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageTable {
    /// Entries cover every `(p, q)` with `p + q <= max_total`.
    pub max_total: usize,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl PageTable {
    pub fn get(&self, p: usize, q: usize) -> Option<usize> {
        self.entries.get(&(p, q)).copied()
    }
}

/// Parity-graded dimensions of the total complex on an arity window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalParityReport {
    /// Arities `0..=window` form the domain of the total operator.
    pub window: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// Truncation can only distort dimensions fed by arities near the top
    /// of the window; counts attached to arities at most this are stable.
    pub interior_valid_upto: usize,
}

/// Spreads rows acting on the argument tensor power to rows acting on the
/// cochain coefficient space, one copy per output coordinate.
fn spread_arg_rows<S: Scalar>(arg_rows: &Matrix<S>, m: usize) -> Result<Matrix<S>> {
    let width = arg_rows.cols() * m;
    let mut rows = Vec::with_capacity(arg_rows.rows() * m);
    for r in 0..arg_rows.rows() {
        for k in 0..m {
            let mut row = vec![S::zero(); width];
            for (t, c) in arg_rows.row(r).iter().enumerate() {
                if !c.is_zero() {
                    row[t * m + k] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        Ok(Matrix::zero(0, width))
    } else {
        Matrix::from_rows(rows)
    }
}

/// Row basis of the subspace of arity-`n` cochains that kill every
/// `(p+1)`-fold shuffle product.
///
/// The constraint factors through the argument side: a cochain lies in the
/// subspace exactly when each of its output-coordinate functionals
/// annihilates the shuffle span, so the subspace is the kernel of the span
/// on arguments spread across output coordinates.
pub fn filtration_subspace<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
    p: usize,
) -> Result<Matrix<S>> {
    let m = algebra.dim();
    let width = Cochain::coeff_len(algebra, n)?;
    let span = sh_span(algebra, n, p + 1)?;
    if span.rows() == 0 {
        return Ok(Matrix::identity(width));
    }
    spread_arg_rows(&span.kernel_basis(), m)
}

/// First page of the filtration by argument-side degree, computed from the
/// spectral projectors. Entries `(p, q)` with `p + q <= max_total`.
pub fn first_page_hodge<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    max_total: usize,
) -> Result<PageTable> {
    let mut entries = BTreeMap::new();
    for n in 0..=max_total {
        if n >= 1 {
            // The degree-0 piece is zero in positive arity.
            entries.insert((0, n), 0);
        }
        for (p, q, dim) in hodge_cohomology_dims(algebra, n)? {
            entries.insert((p, q), dim);
        }
    }
    Ok(PageTable { max_total, entries })
}

/// First page of the same filtration computed without projectors: the
/// shuffle-annihilator subspaces give the filtration directly, and each
/// entry is a subquotient dimension obtained from ranks and preimages.
pub fn first_page_filtration<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    max_total: usize,
) -> Result<PageTable> {
    let m = algebra.dim();
    let mut subspaces: BTreeMap<(usize, usize), Matrix<S>> = BTreeMap::new();
    let mut spans: BTreeMap<(usize, usize), Matrix<S>> = BTreeMap::new();
    for n in 0..=max_total + 1 {
        for p in 0..=n.min(max_total) {
            let span = sh_span(algebra, n, p + 1)?;
            if n <= max_total {
                let width = Cochain::coeff_len(algebra, n)?;
                let subspace = if span.rows() == 0 {
                    Matrix::identity(width)
                } else {
                    spread_arg_rows(&span.kernel_basis(), m)?
                };
                subspaces.insert((n, p), subspace);
            }
            spans.insert((n, p), span);
        }
    }
    let mut d_mats: Vec<Matrix<S>> = Vec::with_capacity(max_total + 1);
    for n in 0..=max_total {
        d_mats.push(d_matrix(algebra, n)?);
    }
    let mut entries = BTreeMap::new();
    for n in 0..=max_total {
        let dn = &d_mats[n];
        for p in 0..=n {
            let g_p = &subspaces[&(n, p)];
            // Cocycles relative to the filtration: elements of G_p whose
            // differential drops into G_{p-1} one arity up. The target
            // subspace is a shuffle annihilator, so its own annihilator is
            // the shuffle span spread over output coordinates; composing
            // with it turns the membership condition into a kernel.
            let map_on_gp = dn.mul(&g_p.transpose())?;
            let relative_cocycles = if p == 0 {
                g_p.rows() - map_on_gp.rank()
            } else {
                let span_above = &spans[&(n + 1, p - 1)];
                if span_above.rows() == 0 {
                    g_p.rows()
                } else {
                    let ann = spread_arg_rows(span_above, m)?;
                    g_p.rows() - ann.mul(&map_on_gp)?.rank()
                }
            };
            // Boundaries: everything from G_{p-1} in the same arity plus the
            // image of G_p one arity down.
            let mut boundary_rows = if p == 0 {
                Matrix::zero(0, g_p.cols())
            } else {
                subspaces[&(n, p - 1)].clone()
            };
            if n >= 1 {
                let g_p_below = &subspaces[&(n - 1, p.min(n - 1))];
                if g_p_below.rows() > 0 {
                    let image = d_mats[n - 1].mul(&g_p_below.transpose())?.transpose();
                    boundary_rows = boundary_rows.vstack(&image)?;
                }
            }
            let boundaries = boundary_rows.rank();
            entries.insert((p, n - p), relative_cocycles - boundaries);
        }
    }
    Ok(PageTable { max_total, entries })
}

/// First page of the complementary filtration: the cohomology of the
/// arity-lowering differential on each bigraded column. Entries `(p, q)`
/// with `p + q <= max_total`.
pub fn second_filtration_page<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    max_total: usize,
) -> Result<PageTable> {
    let mut bases: Vec<Vec<Matrix<S>>> = Vec::with_capacity(max_total + 2);
    for n in 0..=max_total + 1 {
        bases.push(hodge_cochain_bases(algebra, n)?);
    }
    let mut entries = BTreeMap::new();
    for n in 0..=max_total {
        let dp_out = if n >= 1 {
            Some(d_prime_matrix(algebra, n)?)
        } else {
            None
        };
        let dp_in = d_prime_matrix(algebra, n + 1)?;
        for p in 0..=n {
            if n >= 1 && p == 0 {
                // Positive arity has no degree-0 piece.
                entries.insert((p, n - p), 0);
                continue;
            }
            let basis = if n == 0 {
                &bases[0][0]
            } else {
                &bases[n][p - 1]
            };
            let cocycles = match &dp_out {
                Some(dp) => basis.rows() - dp.mul(&basis.transpose())?.rank(),
                None => basis.rows(),
            };
            // Incoming piece one arity up, same complementary degree.
            let basis_in = &bases[n + 1][p];
            let boundaries = if basis_in.rows() == 0 {
                0
            } else {
                dp_in.mul(&basis_in.transpose())?.rank()
            };
            entries.insert((p, n - p), cocycles - boundaries);
        }
    }
    Ok(PageTable { max_total, entries })
}

/// Parity-graded cohomology of the total operator (sum of both
/// differentials) on arities `0..=window`.
///
/// Kernels are computed with the full codomain including arity `window + 1`,
/// so no cocycle is an artifact of truncation; images are intersected back
/// into the window by restricting to sources whose top-arity output block
/// vanishes.
pub fn total_z2_cohomology<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    window: usize,
) -> Result<TotalParityReport> {
    let lens: Vec<usize> = (0..=window + 1)
        .map(|n| Cochain::coeff_len(algebra, n))
        .collect::<Result<_>>()?;
    let build = |even_domain: bool| -> Result<(Matrix<S>, Matrix<S>)> {
        let domain: Vec<usize> = (0..=window)
            .filter(|n| (n % 2 == 0) == even_domain)
            .collect();
        let cols: usize = domain.iter().map(|&n| lens[n]).sum();
        let window_rows: usize = (0..=window).map(|n| lens[n]).sum();
        let top_rows = lens[window + 1];
        let row_offset: Vec<usize> = {
            let mut acc = 0;
            let mut v = Vec::with_capacity(window + 2);
            for n in 0..=window + 1 {
                v.push(acc);
                acc += lens[n];
            }
            v
        };
        let mut full = Matrix::zero(window_rows + top_rows, cols);
        let mut col_base = 0;
        for &n in &domain {
            let up = d_matrix(algebra, n)?;
            for j in 0..lens[n] {
                for i in 0..up.rows() {
                    let v = up.get(i, j);
                    if !v.is_zero() {
                        full.set(row_offset[n + 1] + i, col_base + j, v.clone());
                    }
                }
            }
            if n >= 1 {
                let down = d_prime_matrix(algebra, n)?;
                for j in 0..lens[n] {
                    for i in 0..down.rows() {
                        let v = down.get(i, j);
                        if !v.is_zero() {
                            full.set(row_offset[n - 1] + i, col_base + j, v.clone());
                        }
                    }
                }
            }
            col_base += lens[n];
        }
        // Split off the arity window+1 block.
        let win = Matrix::from_fn(window_rows, cols, |i, j| full.get(i, j).clone());
        let top = Matrix::from_fn(top_rows, cols, |i, j| full.get(window_rows + i, j).clone());
        Ok((win, top))
    };
    let (even_win, even_top) = build(true)?;
    let (odd_win, odd_top) = build(false)?;
    let kernel_dim = |win: &Matrix<S>, top: &Matrix<S>| -> Result<usize> {
        Ok(win.cols() - win.vstack(top)?.rank())
    };
    let image_in_window = |win: &Matrix<S>, top: &Matrix<S>| -> Result<usize> {
        let sources = top.kernel_basis();
        if sources.rows() == 0 {
            return Ok(0);
        }
        Ok(win.mul(&sources.transpose())?.rank())
    };
    let even_dim = kernel_dim(&even_win, &even_top)? - image_in_window(&odd_win, &odd_top)?;
    let odd_dim = kernel_dim(&odd_win, &odd_top)? - image_in_window(&even_win, &even_top)?;
    Ok(TotalParityReport {
        window,
        even_dim,
        odd_dim,
        interior_valid_upto: window.saturating_sub(2),
    })
}
