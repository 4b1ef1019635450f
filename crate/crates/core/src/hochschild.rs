//! The cochain differential calculus: both differentials, the contracting
//! homotopy, the composition product and bracket, the bigrading and the
//! cohomology computations built from them.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linalg::{operator_matrix, Matrix};
use crate::multiindex::{encode, tuple_count, tuples};
use crate::shuffle::eulerian_projectors;
use crate::{int, sign_pow, Scalar};

/// Arity-raising differential.
///
/// On arguments: the first argument multiplies the value from the left, the
/// last multiplies from the right with alternating sign, and the interior
/// terms contract neighboring arguments:
///
/// `(d f)(a_1, .., a_{n+1}) = a_1 f(a_2, ..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
///  + (-1)^{n+1} f(a_1, .., a_n) a_{n+1}`.
pub fn d<S: Scalar>(phi: &Cochain<S>) -> Result<Cochain<S>> {
    let algebra = phi.algebra().clone();
    let m = algebra.dim();
    let n = phi.arity();
    let mut out = Cochain::zero(algebra.clone(), n + 1)?;
    for t in tuples(m, n + 1) {
        for k in 0..m {
            let mut acc = S::zero();
            // a_1 * f(a_2, .., a_{n+1})
            for l in 0..m {
                let s = algebra.structure(t[0], l, k);
                if s.is_zero() {
                    continue;
                }
                let c = phi.get(&t[1..], l);
                if !c.is_zero() {
                    acc = acc + s.clone() * c.clone();
                }
            }
            // (-1)^i f(a_1, .., a_i a_{i+1}, .., a_{n+1})
            for i in 1..=n {
                let sgn = sign_pow::<S>(i as i64);
                for l in 0..m {
                    let s = algebra.structure(t[i - 1], t[i], l);
                    if s.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(n);
                    args.extend_from_slice(&t[..i - 1]);
                    args.push(l);
                    args.extend_from_slice(&t[i + 1..]);
                    let c = phi.get(&args, k);
                    if !c.is_zero() {
                        acc = acc + sgn.clone() * s.clone() * c.clone();
                    }
                }
            }
            // (-1)^{n+1} f(a_1, .., a_n) * a_{n+1}
            let sgn = sign_pow::<S>((n + 1) as i64);
            for l in 0..m {
                let s = algebra.structure(l, t[n], k);
                if s.is_zero() {
                    continue;
                }
                let c = phi.get(&t[..n], l);
                if !c.is_zero() {
                    acc = acc + sgn.clone() * s.clone() * c.clone();
                }
            }
            if !acc.is_zero() {
                out.set(&t, k, acc);
            }
        }
    }
    Ok(out)
}

/// Arity-lowering differential: the alternating sum of unit insertions,
/// signed by the insertion position counted from the left:
///
/// `(d' f)(a_1, .., a_{n-1}) = sum_{s=1}^{n} (-1)^{s-1}
///  f(a_1, .., a_{s-1}, 1, a_s, .., a_{n-1})`.
pub fn d_prime<S: Scalar>(phi: &Cochain<S>) -> Result<Cochain<S>> {
    let n = phi.arity();
    if n == 0 {
        return Err(Error::ArityMismatch(
            "the lowering differential needs at least one argument slot".into(),
        ));
    }
    let algebra = phi.algebra().clone();
    let m = algebra.dim();
    let unit = algebra.unit().to_vec();
    let mut out = Cochain::zero(algebra, n - 1)?;
    for t in tuples(m, n - 1) {
        for k in 0..m {
            let mut acc = S::zero();
            for s in 1..=n {
                let sgn = sign_pow::<S>((s - 1) as i64);
                for (l, ul) in unit.iter().enumerate() {
                    if ul.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(n);
                    args.extend_from_slice(&t[..s - 1]);
                    args.push(l);
                    args.extend_from_slice(&t[s - 1..]);
                    let c = phi.get(&args, k);
                    if !c.is_zero() {
                        acc = acc + sgn.clone() * ul.clone() * c.clone();
                    }
                }
            }
            if !acc.is_zero() {
                out.set(&t, k, acc);
            }
        }
    }
    Ok(out)
}

/// Contracting homotopy for the lowering differential: half the sum of the
/// first argument acting on the value of the rest and, with sign `(-1)^n`,
/// the last argument acting on the value of the initial block. Satisfies
/// `k d' + d' k = id` in every arity.
pub fn homotopy_k<S: Scalar>(phi: &Cochain<S>) -> Result<Cochain<S>> {
    let algebra = phi.algebra().clone();
    let m = algebra.dim();
    let n = phi.arity();
    let half = S::one() / int::<S>(2);
    let mut out = Cochain::zero(algebra.clone(), n + 1)?;
    for t in tuples(m, n + 1) {
        for k in 0..m {
            let mut acc = S::zero();
            for l in 0..m {
                let s = algebra.structure(t[0], l, k);
                if !s.is_zero() {
                    let c = phi.get(&t[1..], l);
                    if !c.is_zero() {
                        acc = acc + s.clone() * c.clone();
                    }
                }
            }
            let sgn = sign_pow::<S>(n as i64);
            for l in 0..m {
                let s = algebra.structure(t[n], l, k);
                if !s.is_zero() {
                    let c = phi.get(&t[..n], l);
                    if !c.is_zero() {
                        acc = acc + sgn.clone() * s.clone() * c.clone();
                    }
                }
            }
            if !acc.is_zero() {
                out.set(&t, k, half.clone() * acc);
            }
        }
    }
    Ok(out)
}

/// Composition product: inserts `psi` into each argument slot of `phi` with
/// the sign `(-1)^{(q-1)(p-i)}` for insertion into slot `i` of `p`, where
/// `q` is the arity of `psi`. Zero when `phi` has no slots.
pub fn circle<S: Scalar>(phi: &Cochain<S>, psi: &Cochain<S>) -> Result<Cochain<S>> {
    phi.same_algebra(psi)?;
    let algebra = phi.algebra().clone();
    let m = algebra.dim();
    let p = phi.arity();
    let q = psi.arity();
    if p == 0 {
        // No slot to insert into; the degenerate arity is represented by
        // the zero cochain in arity max(q-1, 0).
        return Cochain::zero(algebra, q.saturating_sub(1));
    }
    let out_arity = p + q - 1;
    let mut out = Cochain::zero(algebra, out_arity)?;
    for t in tuples(m, out_arity) {
        for k in 0..m {
            let mut acc = S::zero();
            for i in 1..=p {
                let sgn = sign_pow::<S>((q as i64 - 1) * (p as i64 - i as i64));
                let window = &t[i - 1..i - 1 + q];
                for l in 0..m {
                    let inner = psi.get(window, l);
                    if inner.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(p);
                    args.extend_from_slice(&t[..i - 1]);
                    args.push(l);
                    args.extend_from_slice(&t[i - 1 + q..]);
                    let outer = phi.get(&args, k);
                    if !outer.is_zero() {
                        acc = acc + sgn.clone() * inner.clone() * outer.clone();
                    }
                }
            }
            if !acc.is_zero() {
                out.set(&t, k, acc);
            }
        }
    }
    Ok(out)
}

/// Graded bracket built from the composition product:
/// `[f, g] = f o g - (-1)^{(p-1)(q-1)} g o f`.
pub fn bracket<S: Scalar>(phi: &Cochain<S>, psi: &Cochain<S>) -> Result<Cochain<S>> {
    let p = phi.arity() as i64;
    let q = psi.arity() as i64;
    let fg = circle(phi, psi)?;
    let gf = circle(psi, phi)?;
    let sgn = sign_pow::<S>((p - 1) * (q - 1));
    fg.sub(&gf.scale(&sgn))
}

/// Matrix of [`d`] on coefficient vectors at the given arity.
pub fn d_matrix<S: Scalar>(algebra: &Arc<Algebra<S>>, n: usize) -> Result<Matrix<S>> {
    let domain = Cochain::coeff_len(algebra, n)?;
    let codomain = Cochain::coeff_len(algebra, n + 1)?;
    let m = algebra.dim();
    let mut err = None;
    let matrix = operator_matrix(domain, codomain, |j| {
        let t = crate::multiindex::decode(m, n, j / m);
        match Cochain::delta(algebra.clone(), &t, j % m).and_then(|c| d(&c)) {
            Ok(img) => img.coeffs().to_vec(),
            Err(e) => {
                err = Some(e);
                vec![S::zero(); codomain]
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(matrix),
    }
}

/// Matrix of [`d_prime`] on coefficient vectors at the given arity
/// (`n >= 1`).
pub fn d_prime_matrix<S: Scalar>(algebra: &Arc<Algebra<S>>, n: usize) -> Result<Matrix<S>> {
    if n == 0 {
        return Err(Error::ArityMismatch(
            "the lowering differential needs at least one argument slot".into(),
        ));
    }
    let domain = Cochain::coeff_len(algebra, n)?;
    let codomain = Cochain::coeff_len(algebra, n - 1)?;
    let m = algebra.dim();
    let mut err = None;
    let matrix = operator_matrix(domain, codomain, |j| {
        let t = crate::multiindex::decode(m, n, j / m);
        match Cochain::delta(algebra.clone(), &t, j % m).and_then(|c| d_prime(&c)) {
            Ok(img) => img.coeffs().to_vec(),
            Err(e) => {
                err = Some(e);
                vec![S::zero(); codomain]
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(matrix),
    }
}

/// Decomposes a cochain into its bigraded components, returned as pairs of
/// the argument-side degree and the component. Arity 0 is a single piece of
/// degree 0; arity `n >= 1` splits into degrees `1..n`.
pub fn hodge_components<S: Scalar>(phi: &Cochain<S>) -> Result<Vec<(usize, Cochain<S>)>> {
    let n = phi.arity();
    if n == 0 {
        return Ok(vec![(0, phi.clone())]);
    }
    let projectors = eulerian_projectors(phi.algebra(), n)?;
    let mut out = Vec::with_capacity(n);
    for (idx, proj) in projectors.iter().enumerate() {
        out.push((idx + 1, phi.precompose(proj)?));
    }
    Ok(out)
}

/// Row bases of the bigraded pieces of the arity-`n` coefficient space.
/// Entry `p-1` spans the degree-`p` piece for `n >= 1`; for `n == 0` the
/// single entry spans all of the arity-0 space.
pub fn hodge_cochain_bases<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
) -> Result<Vec<Matrix<S>>> {
    let m = algebra.dim();
    if n == 0 {
        return Ok(vec![Matrix::identity(m)]);
    }
    let projectors = eulerian_projectors(algebra, n)?;
    let width = tuple_count(m, n + 1);
    let mut out = Vec::with_capacity(n);
    for proj in &projectors {
        let arg_basis = proj.row_space_basis();
        let mut rows = Vec::with_capacity(arg_basis.rows() * m);
        for r in 0..arg_basis.rows() {
            for k in 0..m {
                let mut v = vec![S::zero(); width];
                for (t, c) in arg_basis.row(r).iter().enumerate() {
                    if !c.is_zero() {
                        v[t * m + k] = c.clone();
                    }
                }
                rows.push(v);
            }
        }
        out.push(if rows.is_empty() {
            Matrix::zero(0, width)
        } else {
            Matrix::from_rows(rows)?
        });
    }
    Ok(out)
}

/// Dimensions of the cohomology of [`d`] in arities `0..=max_n`.
pub fn cohomology_dims<S: Scalar>(algebra: &Arc<Algebra<S>>, max_n: usize) -> Result<Vec<usize>> {
    let mut dims = Vec::with_capacity(max_n + 1);
    let mut prev_rank = 0usize;
    for n in 0..=max_n {
        let dn = d_matrix(algebra, n)?;
        let kernel = dn.cols() - dn.rank();
        dims.push(kernel - prev_rank);
        prev_rank = dn.rank();
    }
    Ok(dims)
}

/// Dimensions of the bigraded cohomology pieces in arity `n`, as
/// `(arg_degree, complement_degree, dim)` triples. Relies on [`d`]
/// preserving the argument-side degree, which the identity batteries check
/// separately.
pub fn hodge_cohomology_dims<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
) -> Result<Vec<(usize, usize, usize)>> {
    if n == 0 {
        let d0 = d_matrix(algebra, 0)?;
        return Ok(vec![(0, 0, d0.cols() - d0.rank())]);
    }
    let bases_n = hodge_cochain_bases(algebra, n)?;
    let bases_below = hodge_cochain_bases(algebra, n - 1)?;
    let dn = d_matrix(algebra, n)?;
    let dbelow = d_matrix(algebra, n - 1)?;
    let mut out = Vec::with_capacity(n);
    for p in 1..=n {
        let basis = &bases_n[p - 1];
        let restricted = dn.mul(&basis.transpose())?;
        let cocycles = basis.rows() - restricted.rank();
        let boundaries = if p <= n - 1 && n >= 1 {
            let below = &bases_below[p - 1];
            if below.rows() == 0 {
                0
            } else {
                dbelow.mul(&below.transpose())?.rank()
            }
        } else if n == 1 && p == 1 {
            // Arity-0 cochains all sit in degree 0 and map into degree 1.
            dbelow.rank()
        } else {
            0
        };
        out.push((p, n - p, cocycles - boundaries));
    }
    Ok(out)
}

/// Dimension of the space of alternating multilinear maps of arity `p` that
/// obey the product rule in every slot.
pub fn skew_multiderivation_dim<S: Scalar>(algebra: &Arc<Algebra<S>>, p: usize) -> Result<usize> {
    let m = algebra.dim();
    if p == 0 {
        return Ok(m);
    }
    let width = Cochain::coeff_len(algebra, p)?;
    let mut rows: Vec<Vec<S>> = Vec::new();
    // Alternating: swapping adjacent slots negates the value.
    for s in 0..p.saturating_sub(1) {
        for t in tuples(m, p) {
            let mut swapped = t.clone();
            swapped.swap(s, s + 1);
            if encode(m, &swapped) < encode(m, &t) {
                continue;
            }
            for k in 0..m {
                let mut row = vec![S::zero(); width];
                row[encode(m, &t) * m + k] = row[encode(m, &t) * m + k].clone() + S::one();
                row[encode(m, &swapped) * m + k] =
                    row[encode(m, &swapped) * m + k].clone() + S::one();
                rows.push(row);
            }
        }
    }
    // Product rule in slot s: the value on a product argument equals the two
    // single-factor terms multiplied back in.
    for s in 0..p {
        for rest in tuples(m, p - 1) {
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        let mut row = vec![S::zero(); width];
                        let mut with = |slot_val: usize, out: usize, c: S| {
                            let mut args = Vec::with_capacity(p);
                            args.extend_from_slice(&rest[..s]);
                            args.push(slot_val);
                            args.extend_from_slice(&rest[s..]);
                            let idx = encode(m, &args) * m + out;
                            row[idx] = row[idx].clone() + c;
                        };
                        for l in 0..m {
                            let c = algebra.structure(i, j, l).clone();
                            if !c.is_zero() {
                                with(l, k, c);
                            }
                        }
                        for l in 0..m {
                            let c = algebra.structure(i, l, k).clone();
                            if !c.is_zero() {
                                with(j, l, -c);
                            }
                        }
                        for l in 0..m {
                            let c = algebra.structure(j, l, k).clone();
                            if !c.is_zero() {
                                with(i, l, -c);
                            }
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(width);
    }
    let constraints = Matrix::from_rows(rows)?;
    Ok(width - constraints.rank())
}

/// Whether the map induced by [`d_prime`] on cohomology vanishes in arity
/// `n`: every cocycle's image under `d_prime` must be a coboundary from two
/// arities below (`n >= 2`), or zero when `n == 1`.
pub fn d_prime_vanishes_on_cohomology<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
) -> Result<bool> {
    let dn = d_matrix(algebra, n)?;
    let kernel = dn.kernel_basis();
    if n == 0 {
        return Ok(true);
    }
    let dp = d_prime_matrix(algebra, n)?;
    let image_span = if n >= 2 {
        d_matrix(algebra, n - 2)?.transpose().row_space_basis()
    } else {
        Matrix::zero(0, Cochain::coeff_len(algebra, 0)?)
    };
    for r in 0..kernel.rows() {
        let image = dp.apply(kernel.row(r))?;
        if image_span.rows() == 0 {
            if image.iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        } else if !image_span.in_row_span(&image)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether [`d_prime`] literally annihilates every cocycle in arity `n`.
pub fn d_prime_kills_cocycles<S: Scalar>(algebra: &Arc<Algebra<S>>, n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let dn = d_matrix(algebra, n)?;
    let dp = d_prime_matrix(algebra, n)?;
    let kernel = dn.kernel_basis();
    for r in 0..kernel.rows() {
        if dp.apply(kernel.row(r))?.iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches arity `n` for a cocycle not annihilated by [`d_prime`];
/// returns one if it exists.
pub fn cocycle_with_nonzero_d_prime<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    n: usize,
) -> Result<Option<Cochain<S>>> {
    if n == 0 {
        return Ok(None);
    }
    let dn = d_matrix(algebra, n)?;
    let dp = d_prime_matrix(algebra, n)?;
    let kernel = dn.kernel_basis();
    for r in 0..kernel.rows() {
        if dp.apply(kernel.row(r))?.iter().any(|x| !x.is_zero()) {
            let c = Cochain::from_coeffs(algebra.clone(), n, kernel.row(r).to_vec())?;
            return Ok(Some(c));
        }
    }
    Ok(None)
}
