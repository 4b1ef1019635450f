//! Deformation side of the workbench: associativity defects of deformed
//! multiplications, the quadratic master-equation defect, and truncated
//! star products for constant antisymmetric coefficient matrices.

use rand::Rng;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::hochschild::{circle, d};
use crate::multiindex::tuples;
use crate::poisson::{Multivector, Poly};
use crate::{int, Scalar};

/// Associativity defect of an arity-2 cochain, computed directly from the
/// defining triple products (independently of the composition product):
/// `A(a,b,c) = mu(mu(a,b), c) - mu(a, mu(b,c))`.
pub fn assoc_defect<S: Scalar>(mu: &Cochain<S>) -> Result<Cochain<S>> {
    if mu.arity() != 2 {
        return Err(Error::ArityMismatch("associativity defect needs arity 2".into()));
    }
    let algebra = mu.algebra().clone();
    let m = algebra.dim();
    let mut out = Cochain::zero(algebra, 3)?;
    for t in tuples(m, 3) {
        for k in 0..m {
            let mut acc = S::zero();
            for l in 0..m {
                let left_in = mu.get(&[t[0], t[1]], l);
                if !left_in.is_zero() {
                    let outer = mu.get(&[l, t[2]], k);
                    if !outer.is_zero() {
                        acc = acc + left_in.clone() * outer.clone();
                    }
                }
                let right_in = mu.get(&[t[1], t[2]], l);
                if !right_in.is_zero() {
                    let outer = mu.get(&[t[0], l], k);
                    if !outer.is_zero() {
                        acc = acc - right_in.clone() * outer.clone();
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

/// Master-equation defect of an arity-2 perturbation: `d g + g o g`, which
/// by the quadratic relation equals `d g + [g, g] / 2`.
pub fn mc_defect<S: Scalar>(gamma: &Cochain<S>) -> Result<Cochain<S>> {
    if gamma.arity() != 2 {
        return Err(Error::ArityMismatch("master-equation defect needs arity 2".into()));
    }
    d(gamma)?.add(&circle(gamma, gamma)?)
}

/// Constant antisymmetric coefficient matrix driving a star product.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantBivector<S> {
    vars: usize,
    entries: Vec<S>,
}

impl<S: Scalar> ConstantBivector<S> {
    pub fn new(vars: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.len() != vars || rows.iter().any(|r| r.len() != vars) {
            return Err(Error::DimensionMismatch(format!(
                "coefficient matrix must be {vars}x{vars}"
            )));
        }
        let entries: Vec<S> = rows.into_iter().flatten().collect();
        for i in 0..vars {
            for j in 0..vars {
                let a = entries[i * vars + j].clone();
                let b = entries[j * vars + i].clone();
                if a + b != S::zero() {
                    return Err(Error::Parse(format!(
                        "coefficient matrix is not antisymmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { vars, entries })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.vars + j]
    }

    /// The same data as a constant-coefficient polynomial bivector field.
    pub fn to_multivector(&self) -> Multivector<S> {
        let mut mv = Multivector::zero(self.vars, 2);
        for i in 0..self.vars {
            for j in (i + 1)..self.vars {
                let c = self.get(i, j).clone();
                if !c.is_zero() {
                    mv.add_term(&[i, j], &Poly::constant(self.vars, c))
                        .expect("well-formed term");
                }
            }
        }
        mv
    }

    /// Random antisymmetric matrix with small integer entries.
    pub fn random<R: Rng>(vars: usize, rng: &mut R) -> Self {
        let mut entries = vec![S::zero(); vars * vars];
        for i in 0..vars {
            for j in (i + 1)..vars {
                let c = int::<S>(rng.gen_range(-2..=2));
                entries[i * vars + j] = c.clone();
                entries[j * vars + i] = -c;
            }
        }
        Self { vars, entries }
    }
}

/// Polynomial in the formal parameter, truncated above `order`, with
/// polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries<S> {
    vars: usize,
    order: usize,
    coeffs: Vec<Poly<S>>,
}

impl<S: Scalar> FormalSeries<S> {
    pub fn zero(vars: usize, order: usize) -> Self {
        Self {
            vars,
            order,
            coeffs: vec![Poly::zero(vars); order + 1],
        }
    }

    /// A plain polynomial viewed as the constant term of a series.
    pub fn from_poly(poly: Poly<S>, order: usize) -> Self {
        let mut s = Self::zero(poly.vars(), order);
        s.coeffs[0] = poly;
        s
    }

    pub fn from_coeffs(vars: usize, coeffs: Vec<Poly<S>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DimensionMismatch("series needs at least the constant term".into()));
        }
        if coeffs.iter().any(|p| p.vars() != vars) {
            return Err(Error::DimensionMismatch("series coefficient in a different ring".into()));
        }
        Ok(Self {
            vars,
            order: coeffs.len() - 1,
            coeffs,
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of the `k`-th power of the parameter.
    pub fn coeff(&self, k: usize) -> &Poly<S> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly<S>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars || self.order != other.order {
            return Err(Error::DimensionMismatch("series shape mismatch".into()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self {
            vars: self.vars,
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            vars: self.vars,
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }
}

fn embed<S: Scalar>(poly: &Poly<S>, vars: usize, right: bool) -> Poly<S> {
    let mut out = Poly::zero(2 * vars);
    for (e, c) in poly.terms() {
        let mut d = vec![0usize; 2 * vars];
        for (i, &k) in e.iter().enumerate() {
            d[if right { vars + i } else { i }] = k;
        }
        out = out.add(&Poly::monomial(2 * vars, d, c.clone()));
    }
    out
}

fn diagonal<S: Scalar>(poly: &Poly<S>, vars: usize) -> Poly<S> {
    let mut out = Poly::zero(vars);
    for (e, c) in poly.terms() {
        let mut d = vec![0usize; vars];
        for i in 0..vars {
            d[i] = e[i] + e[vars + i];
        }
        out = out.add(&Poly::monomial(vars, d, c.clone()));
    }
    out
}

fn bidiff<S: Scalar>(pi: &ConstantBivector<S>, poly: &Poly<S>) -> Poly<S> {
    let vars = pi.vars();
    let mut out = Poly::zero(2 * vars);
    for i in 0..vars {
        for j in 0..vars {
            let c = pi.get(i, j);
            if c.is_zero() {
                continue;
            }
            let term = poly.partial(i).partial(vars + j).scale(c);
            out = out.add(&term);
        }
    }
    out
}

/// Star product of two series, truncated above `order`: the exponential
/// bidifferential operator pairing left and right factors through the
/// coefficient matrix, restored to the diagonal.
pub fn star_series<S: Scalar>(
    pi: &ConstantBivector<S>,
    a: &FormalSeries<S>,
    b: &FormalSeries<S>,
    order: usize,
) -> Result<FormalSeries<S>> {
    let vars = pi.vars();
    if a.vars() != vars || b.vars() != vars {
        return Err(Error::DimensionMismatch("series in a different ring".into()));
    }
    let mut out = FormalSeries::zero(vars, order);
    for r in 0..=a.order().min(order) {
        if a.coeff(r).is_zero() {
            continue;
        }
        for s in 0..=b.order().min(order.saturating_sub(r)) {
            if b.coeff(s).is_zero() {
                continue;
            }
            let mut doubled = embed(a.coeff(r), vars, false).mul(&embed(b.coeff(s), vars, true));
            let mut factorial = S::one();
            for k in 0..=(order - r - s) {
                if k > 0 {
                    doubled = bidiff(pi, &doubled);
                    factorial = factorial * int::<S>(k as i64);
                }
                if doubled.is_zero() {
                    break;
                }
                let term = diagonal(&doubled, vars).scale(&(S::one() / factorial.clone()));
                out.coeffs[r + s + k] = out.coeffs[r + s + k].add(&term);
            }
        }
    }
    Ok(out)
}

/// Star product of two plain polynomials.
pub fn star_product<S: Scalar>(
    pi: &ConstantBivector<S>,
    f: &Poly<S>,
    g: &Poly<S>,
    order: usize,
) -> Result<FormalSeries<S>> {
    star_series(
        pi,
        &FormalSeries::from_poly(f.clone(), order),
        &FormalSeries::from_poly(g.clone(), order),
        order,
    )
}

/// Associativity defect of the truncated star product on a triple.
pub fn star_assoc_defect<S: Scalar>(
    pi: &ConstantBivector<S>,
    f: &Poly<S>,
    g: &Poly<S>,
    h: &Poly<S>,
    order: usize,
) -> Result<FormalSeries<S>> {
    let fg = star_product(pi, f, g, order)?;
    let gh = star_product(pi, g, h, order)?;
    let hs = FormalSeries::from_poly(h.clone(), order);
    let fs = FormalSeries::from_poly(f.clone(), order);
    let left = star_series(pi, &fg, &hs, order)?;
    let right = star_series(pi, &fs, &gh, order)?;
    left.sub(&right)
}

/// Star commutator `f * g - g * f`.
pub fn star_commutator<S: Scalar>(
    pi: &ConstantBivector<S>,
    f: &Poly<S>,
    g: &Poly<S>,
    order: usize,
) -> Result<FormalSeries<S>> {
    star_product(pi, f, g, order)?.sub(&star_product(pi, g, f, order)?)
}
