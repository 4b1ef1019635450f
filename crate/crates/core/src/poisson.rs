//! Polynomial multivector fields on affine space: wedge products, the
//! Schouten bracket, and bivector calculus up to the trivector obstruction.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::{int, sign_pow, Scalar};

/// Polynomial in `vars` commuting variables with exact coefficients,
/// stored as a sorted exponent-vector map.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    vars: usize,
    terms: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: S) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, S::one())
    }

    /// The variable `x_i`.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(vars, e, S::one())
    }

    pub fn monomial(vars: usize, exponents: Vec<usize>, c: S) -> Self {
        assert_eq!(exponents.len(), vars, "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(S::zero);
            *entry = entry.clone() + c.clone();
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), c.clone() * v.clone()))
            .collect();
        Self {
            vars: self.vars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "polynomials in different rings");
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca.clone() * cb.clone();
                let entry = out.terms.entry(e).or_insert_with(S::zero);
                *entry = entry.clone() + c;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Partial derivative in the `i`-th variable.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.terms.insert(d, c.clone() * int::<S>(e[i] as i64));
        }
        out
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.vars, "evaluation point length");
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term * point[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Random polynomial with small integer coefficients.
    pub fn random<R: Rng>(vars: usize, max_deg: usize, rng: &mut R) -> Self {
        let mut out = Self::zero(vars);
        let mut exponents = vec![0usize; vars];
        fn walk<S: Scalar, R: Rng>(
            out: &mut Poly<S>,
            exponents: &mut Vec<usize>,
            var: usize,
            budget: usize,
            rng: &mut R,
        ) {
            if var == exponents.len() {
                let c = int::<S>(rng.gen_range(-2..=2));
                if !c.is_zero() {
                    out.terms.insert(exponents.clone(), c);
                }
                return;
            }
            for d in 0..=budget {
                exponents[var] = d;
                walk(out, exponents, var + 1, budget - d, rng);
            }
            exponents[var] = 0;
        }
        walk(&mut out, &mut exponents, 0, max_deg, rng);
        out
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        const LETTERS: [&str; 4] = ["x", "y", "z", "w"];
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = if self.vars <= 4 {
                    LETTERS[i].to_string()
                } else {
                    format!("x{}", i + 1)
                };
                if k == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Sorts a direction tuple, returning the permutation parity, or `None`
/// when an index repeats (the wedge term vanishes).
fn sort_with_sign(mut idx: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut swaps = 0i64;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((idx, swaps))
}

/// Polynomial multivector field of homogeneous degree: an antisymmetric
/// polynomial combination of coordinate directions, stored on strictly
/// increasing index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S> {
    vars: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Poly<S>>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(vars: usize, degree: usize) -> Self {
        Self {
            vars,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// Degree-0 multivector: a plain function.
    pub fn function(poly: Poly<S>) -> Self {
        let vars = poly.vars();
        let mut mv = Self::zero(vars, 0);
        if !poly.is_zero() {
            mv.comps.insert(Vec::new(), poly);
        }
        mv
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> &BTreeMap<Vec<usize>, Poly<S>> {
        &self.comps
    }

    /// Adds `poly` times the wedge of the given directions, which need not
    /// be sorted; repeated directions contribute nothing.
    pub fn add_term(&mut self, directions: &[usize], poly: &Poly<S>) -> Result<()> {
        if directions.len() != self.degree {
            return Err(Error::ArityMismatch(format!(
                "term of degree {} in a degree-{} multivector",
                directions.len(),
                self.degree
            )));
        }
        if directions.iter().any(|&i| i >= self.vars) {
            return Err(Error::DimensionMismatch("direction index out of range".into()));
        }
        if poly.vars() != self.vars {
            return Err(Error::DimensionMismatch("coefficient in a different ring".into()));
        }
        let Some((sorted, parity)) = sort_with_sign(directions.to_vec()) else {
            return Ok(());
        };
        let signed = poly.scale(&sign_pow::<S>(parity));
        let entry = self
            .comps
            .entry(sorted.clone())
            .or_insert_with(|| Poly::zero(self.vars));
        *entry = entry.add(&signed);
        if entry.is_zero() {
            self.comps.remove(&sorted);
        }
        Ok(())
    }

    /// Component on a strictly increasing tuple.
    pub fn component(&self, sorted: &[usize]) -> Poly<S> {
        self.comps
            .get(sorted)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.vars))
    }

    /// Component on an arbitrary tuple, with the antisymmetry sign; zero on
    /// repeats.
    pub fn signed_component(&self, directions: &[usize]) -> Poly<S> {
        match sort_with_sign(directions.to_vec()) {
            None => Poly::zero(self.vars),
            Some((sorted, parity)) => self.component(&sorted).scale(&sign_pow::<S>(parity)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars || self.degree != other.degree {
            return Err(Error::ArityMismatch("multivector sum shape mismatch".into()));
        }
        let mut out = self.clone();
        for (idx, poly) in &other.comps {
            let entry = out
                .comps
                .entry(idx.clone())
                .or_insert_with(|| Poly::zero(self.vars));
            *entry = entry.add(poly);
            if entry.is_zero() {
                out.comps.remove(idx);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars, self.degree);
        }
        let comps = self
            .comps
            .iter()
            .map(|(i, p)| (i.clone(), p.scale(c)))
            .collect();
        Self {
            vars: self.vars,
            degree: self.degree,
            comps,
        }
    }

    /// Wedge product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch("wedge across different spaces".into()));
        }
        let mut out = Self::zero(self.vars, self.degree + other.degree);
        for (ia, pa) in &self.comps {
            for (ib, pb) in &other.comps {
                let mut directions = ia.clone();
                directions.extend_from_slice(ib);
                out.add_term(&directions, &pa.mul(pb))?;
            }
        }
        Ok(out)
    }

    /// Schouten bracket.
    ///
    /// On decomposables the bracket of a degree-`a` and a degree-`b`
    /// multivector is the double sum over factor pairs with the pairwise
    /// vector-field bracket placed between the remaining factors and the
    /// sign `(-1)^(a+k+l-1)` for factor positions `k` and `l`. Functions
    /// enter through `[u, f] = u(f)`; two functions bracket to zero.
    pub fn sn_bracket(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch("bracket across different spaces".into()));
        }
        let a = self.degree;
        let b = other.degree;
        let out_degree = (a + b).saturating_sub(1);
        let mut out = Self::zero(self.vars, out_degree);
        for (ia, f) in &self.comps {
            for (ib, g) in &other.comps {
                self.sn_monomial(&mut out, ia, f, ib, g)?;
            }
        }
        Ok(out)
    }

    /// Bracket contribution of one pair of monomial multivectors
    /// `f d_{ia}` and `g d_{ib}`, with the coefficient attached to the
    /// first wedge factor of each.
    fn sn_monomial(
        &self,
        out: &mut Multivector<S>,
        ia: &[usize],
        f: &Poly<S>,
        ib: &[usize],
        g: &Poly<S>,
    ) -> Result<()> {
        let a = ia.len();
        let b = ib.len();
        let one = Poly::one(self.vars);
        if a == 0 && b == 0 {
            return Ok(());
        }
        if b == 0 {
            // [f d_I, g] applies each factor to the function.
            for k in 1..=a {
                let u_coeff = if k == 1 { f } else { &one };
                let derived = g.partial(ia[k - 1]).mul(u_coeff);
                // Remaining factors still carry f unless it left with u_k.
                let carried = if k == 1 { derived } else { derived.mul(f) };
                let rest: Vec<usize> = ia
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != k - 1)
                    .map(|(_, &i)| i)
                    .collect();
                let signed = carried.scale(&sign_pow::<S>((a + k) as i64));
                out.add_term(&rest, &signed)?;
            }
            return Ok(());
        }
        if a == 0 {
            // [f, g d_J]: mirror image of the function case, with the sign
            // forced by graded antisymmetry.
            for l in 1..=b {
                let v_coeff = if l == 1 { g } else { &one };
                let derived = f.partial(ib[l - 1]).mul(v_coeff);
                let carried = if l == 1 { derived } else { derived.mul(g) };
                let rest: Vec<usize> = ib
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != l - 1)
                    .map(|(_, &j)| j)
                    .collect();
                let signed = carried.scale(&sign_pow::<S>(l as i64));
                out.add_term(&rest, &signed)?;
            }
            return Ok(());
        }
        for k in 1..=a {
            for l in 1..=b {
                let sgn = sign_pow::<S>((a + k + l) as i64 - 1);
                let fu = if k == 1 { f.clone() } else { one.clone() };
                let gv = if l == 1 { g.clone() } else { one.clone() };
                let i = ia[k - 1];
                let j = ib[l - 1];
                // [fu d_i, gv d_j] = fu (d_i gv) d_j - gv (d_j fu) d_i.
                let mut pieces: Vec<(Poly<S>, usize)> = Vec::new();
                let first = fu.mul(&gv.partial(i));
                if !first.is_zero() {
                    pieces.push((first, j));
                }
                let second = gv.mul(&fu.partial(j));
                if !second.is_zero() {
                    pieces.push((second.scale(&-S::one()), i));
                }
                for (coeff, dir) in pieces {
                    // Coefficients of the untouched first factors ride along.
                    let mut total = coeff;
                    if k != 1 {
                        total = total.mul(f);
                    }
                    if l != 1 {
                        total = total.mul(g);
                    }
                    let mut directions: Vec<usize> = Vec::with_capacity(a + b - 1);
                    directions.extend(ia.iter().enumerate().filter(|(s, _)| *s != k - 1).map(|(_, &x)| x));
                    directions.push(dir);
                    directions.extend(ib.iter().enumerate().filter(|(s, _)| *s != l - 1).map(|(_, &x)| x));
                    out.add_term(&directions, &total.scale(&sgn))?;
                }
            }
        }
        Ok(())
    }

    /// Random multivector with small random polynomial components.
    pub fn random<R: Rng>(vars: usize, degree: usize, max_deg: usize, rng: &mut R) -> Self {
        let mut out = Self::zero(vars, degree);
        let idxs = crate::multiindex::combinations(vars, degree);
        for idx in idxs {
            let poly = Poly::random(vars, max_deg, rng);
            out.add_term(&idx, &poly).expect("well-formed term");
        }
        out
    }
}

/// Pairs a degree-`r` multivector with the gradients of `r` functions,
/// producing the determinant-style full contraction.
pub fn pair_with_gradients<S: Scalar>(mv: &Multivector<S>, fs: &[Poly<S>]) -> Result<Poly<S>> {
    if fs.len() != mv.degree() {
        return Err(Error::ArityMismatch(format!(
            "degree-{} multivector paired with {} gradients",
            mv.degree(),
            fs.len()
        )));
    }
    let vars = mv.vars();
    let mut acc = Poly::zero(vars);
    for (idx, comp) in mv.components() {
        let r = idx.len();
        let grid: Vec<Vec<Poly<S>>> = fs
            .iter()
            .map(|f| idx.iter().map(|&i| f.partial(i)).collect())
            .collect();
        let det = poly_det(&grid, r, vars);
        acc = acc.add(&comp.mul(&det));
    }
    Ok(acc)
}

fn poly_det<S: Scalar>(grid: &[Vec<Poly<S>>], n: usize, vars: usize) -> Poly<S> {
    if n == 0 {
        return Poly::one(vars);
    }
    if n == 1 {
        return grid[0][0].clone();
    }
    let mut acc = Poly::zero(vars);
    for c in 0..n {
        let minor: Vec<Vec<Poly<S>>> = grid[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = poly_det(&minor, n - 1, vars).mul(&grid[0][c]);
        acc = acc.add(&cofactor.scale(&sign_pow::<S>(c as i64)));
    }
    acc
}

/// Poisson-style bracket of two functions against a bivector.
pub fn poisson_bracket<S: Scalar>(
    gamma: &Multivector<S>,
    f: &Poly<S>,
    g: &Poly<S>,
) -> Result<Poly<S>> {
    if gamma.degree() != 2 {
        return Err(Error::ArityMismatch("bracket needs a bivector".into()));
    }
    let mut acc = Poly::zero(gamma.vars());
    for (idx, comp) in gamma.components() {
        let (i, j) = (idx[0], idx[1]);
        let term = f.partial(i).mul(&g.partial(j)).sub(&f.partial(j).mul(&g.partial(i)));
        acc = acc.add(&comp.mul(&term));
    }
    Ok(acc)
}

/// Trivector obstruction of a bivector: the cyclic contraction whose
/// vanishing makes the bracket satisfy the Jacobi identity.
pub fn jacobiator<S: Scalar>(gamma: &Multivector<S>) -> Result<Multivector<S>> {
    if gamma.degree() != 2 {
        return Err(Error::ArityMismatch("obstruction needs a bivector".into()));
    }
    let vars = gamma.vars();
    let mut out = Multivector::zero(vars, 3);
    for idx in crate::multiindex::combinations(vars, 3) {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let mut comp = Poly::zero(vars);
        for l in 0..vars {
            let t1 = gamma.signed_component(&[i, l]).mul(&gamma.signed_component(&[j, k]).partial(l));
            let t2 = gamma.signed_component(&[j, l]).mul(&gamma.signed_component(&[k, i]).partial(l));
            let t3 = gamma.signed_component(&[k, l]).mul(&gamma.signed_component(&[i, j]).partial(l));
            comp = comp.add(&t1).add(&t2).add(&t3);
        }
        out.add_term(&idx, &comp)?;
    }
    Ok(out)
}

/// Whether the bivector's bracket satisfies the Jacobi identity.
pub fn is_poisson<S: Scalar>(gamma: &Multivector<S>) -> Result<bool> {
    Ok(jacobiator(gamma)?.is_zero())
}

/// Cyclic triple bracket `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`; the direct
/// oracle the trivector obstruction is checked against.
pub fn cyclic_jacobi_defect<S: Scalar>(
    gamma: &Multivector<S>,
    f: &Poly<S>,
    g: &Poly<S>,
    h: &Poly<S>,
) -> Result<Poly<S>> {
    let a = poisson_bracket(gamma, f, &poisson_bracket(gamma, g, h)?)?;
    let b = poisson_bracket(gamma, g, &poisson_bracket(gamma, h, f)?)?;
    let c = poisson_bracket(gamma, h, &poisson_bracket(gamma, f, g)?)?;
    Ok(a.add(&b).add(&c))
}
