//! Finite-dimensional commutative unital algebras given by structure
//! constants.
//!
//! An [`Algebra`] is a basis `e_0, .., e_{m-1}`, a multiplication table
//! `table[i][j][k]` giving the `e_k`-coordinate of `e_i e_j`, and the
//! coordinates of the unit. Validation of the axioms is separated from
//! construction so that deliberately broken tables can be loaded and
//! reported on.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Scalar;

/// Structure-constant presentation of a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<S> {
    dim: usize,
    table: Vec<S>,
    unit: Vec<S>,
    basis_names: Vec<String>,
}

/// A failed instance of one of the algebra axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `e_i e_j != e_j e_i`.
    Commutativity { i: usize, j: usize },
    /// `(e_i e_j) e_k != e_i (e_j e_k)`.
    Associativity { i: usize, j: usize, k: usize },
    /// The declared unit does not fix `e_i` from the given side.
    Unit { i: usize, left: bool },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Commutativity { i, j } => {
                write!(f, "commutativity fails on (e{i}, e{j})")
            }
            Violation::Associativity { i, j, k } => {
                write!(f, "associativity fails on (e{i}, e{j}, e{k})")
            }
            Violation::Unit { i, left } => {
                let side = if *left { "left" } else { "right" };
                write!(f, "unit fails to fix e{i} on the {side}")
            }
        }
    }
}

impl<S: Scalar> Algebra<S> {
    /// Builds an algebra from its dimension, flat `m*m*m` structure table
    /// (`table[(i*m + j)*m + k]` is the `e_k`-coordinate of `e_i e_j`), unit
    /// coordinates and basis names.
    pub fn new(dim: usize, table: Vec<S>, unit: Vec<S>, basis_names: Vec<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("algebra must have positive dimension".into()));
        }
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure table has {} entries, expected {}",
                table.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit vector has length {}, expected {}",
                unit.len(),
                dim
            )));
        }
        if basis_names.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dimension {}",
                basis_names.len(),
                dim
            )));
        }
        Ok(Self {
            dim,
            table,
            unit,
            basis_names,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Same algebra with fresh basis names.
    pub fn renamed(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// The `e_k`-coordinate of `e_i e_j`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &S {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of the unit element.
    pub fn unit(&self) -> &[S] {
        &self.unit
    }

    /// Raw structure table, flat `m*m*m` row-major.
    pub fn table(&self) -> &[S] {
        &self.table
    }

    /// The `i`-th basis vector.
    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        v
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch("product of vectors of wrong length".into()));
        }
        let mut out = vec![S::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for (k, slot) in out.iter_mut().enumerate() {
                    let s = self.structure(i, j, k);
                    if !s.is_zero() {
                        *slot = slot.clone() + c.clone() * s.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of left multiplication by the coordinate vector `x`.
    pub fn left_mult_matrix(&self, x: &[S]) -> Result<Matrix<S>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch("multiplier of wrong length".into()));
        }
        Ok(Matrix::from_fn(self.dim, self.dim, |k, j| {
            let mut acc = S::zero();
            for i in 0..self.dim {
                if !x[i].is_zero() {
                    acc = acc + x[i].clone() * self.structure(i, j, k).clone();
                }
            }
            acc
        }))
    }

    /// Trace of left multiplication by `x`.
    pub fn trace_of_mult(&self, x: &[S]) -> Result<S> {
        let m = self.left_mult_matrix(x)?;
        let mut t = S::zero();
        for k in 0..self.dim {
            t = t + m.get(k, k).clone();
        }
        Ok(t)
    }

    /// Gram matrix of the trace form `(x, y) -> tr(L_{xy})`.
    pub fn trace_form(&self) -> Matrix<S> {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let p = self
                .multiply(&self.basis_vector(i), &self.basis_vector(j))
                .expect("basis vectors have the right length");
            self.trace_of_mult(&p).expect("product has the right length")
        })
    }

    /// Whether the trace form is nondegenerate, which for a commutative
    /// algebra over the rationals detects products of field extensions.
    pub fn is_etale(&self) -> bool {
        self.trace_form().rank() == self.dim
    }

    /// Checks all axiom instances on basis vectors and returns every failure.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let basis: Vec<Vec<S>> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        for (i, e) in basis.iter().enumerate() {
            let left = self.multiply(&self.unit, e).expect("validated lengths");
            if &left != e {
                out.push(Violation::Unit { i, left: true });
            }
            let right = self.multiply(e, &self.unit).expect("validated lengths");
            if &right != e {
                out.push(Violation::Unit { i, left: false });
            }
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.multiply(&basis[i], &basis[j]).expect("validated lengths");
                let ji = self.multiply(&basis[j], &basis[i]).expect("validated lengths");
                if ij != ji {
                    out.push(Violation::Commutativity { i, j });
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ij = self.multiply(&basis[i], &basis[j]).expect("validated lengths");
                    let left = self.multiply(&ij, &basis[k]).expect("validated lengths");
                    let jk = self.multiply(&basis[j], &basis[k]).expect("validated lengths");
                    let right = self.multiply(&basis[i], &jk).expect("validated lengths");
                    if left != right {
                        out.push(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        out
    }

    /// Quotient of the univariate polynomial ring by a monic polynomial.
    ///
    /// `coeffs` lists the defining polynomial from the constant term up to
    /// the leading coefficient, which must be `1`. The basis consists of the
    /// powers of the generator below the degree.
    pub fn quotient_poly_univar(coeffs: &[S]) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::DimensionMismatch(
                "defining polynomial must have positive degree".into(),
            ));
        }
        if coeffs[coeffs.len() - 1] != S::one() {
            return Err(Error::NonMonic);
        }
        let d = coeffs.len() - 1;
        // Row r holds the reduction of t^(d-1+r) modulo the polynomial,
        // computed by repeated multiplication by t.
        let mut power = vec![S::zero(); d];
        power[d - 1] = S::one();
        let mut reductions: Vec<Vec<S>> = vec![power];
        for _ in 0..(d - 1) {
            let last = reductions.last().expect("nonempty").clone();
            let mut next = vec![S::zero(); d];
            // Multiply by t: shift, then reduce the overflowing top power
            // using t^d = -(c_0 + c_1 t + .. + c_{d-1} t^{d-1}).
            let top = last[d - 1].clone();
            for j in (1..d).rev() {
                next[j] = last[j - 1].clone();
            }
            for (j, slot) in next.iter_mut().enumerate() {
                *slot = slot.clone() - top.clone() * coeffs[j].clone();
            }
            reductions.push(next);
        }
        let mut table = vec![S::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let deg = i + j;
                let red: Vec<S> = if deg < d {
                    let mut v = vec![S::zero(); d];
                    v[deg] = S::one();
                    v
                } else {
                    reductions[deg - (d - 1)].clone()
                };
                for (k, c) in red.into_iter().enumerate() {
                    table[(i * d + j) * d + k] = c;
                }
            }
        }
        let mut unit = vec![S::zero(); d];
        unit[0] = S::one();
        let names = (0..d)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        Self::new(d, table, unit, names)
    }

    /// Polynomial ring in `num_vars` variables truncated above total degree
    /// `max_deg`: the basis is all monomials of degree at most `max_deg` and
    /// products of higher degree are zero.
    pub fn truncated_poly(num_vars: usize, max_deg: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::DimensionMismatch("need at least one variable".into()));
        }
        let monomials = monomials_up_to(num_vars, max_deg);
        let dim = monomials.len();
        let index_of = |expt: &[usize]| monomials.iter().position(|m| m == expt);
        let mut table = vec![S::zero(); dim * dim * dim];
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate() {
                let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if sum.iter().sum::<usize>() <= max_deg {
                    let k = index_of(&sum).expect("closed under truncated products");
                    table[(i * dim + j) * dim + k] = S::one();
                }
            }
        }
        let mut unit = vec![S::zero(); dim];
        unit[0] = S::one();
        let names = monomials.iter().map(|m| monomial_name(m)).collect();
        Self::new(dim, table, unit, names)
    }
}

/// Exponent vectors of the monomials of total degree at most `max_deg`,
/// ordered by degree and then lexicographically.
fn monomials_up_to(num_vars: usize, max_deg: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for deg in 0..=max_deg {
        let mut current = vec![0; num_vars];
        collect_of_degree(num_vars, deg, 0, &mut current, &mut out);
    }
    out
}

fn collect_of_degree(
    num_vars: usize,
    remaining: usize,
    var: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if var + 1 == num_vars {
        current[var] = remaining;
        out.push(current.clone());
        current[var] = 0;
        return;
    }
    for take in (0..=remaining).rev() {
        current[var] = take;
        collect_of_degree(num_vars, remaining - take, var + 1, current, out);
        current[var] = 0;
    }
}

fn monomial_name(expt: &[usize]) -> String {
    const LETTERS: [&str; 4] = ["x", "y", "z", "w"];
    if expt.iter().all(|&e| e == 0) {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (v, &e) in expt.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let letter = if expt.len() <= 4 {
            LETTERS[v].to_string()
        } else {
            format!("x{}", v + 1)
        };
        if e == 1 {
            parts.push(letter);
        } else {
            parts.push(format!("{letter}^{e}"));
        }
    }
    parts.join("*")
}
