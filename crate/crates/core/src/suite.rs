//! Named verification batteries shared by the command-line tool and the
//! integration tests. Every battery runs exact identity checks over the
//! built-in corpus and reports one outcome per check; randomized parts are
//! seeded, so runs are reproducible.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bicomplex::{
    filtration_subspace, first_page_filtration, first_page_hodge, second_filtration_page,
    total_z2_cohomology, PageTable,
};
use crate::cochain::Cochain;
use crate::corpus;
use crate::deform::{
    assoc_defect, mc_defect, star_assoc_defect, star_commutator, star_product, ConstantBivector,
};
use crate::error::Result;
use crate::hochschild::{
    bracket, cohomology_dims, d, d_matrix, d_prime, d_prime_matrix, hodge_cochain_bases,
    hodge_components, homotopy_k,
};
use crate::linalg::{operator_matrix, Matrix};
use crate::poisson::{
    cyclic_jacobi_defect, is_poisson, jacobiator, pair_with_gradients, poisson_bracket,
    Multivector, Poly,
};
use crate::shuffle::{
    component_dims, eulerian_projectors, shuffle_eigenvalue, signed_shuffle_operator,
};
use crate::{int, sign_pow, Rat, RatAlgebra, RatCochain};

/// Result of a single named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Knobs for the batteries: seed for the randomized draws, exhaustive arity
/// window, and target number of random trials per randomized check.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub window: usize,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            window: 4,
            trials: 100,
        }
    }
}

impl SuiteConfig {
    /// Default knobs with a different seed.
    pub fn seeded(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    /// Largest arity covered exhaustively; one arity above it is sampled.
    /// Three-dimensional algebras stop one step earlier to keep full-basis
    /// sweeps affordable.
    fn window_arity(&self, m: usize) -> usize {
        let w = self.window.max(1);
        if m <= 2 {
            w
        } else {
            w.saturating_sub(1).max(1)
        }
    }

    /// Random sample size at the arity just above the exhaustive window.
    /// Small algebras are already covered by full bases there, so they only
    /// get a light sprinkle.
    fn sample_count(&self, m: usize) -> usize {
        let t = self.trials.max(1);
        if m >= 3 {
            t
        } else {
            (t / 6).max(1)
        }
    }

    /// Repeats per arity combination so a check's total random draw count
    /// reaches `trials`.
    fn reps(&self, combos: usize) -> usize {
        self.trials.max(1).div_ceil(combos.max(1))
    }
}

/// Battery names accepted by [`suite_by_name`] besides `"all"`.
pub const SUITE_NAMES: [&str; 7] = [
    "homotopy", "bracket", "hodge", "bicomplex", "mc", "star", "schouten",
];

/// Runs the battery with the given name; `None` for an unknown name.
pub fn suite_by_name(name: &str, cfg: SuiteConfig) -> Option<Result<Vec<CheckOutcome>>> {
    match name {
        "homotopy" => Some(homotopy_suite(cfg)),
        "bracket" => Some(bracket_suite(cfg)),
        "hodge" => Some(hodge_suite(cfg)),
        "bicomplex" => Some(bicomplex_suite(cfg)),
        "mc" => Some(mc_suite(cfg)),
        "star" => Some(star_suite(cfg)),
        "schouten" => Some(schouten_suite(cfg)),
        "all" => Some(all_suites(cfg)),
        _ => None,
    }
}

/// Every battery, concatenated.
pub fn all_suites(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    out.extend(homotopy_suite(cfg)?);
    out.extend(bracket_suite(cfg)?);
    out.extend(hodge_suite(cfg)?);
    out.extend(bicomplex_suite(cfg)?);
    out.extend(mc_suite(cfg)?);
    out.extend(star_suite(cfg)?);
    out.extend(schouten_suite(cfg)?);
    Ok(out)
}

fn corpus_arcs() -> Vec<(&'static str, Arc<RatAlgebra>)> {
    corpus::all::<Rat>()
        .into_iter()
        .map(|(n, a)| (n, Arc::new(a)))
        .collect()
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn push(out: &mut Vec<CheckOutcome>, name: String, passed: bool, details: String) {
    out.push(CheckOutcome {
        name,
        passed,
        details,
    });
}

fn note(why: &mut String, msg: String) {
    if why.is_empty() {
        *why = msg;
    }
}

/// `(-1)^((a-1)(b-1))`, the shifted-degree exchange sign.
fn eps(a: usize, b: usize) -> Rat {
    sign_pow::<Rat>((a as i64 - 1) * (b as i64 - 1))
}

fn basis_cochain(algebra: &Arc<RatAlgebra>, n: usize, j: usize) -> Result<RatCochain> {
    let len = Cochain::coeff_len(algebra, n)?;
    let mut coeffs = vec![Rat::zero(); len];
    coeffs[j] = Rat::one();
    Cochain::from_coeffs(algebra.clone(), n, coeffs)
}

/// Matrix of the contracting homotopy on arity `n`.
fn k_matrix(algebra: &Arc<RatAlgebra>, n: usize) -> Result<Matrix<Rat>> {
    let domain = Cochain::coeff_len(algebra, n)?;
    let codomain = Cochain::coeff_len(algebra, n + 1)?;
    let mut err = None;
    let matrix = operator_matrix(domain, codomain, |j| {
        let image = basis_cochain(algebra, n, j).and_then(|c| homotopy_k(&c));
        match image {
            Ok(c) => c.coeffs().to_vec(),
            Err(e) => {
                err = Some(e);
                vec![Rat::zero(); codomain]
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(matrix),
    }
}

fn page_summary(t: &PageTable) -> String {
    t.entries
        .iter()
        .map(|((p, q), dim)| format!("({p},{q})={dim}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The arity-lowering differential is exact, witnessed by an explicit
/// contraction: `k d' + d' k` is the identity everywhere, with the bare
/// `d' k` form on arity 0.
pub fn homotopy_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (name, algebra) in corpus_arcs() {
        let m = algebra.dim();
        let top = cfg.window_arity(m);
        let mut rg = rng(cfg.seed, 1);

        let mut ks = Vec::with_capacity(top + 1);
        for n in 0..=top {
            ks.push(k_matrix(&algebra, n)?);
        }
        let mut dps = vec![Matrix::zero(0, 0)];
        for n in 1..=top + 1 {
            dps.push(d_prime_matrix(&algebra, n)?);
        }

        let mut ok = dps[1].mul(&ks[0])? == Matrix::identity(m);
        let mut why = if ok { String::new() } else { "arity 0".into() };
        for n in 1..=top {
            let lhs = ks[n - 1].mul(&dps[n])?.add(&dps[n + 1].mul(&ks[n])?)?;
            if lhs != Matrix::identity(Cochain::coeff_len(&algebra, n)?) {
                ok = false;
                note(&mut why, format!("arity {n}"));
            }
        }
        push(
            &mut out,
            format!("homotopy/{name}/contraction"),
            ok,
            if ok {
                format!("k d' + d' k = id on arities 0..={top}")
            } else {
                format!("fails at {why}")
            },
        );

        let mut sq = true;
        for n in 2..=top + 1 {
            if !dps[n - 1].mul(&dps[n])?.is_zero() {
                sq = false;
            }
        }
        push(
            &mut out,
            format!("homotopy/{name}/dprime-squared"),
            sq,
            format!("d' d' = 0 on arities 2..={}", top + 1),
        );

        let count = cfg.sample_count(m);
        let mut deep = true;
        for _ in 0..count {
            let phi = Cochain::random(algebra.clone(), top + 1, &mut rg)?;
            let lhs = homotopy_k(&d_prime(&phi)?)?.add(&d_prime(&homotopy_k(&phi)?)?)?;
            if lhs != phi {
                deep = false;
            }
        }
        push(
            &mut out,
            format!("homotopy/{name}/deep-samples"),
            deep,
            format!("{count} random cochains at arity {}", top + 1),
        );

        let guard = d_prime(&Cochain::unit_element(algebra.clone())?).is_err();
        push(
            &mut out,
            format!("homotopy/{name}/arity-zero-guard"),
            guard,
            "insertion differential rejects arity 0".into(),
        );
    }
    Ok(out)
}

/// Gerstenhaber calculus: the bracket generates both differentials, is
/// graded antisymmetric, satisfies the graded Jacobi identity and both
/// differentials act as graded derivations of it.
pub fn bracket_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (name, algebra) in corpus_arcs() {
        let m = algebra.dim();
        let top = cfg.window_arity(m);
        let mut rg = rng(cfg.seed, 2);
        let mult = Cochain::multiplication(algebra.clone())?;
        let e = Cochain::unit_element(algebra.clone())?;

        push(
            &mut out,
            format!("bracket/{name}/arity-zero-d"),
            d_matrix(&algebra, 0)?.is_zero(),
            "d vanishes on arity 0 over a commutative table".into(),
        );
        push(
            &mut out,
            format!("bracket/{name}/product-cocycle"),
            d(&mult)?.is_zero(),
            "the product is killed by its own differential".into(),
        );
        push(
            &mut out,
            format!("bracket/{name}/unit-central"),
            bracket(&mult, &e)?.is_zero(),
            "[product, unit] = 0".into(),
        );

        let mut ok = true;
        let mut why = String::new();
        for n in 0..=top {
            for j in 0..Cochain::coeff_len(&algebra, n)? {
                let phi = basis_cochain(&algebra, n, j)?;
                if d(&phi)? != bracket(&mult, &phi)? {
                    ok = false;
                    note(&mut why, format!("arity {n} basis {j}"));
                }
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/d-is-bracket"),
            ok,
            if ok {
                format!("d = [product, .] on every basis cochain, arities 0..={top}")
            } else {
                format!("fails at {why}")
            },
        );

        let mut ok = true;
        let mut why = String::new();
        for n in 1..=top {
            for j in 0..Cochain::coeff_len(&algebra, n)? {
                let phi = basis_cochain(&algebra, n, j)?;
                if d_prime(&phi)? != bracket(&e, &phi)?.scale(&-Rat::one()) {
                    ok = false;
                    note(&mut why, format!("arity {n} basis {j}"));
                }
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/dprime-is-bracket"),
            ok,
            if ok {
                format!("d' = -[unit, .] on every basis cochain, arities 1..={top}")
            } else {
                format!("fails at {why}")
            },
        );

        let mut ds = Vec::with_capacity(top + 2);
        for n in 0..=top + 1 {
            ds.push(d_matrix(&algebra, n)?);
        }
        let mut sq = true;
        for n in 0..=top {
            if !ds[n + 1].mul(&ds[n])?.is_zero() {
                sq = false;
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/d-squared"),
            sq,
            format!("d d = 0 on arities 0..={top}"),
        );

        let pairs: [(usize, usize); 7] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2), (3, 3)];
        let reps = cfg.reps(pairs.len());
        let mut anti = true;
        for &(p, q) in &pairs {
            for _ in 0..reps {
                let a = Cochain::random(algebra.clone(), p, &mut rg)?;
                let b = Cochain::random(algebra.clone(), q, &mut rg)?;
                if bracket(&a, &b)? != bracket(&b, &a)?.scale(&-eps(p, q)) {
                    anti = false;
                }
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/antisymmetry"),
            anti,
            format!("graded antisymmetry on {} random pairs", reps * pairs.len()),
        );

        let triples: [(usize, usize, usize); 7] = [
            (1, 1, 1),
            (1, 1, 2),
            (1, 2, 2),
            (2, 2, 2),
            (0, 1, 1),
            (0, 2, 2),
            (1, 0, 2),
        ];
        let reps = cfg.reps(triples.len()).min(6);
        let mut jac = true;
        for &(p, q, r) in &triples {
            for _ in 0..reps {
                let a = Cochain::random(algebra.clone(), p, &mut rg)?;
                let b = Cochain::random(algebra.clone(), q, &mut rg)?;
                let c = Cochain::random(algebra.clone(), r, &mut rg)?;
                let t1 = bracket(&bracket(&a, &b)?, &c)?.scale(&eps(p, r));
                let t2 = bracket(&bracket(&b, &c)?, &a)?.scale(&eps(q, p));
                let t3 = bracket(&bracket(&c, &a)?, &b)?.scale(&eps(r, q));
                if !t1.add(&t2)?.add(&t3)?.is_zero() {
                    jac = false;
                }
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/jacobi"),
            jac,
            format!("graded Jacobi on {} random triples", reps * triples.len()),
        );

        let lpairs: [(usize, usize); 3] = [(1, 1), (1, 2), (2, 2)];
        let reps = cfg.reps(lpairs.len());
        let mut leib = true;
        for &(p, q) in &lpairs {
            for _ in 0..reps {
                let a = Cochain::random(algebra.clone(), p, &mut rg)?;
                let b = Cochain::random(algebra.clone(), q, &mut rg)?;
                let lhs = d(&bracket(&a, &b)?)?;
                let rhs = bracket(&d(&a)?, &b)?
                    .add(&bracket(&a, &d(&b)?)?.scale(&sign_pow::<Rat>(p as i64 - 1)))?;
                if lhs != rhs {
                    leib = false;
                }
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/leibniz-d"),
            leib,
            format!("d is a graded bracket derivation on {} random pairs", reps * lpairs.len()),
        );

        let ppairs: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];
        let reps = cfg.reps(ppairs.len());
        let mut pleib = true;
        for &(p, q) in &ppairs {
            for _ in 0..reps {
                let a = Cochain::random(algebra.clone(), p, &mut rg)?;
                let b = Cochain::random(algebra.clone(), q, &mut rg)?;
                let lhs = d_prime(&bracket(&a, &b)?)?;
                let rhs = bracket(&d_prime(&a)?, &b)?
                    .add(&bracket(&a, &d_prime(&b)?)?.scale(&sign_pow::<Rat>(p as i64 - 1)))?;
                if lhs != rhs {
                    pleib = false;
                }
            }
        }
        push(
            &mut out,
            format!("bracket/{name}/leibniz-dprime"),
            pleib,
            format!("d' is a graded bracket derivation on {} random pairs", reps * ppairs.len()),
        );
    }
    Ok(out)
}

/// Spectral decomposition of the argument side: the signed shuffle operator
/// splits each arity into eigenspaces, the differentials respect the split
/// and the annihilator filtration reproduces it.
pub fn hodge_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (name, algebra) in corpus_arcs() {
        let m = algebra.dim();
        let top = cfg.window_arity(m);
        let mut rg = rng(cfg.seed, 3);

        // Building the projectors checks the operator's minimal polynomial.
        let mut projs: Vec<Vec<Matrix<Rat>>> = vec![Vec::new()];
        for n in 1..=top + 1 {
            projs.push(eulerian_projectors(&algebra, n)?);
        }

        let mut part = true;
        for n in 1..=top + 1 {
            let width = projs[n][0].rows();
            let mut sum = Matrix::zero(width, width);
            for p in &projs[n] {
                sum = sum.add(p)?;
            }
            if sum != Matrix::identity(width) {
                part = false;
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/partition"),
            part,
            format!("projectors sum to the identity on arities 1..={}", top + 1),
        );

        let mut orth = true;
        for n in 1..=top {
            for (i, a) in projs[n].iter().enumerate() {
                for (j, b) in projs[n].iter().enumerate() {
                    let prod = a.mul(b)?;
                    let expect = if i == j { a.clone() } else { Matrix::zero(a.rows(), a.cols()) };
                    if prod != expect {
                        orth = false;
                    }
                }
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/orthogonality"),
            orth,
            format!("pairwise orthogonal idempotents on arities 1..={top}"),
        );

        let mut eig = true;
        for n in 1..=top {
            let s = signed_shuffle_operator(&algebra, n)?;
            for (idx, proj) in projs[n].iter().enumerate() {
                let lambda = shuffle_eigenvalue::<Rat>(idx + 1);
                if s.mul(proj)? != proj.scale(&lambda) {
                    eig = false;
                }
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/eigenvalues"),
            eig,
            "each projector image carries its predicted eigenvalue".into(),
        );

        let mut dims_ok = true;
        let mut why = String::new();
        for n in 1..=top {
            let dims = component_dims(&algebra, n)?;
            let total: usize = dims.iter().sum();
            if total != m.pow(n as u32) {
                dims_ok = false;
                note(&mut why, format!("arity {n} dims {dims:?}"));
            }
            if n == 2 && (dims[0] != m * (m + 1) / 2 || dims[1] != m * (m - 1) / 2) {
                dims_ok = false;
                note(&mut why, format!("arity 2 split {dims:?}"));
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/dimension-split"),
            dims_ok,
            if dims_ok {
                "piece dimensions fill each arity; arity 2 gives the symmetric/antisymmetric split"
                    .into()
            } else {
                why
            },
        );

        let reps = cfg.trials.max(1).div_ceil(50);
        let mut rec = true;
        for n in 1..=top {
            for _ in 0..reps {
                let phi = Cochain::random(algebra.clone(), n, &mut rg)?;
                let comps = hodge_components(&phi)?;
                let mut sum = Cochain::zero(algebra.clone(), n)?;
                for (p, c) in &comps {
                    sum = sum.add(c)?;
                    if c.precompose(&projs[n][p - 1])? != *c {
                        rec = false;
                    }
                }
                if sum != phi {
                    rec = false;
                }
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/reconstruction"),
            rec,
            "components are fixed by their projectors and sum back".into(),
        );

        let mut filt = true;
        for n in 1..=top {
            let bases = hodge_cochain_bases(&algebra, n)?;
            if filtration_subspace(&algebra, n, 0)?.rows() != 0 {
                filt = false;
            }
            for p in 1..=n {
                let g = filtration_subspace(&algebra, n, p)?;
                let expected: usize = bases[..p].iter().map(Matrix::rows).sum();
                if g.rows() != expected || g.rank() != expected {
                    filt = false;
                }
                for piece in &bases[..p] {
                    if piece.rows() > 0 && g.vstack(piece)?.rank() != expected {
                        filt = false;
                    }
                }
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/filtration-match"),
            filt,
            "shuffle annihilators stack up to the projector pieces".into(),
        );

        let mut dgrade = true;
        for n in 1..=top {
            let bases = hodge_cochain_bases(&algebra, n)?;
            for p in 1..=n {
                for r in 0..bases[p - 1].rows() {
                    let phi =
                        Cochain::from_coeffs(algebra.clone(), n, bases[p - 1].row(r).to_vec())?;
                    let image = d(&phi)?;
                    if image.precompose(&projs[n + 1][p - 1])? != image {
                        dgrade = false;
                    }
                }
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/d-bigrading"),
            dgrade,
            format!("d sends each piece into the same piece one arity up, arities 1..={top}"),
        );

        let mut pgrade = true;
        for n in 2..=top {
            let bases = hodge_cochain_bases(&algebra, n)?;
            for p in 1..=n {
                for r in 0..bases[p - 1].rows() {
                    let phi =
                        Cochain::from_coeffs(algebra.clone(), n, bases[p - 1].row(r).to_vec())?;
                    let image = d_prime(&phi)?;
                    if p == 1 {
                        if !image.is_zero() {
                            pgrade = false;
                        }
                    } else if image.precompose(&projs[n - 1][p - 2])? != image {
                        pgrade = false;
                    }
                }
            }
        }
        push(
            &mut out,
            format!("hodge/{name}/dprime-bigrading"),
            pgrade,
            format!("d' lowers the piece degree by one, arities 2..={top}"),
        );
    }
    Ok(out)
}

/// The two differentials anticommute and assemble into a bigraded complex:
/// both routes to the first page agree, the complementary page vanishes and
/// the parity-graded total cohomology is computed on a window.
pub fn bicomplex_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (name, algebra) in corpus_arcs() {
        let m = algebra.dim();
        let top = cfg.window_arity(m);
        let mut rg = rng(cfg.seed, 4);

        let mut ds = Vec::with_capacity(top + 2);
        for n in 0..=top + 1 {
            ds.push(d_matrix(&algebra, n)?);
        }
        let mut dps = vec![Matrix::zero(0, 0)];
        for n in 1..=top + 1 {
            dps.push(d_prime_matrix(&algebra, n)?);
        }
        let mut anti = dps[1].mul(&ds[0])?.is_zero();
        for n in 1..=top {
            let lhs = ds[n - 1].mul(&dps[n])?.add(&dps[n + 1].mul(&ds[n])?)?;
            if !lhs.is_zero() {
                anti = false;
            }
        }
        push(
            &mut out,
            format!("bicomplex/{name}/anticommute"),
            anti,
            format!("d d' + d' d = 0 on arities 0..={top}"),
        );

        let count = cfg.sample_count(m);
        let mut deep = true;
        for _ in 0..count {
            let phi = Cochain::random(algebra.clone(), top + 1, &mut rg)?;
            let mixed = d(&d_prime(&phi)?)?.add(&d_prime(&d(&phi)?)?)?;
            if !mixed.is_zero() || !d_prime(&d_prime(&phi)?)?.is_zero() {
                deep = false;
            }
        }
        push(
            &mut out,
            format!("bicomplex/{name}/deep-anticommute"),
            deep,
            format!("{count} random cochains at arity {}", top + 1),
        );

        let via_projectors = first_page_hodge(&algebra, top)?;
        let via_annihilators = first_page_filtration(&algebra, top)?;
        let routes = via_projectors == via_annihilators;
        push(
            &mut out,
            format!("bicomplex/{name}/first-page-routes"),
            routes,
            if routes {
                format!("both routes give {}", page_summary(&via_projectors))
            } else {
                format!(
                    "projector route {} vs annihilator route {}",
                    page_summary(&via_projectors),
                    page_summary(&via_annihilators)
                )
            },
        );

        let h = cohomology_dims(&algebra, top)?;
        let mut sums = true;
        for (n, target) in h.iter().enumerate() {
            let diag: usize = (0..=n)
                .map(|p| via_projectors.get(p, n - p).unwrap_or(0))
                .sum();
            if diag != *target {
                sums = false;
            }
        }
        push(
            &mut out,
            format!("bicomplex/{name}/diagonal-sums"),
            sums,
            format!("page diagonals add up to cohomology {h:?}"),
        );

        let second = second_filtration_page(&algebra, top)?;
        let vanish = second.entries.values().all(|&v| v == 0);
        push(
            &mut out,
            format!("bicomplex/{name}/second-page-vanishes"),
            vanish,
            if vanish {
                "the insertion-direction page is zero everywhere computed".into()
            } else {
                page_summary(&second)
            },
        );

        let report = total_z2_cohomology(&algebra, top)?;
        let parity_ok = if name == "rationals" {
            report.even_dim == 1 && report.odd_dim == 0
        } else {
            true
        };
        push(
            &mut out,
            format!("bicomplex/{name}/total-parity"),
            parity_ok,
            format!(
                "window {} gives even {} odd {} (stable through arity {})",
                report.window, report.even_dim, report.odd_dim, report.interior_valid_upto
            ),
        );
    }
    Ok(out)
}

/// Deformations of the product: the curvature of a candidate deformation is
/// the negated associativity defect of the deformed product, so flat points
/// and associative deformations coincide.
pub fn mc_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (name, algebra) in corpus_arcs() {
        let mut rg = rng(cfg.seed, 5);
        let mult = Cochain::multiplication(algebra.clone())?;

        let mut ok = true;
        let mut flat_matches = true;
        for _ in 0..cfg.trials.max(1) {
            let gamma = Cochain::random(algebra.clone(), 2, &mut rg)?;
            let deformed = mult.add(&gamma)?;
            let curvature = mc_defect(&gamma)?;
            let defect = assoc_defect(&deformed)?;
            if curvature != defect.scale(&-Rat::one()) {
                ok = false;
            }
            if curvature.is_zero() != defect.is_zero() {
                flat_matches = false;
            }
        }
        push(
            &mut out,
            format!("mc/{name}/defect-normalization"),
            ok && flat_matches,
            format!(
                "curvature equals minus the associativity defect on {} random deformations",
                cfg.trials.max(1)
            ),
        );

        let zero = Cochain::zero(algebra.clone(), 2)?;
        let base = assoc_defect(&mult)?.is_zero() && mc_defect(&zero)?.is_zero();
        push(
            &mut out,
            format!("mc/{name}/basepoint"),
            base,
            "the undeformed product is associative and the zero deformation is flat".into(),
        );

        let mut rescaled = true;
        for c in [1i64, -1, 2, -3] {
            if !mc_defect(&mult.scale(&int::<Rat>(c)))?.is_zero() {
                rescaled = false;
            }
        }
        push(
            &mut out,
            format!("mc/{name}/rescaled-solutions"),
            rescaled,
            "every rescaling of the product itself is a flat deformation".into(),
        );

        if name == "dual-numbers" {
            let mut sq_one = Cochain::zero(algebra.clone(), 2)?;
            sq_one.set(&[1, 1], 0, Rat::one());
            let mut sq_self = Cochain::zero(algebra.clone(), 2)?;
            sq_self.set(&[1, 1], 1, Rat::one());
            let nontrivial = mc_defect(&sq_one)?.is_zero()
                && mc_defect(&sq_self)?.is_zero()
                && assoc_defect(&mult.add(&sq_one)?)?.is_zero();
            push(
                &mut out,
                format!("mc/{name}/quadratic-extension"),
                nontrivial,
                "resolving the nilpotent square to 1 or to x is flat".into(),
            );
        }
    }
    Ok(out)
}

/// Truncated star products from a constant antisymmetric matrix: frozen
/// low-order values on the plane, unitality, the classical limit, the
/// first-order commutator and associativity through the truncation order.
pub fn star_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let mut rg = rng(cfg.seed, 6);
    let scale = cfg.trials.max(1).div_ceil(100);
    let plane = ConstantBivector::new(
        2,
        vec![
            vec![int::<Rat>(0), int::<Rat>(1)],
            vec![int::<Rat>(-1), int::<Rat>(0)],
        ],
    )?;
    let x = Poly::<Rat>::var(2, 0);
    let p = Poly::<Rat>::var(2, 1);
    let xp = x.mul(&p);

    let s1 = star_product(&plane, &x, &p, 3)?;
    let s2 = star_product(&plane, &p, &x, 3)?;
    let s3 = star_product(&plane, &x.mul(&x), &p.mul(&p), 3)?;
    let frozen = *s1.coeff(0) == xp
        && *s1.coeff(1) == Poly::one(2)
        && s1.coeff(2).is_zero()
        && s1.coeff(3).is_zero()
        && *s2.coeff(0) == xp
        && *s2.coeff(1) == Poly::one(2).scale(&-Rat::one())
        && s2.coeff(2).is_zero()
        && *s3.coeff(0) == xp.mul(&xp)
        && *s3.coeff(1) == xp.scale(&int::<Rat>(4))
        && *s3.coeff(2) == Poly::constant(2, int::<Rat>(2))
        && s3.coeff(3).is_zero();
    push(
        &mut out,
        "star/plane-products".into(),
        frozen,
        "x*p, p*x and x^2*p^2 take their closed-form values".into(),
    );

    let mut unit_ok = true;
    for vars in [2usize, 3] {
        let pi = if vars == 2 {
            plane.clone()
        } else {
            ConstantBivector::random(vars, &mut rg)
        };
        let one = Poly::<Rat>::one(vars);
        for _ in 0..3 {
            let f = Poly::<Rat>::random(vars, 2, &mut rg);
            let expect = crate::deform::FormalSeries::from_poly(f.clone(), 3);
            if star_product(&pi, &f, &one, 3)? != expect || star_product(&pi, &one, &f, 3)? != expect
            {
                unit_ok = false;
            }
        }
    }
    push(
        &mut out,
        "star/unit".into(),
        unit_ok,
        "1 is a two-sided star unit".into(),
    );

    let mut classical = true;
    let mut commutator = true;
    for vars in [2usize, 3] {
        let count = if vars == 2 { 15 } else { 10 } * scale;
        for _ in 0..count {
            let pi = if vars == 2 {
                plane.clone()
            } else {
                ConstantBivector::random(vars, &mut rg)
            };
            let f = Poly::<Rat>::random(vars, 2, &mut rg);
            let g = Poly::<Rat>::random(vars, 2, &mut rg);
            if *star_product(&pi, &f, &g, 3)?.coeff(0) != f.mul(&g) {
                classical = false;
            }
            let comm = star_commutator(&pi, &f, &g, 3)?;
            let pb = poisson_bracket(&pi.to_multivector(), &f, &g)?;
            if !comm.coeff(0).is_zero() || *comm.coeff(1) != pb.scale(&int::<Rat>(2)) {
                commutator = false;
            }
        }
    }
    push(
        &mut out,
        "star/classical-limit".into(),
        classical,
        "order zero of the star product is the plain product".into(),
    );
    push(
        &mut out,
        "star/commutator".into(),
        commutator,
        "the commutator starts at twice the underlying bracket".into(),
    );

    let mut assoc = true;
    let mut total = 0usize;
    for _ in 0..30 * scale {
        let f = Poly::<Rat>::random(2, 4, &mut rg);
        let g = Poly::<Rat>::random(2, 4, &mut rg);
        let h = Poly::<Rat>::random(2, 4, &mut rg);
        if !star_assoc_defect(&plane, &f, &g, &h, 4)?.is_zero() {
            assoc = false;
        }
        total += 1;
    }
    for _ in 0..30 * scale {
        let pi = ConstantBivector::random(2, &mut rg);
        let f = Poly::<Rat>::random(2, 4, &mut rg);
        let g = Poly::<Rat>::random(2, 4, &mut rg);
        let h = Poly::<Rat>::random(2, 4, &mut rg);
        if !star_assoc_defect(&pi, &f, &g, &h, 4)?.is_zero() {
            assoc = false;
        }
        total += 1;
    }
    for _ in 0..45 * scale {
        let pi = ConstantBivector::random(3, &mut rg);
        let f = Poly::<Rat>::random(3, 2, &mut rg);
        let g = Poly::<Rat>::random(3, 2, &mut rg);
        let h = Poly::<Rat>::random(3, 2, &mut rg);
        if !star_assoc_defect(&pi, &f, &g, &h, 4)?.is_zero() {
            assoc = false;
        }
        total += 1;
    }
    push(
        &mut out,
        "star/associativity".into(),
        assoc,
        format!("{total} random triples associate through order 4"),
    );
    Ok(out)
}

/// Multivector calculus: the bracket extends vector-field commutators, is
/// graded antisymmetric, a graded derivation of the wedge, satisfies the
/// graded Jacobi identity and detects non-Poisson bivectors through the
/// trivector obstruction, which the self-bracket reproduces.
pub fn schouten_suite(cfg: SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let mut rg = rng(cfg.seed, 7);
    let scale = cfg.trials.max(1).div_ceil(100);

    let x2 = Poly::<Rat>::var(2, 0);
    let y2 = Poly::<Rat>::var(2, 1);
    let mut xdy = Multivector::zero(2, 1);
    xdy.add_term(&[1], &x2)?;
    let mut ydx = Multivector::zero(2, 1);
    ydx.add_term(&[0], &y2)?;
    let mut expected = Multivector::zero(2, 1);
    expected.add_term(&[0], &x2)?;
    expected.add_term(&[1], &y2.scale(&-Rat::one()))?;
    push(
        &mut out,
        "schouten/vector-commutator".into(),
        xdy.sn_bracket(&ydx)? == expected,
        "[x d_y, y d_x] = x d_x - y d_y".into(),
    );

    let mut xdx = Multivector::zero(2, 1);
    xdx.add_term(&[0], &x2)?;
    let f = x2.mul(&x2).mul(&y2);
    let act = xdx.sn_bracket(&Multivector::function(f.clone()))?;
    push(
        &mut out,
        "schouten/vector-on-function".into(),
        act == Multivector::function(x2.scale(&int::<Rat>(2)).mul(&x2).mul(&y2)),
        "[x d_x, x^2 y] = 2 x^2 y".into(),
    );

    let dpairs: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 1), (2, 1), (2, 2), (3, 2)];
    let mut anti = true;
    for &(a, b) in &dpairs {
        for _ in 0..2 * scale {
            let pv = Multivector::<Rat>::random(3, a, 2, &mut rg);
            let qv = Multivector::<Rat>::random(3, b, 2, &mut rg);
            if pv.sn_bracket(&qv)? != qv.sn_bracket(&pv)?.scale(&-eps(a, b)) {
                anti = false;
            }
        }
    }
    push(
        &mut out,
        "schouten/antisymmetry".into(),
        anti,
        format!("graded antisymmetry on {} random pairs", 2 * scale * dpairs.len()),
    );

    let ltriples: [(usize, usize, usize); 5] =
        [(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1), (1, 1, 2)];
    let mut leib = true;
    for &(a, b, c) in &ltriples {
        for _ in 0..2 * scale {
            let pv = Multivector::<Rat>::random(3, a, 2, &mut rg);
            let qv = Multivector::<Rat>::random(3, b, 2, &mut rg);
            let rv = Multivector::<Rat>::random(3, c, 2, &mut rg);
            let lhs = pv.sn_bracket(&qv.wedge(&rv)?)?;
            let sign = sign_pow::<Rat>((a as i64 - 1) * b as i64);
            let rhs = pv
                .sn_bracket(&qv)?
                .wedge(&rv)?
                .add(&qv.wedge(&pv.sn_bracket(&rv)?)?.scale(&sign))?;
            if lhs != rhs {
                leib = false;
            }
        }
    }
    push(
        &mut out,
        "schouten/leibniz".into(),
        leib,
        format!("graded wedge derivation on {} random triples", 2 * scale * ltriples.len()),
    );

    let jtriples: [(usize, usize, usize); 4] = [(1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 1, 0)];
    let mut jac = true;
    for &(a, b, c) in &jtriples {
        for _ in 0..2 * scale {
            let pv = Multivector::<Rat>::random(3, a, 2, &mut rg);
            let qv = Multivector::<Rat>::random(3, b, 2, &mut rg);
            let rv = Multivector::<Rat>::random(3, c, 2, &mut rg);
            let t1 = pv.sn_bracket(&qv)?.sn_bracket(&rv)?.scale(&eps(a, c));
            let t2 = qv.sn_bracket(&rv)?.sn_bracket(&pv)?.scale(&eps(b, a));
            let t3 = rv.sn_bracket(&pv)?.sn_bracket(&qv)?.scale(&eps(c, b));
            if !t1.add(&t2)?.add(&t3)?.is_zero() {
                jac = false;
            }
        }
    }
    push(
        &mut out,
        "schouten/jacobi".into(),
        jac,
        format!("graded Jacobi on {} random triples", 2 * scale * jtriples.len()),
    );

    let wpairs: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 2), (0, 2)];
    let mut wedge_ok = true;
    for &(a, b) in &wpairs {
        for _ in 0..2 * scale {
            let pv = Multivector::<Rat>::random(3, a, 2, &mut rg);
            let qv = Multivector::<Rat>::random(3, b, 2, &mut rg);
            if pv.wedge(&qv)? != qv.wedge(&pv)?.scale(&sign_pow::<Rat>((a * b) as i64)) {
                wedge_ok = false;
            }
        }
    }
    for &(a, b, c) in &[(1usize, 1usize, 1usize), (1, 2, 1)] {
        for _ in 0..2 * scale {
            let pv = Multivector::<Rat>::random(3, a, 2, &mut rg);
            let qv = Multivector::<Rat>::random(3, b, 2, &mut rg);
            let rv = Multivector::<Rat>::random(3, c, 2, &mut rg);
            if pv.wedge(&qv)?.wedge(&rv)? != pv.wedge(&qv.wedge(&rv)?)? {
                wedge_ok = false;
            }
        }
    }
    push(
        &mut out,
        "schouten/wedge".into(),
        wedge_ok,
        "graded commutativity and associativity of the wedge".into(),
    );

    let x = Poly::<Rat>::var(3, 0);
    let y = Poly::<Rat>::var(3, 1);
    let z = Poly::<Rat>::var(3, 2);
    let mut so3 = Multivector::zero(3, 2);
    so3.add_term(&[0, 1], &z)?;
    so3.add_term(&[1, 2], &x)?;
    so3.add_term(&[2, 0], &y)?;
    let mut so3_ok = is_poisson(&so3)?;
    for _ in 0..5 * scale {
        let f = Poly::<Rat>::random(3, 2, &mut rg);
        let g = Poly::<Rat>::random(3, 2, &mut rg);
        let h = Poly::<Rat>::random(3, 2, &mut rg);
        if !cyclic_jacobi_defect(&so3, &f, &g, &h)?.is_zero() {
            so3_ok = false;
        }
    }
    push(
        &mut out,
        "schouten/so3-poisson".into(),
        so3_ok,
        "the rotation bivector passes the obstruction and the cyclic oracle".into(),
    );

    let mut linear = Multivector::zero(3, 2);
    linear.add_term(&[1, 2], &x)?;
    linear.add_term(&[2, 0], &Poly::one(3))?;
    push(
        &mut out,
        "schouten/linear-poisson".into(),
        is_poisson(&linear)?,
        "x d_y^d_z + d_z^d_x passes the obstruction".into(),
    );

    let mut witness = Multivector::zero(3, 2);
    witness.add_term(&[0, 1], &y.mul(&y))?;
    witness.add_term(&[1, 2], &x)?;
    let obstruction = jacobiator(&witness)?;
    let expected_comp = Poly::<Rat>::monomial(3, vec![1, 1, 0], int::<Rat>(-2));
    let witness_ok = !is_poisson(&witness)?
        && obstruction.component(&[0, 1, 2]) == expected_comp
        && cyclic_jacobi_defect(&witness, &x, &y, &z)? == expected_comp
        && pair_with_gradients(&obstruction, &[x.clone(), y.clone(), z.clone()])? == expected_comp;
    push(
        &mut out,
        "schouten/witness-obstruction".into(),
        witness_ok,
        "y^2, x bivector has obstruction component -2xy on coordinates".into(),
    );

    let mut pairing = true;
    for _ in 0..10 * scale {
        let gamma = Multivector::<Rat>::random(3, 2, 2, &mut rg);
        let f = Poly::<Rat>::random(3, 2, &mut rg);
        let g = Poly::<Rat>::random(3, 2, &mut rg);
        let h = Poly::<Rat>::random(3, 2, &mut rg);
        let direct = cyclic_jacobi_defect(&gamma, &f, &g, &h)?;
        let paired = pair_with_gradients(&jacobiator(&gamma)?, &[f, g, h])?;
        if direct != paired {
            pairing = false;
        }
    }
    push(
        &mut out,
        "schouten/jacobiator-pairing".into(),
        pairing,
        "the obstruction paired with gradients is the cyclic bracket sum".into(),
    );

    let mut canonical = Multivector::<Rat>::zero(2, 2);
    canonical.add_term(&[0, 1], &Poly::one(2))?;
    let mut selfb = witness.sn_bracket(&witness)? == jacobiator(&witness)?.scale(&int::<Rat>(2))
        && canonical.sn_bracket(&canonical)?.is_zero()
        && jacobiator(&canonical)?.is_zero()
        && so3.sn_bracket(&so3)? == jacobiator(&so3)?.scale(&int::<Rat>(2))
        && jacobiator(&so3)?.is_zero();
    let mut tested = 0usize;
    for vars in [2usize, 3, 4] {
        for _ in 0..7 * scale {
            let gamma = Multivector::<Rat>::random(vars, 2, 2, &mut rg);
            if gamma.sn_bracket(&gamma)? != jacobiator(&gamma)?.scale(&int::<Rat>(2)) {
                selfb = false;
            }
            tested += 1;
        }
    }
    push(
        &mut out,
        "schouten/self-bracket".into(),
        selfb,
        format!("[gamma, gamma] is twice the trivector obstruction on {tested} random bivectors"),
    );

    let mut pl = true;
    for _ in 0..5 * scale {
        let gamma = Multivector::<Rat>::random(3, 2, 2, &mut rg);
        let f = Poly::<Rat>::random(3, 2, &mut rg);
        let g = Poly::<Rat>::random(3, 2, &mut rg);
        let h = Poly::<Rat>::random(3, 2, &mut rg);
        let lhs = poisson_bracket(&gamma, &f, &g.mul(&h))?;
        let rhs = poisson_bracket(&gamma, &f, &g)?
            .mul(&h)
            .add(&g.mul(&poisson_bracket(&gamma, &f, &h)?));
        if lhs != rhs {
            pl = false;
        }
    }
    push(
        &mut out,
        "schouten/poisson-leibniz".into(),
        pl,
        "the induced bracket is a derivation in its second slot".into(),
    );
    Ok(out)
}
