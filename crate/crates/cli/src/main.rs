//! `hhw`: exact verification workbench for commutative structure-constant
//! algebras. Loads algebras, bivectors and cochains from JSON, computes
//! (Hodge-refined) cohomology and runs named identity batteries.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 input
//! could not be parsed or was otherwise unusable, 3 a computation would
//! exceed the coefficient-space resource bound. Output carries no
//! timestamps: identical inputs and seeds give byte-identical reports.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hochhodge::bicomplex::{first_page_filtration, first_page_hodge};
use hochhodge::cochain::DIM_BOUND;
use hochhodge::deform::{star_assoc_defect, star_commutator, star_product, ConstantBivector};
use hochhodge::error::Error;
use hochhodge::hochschild::{cohomology_dims, hodge_cohomology_dims};
use hochhodge::json::{
    algebra_from_str, multivector_from_str, multivector_to_value, page_table_to_value,
    violations_to_value,
};
use hochhodge::poisson::{jacobiator, poisson_bracket, Poly};
use hochhodge::suite::{suite_by_name, CheckOutcome, SuiteConfig, SUITE_NAMES};
use hochhodge::{int, Rat};

/// Prints a line, swallowing broken-pipe errors so that piping the report
/// into a pager or `head` ends the program quietly.
macro_rules! say {
    ($($arg:tt)*) => {
        let _ = writeln!(std::io::stdout(), $($arg)*);
    };
}

#[derive(Parser)]
#[command(
    name = "hhw",
    version,
    about = "Exact workbench for Hochschild cochains, Hodge bigradings and deformation checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the commutative-algebra axioms of a structure-table file.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cohomology dimensions of an algebra, optionally Hodge-refined.
    Cohomology {
        file: PathBuf,
        /// Largest cohomological degree reported.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Also print the bigraded table and both first-page routes.
        #[arg(long)]
        hodge: bool,
        /// Largest admissible coefficient-space dimension.
        #[arg(long, default_value_t = DIM_BOUND)]
        bound: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named identity battery over the built-in corpus.
    Verify {
        /// One of: all, homotopy, bracket, hodge, bicomplex, mc, star, schouten.
        suite: String,
        /// Largest arity swept exhaustively.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Random draws per randomized check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Polynomial Poisson-structure checks.
    Poisson {
        #[command(subcommand)]
        cmd: PoissonCmd,
    },
    /// Truncated star-product checks.
    Star {
        #[command(subcommand)]
        cmd: StarCmd,
    },
}

#[derive(Subcommand)]
enum PoissonCmd {
    /// Test a degree-2 multivector file for the Jacobi identity.
    Jacobi {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum StarCmd {
    /// Verify unitality, the classical limit, the first-order commutator and
    /// associativity of truncated star products on random polynomials.
    Verify {
        /// Truncation order: identities hold modulo the next power.
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Number of coordinates.
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Random triples tested.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceBound { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Validate { file, format } => cmd_validate(&file, format),
        Command::Cohomology {
            file,
            max_degree,
            hodge,
            bound,
            format,
        } => cmd_cohomology(&file, max_degree, hodge, bound, format),
        Command::Verify {
            suite,
            max_degree,
            trials,
            seed,
            format,
        } => cmd_verify(&suite, max_degree, trials, seed, format),
        Command::Poisson {
            cmd: PoissonCmd::Jacobi { file, format },
        } => cmd_poisson_jacobi(&file, format),
        Command::Star {
            cmd:
                StarCmd::Verify {
                    order,
                    vars,
                    trials,
                    seed,
                    format,
                },
        } => cmd_star_verify(order, vars, trials, seed, format),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Fails with the offending size if some arity up to `max_arity` needs a
/// coefficient space above `bound` (dimension `m^(arity+1)`).
fn ensure_budget(m: usize, max_arity: usize, bound: usize) -> Result<(), Error> {
    let bound = bound.min(DIM_BOUND);
    if bound == 0 {
        return Err(Error::Parse("bound must be at least 1".into()));
    }
    let mut dim = 1usize;
    for exp in 1..=max_arity + 1 {
        dim = dim.checked_mul(m).ok_or(Error::ResourceBound {
            dim: usize::MAX,
            arity: exp - 1,
            bound,
        })?;
        if dim > bound {
            return Err(Error::ResourceBound {
                dim,
                arity: exp - 1,
                bound,
            });
        }
    }
    Ok(())
}

fn emit_report(command: &str, seed: Option<u64>, checks: &[CheckOutcome], format: Format) -> u8 {
    let failed = checks.iter().filter(|c| !c.passed).count();
    match format {
        Format::Text => {
            for c in checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                say!("{status}  {}  ({})", c.name, c.details);
            }
            say!(
                "{}: {} of {} checks passed",
                command,
                checks.len() - failed,
                checks.len()
            );
        }
        Format::Json => {
            let items: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "status": if c.passed { "pass" } else { "fail" },
                        "details": c.details,
                    })
                })
                .collect();
            let mut report = json!({
                "command": command,
                "checks": items,
                "passed": checks.len() - failed,
                "failed": failed,
            });
            if let Some(s) = seed {
                report["seed"] = json!(s);
            }
            say!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
    }
    u8::from(failed > 0)
}

fn cmd_validate(file: &PathBuf, format: Format) -> Result<u8, Error> {
    let algebra = algebra_from_str(&read_input(file)?)?;
    let violations = algebra.validate();
    match format {
        Format::Text => {
            if violations.is_empty() {
                say!(
                    "valid: dimension {}, basis [{}]",
                    algebra.dim(),
                    algebra.basis_names().join(", ")
                );
            } else {
                for v in &violations {
                    say!("violation: {v}");
                }
                say!("{} violations", violations.len());
            }
        }
        Format::Json => {
            let report = json!({
                "command": "validate",
                "dim": algebra.dim(),
                "basis": algebra.basis_names(),
                "valid": violations.is_empty(),
                "report": violations_to_value(&violations),
            });
            say!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
    }
    Ok(u8::from(!violations.is_empty()))
}

fn cmd_cohomology(
    file: &PathBuf,
    max_degree: usize,
    hodge: bool,
    bound: usize,
    format: Format,
) -> Result<u8, Error> {
    let algebra = Arc::new(algebra_from_str(&read_input(file)?)?);
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(Error::Parse(format!(
            "algebra fails its axioms ({}); run validate for details",
            violations[0]
        )));
    }
    ensure_budget(algebra.dim(), max_degree + 1, bound)?;
    let h = cohomology_dims(&algebra, max_degree)?;

    let mut bigraded = Vec::new();
    let mut pages = None;
    if hodge {
        for n in 0..=max_degree {
            bigraded.push(hodge_cohomology_dims(&algebra, n)?);
        }
        pages = Some((
            first_page_hodge(&algebra, max_degree)?,
            first_page_filtration(&algebra, max_degree)?,
        ));
    }

    match format {
        Format::Text => {
            say!(
                "algebra: dimension {}, basis [{}]",
                algebra.dim(),
                algebra.basis_names().join(", ")
            );
            for (n, dim) in h.iter().enumerate() {
                say!("H^{n}: {dim}");
            }
            for row in &bigraded {
                for &(p, q, dim) in row {
                    if dim > 0 || p + q == 0 {
                        say!("H^({p},{q}): {dim}");
                    }
                }
            }
            if let Some((proj, filt)) = &pages {
                say!("first page (projector route): {}", page_summary(proj));
                say!("first page (annihilator route): {}", page_summary(filt));
            }
        }
        Format::Json => {
            let mut report = json!({
                "command": "cohomology",
                "dim": algebra.dim(),
                "basis": algebra.basis_names(),
                "max_degree": max_degree,
                "h": h,
            });
            if hodge {
                let rows: Vec<Value> = bigraded
                    .iter()
                    .flatten()
                    .map(|&(p, q, dim)| json!({ "p": p, "q": q, "dim": dim }))
                    .collect();
                report["hodge"] = Value::Array(rows);
                if let Some((proj, filt)) = &pages {
                    report["first_page_projectors"] = page_table_to_value(proj);
                    report["first_page_annihilators"] = page_table_to_value(filt);
                }
            }
            say!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
    }
    Ok(0)
}

fn page_summary(t: &hochhodge::bicomplex::PageTable) -> String {
    let cells: Vec<String> = t
        .entries
        .iter()
        .filter(|(_, &dim)| dim > 0)
        .map(|(&(p, q), &dim)| format!("({p},{q})={dim}"))
        .collect();
    if cells.is_empty() {
        "all zero".into()
    } else {
        cells.join(" ")
    }
}

fn cmd_verify(
    suite: &str,
    max_degree: usize,
    trials: usize,
    seed: u64,
    format: Format,
) -> Result<u8, Error> {
    if max_degree == 0 || trials == 0 {
        return Err(Error::Parse(
            "max-degree and trials must be at least 1".into(),
        ));
    }
    let cfg = SuiteConfig {
        seed,
        window: max_degree,
        trials,
    };
    let Some(result) = suite_by_name(suite, cfg) else {
        return Err(Error::Parse(format!(
            "unknown suite '{suite}'; expected all or one of {}",
            SUITE_NAMES.join(", ")
        )));
    };
    let checks = result?;
    Ok(emit_report(
        &format!("verify {suite}"),
        Some(seed),
        &checks,
        format,
    ))
}

fn cmd_poisson_jacobi(file: &PathBuf, format: Format) -> Result<u8, Error> {
    let gamma = multivector_from_str(&read_input(file)?)?;
    if gamma.degree() != 2 {
        return Err(Error::Parse(format!(
            "jacobi expects a degree-2 multivector, got degree {}",
            gamma.degree()
        )));
    }
    let obstruction = jacobiator(&gamma)?;
    let passed = obstruction.is_zero();
    match format {
        Format::Text => {
            if passed {
                say!("poisson: the jacobiator vanishes, the bracket satisfies Jacobi");
            } else {
                say!("not poisson: nonzero jacobiator components");
                for (idx, poly) in obstruction.components() {
                    say!("  {idx:?}: {poly}");
                }
            }
        }
        Format::Json => {
            let report = json!({
                "command": "poisson jacobi",
                "vars": gamma.vars(),
                "poisson": passed,
                "jacobiator": multivector_to_value(&obstruction),
            });
            say!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
    }
    Ok(u8::from(!passed))
}

fn cmd_star_verify(
    order: usize,
    vars: usize,
    trials: usize,
    seed: u64,
    format: Format,
) -> Result<u8, Error> {
    if order == 0 || trials == 0 {
        return Err(Error::Parse("order and trials must be at least 1".into()));
    }
    if !(1..=6).contains(&vars) {
        return Err(Error::Parse(
            "vars must be between 1 and 6; higher counts blow up the mixed partial sweep".into(),
        ));
    }
    let mut rg = ChaCha8Rng::seed_from_u64(seed);
    let max_deg = 4.min(order);
    let one = Poly::<Rat>::one(vars);

    let mut unit_ok = true;
    let mut classical = true;
    let mut commutator = true;
    let mut assoc = true;
    for _ in 0..trials {
        let pi = ConstantBivector::<Rat>::random(vars, &mut rg);
        let f = Poly::<Rat>::random(vars, max_deg, &mut rg);
        let g = Poly::<Rat>::random(vars, max_deg, &mut rg);
        let h = Poly::<Rat>::random(vars, max_deg, &mut rg);

        let sf = star_product(&pi, &f, &one, order)?;
        let fs = star_product(&pi, &one, &f, order)?;
        if sf != fs || *sf.coeff(0) != f || (1..=order).any(|k| !sf.coeff(k).is_zero()) {
            unit_ok = false;
        }
        if *star_product(&pi, &f, &g, order)?.coeff(0) != f.mul(&g) {
            classical = false;
        }
        let comm = star_commutator(&pi, &f, &g, order)?;
        let pb = poisson_bracket(&pi.to_multivector(), &f, &g)?;
        if !comm.coeff(0).is_zero() || *comm.coeff(1) != pb.scale(&int::<Rat>(2)) {
            commutator = false;
        }
        if !star_assoc_defect(&pi, &f, &g, &h, order)?.is_zero() {
            assoc = false;
        }
    }

    let checks = vec![
        CheckOutcome {
            name: "star/unit".into(),
            passed: unit_ok,
            details: format!("1 is a two-sided unit on {trials} random polynomials"),
        },
        CheckOutcome {
            name: "star/classical-limit".into(),
            passed: classical,
            details: "order zero is the plain product".into(),
        },
        CheckOutcome {
            name: "star/commutator".into(),
            passed: commutator,
            details: "the commutator starts at twice the bivector bracket".into(),
        },
        CheckOutcome {
            name: "star/associativity".into(),
            passed: assoc,
            details: format!("{trials} random triples associate through order {order}"),
        },
    ];
    Ok(emit_report(
        &format!("star verify --order {order} --vars {vars}"),
        Some(seed),
        &checks,
        format,
    ))
}
