//! `nilie`: command-line front end for the nilpotent-lie library.
//!
//! Exit status is 0 on success, 1 when the input is well formed but not an
//! acceptable algebra, and 2 for usage and syntax errors.

mod error;
mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nilpotent_lie::catalog::{self, CatalogId, Definition};
use nilpotent_lie::cohomology::{central_extension, extension_center_ok, no_central_component, SkewForm};
use nilpotent_lie::field::Field;
use nilpotent_lie::liealg::LieAlgebra;
use nilpotent_lie::linalg::Matrix;
use nilpotent_lie::oracle::{invariant_vector, iso_search, IsoSearchConfig, IsoSearchOutcome};
use nilpotent_lie::recognize::{recognize, RecognizeError};

use error::CliError;
use format::{parse_cocycles, AlgebraFile};

#[derive(Debug, Parser)]
#[command(name = "nilie", version, about = "Nilpotent Lie algebras of dimension at most 6")]
struct Cli {
    /// Emit line-oriented `key: value` output.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Jacobi identity.
    Validate { file: PathBuf },
    /// Print isomorphism invariants.
    Invariants { file: PathBuf },
    /// Identify the algebra with a catalog entry.
    Recognize {
        file: PathBuf,
        /// Print the isomorphism onto the catalog table.
        #[arg(long)]
        emit_iso: bool,
        /// Print the normalization steps.
        #[arg(long)]
        emit_trace: bool,
    },
    /// Print the central extension by the given cocycles.
    Extend {
        file: PathBuf,
        /// Cocycles separated by `;`, each listing the coefficients of
        /// Δ12, Δ13, ..., Δ(n-1)n.
        #[arg(long)]
        cocycles: String,
    },
    /// List catalog ids, or print one entry.
    Catalog {
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
        /// Bound on the square-free parameters listed over Q.
        #[arg(long, default_value_t = 3)]
        bound: u64,
        id: Option<String>,
    },
    /// Number of isomorphism classes.
    Count {
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
    },
    /// Decide isomorphism of two algebras over a prime field.
    Isotest {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Node budget of the search.
        #[arg(long, default_value_t = IsoSearchConfig::default().max_nodes)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let m = cli.machine;
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?, m),
        Command::Invariants { file } => invariants(&checked(file)?, m),
        Command::Recognize { file, emit_iso, emit_trace } => recognize_cmd(&load(file)?, *emit_iso, *emit_trace, m),
        Command::Extend { file, cocycles } => extend(&checked(file)?, cocycles),
        Command::Catalog { field, dim, bound, id } => catalog_cmd(parse_field(field)?, *dim, *bound, id.as_deref(), m),
        Command::Count { field, dim } => {
            let c = catalog::count(parse_field(field)?, *dim).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(if m { format!("count: {c}\n") } else { format!("{c}\n") })
        }
        Command::Isotest { file_a, file_b, budget } => isotest(&checked(file_a)?, &checked(file_b)?, *budget, m),
    }
}

fn parse_field(s: &str) -> Result<Field, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("field `{s}`: {e}")))
}

fn load(path: &Path) -> Result<LieAlgebra, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    AlgebraFile::parse(&text)?.algebra()
}

/// Loads and insists on the Jacobi identity.
fn checked(path: &Path) -> Result<LieAlgebra, CliError> {
    let l = load(path)?;
    l.validate().map_err(|v| CliError::Domain(v.to_string()))?;
    Ok(l)
}

fn validate(l: &LieAlgebra, m: bool) -> Result<String, CliError> {
    match l.validate() {
        Ok(()) => Ok(if m { "valid: true\n".into() } else { "ok\n".into() }),
        Err(v) => Err(CliError::Domain(v.to_string())),
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

fn invariants(l: &LieAlgebra, m: bool) -> Result<String, CliError> {
    let iv = invariant_vector(l);
    let rows = [
        ("field", l.field().to_string()),
        ("dim", l.dim().to_string()),
        ("nilpotent", l.is_nilpotent().to_string()),
        ("lcs_dims", list(&iv.lcs_dims)),
        ("derived_dims", list(&iv.derived_dims)),
        ("center_dim", iv.center_dim.to_string()),
        ("center_in_derived_dim", iv.center_in_derived_dim.to_string()),
        ("h2_dim", iv.h2_dim.to_string()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        if m {
            writeln!(out, "{k}: {v}").unwrap();
        } else {
            writeln!(out, "{:<22}{v}", k.replace('_', " ")).unwrap();
        }
    }
    Ok(out)
}

fn write_matrix(out: &mut String, key: &str, mat: &Matrix, m: bool) {
    for i in 0..mat.rows() {
        let row: Vec<String> = mat.row(i).iter().map(|c| c.to_string()).collect();
        if m {
            writeln!(out, "{key}: {}", row.join(" ")).unwrap();
        } else {
            writeln!(out, "  {}", row.join(" ")).unwrap();
        }
    }
}

fn recognize_cmd(l: &LieAlgebra, emit_iso: bool, emit_trace: bool, m: bool) -> Result<String, CliError> {
    let r = recognize(l).map_err(|e| match e {
        RecognizeError::InternalInvariantViolated(_) => CliError::Domain(format!("internal error: {e}")),
        e => CliError::Domain(e.to_string()),
    })?;
    let mut out = String::new();
    if m {
        writeln!(out, "id: {}", r.id).unwrap();
        writeln!(out, "verified: true").unwrap();
    } else {
        writeln!(out, "{}", r.id).unwrap();
    }
    if emit_iso {
        if !m {
            writeln!(out, "isomorphism (row i gives the y_i coordinates of the images of x_1..x_n):").unwrap();
        }
        write_matrix(&mut out, "iso_row", r.iso.matrix(), m);
    }
    if emit_trace {
        for (n, s) in r.trace.iter().enumerate() {
            if m {
                writeln!(out, "step: {} {} | {}", n + 1, s.kind, s.note).unwrap();
            } else {
                writeln!(out, "step {}: {} {}", n + 1, s.kind, s.note).unwrap();
                write_matrix(&mut out, "", s.iso.matrix(), false);
            }
        }
    }
    Ok(out)
}

fn extend(l: &LieAlgebra, spec: &str) -> Result<String, CliError> {
    let f = l.field();
    let n = l.dim();
    let forms: Vec<SkewForm> = parse_cocycles(f, n, spec)?
        .into_iter()
        .map(|v| SkewForm::from_coeffs(f, n, v).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    let ext = central_extension(l, &forms).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut out = String::new();
    for (k, t) in forms.iter().enumerate() {
        writeln!(out, "# theta_{} = {t}", k + 1).unwrap();
    }
    writeln!(out, "# center of L_theta equals V: {}", extension_center_ok(l, &forms)).unwrap();
    writeln!(out, "# cocycles independent modulo B2: {}", no_central_component(l, &forms)).unwrap();
    out.push_str(&AlgebraFile::from_algebra(&ext.algebra).render());
    Ok(out)
}

fn catalog_cmd(field: Field, dim: usize, bound: u64, id: Option<&str>, m: bool) -> Result<String, CliError> {
    let usage = |e: catalog::CatalogError| CliError::Usage(e.to_string());
    let mut out = String::new();
    let Some(id) = id else {
        for id in catalog::ids_over(field, dim, bound).map_err(usage)? {
            if m {
                writeln!(out, "id: {id}").unwrap();
            } else {
                writeln!(out, "{id}").unwrap();
            }
        }
        return Ok(out);
    };
    let id = CatalogId::parse(id, field).map_err(usage)?;
    if id.dim() != dim {
        return Err(CliError::Usage(format!("{id} does not have dimension {dim}")));
    }
    let e = catalog::entry(&id).map_err(usage)?;
    let how = match &e.definition {
        Definition::Line => "the one-dimensional algebra".to_string(),
        Definition::DirectSum { core: Some(c), abelian_dim } => format!("{c} + abelian({abelian_dim})"),
        Definition::DirectSum { core: None, abelian_dim } => format!("abelian({abelian_dim})"),
        Definition::Extension { quotient, cocycles, .. } => {
            let cs: Vec<String> = cocycles.iter().map(|c| c.to_string()).collect();
            format!("central extension of {quotient} by {}", cs.join(", "))
        }
    };
    if m {
        writeln!(out, "id: {}", e.id).unwrap();
        writeln!(out, "definition: {how}").unwrap();
        for (i, j, terms) in e.algebra.sparse() {
            let ts: Vec<String> = terms.iter().map(|(k, c)| format!("{k}:{c}")).collect();
            writeln!(out, "bracket: {i} {j} {}", ts.join(" ")).unwrap();
        }
    } else {
        writeln!(out, "# {}: {how}", e.id).unwrap();
        out.push_str(&AlgebraFile::from_algebra(&e.algebra).render());
    }
    Ok(out)
}

fn isotest(a: &LieAlgebra, b: &LieAlgebra, budget: u64, m: bool) -> Result<String, CliError> {
    let cfg = IsoSearchConfig { max_nodes: budget, ..IsoSearchConfig::default() };
    let outcome = iso_search(a, b, &cfg).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut out = String::new();
    match outcome {
        IsoSearchOutcome::Isomorphic(iso) => {
            writeln!(out, "{}", if m { "result: ISO" } else { "ISO" }).unwrap();
            write_matrix(&mut out, "witness_row", iso.matrix(), m);
        }
        IsoSearchOutcome::NotIsomorphic(why) => {
            if m {
                writeln!(out, "result: NON_ISO\nreason: {why}").unwrap();
            } else {
                writeln!(out, "NON_ISO ({why})").unwrap();
            }
        }
        IsoSearchOutcome::BudgetExceeded => {
            writeln!(out, "{}", if m { "result: BUDGET" } else { "BUDGET" }).unwrap();
        }
    }
    Ok(out)
}
