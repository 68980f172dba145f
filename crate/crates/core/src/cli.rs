//! Command-line interface.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 malformed input,
//! 3 invalid parameters or usage.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::io;
use crate::isotypic::extract;
use crate::models::{catalog_structure, ModelSpec, CATALOG};
use crate::rootsys::{classify, RootType};
use crate::sympjordan::LieJordanStructure;
use crate::tkk::{build, canonical_triple, JacobiMode, LieAlgebra};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "liejordan", version, about = "Exact Lie algebras from symplectic Lie-Jordan structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the Lie algebra of a catalog model or a structure file (lie-v1).
    Build {
        #[command(flatten)]
        source: Source,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the canonical sl2-triple in the built basis.
        #[arg(long)]
        triple_out: Option<PathBuf>,
    },
    /// Check a lie-v1 file.
    Verify {
        file: PathBuf,
        /// Comma-separated subset of jacobi, killing, simple.
        #[arg(long, value_delimiter = ',', default_value = "jacobi,killing,simple")]
        checks: Vec<Check>,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        /// Number of random triples in sampled mode.
        #[arg(long, default_value_t = 10000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Classify the markings of a root system (cls-v1).
    Classify {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract the structure of a lie-v1 algebra along a triple (ljs-v1).
    Decompose {
        file: PathBuf,
        #[arg(long)]
        triple: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalog models.
    Models {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Convert a catalog model or structure file to lie-v1 or ljs-v1.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Catalog name such as `maximal:1` or `sl:5:1`.
    #[arg(long)]
    model: Option<String>,
    /// An ljs-v1 file.
    #[arg(long)]
    structure: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Jacobi,
    Killing,
    Simple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Full,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "lie-v1")]
    Lie,
    #[value(name = "ljs-v1")]
    Ljs,
}

/// Outcome of one check in `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub passed: bool,
    pub detail: String,
    /// Basis labels of the violating triple, when Jacobi fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    file: String,
    dim: usize,
    passed: bool,
    checks: &'a [CheckOutcome],
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) => EXIT_MALFORMED,
        Error::InvalidParameters(_) | Error::InvalidType(_) => EXIT_INVALID,
        _ => EXIT_CHECK_FAILED,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_MALFORMED, message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure { code: EXIT_MALFORMED, message: e.to_string() }),
    }
}

fn load_structure(source: &Source) -> Result<LieJordanStructure, Failure> {
    match (&source.model, &source.structure) {
        (Some(name), _) => Ok(catalog_structure(&name.parse::<ModelSpec>()?)?),
        (None, Some(path)) => Ok(io::read_ljs(&read(path)?)?),
        (None, None) => unreachable!("clap requires a source"),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Build { source, out: path, triple_out } => {
            let s = load_structure(&source)?;
            let l = build(&s)?;
            emit(out, path.as_deref(), &io::write_lie(&l))?;
            if let Some(tp) = triple_out {
                let t = canonical_triple(&l, &s)?;
                emit(out, Some(&tp), &io::write_triple(&t))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, checks, mode, samples, seed, json } => {
            let l = io::read_lie(&read(&file)?)?;
            let mode = match mode {
                Mode::Full => JacobiMode::Full,
                Mode::Sampled => JacobiMode::Sampled { count: samples, seed },
            };
            let outcomes = verify(&l, &checks, mode, seed);
            let passed = outcomes.iter().all(|o| o.passed);
            let mut text = String::new();
            if json {
                let report = VerifyReport { file: file.display().to_string(), dim: l.dim(), passed, checks: &outcomes };
                text = serde_json::to_string_pretty(&report).expect("serializable report");
                text.push('\n');
            } else {
                text.push_str(&format!("{} (dim {})\n", file.display(), l.dim()));
                for o in &outcomes {
                    let verdict = if o.passed { "pass" } else { "FAIL" };
                    let name = serde_json::to_value(o.check).expect("check name");
                    text.push_str(&format!("  {:<8} {verdict}  {}\n", name.as_str().unwrap_or(""), o.detail));
                }
            }
            emit(out, None, &text)?;
            Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Classify { kind, rank, trials, seed, out: path } => {
            let kind: RootType = kind.parse()?;
            if trials == 0 {
                return Err(Error::InvalidParameters("--trials must be positive".into()).into());
            }
            let rows = classify(kind, rank, trials, seed)?;
            let text = io::write_cls(&rows);
            emit(out, path.as_deref(), &text)?;
            if path.is_some() {
                for (i, r) in rows.iter().enumerate() {
                    let (g0, j1, j2) = r.dims;
                    let mut line = format!("[{i}] {:?} exists={} dims=({g0}, {j1}, {j2})", r.marking.0, r.exists);
                    if let Some(j) = r.equivalent_to {
                        line.push_str(&format!(" equivalent_to=[{j}]"));
                    }
                    emit(out, None, &(line + "\n"))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { file, triple, out: path } => {
            let l = io::read_lie(&read(&file)?)?;
            let t = io::read_triple(&read(&triple)?, l.dim())?;
            let s = extract(&l, &t)?;
            emit(out, path.as_deref(), &io::write_ljs(&s))?;
            Ok(EXIT_OK)
        }
        Command::Models { list, json } => {
            if !list && !json {
                return Err(Error::InvalidParameters("use `models --list`".into()).into());
            }
            let text = if json {
                let entries: Vec<_> = CATALOG
                    .iter()
                    .map(|(name, constraint)| serde_json::json!({ "name": name, "constraints": constraint }))
                    .collect();
                serde_json::to_string_pretty(&entries).expect("serializable catalog") + "\n"
            } else {
                CATALOG.iter().map(|(name, constraint)| format!("{name:<16} {constraint}\n")).collect()
            };
            emit(out, None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Export { source, format, out: path } => {
            let s = load_structure(&source)?;
            let text = match format {
                Format::Ljs => io::write_ljs(&s),
                Format::Lie => io::write_lie(&build(&s)?),
            };
            emit(out, path.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the requested checks on an algebra.
pub fn verify(l: &LieAlgebra, checks: &[Check], mode: JacobiMode, seed: u64) -> Vec<CheckOutcome> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for &c in checks {
        if seen.contains(&c) {
            continue;
        }
        seen.push(c);
        out.push(match c {
            Check::Jacobi => {
                let r = l.verify_jacobi(mode);
                let how = match mode {
                    JacobiMode::Full => "full".to_string(),
                    JacobiMode::Sampled { count, seed } => format!("sampled {count}, seed {seed}"),
                };
                match r.violation {
                    None => CheckOutcome {
                        check: c,
                        passed: true,
                        detail: format!("{} triples ({how})", r.triples),
                        witness: None,
                    },
                    Some(t) => {
                        let names: Vec<String> = t.iter().map(|&i| l.labels()[i].to_string()).collect();
                        CheckOutcome {
                            check: c,
                            passed: false,
                            detail: format!(
                                "Jacobi identity fails on basis triple ({}, {}, {}) = ({})",
                                t[0],
                                t[1],
                                t[2],
                                names.join(", ")
                            ),
                            witness: Some(names),
                        }
                    }
                }
            }
            Check::Killing => {
                let rank = l.killing_form().rank();
                CheckOutcome {
                    check: c,
                    passed: rank == l.dim() && l.dim() > 0,
                    detail: format!("Killing form rank {rank} of {}", l.dim()),
                    witness: None,
                }
            }
            Check::Simple => {
                let s = l.simplicity(seed);
                let detail = match s.commutant_dimension {
                    Some(d) => format!("adjoint commutant dimension {d}"),
                    None if !s.killing_nondegenerate => "Killing form is degenerate".to_string(),
                    None => "no cyclic vector found".to_string(),
                };
                CheckOutcome { check: c, passed: s.is_simple(), detail, witness: None }
            }
        });
    }
    out
}
