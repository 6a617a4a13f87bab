//! Command-line front end: `lefschetz validate | invariants | certify |
//! construct | clb | catalog`.
//!
//! Exit codes: 0 success (and, for `certify`, no violated inequality),
//! 2 refuted, 1 invalid input, usage error or internal error.

mod output;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use lefschetz_core::certifier::{certify, minimal_commutator_genus};
use lefschetz_core::constructions::{catalog, catalog_entry, fiber_sum_trivial_bundle, pullback_cover, twist_power};
use lefschetz_core::document::{parse_fibration, ParsedDocument};
use lefschetz_core::{serialize_fibration, CurveKind, Overall, TopologyAssertion};

pub use output::{CatalogListing, ClbOutput, ErrorOutput, OutputDocument, ValidateOutput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lefschetz", version, about = "Invariants and inequality certificates for semistable Lefschetz fibrations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Reject unknown fields in input documents instead of warning.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a fibration document and summarize its singular fibers.
    Validate { file: PathBuf },
    /// Compute the invariant report.
    Invariants { file: PathBuf },
    /// Evaluate every applicable inequality.
    Certify(CertifyArgs),
    /// Build a new fibration document.
    #[command(subcommand)]
    Construct(Construct),
    /// Smallest base genus not excluded for the k-th power of a Dehn twist on a genus-h fiber.
    Clb { h: u32, k: u64 },
    /// List the seed catalog, or print one entry as a document.
    Catalog { name: Option<String> },
}

#[derive(Debug, Args)]
struct CertifyArgs {
    file: PathBuf,
    /// Assert the total space is neither rational nor ruled.
    #[arg(long, conflicts_with = "ruled")]
    assert_not_ruled: bool,
    /// Assert the total space is a sphere bundle over a genus-A surface blown up at B points.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    ruled: Option<Vec<u32>>,
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// k parallel copies of one vanishing cycle in a single fiber, closed up over the least admissible base genus.
    TwistPower {
        h: u32,
        k: u32,
        /// Use a separating curve splitting the fiber into genera G1 + G2.
        #[arg(long, num_args = 2, value_names = ["G1", "G2"])]
        separating: Option<Vec<u32>>,
    },
    /// Fiber sum with a trivial bundle, raising the base genus.
    FiberSum {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        extra: u32,
    },
    /// Pull back along an unbranched cover of the base.
    Pullback { file: PathBuf, degree: u64 },
}

struct Failure {
    message: String,
    path: Option<String>,
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            message: e.to_string(),
            path: None,
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            if cli.format == Format::Json {
                let doc = ErrorOutput::new(&f.message, f.path.as_deref());
                let _ = stdout.write_all(output::to_json(&doc).as_bytes());
            }
            let _ = writeln!(stderr, "error: {}", f.message);
            EXIT_INVALID
        }
    }
}

fn load(path: &Path, strict: bool) -> Result<ParsedDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_fibration(&text, strict).map_err(|e| Failure {
        path: Some(e.path().to_string()),
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout.write_all(text.as_bytes())?;
    Ok(())
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(file, cli.strict)?;
            let out = ValidateOutput::new(&doc);
            emit(stdout, &out.render(format))?;
            Ok(EXIT_OK)
        }
        Command::Invariants { file } => {
            let doc = load(file, cli.strict)?;
            let out = OutputDocument::invariants(&doc)?;
            emit(stdout, &out.render(format))?;
            Ok(EXIT_OK)
        }
        Command::Certify(args) => {
            let mut doc = load(&args.file, cli.strict)?;
            let assertion = match (&args.ruled, args.assert_not_ruled) {
                (Some(ab), _) => Some(TopologyAssertion::Ruled { a: ab[0], b: ab[1] }),
                (None, true) => Some(TopologyAssertion::NotRationalOrRuled),
                (None, false) => None,
            };
            if let Some(assertion) = assertion {
                doc.fibration = doc.fibration.to_builder().assertion(assertion).build()?;
            }
            let certificate = certify(&doc.fibration)?;
            let refuted = certificate.overall == Overall::Refuted;
            let out = OutputDocument::certificate(&doc, certificate)?;
            emit(stdout, &out.render(format))?;
            Ok(if refuted { EXIT_REFUTED } else { EXIT_OK })
        }
        Command::Construct(c) => {
            let (fd, name) = match c {
                Construct::TwistPower { h, k, separating } => {
                    let (kind, tag) = match separating {
                        Some(v) => (
                            CurveKind::Separating { left: v[0], right: v[1] },
                            format!("SEP_{}_{}", v[0], v[1]),
                        ),
                        None => (CurveKind::Nonseparating, "NONSEP".to_string()),
                    };
                    (twist_power(*h, kind, *k)?, Some(format!("TWIST_POWER_H{h}_{tag}_K{k}")))
                }
                Construct::FiberSum { file, extra } => {
                    let doc = load(file, cli.strict)?;
                    let name = doc.name.map(|n| format!("{n}+FIBER_SUM_{extra}"));
                    (fiber_sum_trivial_bundle(&doc.fibration, *extra)?, name)
                }
                Construct::Pullback { file, degree } => {
                    let doc = load(file, cli.strict)?;
                    let name = doc.name.map(|n| format!("{n}+PULLBACK_{degree}"));
                    (pullback_cover(&doc.fibration, *degree)?, name)
                }
            };
            emit(stdout, &serialize_fibration(&fd, name.as_deref()))?;
            Ok(EXIT_OK)
        }
        Command::Clb { h, k } => {
            let g = minimal_commutator_genus(*h, *k)?;
            emit(stdout, &ClbOutput { h: *h, k: *k, minimal_commutator_genus: g }.render(format))?;
            Ok(EXIT_OK)
        }
        Command::Catalog { name: None } => {
            emit(stdout, &CatalogListing::new(&catalog()).render(format))?;
            Ok(EXIT_OK)
        }
        Command::Catalog { name: Some(name) } => {
            let e = catalog_entry(name).ok_or_else(|| format!("no catalog entry named `{name}`"))?;
            emit(stdout, &serialize_fibration(&e.fibration, Some(&e.name)))?;
            Ok(EXIT_OK)
        }
    }
}
