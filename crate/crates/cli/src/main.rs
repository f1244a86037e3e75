mod commands;
mod input;
mod reproduce;

use clap::{Parser, Subcommand};
use input::AlgArgs;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "strata", version, about = "Invariants of finite-dimensional quiver algebras with relations")]
struct Cli {
    /// Print the result as a JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and print a presentation in normal form.
    Parse(AlgArgs),
    /// Size, dimension and basic properties.
    Info(AlgArgs),
    /// Check the gentle conditions.
    GentleCheck(AlgArgs),
    Cartan(AlgArgs),
    /// Euler matrix, the inverse of the Cartan matrix.
    Euler(AlgArgs),
    /// Rank of the symmetrized Euler form.
    Rank(AlgArgs),
    /// Check `Bᵀ E₁ B = E₂` for the Euler matrices of two algebras.
    Congruence {
        #[command(flatten)]
        alg: AlgArgs,
        /// Second algebra: NAME[:key=value,...] or @path.
        #[arg(long)]
        other: String,
        /// Integer matrix as JSON rows, e.g. [[1,0],[0,1]].
        #[arg(long)]
        b: String,
    },
    /// Avella-Alaminos–Geiss invariant of a gentle algebra.
    Ag(AlgArgs),
    /// Global dimension.
    Gldim {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        #[arg(long, value_enum, default_value_t = commands::GldimMethod::Resolution)]
        method: commands::GldimMethod,
    },
    /// Minimal projective resolution of a module.
    Resolve {
        #[command(flatten)]
        alg: AlgArgs,
        /// S<v>, P<v>, I<v> or str:<word>; repeat for a direct sum. Defaults to every simple.
        #[arg(long)]
        module: Vec<String>,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
    },
    /// Quasi-hereditary orders.
    Qh {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Standard modules along a weight order, lowest weight first.
    Standard {
        #[command(flatten)]
        alg: AlgArgs,
        /// Defaults to the first quasi-hereditary order.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
    },
    /// Exceptionality of a sequence and the graded endomorphisms of its sum.
    Exceptional {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, required = true)]
        module: Vec<String>,
        #[arg(long, default_value_t = 4)]
        degrees: usize,
    },
    /// The corner algebra eAe.
    Corner {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
    },
    /// The quotient A/AeA.
    Quotient {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
    },
    /// Disjoint union with a second algebra plus an arrow between them.
    Glue {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        other: String,
        /// Vertex of the first algebra.
        #[arg(long)]
        at: String,
        /// Vertex of the second algebra.
        #[arg(long)]
        to: String,
    },
    /// Test the idempotent recollement at a vertex subset.
    Recollement {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
    },
    /// All composition series up to isomorphism of the nodes.
    Series {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, default_value_t = 32)]
        max_depth: usize,
    },
    /// Derived invariant report.
    Report(AlgArgs),
    /// Compare the reports of two algebras.
    Compare {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        other: String,
    },
    /// String modules over a gentle algebra.
    #[command(subcommand)]
    Strings(commands::StringsCommand),
    /// String modules over a finite window of the repetitive algebra.
    #[command(subcommand)]
    Repetitive(commands::RepetitiveCommand),
    /// Enumerate gentle algebras up to isomorphism.
    Enumerate {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        arrows: usize,
        #[arg(long)]
        disconnected: bool,
        #[arg(long)]
        loops: bool,
        #[arg(long)]
        infinite_gldim: bool,
    },
    /// Rerun a stored computation and diff it against its golden values.
    Reproduce {
        /// A table id, or `all`.
        id: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Domain(strata_core::Error),
    Usage(String),
    Io(String),
    Golden(Value),
}

impl From<strata_core::Error> for CliError {
    fn from(e: strata_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) => write!(f, "{m}"),
            CliError::Golden(_) => write!(f, "golden mismatch"),
        }
    }
}

/// A payload and its rendering as text.
pub struct Output {
    pub payload: Value,
    pub text: String,
    /// Serialized input presentations, hashed into the provenance.
    pub inputs: Vec<String>,
}

fn input_hash(inputs: &[String], argv: &[String]) -> String {
    let mut h = Sha256::new();
    for s in inputs.iter().chain(argv) {
        h.update(s.as_bytes());
        h.update([0]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

// A closed pipe (e.g. `| head`) is not an error worth reporting.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let argv: Vec<String> = std::env::args().skip(1).filter(|a| a != "--json").collect();
    let result = commands::run(&cli.command);
    let provenance = |inputs: &[String]| {
        json!({ "input_hash": input_hash(inputs, &argv), "version": env!("CARGO_PKG_VERSION"), "config": argv })
    };
    match result {
        Ok(out) => {
            if cli.json {
                let doc = json!({ "status": "ok", "payload": out.payload, "provenance": provenance(&out.inputs) });
                emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")));
            } else {
                emit(&out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = if matches!(e, CliError::Usage(_)) { 2 } else { 1 };
            if cli.json {
                let payload = match &e {
                    CliError::Golden(v) => v.clone(),
                    other => json!({ "message": other.to_string() }),
                };
                let doc = json!({ "status": "error", "payload": payload, "provenance": provenance(&[]) });
                emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")));
            } else {
                if let CliError::Golden(v) = &e {
                    emit(&reproduce::render(v));
                }
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
