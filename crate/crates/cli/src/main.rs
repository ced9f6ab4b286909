use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lie_yamaguti::Limits;
use liya::problem::ProblemFile;
use liya::report_doc::ReportDocument;
use liya::run::{self, ComplexKind, DeformAction, Failure};

#[derive(Parser)]
#[command(
    name = "liya",
    version,
    about = "Exact checker for Lie-Yamaguti algebras, their relative Rota-Baxter operators, cohomology, and deformations"
)]
struct Cli {
    /// Output format: machine-readable json (default) or text.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Highest cohomology level the complexes may materialize.
    #[arg(long, global = true)]
    max_level: Option<usize>,

    /// Cap on rational entries per materialized tensor.
    #[arg(long, global = true)]
    max_tensor_entries: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the algebra axioms (and representation equations, if present).
    Verify { file: PathBuf },

    /// Check an operator with both the direct identities and the strict
    /// Maurer-Cartan condition.
    RbCheck {
        file: PathBuf,
        /// Use the adjoint representation instead of a representation
        /// section.
        #[arg(long)]
        adjoint: bool,
    },

    /// Cohomology dimension table.
    Cohomology {
        file: PathBuf,
        /// Highest level to report.
        #[arg(long)]
        level: usize,
        /// Which complex: the classical one or the operator complex.
        #[arg(long, value_enum, default_value = "rb")]
        complex: ComplexArg,
        #[arg(long)]
        adjoint: bool,
    },

    /// Deformation analyses of the operator in the file.
    Deform {
        file: PathBuf,
        #[arg(value_enum)]
        action: DeformArg,
        #[arg(long)]
        adjoint: bool,
    },

    /// Seeded property battery.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Algebra and module dimensions for the generic batteries, as
        /// "n,m".
        #[arg(long, default_value = "2,2")]
        dims: String,
        /// Highest cochain degree sampled.
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    Yamaguti,
    Rb,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeformArg {
    CheckLinear,
    Nijenhuis,
    OrderN,
    Obstruction,
}

fn load(path: &PathBuf) -> Result<ProblemFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        message: format!("cannot read {}: {e}", path.display()),
        exit_code: 2,
    })?;
    Ok(ProblemFile::from_json(&text)?)
}

fn dispatch(cli: &Cli, limits: Limits) -> Result<ReportDocument, Failure> {
    match &cli.cmd {
        Cmd::Verify { file } => run::cmd_verify(&load(file)?),
        Cmd::RbCheck { file, adjoint } => run::cmd_rb_check(&load(file)?, *adjoint, limits),
        Cmd::Cohomology {
            file,
            level,
            complex,
            adjoint,
        } => {
            let kind = match complex {
                ComplexArg::Yamaguti => ComplexKind::Yamaguti,
                ComplexArg::Rb => ComplexKind::Rb,
            };
            run::cmd_cohomology(&load(file)?, *level, kind, *adjoint, limits)
        }
        Cmd::Deform {
            file,
            action,
            adjoint,
        } => {
            let action = match action {
                DeformArg::CheckLinear => DeformAction::CheckLinear,
                DeformArg::Nijenhuis => DeformAction::Nijenhuis,
                DeformArg::OrderN => DeformAction::OrderN,
                DeformArg::Obstruction => DeformAction::Obstruction,
            };
            run::cmd_deform(&load(file)?, action, *adjoint, limits)
        }
        Cmd::Selftest { seed, dims, degree } => {
            let (n, m) = dims
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Failure {
                    message: format!("cannot parse --dims {dims:?}; expected \"n,m\""),
                    exit_code: 2,
                })?;
            run::cmd_selftest(*seed, (n, m), *degree, limits)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::default();
    if let Some(l) = cli.max_level {
        limits.max_level = l;
    }
    if let Some(e) = cli.max_tensor_entries {
        limits.max_tensor_entries = e;
    }
    match dispatch(&cli, limits) {
        Ok(doc) => {
            match cli.format {
                Format::Json => println!("{}", doc.to_json()),
                Format::Text => print!("{}", doc.render_text()),
            }
            ExitCode::from(u8::try_from(run::exit_code_for(&doc)).unwrap_or(1))
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(u8::try_from(f.exit_code).unwrap_or(2))
        }
    }
}
