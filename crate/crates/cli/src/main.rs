//! `linturan`: certify, lemma, extremal, construct, ramsey and experiment runs.
//!
//! Every subcommand writes its artifacts under the output directory and prints one summary
//! line. Outputs depend only on the arguments and the seed, unless `--timing` is given.
//!
//! CSV columns:
//!
//! * `extremal`: `n,r,ell,lo,hi,exact,nodes,seconds` (seconds is 0 without `--timing`)
//! * `ramsey --mode exact`: `r,ell,t,lo,hi,exact` (hi empty when unknown)
//! * `experiment`: `r,ell,n,cell,seed,packing_edges,kept_edges,edges` per cell, and
//!   `r,ell,points,slope,target` for the fits

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{CertifyArgs, ConstructArgs, ExperimentArgs, ExtremalArgs, LemmaArgs, RamseyArgs};
use config::{CommandKind, ExperimentConfig, Format};

const AFTER_HELP: &str = "\
CSV columns:
  extremal             n,r,ell,lo,hi,exact,nodes,seconds   (seconds is 0 without --timing)
  ramsey --mode exact  r,ell,t,lo,hi,exact                 (hi empty when unknown)
  experiment           r,ell,n,cell,seed,packing_edges,kept_edges,edges
  experiment fit       r,ell,points,slope,target
Exit codes: 0 ok, 2 config or input error, 3 budget exceeded, 4 invariant violated.";

#[derive(Parser, Debug)]
#[command(name = "linturan", version, about = "Linear hypergraphs: cycles, Turan numbers, constructions, Ramsey reductions", after_help = AFTER_HELP)]
struct Cli {
    /// Directory for reports and witnesses.
    #[arg(long, global = true, env = "LINTURAN_OUT_DIR", default_value = "linturan-out")]
    out_dir: PathBuf,
    /// Format of tabular reports.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Record wall-clock times (outputs are then no longer reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search a host read from an edge-list file for a certificate.
    Certify(CertifyArgs),
    /// Run one constructive lemma on a host and check its output.
    Lemma(LemmaArgs),
    /// Exact linear Turan numbers ex_L(n, C^r_l).
    Extremal(ExtremalArgs),
    /// Lower-bound constructions.
    Construct(ConstructArgs),
    /// Independent-set pipeline or exhaustive small Ramsey numbers.
    Ramsey(RamseyArgs),
    /// Packing-with-deletion grid and log-log slope fit.
    Experiment(ExperimentArgs),
    /// Run a TOML or JSON experiment config.
    Run {
        config: PathBuf,
    },
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
    Lib(linturan::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        use linturan::Error as E;
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Lib(E::BudgetExceeded { .. }) => 3,
            CliError::Lib(E::Invariant(_)) | CliError::Lib(E::FailedAfterRetries { .. }) => 4,
            CliError::Lib(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<linturan::Error> for CliError {
    fn from(e: linturan::Error) -> Self {
        CliError::Lib(e)
    }
}

pub struct Ctx {
    pub out: PathBuf,
    pub format: Format,
    pub timing: bool,
}

impl Ctx {
    pub fn write(&self, name: &str, contents: &str) -> Result<PathBuf, CliError> {
        let path = self.out.join(name);
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        }
        std::fs::write(&path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Ok(path)
    }
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    let mut ctx = Ctx { out: cli.out_dir, format: cli.format.unwrap_or(Format::Csv), timing: cli.timing };
    match cli.command {
        Command::Certify(a) => commands::certify(&ctx, a),
        Command::Lemma(a) => commands::lemma(&ctx, a),
        Command::Extremal(a) => commands::extremal(&ctx, a),
        Command::Construct(a) => commands::construct(&ctx, a),
        Command::Ramsey(a) => commands::ramsey(&ctx, a),
        Command::Experiment(a) => commands::experiment(&ctx, a),
        Command::Run { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            if let Some(dir) = &cfg.output_dir {
                ctx.out = dir.clone();
            }
            if let Some(f) = cfg.format {
                ctx.format = f;
            }
            match cfg.command {
                CommandKind::Certify => commands::certify(&ctx, cfg.args()?),
                CommandKind::Lemma => commands::lemma(&ctx, cfg.args()?),
                CommandKind::Extremal => commands::extremal(&ctx, cfg.args()?),
                CommandKind::Construct => commands::construct(&ctx, cfg.args()?),
                CommandKind::Ramsey => commands::ramsey(&ctx, cfg.args()?),
                CommandKind::Experiment => commands::experiment(&ctx, cfg.args()?),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let timing = cli.timing;
    let start = Instant::now();
    match dispatch(cli) {
        Ok(summary) => {
            if timing {
                println!("{summary} ({:.3}s)", start.elapsed().as_secs_f64());
            } else {
                println!("{summary}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
