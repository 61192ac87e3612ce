//! Command-line front end: run analysis jobs from TOML configs and dump
//! runnable default configs per job kind.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use volterra_weights::job::{self, JobConfig};

#[derive(Parser)]
#[command(
    name = "volterra-weights",
    about = "Boundedness analysis of Volterra operators with polynomial-sum kernels \
             between weighted L2 spaces on (0, inf)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the job described by a TOML config file.
    ///
    /// Exit codes: 0 = computed, finite/positive verdict; 2 = computed,
    /// divergent or negative verdict (a valid mathematical answer);
    /// 1 = error. Internal parallelism honors RAYON_NUM_THREADS.
    Run {
        /// Path to the job config.
        config: PathBuf,
        /// Output directory for report.txt and CSV profiles.
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Override the job's tolerance (for kinds that carry one: hardy,
        /// gram, multiplier, and the ladder rtol of operator).
        #[arg(long)]
        tol: Option<f64>,
        /// Suppress the report echo on stdout.
        #[arg(long)]
        quiet: bool,
    },
    /// Print a runnable default config for a job kind.
    DumpDefaults {
        /// One of: hardy, coefficient, doubling, operator, gram, multiplier, expansion.
        kind: String,
    },
}

fn override_tol(config: &mut JobConfig, new_tol: f64) {
    match config {
        JobConfig::Hardy { tol, .. }
        | JobConfig::Gram { tol, .. }
        | JobConfig::Multiplier { tol, .. } => *tol = new_tol,
        JobConfig::Operator { rtol, .. } => *rtol = new_tol,
        JobConfig::Coefficient { .. }
        | JobConfig::Doubling { .. }
        | JobConfig::Expansion { .. } => {}
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            config,
            out,
            tol,
            quiet,
        } => {
            let mut job = match JobConfig::load(&config) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            if let Some(t) = tol {
                override_tol(&mut job, t);
            }
            match job::run(&job, &out) {
                Ok(outcome) => {
                    if !quiet {
                        print!("{}", outcome.report);
                        for f in &outcome.files {
                            println!("wrote: {}", f.display());
                        }
                    }
                    if outcome.divergent {
                        ExitCode::from(2)
                    } else {
                        ExitCode::SUCCESS
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::DumpDefaults { kind } => {
            match JobConfig::defaults_for(&kind).and_then(|c| c.to_toml()) {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
