use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lipkin::check::run_checks;
use lipkin::figure::{emit_figure, FigureId};
use lipkin::sweep::{run_sweep, SweepConfig};
use lipkin::table::read_csv;
use lipkin_core::ModelKind;

#[derive(Parser)]
#[command(
    name = "lipkin",
    version,
    about = "Exact and Hartree-Fock Lipkin model sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Two,
    Three,
}

impl From<Model> for ModelKind {
    fn from(m: Model) -> Self {
        match m {
            Model::Two => ModelKind::TwoLevel,
            Model::Three => ModelKind::ThreeLevel,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sweep chi for one or more particle numbers and write a CSV file.
    Sweep {
        #[arg(long, value_enum)]
        model: Model,
        /// Particle numbers, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        particles: Vec<u32>,
        #[arg(long)]
        chi_min: f64,
        #[arg(long)]
        chi_max: f64,
        #[arg(long)]
        steps: usize,
        /// Space chi geometrically instead of evenly.
        #[arg(long)]
        log_grid: bool,
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reproduce one figure as SVG, running its default sweep.
    Figure {
        /// One of f1..f8.
        id: FigureId,
        #[arg(long)]
        out: PathBuf,
        /// Plot records from this CSV file instead of sweeping.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check the solvers against analytic results.
    Check,
}

fn run(command: Command) -> lipkin::Result<bool> {
    match command {
        Command::Sweep {
            model,
            particles,
            chi_min,
            chi_max,
            steps,
            log_grid,
            epsilon,
            out,
        } => {
            let config = SweepConfig {
                log_grid,
                epsilon,
                out: Some(out.clone()),
                ..SweepConfig::new(model.into(), particles, chi_min, chi_max, steps)
            };
            let records = run_sweep(&config)?;
            println!("wrote {} records to {}", records.len(), out.display());
        }
        Command::Figure { id, out, input } => {
            let records = match input {
                Some(path) => read_csv(&path)?.1,
                None => run_sweep(&id.default_sweep())?,
            };
            emit_figure(id, &records, &out)?;
            println!("wrote {id} to {}", out.display());
        }
        Command::Check => {
            let outcomes = run_checks();
            for o in &outcomes {
                println!(
                    "{} {}: {}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.name,
                    o.detail
                );
            }
            return Ok(outcomes.iter().all(|o| o.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("lipkin: some checks failed");
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("lipkin: {e}");
            ExitCode::FAILURE
        }
    }
}
