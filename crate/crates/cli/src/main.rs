use std::f64::consts::FRAC_PI_4;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rindler_tangle::closed_form::find_two_tangle_zero;
use rindler_tangle_cli::checks;
use rindler_tangle_cli::sweep::{CliError, Grid, Scenario, SweepConfig};

#[derive(Parser)]
#[command(
    name = "tangle-sweep",
    about = "Entanglement sweeps for accelerated three-party Fock states",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the acceleration parameter and emit a CSV of all measures
    Sweep(SweepArgs),
    /// Run the built-in regression checks
    Check,
    /// Print the zero crossing of the W two-tangle
    Zero,
}

#[derive(Args)]
struct SweepArgs {
    /// Input state: w, ghz, or custom:<path>
    #[arg(long, default_value = "w")]
    state: String,

    /// Lower end of the r grid
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,

    /// Upper end of the r grid
    #[arg(long, default_value_t = FRAC_PI_4)]
    r_max: f64,

    /// Number of r grid points
    #[arg(long, default_value_t = 50)]
    r_steps: usize,

    /// Lower end of Alice's r_a grid (ghz/custom only)
    #[arg(long)]
    ra_min: Option<f64>,

    /// Upper end of Alice's r_a grid (ghz/custom only)
    #[arg(long)]
    ra_max: Option<f64>,

    /// Number of r_a grid points (ghz/custom only)
    #[arg(long)]
    ra_steps: Option<usize>,

    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Decimal digits in the output
    #[arg(long, default_value_t = 10)]
    digits: usize,
}

impl SweepArgs {
    fn into_config(self) -> Result<(SweepConfig, Option<PathBuf>), CliError> {
        let scenario = Scenario::parse(&self.state)?;
        let ra_grid = if self.ra_min.is_some() || self.ra_max.is_some() || self.ra_steps.is_some()
        {
            Some(Grid {
                min: self.ra_min.unwrap_or(0.0),
                max: self.ra_max.unwrap_or(FRAC_PI_4),
                steps: self.ra_steps.unwrap_or(50),
            })
        } else {
            None
        };
        let cfg = SweepConfig {
            scenario,
            r_grid: Grid {
                min: self.r_min,
                max: self.r_max,
                steps: self.r_steps,
            },
            ra_grid,
            digits: self.digits,
        };
        cfg.validate()?;
        Ok((cfg, self.out))
    }
}

fn run_sweep_command(args: SweepArgs) -> Result<(), CliError> {
    let (cfg, out) = args.into_config()?;
    match out {
        Some(path) => {
            let file = File::create(&path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let mut writer = BufWriter::new(file);
            let summary = rindler_tangle_cli::sweep::run_sweep(&cfg, &mut writer)?;
            writer.flush()?;
            eprintln!("wrote {} rows to {}", summary.rows, path.display());
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            rindler_tangle_cli::sweep::run_sweep(&cfg, &mut lock)?;
        }
    }
    Ok(())
}

fn run_check_command() -> ExitCode {
    let results = checks::run_all();
    let mut failed = 0;
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!("[{status}] {:2}. {} -- {}", r.id, r.name, r.detail);
        if !r.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all {} checks passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} checks failed", results.len());
        ExitCode::from(1)
    }
}

fn run_zero_command() {
    let r_star = find_two_tangle_zero();
    println!("r* = {:.10}", r_star.value());
    println!("cos^2(r*) = {:.10}", r_star.cos().powi(2));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep(args) => match run_sweep_command(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e @ CliError::Config(_)) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
            Err(e @ CliError::Io(_)) => {
                eprintln!("error: {e}");
                ExitCode::from(3)
            }
        },
        Command::Check => run_check_command(),
        Command::Zero => {
            run_zero_command();
            ExitCode::SUCCESS
        }
    }
}
