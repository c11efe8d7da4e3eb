use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spdc_cli::commands::{run_maps, run_optimize, run_phasematch};
use spdc_cli::config::load_config_with_overrides;
use spdc_cli::{CliError, RunConfig};

/// Spatial-spectral model of a two-crystal SPDC source and its collection
/// window optimizer.
#[derive(Debug, Parser)]
#[command(name = "spdc-window", version)]
struct Cli {
    /// JSON configuration file; defaults are used when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override a configuration value, e.g. `--set grid.n_theta=256`.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,

    /// Output directory (same as `--set output.directory=DIR`).
    #[arg(long, global = true)]
    out: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Refractive indices and the degenerate opening angle.
    Phasematch,
    /// Probability and residual-phase maps over the (θ, λ) grid.
    Maps,
    /// Iso-flux curve through the reference window and its flattest point.
    Optimize,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut overrides = cli.set;
    if let Some(out) = cli.out {
        overrides.push(format!(
            "output.directory={}",
            serde_json::Value::String(out)
        ));
    }
    let cfg = match &cli.config {
        Some(path) => load_config_with_overrides(path, &overrides)?,
        None => RunConfig::from_json_with_overrides("", &overrides)?,
    };
    match cli.command {
        Command::Phasematch => {
            let r = run_phasematch(&cfg)?;
            println!(
                "opening angle {:.6} deg (external)",
                r.opening_angle_external_deg
            );
        }
        Command::Maps => {
            let m = run_maps(&cfg)?;
            println!(
                "maps {}x{} written; peak at {:.4} deg, {:.3} nm",
                m.n_theta, m.n_lambda, m.peak_theta_deg, m.peak_lambda_nm
            );
        }
        Command::Optimize => {
            let r = run_optimize(&cfg)?;
            println!(
                "optimum fwhm {} nm, iris width {:.6} deg, phase range {:.6} rad",
                r.optimum.fwhm_nm, r.optimum.iris_width_deg, r.optimum.phase_range_rad
            );
        }
    }
    println!("output: {}", cfg.output.directory);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
