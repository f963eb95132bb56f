use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ebitgap::checks::{all_pass, render_table};
use ebitgap::figure::figure1;
use ebitgap::format::{sci, write_sweep_csv};
use ebitgap::report::reproduce_report;
use ebitgap::verify::verify_suite;
use ebitgap::{CliError, Settings};
use ebitgap_core::experiments::{sweep, SweepRange};
use ebitgap_core::measures::ec_lower_bound_from_overlap;
use ebitgap_core::model::upb_projector;
use ebitgap_core::overlap::{
    grid_oracle_overlap, seesaw_max_overlap, two_copy_overlap, OverlapResult, SeesawConfig,
};
use ebitgap_core::C64;

#[derive(Parser)]
#[command(name = "ebitgap", version, about = "Entanglement bounds for a distillable state with a cost gap")]
struct Cli {
    /// Seed for restart initialization and sampled checks
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Seesaw convergence tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol_eig: f64,

    /// Witness eigenvalue threshold for the distillability certificate
    #[arg(long, global = true, default_value_t = 1e-10)]
    witness_tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check structural invariants of the kernel and the model
    Verify,
    /// Recompute every quoted number and print a pass/fail table
    Reproduce,
    /// Witness eigenvalue and negativity along σ(p), as CSV on stdout
    Sweep {
        #[arg(long)]
        p_min: f64,
        #[arg(long)]
        p_max: f64,
        #[arg(long)]
        steps: usize,
        /// Logarithmic spacing (requires p-min > 0)
        #[arg(long)]
        log: bool,
    },
    /// Write the figure CSV (and an SVG next to it)
    Figure1 {
        #[arg(long)]
        out: PathBuf,
    },
    /// Maximal product overlap with the UPB complement projector
    Overlap {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        copies: u8,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        /// Also run the real-grid oracle at this resolution (single copy only)
        #[arg(long)]
        grid_resolution: Option<usize>,
    },
}

fn format_vector(v: &[C64]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|z| format!("{}{:+.8e}i", sci(z.re), z.im))
        .collect();
    format!("[{}]", parts.join(", "))
}

fn print_overlap(out: &mut impl Write, label: &str, r: &OverlapResult) -> io::Result<()> {
    writeln!(out, "{label}_alpha = {}", sci(r.alpha))?;
    writeln!(out, "restarts = {}", r.restarts_used)?;
    writeln!(out, "iterations_total = {}", r.iterations_total)?;
    writeln!(out, "converged = {}", r.converged)?;
    writeln!(out, "a_opt = {}", format_vector(&r.a_opt))?;
    writeln!(out, "b_opt = {}", format_vector(&r.b_opt))?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let settings = Settings {
        seed: cli.seed,
        tol_eig: cli.tol_eig,
        witness_tol: cli.witness_tol,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Verify => {
            let rows = verify_suite(&settings);
            write!(out, "{}", render_table("invariant", &rows))?;
            Ok(all_pass(&rows))
        }
        Command::Reproduce => {
            let rows = reproduce_report(&settings);
            write!(out, "{}", render_table("check_name", &rows))?;
            Ok(all_pass(&rows))
        }
        Command::Sweep {
            p_min,
            p_max,
            steps,
            log,
        } => {
            let range = SweepRange {
                p_min,
                p_max,
                steps,
                log_spacing: log,
            };
            let records = sweep(&range, settings.witness_tol)?;
            write_sweep_csv(&mut out, &records)?;
            Ok(true)
        }
        Command::Figure1 { out: path } => {
            let svg = figure1(&path, settings.witness_tol)?;
            writeln!(out, "wrote {} and {}", path.display(), svg.display())?;
            Ok(true)
        }
        Command::Overlap {
            copies,
            restarts,
            grid_resolution,
        } => {
            let config = SeesawConfig {
                restarts,
                seed: settings.seed,
                tol: settings.tol_eig,
                ..SeesawConfig::default()
            };
            let pi = upb_projector();
            let result = if copies == 2 {
                two_copy_overlap(&pi, &config)?
            } else {
                seesaw_max_overlap(&pi, &config)?
            };
            print_overlap(&mut out, if copies == 2 { "two_copy" } else { "single_copy" }, &result)?;
            let per_copy = result.alpha.powf(1.0 / f64::from(copies));
            writeln!(
                out,
                "minus_log2_alpha_per_copy_ebits = {}",
                sci(ec_lower_bound_from_overlap(per_copy)?)
            )?;
            if let Some(resolution) = grid_resolution {
                if copies == 2 {
                    writeln!(out, "grid oracle skipped: only defined for a single copy")?;
                } else {
                    let g = grid_oracle_overlap(&pi, resolution)?;
                    writeln!(out, "grid_max = {}", sci(g.grid_max))?;
                    writeln!(out, "grid_refined = {}", sci(g.refined))?;
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
