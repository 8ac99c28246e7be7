use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use entrain_cli::adoption::{sweep, write_adoption_csv};
use entrain_cli::analyze::{analyze, portfolio, quote};
use entrain_cli::error::CliError;
use entrain_cli::report::{render_json, render_quote, render_table, to_reports};
use entrain_cli::scenario::load_scenario;

/// Decides, shipment by shipment, whether a low-frequency entire train
/// pays off for both the railroad and the customer, and what rail-charge
/// discount makes it so.
#[derive(Parser)]
#[command(name = "entrain", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze every shipment in a scenario; print a table, optionally
    /// write the full JSON report.
    Analyze {
        /// Scenario file (JSON).
        #[arg(long)]
        scenario: PathBuf,
        /// Write the machine-readable report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one shipment at an explicit discount.
    Quote {
        #[arg(long)]
        scenario: PathBuf,
        /// Shipment id.
        #[arg(long)]
        shipment: String,
        /// Discount fraction of the rail charge, in [0, 1].
        #[arg(long)]
        beta: f64,
    },
    /// Sweep a discount grid over the whole portfolio and write the
    /// adoption curve as CSV.
    AdoptionCurve {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        beta_min: f64,
        #[arg(long)]
        beta_max: f64,
        /// Number of grid points, endpoints included.
        #[arg(long)]
        steps: u32,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are not errors; anything else is bad
            // input and exits 1 like every other validation failure.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { scenario, out } => {
            let scenario_data = load_scenario(&scenario)?;
            let reports = to_reports(&analyze(&scenario_data));
            print!("{}", render_table(&reports));
            if let Some(path) = out {
                std::fs::write(&path, render_json(&reports))
                    .map_err(|source| CliError::write(&path, source))?;
            }
            Ok(())
        }
        Command::Quote { scenario, shipment, beta } => {
            let scenario_data = load_scenario(&scenario)?;
            let quoted = quote(&scenario_data, &shipment, beta)?;
            print!("{}", render_quote(&quoted));
            Ok(())
        }
        Command::AdoptionCurve { scenario, beta_min, beta_max, steps, out } => {
            let scenario_data = load_scenario(&scenario)?;
            let analyzed = analyze(&scenario_data);
            let inputs = portfolio(&analyzed);
            let points = sweep(&inputs, beta_min, beta_max, steps)?;
            let mut buffer = Vec::new();
            write_adoption_csv(&mut buffer, &points)
                .expect("writing to an in-memory buffer cannot fail");
            std::fs::write(&out, buffer).map_err(|source| CliError::write(&out, source))?;
            Ok(())
        }
    }
}
