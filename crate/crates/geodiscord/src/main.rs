//! `geodiscord` — geometric discord of two qubits in Lorentzian reservoirs.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 numerical
//! invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use geodiscord::commands::{self, Method};
use geodiscord::figures::FigureId;
use geodiscord::verify;
use geodiscord_core::Measure;

#[derive(Parser)]
#[command(
    name = "geodiscord",
    version,
    about = "Trace- and Bures-distance discord of two qubits decohering in independent or common Lorentzian reservoirs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate a built-in figure as CSV plus SVG
    Figure {
        /// One of fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig4, fig5
        id: FigureId,
        /// Output directory for `<id>.csv` and `<id>.svg`
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Evaluate one measure on a density-matrix file
    Measure {
        /// State file: a dimension line, then rows of `re+imj` entries
        file: PathBuf,
        /// Which geometric measure to evaluate
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Evaluation strategy
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Locate the initial weight below which decoherence raises the
    /// trace-distance discord above its initial value
    Threshold,
    /// Run the seeded cross-module property suites
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Nominal samples per suite (expensive suites cap this)
        #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Run a custom parameter sweep from a `key = value` config file
    Sweep {
        /// Configuration file path
        config: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Trace,
    Bures,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Measure {
        match m {
            MeasureArg::Trace => Measure::Trace,
            MeasureArg::Bures => Measure::Bures,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Closed => Method::Closed,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

fn run(cli: Cli) -> Result<(), geodiscord::CliError> {
    match cli.command {
        Command::Figure { id, out } => commands::cmd_figure(id, &out),
        Command::Measure {
            file,
            measure,
            method,
        } => commands::cmd_measure(&file, measure.into(), method.into()),
        Command::Threshold => commands::cmd_threshold(),
        Command::Verify { seed, samples } => commands::cmd_verify(seed, samples),
        Command::Sweep { config } => commands::cmd_sweep(&config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; those print to stdout and
            // exit 0, real usage errors print to stderr and exit 1.
            let is_error = e.use_stderr();
            let _ = e.print();
            return if is_error {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
