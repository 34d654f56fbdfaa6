use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qdiv::cli::{
    cmd_measure, cmd_purification_report, cmd_sweep, cmd_validate, parse_range, CliError,
    MeasureName, OutputFormat, StateSpec, SweepGrid, DEFAULT_Q_GRID,
};

#[derive(Parser)]
#[command(name = "qdiv", version, about = "Fidelity, Bures, KL and q-divergence of quantum states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Output file (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single measure
    Measure {
        /// State spec: bell:<kind>, werner:F=<x>, maximally-mixed:d=<n>,
        /// random:d=<n>,seed=<s>, random-pure:d=<n>,seed=<s>, or a state file path
        #[arg(long)]
        state: String,
        /// Reference state spec (required except for entropies)
        #[arg(long)]
        reference: Option<String>,
        #[arg(long)]
        measure: MeasureName,
        /// Entropic index in (0, 1)
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Tabulate the Werner-state q-divergence against |Psi-> over an (F, q) grid
    Sweep {
        /// Must resolve to |Psi-> (up to phase); defaults to bell:psi-
        #[arg(long)]
        reference: Option<String>,
        /// start:stop:step
        #[arg(long, default_value = DEFAULT_Q_GRID)]
        q_grid: String,
        /// start:stop:step (default 0.25:1.0:0.05)
        #[arg(long)]
        f_grid: Option<String>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Degree-of-purification report against a pure reference
    Report {
        #[arg(long)]
        state: String,
        #[arg(long)]
        reference: String,
        /// Entropic indices, comma separated or repeated
        #[arg(long, value_delimiter = ',')]
        q: Vec<f64>,
        /// Alternative to --q: start:stop:step
        #[arg(long, conflicts_with = "q")]
        q_grid: Option<String>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Check that a state spec resolves to a valid state
    Validate {
        #[arg(long)]
        state: String,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[command(flatten)]
        out: Output,
    },
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>), CliError> {
    match cli.command {
        Command::Measure { state, reference, measure, q, format, out } => {
            let reference = reference.map(|r| r.parse::<StateSpec>()).transpose()?;
            let doc = cmd_measure(&state.parse()?, reference.as_ref(), measure, q, format)?;
            Ok((doc, out.output))
        }
        Command::Sweep { reference, q_grid, f_grid, format, out } => {
            let reference = reference.map(|r| r.parse::<StateSpec>()).transpose()?;
            let f_values = f_grid.as_deref().map(parse_range).transpose()?;
            let grid = SweepGrid::new(parse_range(&q_grid)?, f_values)?;
            Ok((cmd_sweep(reference.as_ref(), &grid, format)?, out.output))
        }
        Command::Report { state, reference, q, q_grid, format, out } => {
            let q_values = match q_grid {
                Some(g) => parse_range(&g)?,
                None => q,
            };
            let doc = cmd_purification_report(&state.parse()?, &reference.parse()?, &q_values, format)?;
            Ok((doc, out.output))
        }
        Command::Validate { state, format, out } => Ok((cmd_validate(&state.parse()?, format)?, out.output)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli).and_then(|(doc, path)| match path {
        Some(path) => std::fs::write(&path, doc)
            .map_err(|e| CliError::Io(format!("cannot write '{}': {e}", path.display()))),
        None => {
            print!("{doc}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qdiv: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
