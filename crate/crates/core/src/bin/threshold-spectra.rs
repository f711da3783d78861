use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use threshold_spectra::enumeration::{self, Check, ScanOptions};
use threshold_spectra::report::{BoundsTable, EmbedReport, Format, ParityReport, Precision, Render, SpectrumReport};
use threshold_spectra::ThresholdGraph;

/// Spectra of connected threshold graphs and their anti-regular embeddings.
///
/// Graphs are creation strings, either expanded (`0011`) or in run-length
/// form (`"0^2 1^2"`).
#[derive(Parser)]
#[command(name = "threshold-spectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// text, json or csv
    #[arg(long, default_value = "text")]
    format: Format,
    /// Decimal places for floating point values (0 to 12)
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(0..=12))]
    precision: u8,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues, inertia, μ± and trivial multiplicities
    Spectrum {
        graph: String,
        #[command(flatten)]
        output: Output,
    },
    /// Per-block closed-form bounds on the extreme eigenvalues
    Bounds {
        graph: String,
        #[command(flatten)]
        output: Output,
    },
    /// Largest anti-regular subgraph and smallest anti-regular supergraph
    Embed {
        graph: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check every connected threshold graph on n vertices
    Scan {
        n: usize,
        /// Comma-separated check names, or `all`
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        /// Largest n accepted
        #[arg(long, default_value_t = enumeration::DEFAULT_SCAN_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// μ± of anti-regular graphs A_2k, A_2k+1 for k = 2..=k_max
    Parity {
        k_max: usize,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Usage(String),
    Violation,
}

fn parse(text: &str) -> Result<ThresholdGraph, Failure> {
    text.parse().map_err(|e| Failure::Usage(format!("cannot parse graph {text:?}: {e}")))
}

fn emit(report: &impl Render, output: &Output) -> Result<(), Failure> {
    let precision = Precision::new(output.precision as usize).expect("range checked by clap");
    let text = report.render(output.format, precision).map_err(|e| Failure::Usage(e.to_string()))?;
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let usage = |e: threshold_spectra::Error| Failure::Usage(e.to_string());
    match cli.command {
        Command::Spectrum { graph, output } => {
            let r = SpectrumReport::build(&graph, &parse(&graph)?).map_err(usage)?;
            emit(&r, &output)?;
            verdict(r.inertia_numeric == r.inertia_formula && r.multiplicities_numeric == r.multiplicities_formula)
        }
        Command::Bounds { graph, output } => {
            let r = BoundsTable::build(&graph, &parse(&graph)?).map_err(usage)?;
            emit(&r, &output)?;
            verdict(r.holds)
        }
        Command::Embed { graph, output } => {
            let r = EmbedReport::build(&graph, &parse(&graph)?).map_err(usage)?;
            emit(&r, &output)?;
            verdict(r.passed())
        }
        Command::Scan { n, checks, jobs, cap, output } => {
            let checks = Check::parse_list(&checks).map_err(usage)?;
            if checks.is_empty() {
                return Err(Failure::Usage("no checks selected".into()));
            }
            let options = ScanOptions { checks, jobs: jobs as usize, cap };
            let r = enumeration::scan(n, &options).map_err(usage)?;
            emit(&r, &output)?;
            if r.counterexample_count() > 0 {
                eprintln!("note: {} conjecture counterexample record(s) reported", r.counterexample_count());
            }
            verdict(r.passed())
        }
        Command::Parity { k_max, output } => {
            if k_max < 2 {
                return Err(Failure::Usage(format!("k_max must be at least 2, got {k_max}")));
            }
            let r = ParityReport::build(k_max).map_err(usage)?;
            emit(&r, &output)?;
            verdict(r.verdicts.all())
        }
    }
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
        Err(Failure::Violation) => {
            eprintln!("error: theorem check failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
