//! `metric-gh`: Hausdorff distances, Gromov–Hausdorff bound certificates,
//! the exact oracle, fixture generation and ratio experiments from the
//! command line. Reports are JSON on standard output.

mod commands;
mod error;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "metric-gh",
    version,
    about = "Hausdorff and Gromov-Hausdorff tools for metric graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hausdorff distances between the graph and one or two subsets.
    Hausdorff {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: Output,
    },
    /// Every bound certificate for d_GH(G, X), or d_GH(X, Y) with --subset2.
    Bound {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: Output,
    },
    /// Exact Gromov-Hausdorff distance between two small finite spaces.
    Oracle {
        /// First distance matrix.
        #[arg(long, conflicts_with = "graph", requires = "matrix2")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        matrix2: Option<PathBuf>,
        #[arg(long, requires_all = ["subset", "subset2"])]
        graph: Option<PathBuf>,
        #[arg(long)]
        subset: Option<PathBuf>,
        #[arg(long)]
        subset2: Option<PathBuf>,
        #[arg(long, default_value_t = metric_gh::gh_oracle::DEFAULT_GUARD)]
        guard: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Write the files of an extremal example or a net.
    Construct {
        name: Construction,
        /// Number of rays for `star`.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Epsilon for `circle6` and `net`.
        #[arg(long)]
        epsilon: Option<f64>,
        /// Graph for `net`.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Directory receiving the generated files.
        #[arg(long, default_value = ".")]
        dir: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Seeded experiments.
    Experiment {
        #[command(subcommand)]
        kind: Experiment,
    },
}

#[derive(Debug, Subcommand)]
enum Experiment {
    /// Oracle values against certificates on random subset pairs.
    Ratio {
        #[arg(long)]
        graph: PathBuf,
        /// Number of random pairs.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Subset sizes are drawn up to `density` points per unit length.
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = metric_gh::gh_oracle::DEFAULT_GUARD)]
        guard: f64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    Star,
    Circle6,
    Net,
}

#[derive(Debug, Args)]
struct GraphInput {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    subset: PathBuf,
    #[arg(long)]
    subset2: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Output {
    /// Also write the report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> CliResult<()> {
    let (report, out) = match cli.command {
        Command::Hausdorff { input, out } => (
            commands::hausdorff(&input.graph, &input.subset, input.subset2.as_deref())?,
            out,
        ),
        Command::Bound { input, out } => (
            commands::bound(&input.graph, &input.subset, input.subset2.as_deref())?,
            out,
        ),
        Command::Oracle {
            matrix,
            matrix2,
            graph,
            subset,
            subset2,
            guard,
            out,
        } => {
            let source = match (matrix, matrix2, graph, subset, subset2) {
                (Some(a), Some(b), None, _, _) => commands::OracleInput::Matrices(a, b),
                (None, None, Some(g), Some(x), Some(y)) => commands::OracleInput::Subsets(g, x, y),
                _ => return Err(CliError::Parse(
                    "oracle needs --matrix and --matrix2, or --graph with --subset and --subset2"
                        .into(),
                )),
            };
            (commands::oracle(source, guard)?, out)
        }
        Command::Construct {
            name,
            n,
            epsilon,
            graph,
            dir,
            out,
        } => {
            let report = match name {
                Construction::Star => commands::construct_star(n, &dir)?,
                Construction::Circle6 => {
                    commands::construct_circle6(epsilon.ok_or_else(|| missing("--epsilon"))?, &dir)?
                }
                Construction::Net => commands::construct_net(
                    graph.as_deref().ok_or_else(|| missing("--graph"))?,
                    epsilon.ok_or_else(|| missing("--epsilon"))?,
                    &dir,
                )?,
            };
            (report, out)
        }
        Command::Experiment {
            kind:
                Experiment::Ratio {
                    graph,
                    samples,
                    density,
                    seed,
                    guard,
                    out,
                },
        } => (
            commands::experiment_ratio(&graph, samples, density, seed, guard)?,
            out,
        ),
    };
    let text = format::to_pretty(&report);
    print!("{text}");
    if let Some(path) = out.out {
        std::fs::write(&path, text)
            .map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn missing(flag: &str) -> CliError {
    CliError::Parse(format!("this construction needs {flag}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
