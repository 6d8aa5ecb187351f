//! The `unimod` binary: argument parsing and dispatch into the harness.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unimod_cli::bench::{benchmark_scaling, BenchSpec};
use unimod_cli::experiment::{compare_runs, run_experiment, Algorithm, ExperimentSpec, OutputPaths};
use unimod_cli::init::InitKind;
use unimod_cli::report;

/// Designs unimodular sequences with low aperiodic autocorrelation
/// sidelobes and reports how the optimizers got there.
#[derive(Parser)]
#[command(name = "unimod", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Initializer families as they appear on the command line; the seed is a
/// separate flag, so this is [`InitKind`] minus its payload.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum InitArg {
    /// Independent uniform random phases (seeded, reproducible).
    Random,
    /// Golomb polyphase sequence.
    Golomb,
    /// Frank polyphase sequence (perfect-square lengths).
    Frank,
}

impl InitArg {
    fn to_kind(self, seed: u64) -> InitKind {
        match self {
            InitArg::Random => InitKind::RandomPhase { seed },
            InitArg::Golomb => InitKind::Golomb,
            InitArg::Frank => InitKind::Frank,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run one optimizer and write trace, summary, and autocorrelation
    /// reports.
    Design {
        /// Optimizer to run.
        #[arg(long, value_enum)]
        algo: Algorithm,
        /// Sequence length.
        #[arg(long)]
        n: usize,
        /// Starting-sequence family.
        #[arg(long, value_enum, default_value = "random")]
        init: InitArg,
        /// Base seed for `--init random`; ignored by the deterministic
        /// families. Monte-Carlo run `r` uses `seed ^ r`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop when the relative ISL change per iteration reaches this.
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        /// Hard cap on outer iterations.
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        /// Trace CSV output path (`iter,isl,psl,elapsed_ms`).
        #[arg(long)]
        trace: PathBuf,
        /// JSON summary output path.
        #[arg(long)]
        summary: PathBuf,
        /// Autocorrelation dB dump output path (`lag,magnitude_db`).
        #[arg(long)]
        dump_autocorr: PathBuf,
        /// Also dump the designed sequence (`index,re,im`) to this path.
        #[arg(long)]
        dump_sequence: Option<PathBuf>,
        /// Monte-Carlo runs; more than 1 requires `--init random` and
        /// suffixes per-run files with `_run{r}`.
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Report dB relative to the zero-lag peak instead of absolute.
        #[arg(long)]
        normalize_db: bool,
    },
    /// Time every algorithm across sequence lengths and write the averaged
    /// table.
    Bench {
        /// Comma-separated sequence lengths, ascending.
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        /// Random starts per (algorithm, length) cell.
        #[arg(long)]
        runs: usize,
        /// Benchmark CSV output path.
        #[arg(long)]
        out: PathBuf,
        /// Algorithms to time (comma-separated).
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Algorithm::all())]
        algos: Vec<Algorithm>,
        /// Base seed for the random starts.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stopping tolerance handed to every run.
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        /// Iteration cap handed to every run.
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
    },
    /// Run all three algorithms from one shared random start and write a
    /// combined trace CSV.
    Compare {
        /// Sequence length.
        #[arg(long)]
        n: usize,
        /// Seed for the shared random start.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Combined CSV output path (`algorithm,iter,isl,psl,elapsed_ms`).
        #[arg(long)]
        out: PathBuf,
        /// Stopping tolerance handed to every run.
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        /// Iteration cap handed to every run.
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Design {
            algo,
            n,
            init,
            seed,
            tol,
            max_iter,
            trace,
            summary,
            dump_autocorr,
            dump_sequence,
            runs,
            normalize_db,
        } => {
            let spec = ExperimentSpec {
                algorithm: algo,
                n,
                init: init.to_kind(seed),
                tolerance: tol,
                max_iterations: max_iter,
                monte_carlo_runs: runs,
                normalize_db,
                outputs: OutputPaths {
                    trace,
                    summary,
                    autocorr: dump_autocorr,
                    sequence: dump_sequence,
                },
            };
            run_experiment(&spec).map(|summaries| {
                for summary in &summaries {
                    println!("{}", summary.console_line());
                }
            })
        }
        Command::Bench {
            lengths,
            runs,
            out,
            algos,
            seed,
            tol,
            max_iter,
        } => {
            let spec = BenchSpec {
                algorithms: algos,
                lengths,
                runs,
                seed,
                tolerance: tol,
                max_iterations: max_iter,
            };
            benchmark_scaling(&spec)
                .and_then(|rows| {
                    report::write_bench_csv(&out, &rows)?;
                    Ok(rows)
                })
                .map(|rows| {
                    for row in &rows {
                        println!(
                            "algo={} n={} avg_sweep_ms={:.6} avg_total_ms={:.3} avg_iterations={:.1}",
                            row.algorithm, row.n, row.avg_sweep_ms, row.avg_total_ms, row.avg_iterations
                        );
                    }
                })
        }
        Command::Compare {
            n,
            seed,
            out,
            tol,
            max_iter,
        } => compare_runs(n, seed, tol, max_iter)
            .and_then(|results| {
                report::write_compare_csv(&out, &results)?;
                Ok(results)
            })
            .map(|results| {
                for (algorithm, trace) in &results {
                    println!(
                        "algo={} n={n} seed={seed} final_isl={:.6} iterations={}",
                        algorithm,
                        trace.final_isl(),
                        trace.iterations()
                    );
                }
            }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
