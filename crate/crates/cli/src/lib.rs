//! Command-line harness around [`unimod_core`]: starting-sequence
//! generators, experiment orchestration, wall-time benchmarks, and report
//! emission.
//!
//! The `unimod` binary exposes three subcommands built from these modules:
//!
//! - `design` runs one optimizer (optionally as a Monte-Carlo batch over
//!   derived seeds) and writes a per-iteration trace CSV, an autocorrelation
//!   dump in dB, a JSON summary, and optionally the final sequence
//!   ([`experiment::run_experiment`]).
//! - `bench` times every requested algorithm across a list of sequence
//!   lengths and writes the averaged table ([`bench::benchmark_scaling`]).
//! - `compare` runs all three algorithms from one shared random start into a
//!   single stacked trace CSV ([`experiment::compare_runs`]).
//!
//! Exit codes: 0 on success, 2 for an invalid specification or command line,
//! 3 for a runtime failure such as an unwritable output path.
//!
//! Everything is deterministic given the command line: random starts come
//! from a seeded, platform-independent generator, Monte-Carlo run `r`
//! derives its seed as `seed ^ r`, and the optimizers themselves are
//! seed-free.

pub mod bench;
pub mod experiment;
pub mod init;
pub mod report;

pub use experiment::{run_experiment, Algorithm, ExperimentSpec, HarnessError, OutputPaths};
pub use init::InitKind;
