//! Experiment orchestration: a validated specification, algorithm dispatch,
//! and the Monte-Carlo loop that turns one spec into report files.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;
use unimod_core::autocorr::autocorrelation_direct;
use unimod_core::baselines::{run_baseline, BaselineKind};
use unimod_core::fbmm::run_fbmm;
use unimod_core::run::{RunConfig, RunTrace, Termination};
use unimod_core::sequence::UnimodularSequence;

use crate::init::{InitError, InitKind};
use crate::report;

/// Everything the harness can report to the user as a failure.
///
/// The two variants map onto the process exit codes: a bad specification is
/// the user's mistake (exit 2), a failed file write is the environment's
/// (exit 3).
#[derive(Debug, Error)]
pub enum HarnessError {
    /// The experiment specification is invalid.
    #[error("{0}")]
    Spec(String),
    /// A report file could not be written.
    #[error("failed to write {path}: {source}")]
    Io {
        /// The file that could not be written.
        path: PathBuf,
        /// The underlying I/O error.
        source: std::io::Error,
    },
}

impl HarnessError {
    /// Process exit code for this failure: 2 for a bad spec, 3 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Spec(_) => 2,
            HarnessError::Io { .. } => 3,
        }
    }
}

impl From<InitError> for HarnessError {
    fn from(err: InitError) -> Self {
        HarnessError::Spec(err.to_string())
    }
}

/// The optimizers the harness can drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Block majorization-minimization, one entry at a time.
    Fbmm,
    /// Frequency-domain majorization-minimization fixed point.
    Misl,
    /// Cyclic alternating projection between time and frequency sets.
    Can,
}

impl Algorithm {
    /// Short lowercase name used in file columns and summaries.
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Fbmm => "fbmm",
            Algorithm::Misl => "misl",
            Algorithm::Can => "can",
        }
    }

    /// All algorithms, in the order reports list them.
    pub fn all() -> [Algorithm; 3] {
        [Algorithm::Fbmm, Algorithm::Misl, Algorithm::Can]
    }

    /// Runs this algorithm from `y0` under `config`.
    pub fn run(&self, y0: &UnimodularSequence, config: &RunConfig) -> (UnimodularSequence, RunTrace) {
        match self {
            Algorithm::Fbmm => run_fbmm(y0, config),
            Algorithm::Misl => run_baseline(BaselineKind::Misl, y0, config),
            Algorithm::Can => run_baseline(BaselineKind::Can, y0, config),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where an experiment writes its reports.
///
/// Trace, summary, and autocorrelation dump are always written; the final
/// sequence dump is opt-in. With more than one Monte-Carlo run, every
/// per-run file gains a `_run{r}` suffix before its extension and the
/// summary file holds a JSON array instead of a single object.
#[derive(Debug, Clone)]
pub struct OutputPaths {
    /// Per-iteration trace CSV (`iter,isl,psl,elapsed_ms`).
    pub trace: PathBuf,
    /// JSON summary of the run (or array of summaries).
    pub summary: PathBuf,
    /// Final autocorrelation magnitudes in dB (`lag,magnitude_db`).
    pub autocorr: PathBuf,
    /// Final sequence entries (`index,re,im`), if requested.
    pub sequence: Option<PathBuf>,
}

/// A complete, runnable description of one experiment.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    /// Which optimizer to run.
    pub algorithm: Algorithm,
    /// Sequence length.
    pub n: usize,
    /// How the starting sequence is produced. For random starts the embedded
    /// seed is the Monte-Carlo base; run `r` uses `seed ^ r`.
    pub init: InitKind,
    /// Stopping tolerance on the relative ISL change.
    pub tolerance: f64,
    /// Cap on outer iterations.
    pub max_iterations: usize,
    /// Number of runs; more than one requires a random initializer, since
    /// the deterministic families would just repeat themselves.
    pub monte_carlo_runs: usize,
    /// Report autocorrelation dB relative to the zero-lag peak instead of
    /// absolute.
    pub normalize_db: bool,
    /// Where the reports go.
    pub outputs: OutputPaths,
}

impl ExperimentSpec {
    /// Checks every invariant a spec must satisfy before it runs.
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n < 2 {
            return Err(HarnessError::Spec(format!(
                "sequence length must be at least 2, got {}",
                self.n
            )));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(HarnessError::Spec(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(HarnessError::Spec(
                "iteration cap must be at least 1".to_string(),
            ));
        }
        if self.monte_carlo_runs == 0 {
            return Err(HarnessError::Spec(
                "run count must be at least 1".to_string(),
            ));
        }
        if self.monte_carlo_runs > 1 && !self.init.is_random() {
            return Err(HarnessError::Spec(format!(
                "multiple runs need a random initializer; '{}' is deterministic and every run would be identical",
                self.init.name()
            )));
        }
        Ok(())
    }

    fn run_config(&self) -> RunConfig {
        RunConfig {
            tolerance: self.tolerance,
            max_iterations: self.max_iterations,
            ..RunConfig::default()
        }
    }
}

/// Final state of one run, serialized into the JSON summary.
#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    /// Algorithm name (`fbmm`, `misl`, or `can`).
    pub algorithm: String,
    /// Sequence length.
    pub n: usize,
    /// Initializer name (`random`, `golomb`, or `frank`).
    pub init: String,
    /// The seed that generated the starting sequence. The deterministic
    /// initializers consume no seed and report 0.
    pub seed: u64,
    /// ISL of the designed sequence.
    pub final_isl: f64,
    /// PSL of the designed sequence.
    pub final_psl: f64,
    /// Outer iterations performed (sweeps or fixed-point updates).
    pub iterations: usize,
    /// Wall-clock time of the run in milliseconds.
    pub elapsed_ms: f64,
    /// `"converged"` or `"max_iterations"`.
    pub terminated: String,
}

impl RunSummary {
    fn from_trace(spec: &ExperimentSpec, seed: u64, trace: &RunTrace) -> Self {
        Self {
            algorithm: spec.algorithm.name().to_string(),
            n: spec.n,
            init: spec.init.name().to_string(),
            seed,
            final_isl: trace.final_isl(),
            final_psl: trace.final_psl(),
            iterations: trace.iterations(),
            elapsed_ms: trace.elapsed_ms(),
            terminated: termination_name(trace.termination).to_string(),
        }
    }

    /// One-line rendering for the console, one per completed run.
    pub fn console_line(&self) -> String {
        format!(
            "algo={} n={} init={} seed={} isl={:.6} psl={:.6} iterations={} elapsed_ms={:.3} terminated={}",
            self.algorithm,
            self.n,
            self.init,
            self.seed,
            self.final_isl,
            self.final_psl,
            self.iterations,
            self.elapsed_ms,
            self.terminated
        )
    }
}

/// The string a [`Termination`] turns into in summaries.
pub fn termination_name(termination: Termination) -> &'static str {
    match termination {
        Termination::Converged => "converged",
        Termination::MaxIterations => "max_iterations",
    }
}

/// Initializer and reported seed for Monte-Carlo run `run` (zero-based).
fn per_run_init(init: InitKind, run: usize) -> (InitKind, u64) {
    match init {
        InitKind::RandomPhase { seed } => {
            let derived = seed ^ run as u64;
            (InitKind::RandomPhase { seed: derived }, derived)
        }
        other => (other, 0),
    }
}

/// Per-run variant of `path`: `_run{r}` before the extension when the
/// experiment has several runs, the path unchanged when it has one.
fn run_path(path: &Path, run: usize, multi: bool) -> PathBuf {
    if !multi {
        return path.to_path_buf();
    }
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_run{run}.{}", ext.to_string_lossy()),
        None => format!("{stem}_run{run}"),
    };
    path.with_file_name(name)
}

/// Runs the spec start to finish: builds each starting sequence, drives the
/// chosen optimizer, writes the per-run trace, autocorrelation dump, and
/// optional sequence dump, then writes the merged JSON summary.
///
/// Deterministic given the spec: run `r` of a random start is seeded with
/// `seed ^ r`, and the optimizers themselves introduce no randomness.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<RunSummary>, HarnessError> {
    spec.validate()?;
    let config = spec.run_config();
    let multi = spec.monte_carlo_runs > 1;
    let mut summaries = Vec::with_capacity(spec.monte_carlo_runs);
    for run in 0..spec.monte_carlo_runs {
        let (kind, run_seed) = per_run_init(spec.init, run);
        let y0 = kind.build(spec.n)?;
        let (designed, trace) = spec.algorithm.run(&y0, &config);

        report::write_trace_csv(&run_path(&spec.outputs.trace, run, multi), &trace.rows)?;
        let profile = autocorrelation_direct(&designed);
        report::write_autocorr_csv(
            &run_path(&spec.outputs.autocorr, run, multi),
            &profile,
            spec.normalize_db,
        )?;
        if let Some(sequence_path) = &spec.outputs.sequence {
            report::write_sequence_csv(&run_path(sequence_path, run, multi), &designed)?;
        }
        summaries.push(RunSummary::from_trace(spec, run_seed, &trace));
    }
    report::write_summary_json(&spec.outputs.summary, &summaries)?;
    Ok(summaries)
}

/// Runs all three algorithms from one shared random starting sequence and
/// returns the traces, in [`Algorithm::all`] order.
///
/// Every trace starts at iteration 0 and elapsed time 0, so the rows from
/// different algorithms can be plotted against a common axis.
pub fn compare_runs(
    n: usize,
    seed: u64,
    tolerance: f64,
    max_iterations: usize,
) -> Result<Vec<(Algorithm, RunTrace)>, HarnessError> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(HarnessError::Spec(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if max_iterations == 0 {
        return Err(HarnessError::Spec(
            "iteration cap must be at least 1".to_string(),
        ));
    }
    let y0 = crate::init::init_random(n, seed)?;
    let config = RunConfig {
        tolerance,
        max_iterations,
        ..RunConfig::default()
    };
    Ok(Algorithm::all()
        .iter()
        .map(|algorithm| (*algorithm, algorithm.run(&y0, &config).1))
        .collect())
}
