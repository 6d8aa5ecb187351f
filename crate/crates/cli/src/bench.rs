//! Wall-time scaling measurements across sequence lengths.
//!
//! A sweep of the block algorithm costs `O(N²)` and a baseline update costs
//! `O(N log N)`, so the interesting benchmark axis is the sequence length:
//! per-iteration time should follow those orders, and total time additionally
//! reflects how many iterations each algorithm needs. Runs use random
//! starting sequences with derived seeds, exactly like a Monte-Carlo
//! experiment, so the numbers are reproducible.

use unimod_core::run::RunConfig;

use crate::experiment::{Algorithm, HarnessError};
use crate::init::init_random;

/// What the benchmark measures.
#[derive(Debug, Clone)]
pub struct BenchSpec {
    /// Algorithms to time, in report order.
    pub algorithms: Vec<Algorithm>,
    /// Sequence lengths, ascending.
    pub lengths: Vec<usize>,
    /// Random starts per (algorithm, length) cell.
    pub runs: usize,
    /// Base seed; run `r` uses `seed ^ r`, matching the experiment driver.
    pub seed: u64,
    /// Stopping tolerance handed to every run.
    pub tolerance: f64,
    /// Iteration cap handed to every run.
    pub max_iterations: usize,
}

impl BenchSpec {
    /// Checks the invariants a benchmark needs before burning wall time.
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.algorithms.is_empty() {
            return Err(HarnessError::Spec(
                "benchmark needs at least one algorithm".to_string(),
            ));
        }
        if self.lengths.is_empty() {
            return Err(HarnessError::Spec(
                "benchmark needs at least one length".to_string(),
            ));
        }
        if self.lengths.iter().any(|&n| n < 2) {
            return Err(HarnessError::Spec(
                "every benchmark length must be at least 2".to_string(),
            ));
        }
        if self.lengths.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HarnessError::Spec(
                "benchmark lengths must be strictly ascending".to_string(),
            ));
        }
        if self.runs == 0 {
            return Err(HarnessError::Spec(
                "benchmark needs at least one run".to_string(),
            ));
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
        Ok(())
    }
}

/// One cell of the benchmark table: averages over `runs` random starts.
#[derive(Debug, Clone)]
pub struct BenchRow {
    /// The algorithm timed.
    pub algorithm: Algorithm,
    /// The sequence length.
    pub n: usize,
    /// Mean wall time per outer iteration, in milliseconds.
    pub avg_sweep_ms: f64,
    /// Mean wall time per full run, in milliseconds.
    pub avg_total_ms: f64,
    /// Mean outer-iteration count per run.
    pub avg_iterations: f64,
}

/// Times every (length, algorithm) cell and returns the table, lengths outer,
/// algorithms inner.
///
/// Each run is timed by the optimizer's own trace clock; the per-iteration
/// average divides total time by the run's iteration count, so it reflects
/// steady-state sweep cost including the per-sweep refresh. PSL recording is
/// turned off to keep the timed loop free of work nothing here reads.
pub fn benchmark_scaling(spec: &BenchSpec) -> Result<Vec<BenchRow>, HarnessError> {
    spec.validate()?;
    let config = RunConfig {
        tolerance: spec.tolerance,
        max_iterations: spec.max_iterations,
        record_psl: false,
        ..RunConfig::default()
    };
    let mut rows = Vec::with_capacity(spec.lengths.len() * spec.algorithms.len());
    for &n in &spec.lengths {
        for &algorithm in &spec.algorithms {
            let mut total_ms = 0.0;
            let mut sweep_ms = 0.0;
            let mut iterations = 0.0;
            for run in 0..spec.runs {
                let y0 = init_random(n, spec.seed ^ run as u64)?;
                let (_, trace) = algorithm.run(&y0, &config);
                let count = trace.iterations().max(1) as f64;
                total_ms += trace.elapsed_ms();
                sweep_ms += trace.elapsed_ms() / count;
                iterations += trace.iterations() as f64;
            }
            let runs = spec.runs as f64;
            rows.push(BenchRow {
                algorithm,
                n,
                avg_sweep_ms: sweep_ms / runs,
                avg_total_ms: total_ms / runs,
                avg_iterations: iterations / runs,
            });
        }
    }
    Ok(rows)
}

/// Least-squares slope of `ln(y)` against `ln(x)` — the empirical growth
/// exponent of a measured time-versus-size curve.
///
/// Returns `None` with fewer than two points or any non-positive coordinate,
/// where the log-log fit is undefined.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    let denominator = n * sxx - sx * sx;
    if denominator == 0.0 {
        return None;
    }
    Some((n * sxy - sx * sy) / denominator)
}
