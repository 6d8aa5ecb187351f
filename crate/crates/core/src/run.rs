//! Shared optimizer-run machinery: configuration, stopping rule, and traces.
//!
//! Every optimizer in this crate — the block algorithm and both baselines —
//! runs the same outer loop: evaluate the ISL once per iteration, append a
//! trace row, and stop when the relative ISL change falls below a tolerance
//! or an iteration cap is hit. What counts as one iteration differs (a full
//! sweep over all entries for the block algorithm, a single fixed-point
//! update for the baselines), which is exactly what makes the traces
//! comparable: each row is one unit of the algorithm's own outer loop.

use crate::autocorr::AutocorrelationProfile;

/// Configuration shared by all optimizer runs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Stop when `|ISL_{t+1} - ISL_t| / max(1, ISL_t)` drops to this value
    /// or below. The `max(1, ·)` guard keeps the rule meaningful when the
    /// ISL approaches zero.
    pub tolerance: f64,
    /// Hard cap on outer iterations (sweeps or fixed-point updates).
    pub max_iterations: usize,
    /// Record the PSL alongside the ISL in each trace row. The PSL falls out
    /// of the same autocorrelation evaluation, so this is nearly free; when
    /// disabled the trace stores `NaN` in the PSL column.
    pub record_psl: bool,
    /// Rebuild the block algorithm's coupling constants from a fresh
    /// autocorrelation at the start of every sweep (the default), rather
    /// than carrying them across sweeps by recursion alone. Refreshing costs
    /// one `O(N log N)` transform per sweep — noise next to the `O(N²)`
    /// sweep itself — and keeps rounding error from accumulating over
    /// thousands of sweeps. Ignored by the baselines.
    pub refresh_each_sweep: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-5,
            max_iterations: 100_000,
            record_psl: true,
            refresh_each_sweep: true,
        }
    }
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The relative ISL change reached the tolerance.
    Converged,
    /// The iteration cap was reached first.
    MaxIterations,
}

/// One row of a run trace: the state after `iter` outer iterations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    /// Outer iteration count; row 0 describes the starting sequence.
    pub iter: usize,
    /// ISL after `iter` iterations.
    pub isl: f64,
    /// PSL after `iter` iterations (`NaN` if recording was disabled).
    pub psl: f64,
    /// Wall-clock milliseconds from the start of the run to this row.
    pub elapsed_ms: f64,
}

/// Complete record of an optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    /// One row per outer iteration, starting with row 0 for the initial
    /// sequence; never empty.
    pub rows: Vec<TraceRow>,
    /// Why the run stopped.
    pub termination: Termination,
}

impl RunTrace {
    /// Number of outer iterations actually performed.
    pub fn iterations(&self) -> usize {
        self.rows.last().expect("traces are never empty").iter
    }

    /// ISL of the final sequence.
    pub fn final_isl(&self) -> f64 {
        self.rows.last().expect("traces are never empty").isl
    }

    /// PSL of the final sequence (`NaN` if recording was disabled).
    pub fn final_psl(&self) -> f64 {
        self.rows.last().expect("traces are never empty").psl
    }

    /// Total wall-clock time of the run in milliseconds.
    pub fn elapsed_ms(&self) -> f64 {
        self.rows.last().expect("traces are never empty").elapsed_ms
    }
}

/// The stopping rule: relative ISL change at or below `tolerance`.
pub fn converged(previous_isl: f64, current_isl: f64, tolerance: f64) -> bool {
    (current_isl - previous_isl).abs() / previous_isl.max(1.0) <= tolerance
}

/// Milliseconds elapsed since `start`, as the fractional value traces carry.
pub(crate) fn elapsed_ms(start: &std::time::Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Builds a trace row from an autocorrelation evaluation, honoring
/// `record_psl`.
pub(crate) fn trace_row(
    iter: usize,
    profile: &AutocorrelationProfile,
    elapsed_ms: f64,
    record_psl: bool,
) -> TraceRow {
    TraceRow {
        iter,
        isl: profile.isl(),
        psl: if record_psl { profile.psl() } else { f64::NAN },
        elapsed_ms,
    }
}
