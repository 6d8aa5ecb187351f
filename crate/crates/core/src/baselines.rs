//! CAN and MISL, the classic frequency-domain baselines.
//!
//! Both work on the zero-padded `2N`-point spectrum `u` of the sequence
//! (see [`crate::spectral`]), where the ISL is `(1/4N)·Σ_f (|u_f|² - N)²`,
//! and both drive every iterate back to the unit circle with the same
//! nearest-point projection. They differ in what the frequency-domain step
//! does:
//!
//! * **CAN** alternates projections between the two constraint sets of a
//!   *nearly* equivalent problem: flatten the spectrum's magnitudes
//!   (`x_f = u_f/|u_f|`, with `0 ↦ 1`), transform back, renormalize. Cheap
//!   and effective, but the true ISL is not guaranteed to decrease from one
//!   iteration to the next, and this crate asserts no such thing for it.
//!
//! * **MISL** majorizes the quartic spectral objective twice, which turns
//!   one iteration into a single weighted inverse transform:
//!   `w_f = (|u_f|² - u_max - N²)·u_f`, `y' = project(-P̂·w)`. Every
//!   iteration provably pulls the true ISL down (or leaves it unchanged).
//!
//! One iteration of either costs a couple of length-`2N` FFTs. The block
//! algorithm in [`crate::fbmm`] does far more work per outer iteration — a
//! full sweep — and correspondingly needs far fewer of them.

use std::time::Instant;

use num_complex::Complex64;

use crate::run::{converged, elapsed_ms, trace_row, RunConfig, RunTrace, Termination};
use crate::sequence::{project_unimodular, UnimodularSequence};
use crate::spectral::{autocorrelation_fft, forward_2n, inverse_first_n};

/// Which baseline update to iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineKind {
    /// Alternating nearest-point scheme on the flattened-spectrum problem.
    Can,
    /// Monotone majorization-minimization descent on the true ISL.
    Misl,
}

/// One CAN iteration: flatten the padded spectrum onto the unit circle,
/// transform back, keep the first `N` entries, renormalize.
pub fn can_iteration(y: &UnimodularSequence) -> UnimodularSequence {
    let n = y.len();
    let u = forward_2n(y);
    let x = project_unimodular(&u);
    let g = inverse_first_n(&x, n).expect("forward_2n output always has length 2N");
    UnimodularSequence::from_unnormalized(&g).expect("length preserved")
}

/// One MISL iteration: `y' = project(-P̂·w)` with
/// `w_f = (|u_f|² - u_max - N²)·u_f`.
///
/// Every weight is `≤ 0` by construction, and the overall scale of `w` is
/// irrelevant because only the phases of the inverse transform survive the
/// projection. The true ISL never increases across this update.
pub fn misl_iteration(y: &UnimodularSequence) -> UnimodularSequence {
    let n = y.len();
    let u = forward_2n(y);
    let u_max = u.iter().map(Complex64::norm_sqr).fold(0.0, f64::max);
    let n_sq = (n * n) as f64;
    let w: Vec<Complex64> = u
        .iter()
        .map(|&u_f| (u_f.norm_sqr() - u_max - n_sq) * u_f)
        .collect();
    let g = inverse_first_n(&w, n).expect("weighted spectrum has length 2N");
    let z: Vec<Complex64> = g.iter().map(|&g_i| -g_i).collect();
    UnimodularSequence::from_unnormalized(&z).expect("length preserved")
}

/// Iterates the chosen baseline until the relative ISL change reaches
/// `config.tolerance` or `config.max_iterations` updates have run.
///
/// One trace row per update (row 0 is the starting point); the ISL for the
/// trace and the stopping rule is the true ISL via FFT autocorrelation,
/// whichever objective the update itself descends on.
/// `config.refresh_each_sweep` has no meaning here and is ignored.
pub fn run_baseline(
    kind: BaselineKind,
    y0: &UnimodularSequence,
    config: &RunConfig,
) -> (UnimodularSequence, RunTrace) {
    let start = Instant::now();
    let mut y = y0.clone();
    let mut profile = autocorrelation_fft(&y);
    let mut rows = vec![trace_row(0, &profile, elapsed_ms(&start), config.record_psl)];
    let mut termination = Termination::MaxIterations;
    for t in 1..=config.max_iterations {
        y = match kind {
            BaselineKind::Can => can_iteration(&y),
            BaselineKind::Misl => misl_iteration(&y),
        };
        let previous_isl = profile.isl();
        profile = autocorrelation_fft(&y);
        rows.push(trace_row(t, &profile, elapsed_ms(&start), config.record_psl));
        if converged(previous_isl, profile.isl(), config.tolerance) {
            termination = Termination::Converged;
            break;
        }
    }
    (y, RunTrace { rows, termination })
}
