//! Slow, obviously-correct reference computations.
//!
//! Everything here is written for legibility over speed — literal double
//! loops, full-ISL evaluations, exhaustive grid searches — so the fast paths
//! elsewhere in the crate have something independent to be tested against.
//! In particular, nothing in this module goes through the incremental
//! constants engine or the reduced block quadratic: the oracles would be
//! worthless if they shared code with what they check.

use num_complex::Complex64;

use crate::autocorr::direct_lags;
use crate::sequence::UnimodularSequence;

/// The coupling constants for block `i` (1-based) by literal summation:
/// `c_k = Σ_{q=k+1..N, q≠i, q≠k+i} y_q·conj(y_{q-k})` for `k = 1..N-1`.
///
/// Each `c_k` is lag `r(k)` with the (at most two) products touching `y_i`
/// left out — the same quantity the incremental engine maintains, computed
/// the slow way.
///
/// # Panics
///
/// Panics if `i` is not in `1..=N`.
pub fn oracle_constants(y: &UnimodularSequence, i: usize) -> Vec<Complex64> {
    let n = y.len();
    assert!((1..=n).contains(&i), "block index {i} out of range 1..={n}");
    let entries = y.entries();
    (1..n)
        .map(|k| {
            let mut c_k = Complex64::new(0.0, 0.0);
            for q in (k + 1)..=n {
                if q == i || q == k + i {
                    continue;
                }
                c_k += entries[q - 1] * entries[q - 1 - k].conj();
            }
            c_k
        })
        .collect()
}

/// The ISL of `y` with entry `i` (1-based) replaced by `candidate`.
///
/// Differences of this quantity across candidates equal differences of the
/// reduced single-entry objective, which is what makes it an oracle for the
/// block reduction without ever repeating the reduction's algebra.
pub fn oracle_block_objective(y: &UnimodularSequence, i: usize, candidate: Complex64) -> f64 {
    let n = y.len();
    assert!((1..=n).contains(&i), "block index {i} out of range 1..={n}");
    debug_assert!(
        (candidate.norm() - 1.0).abs() <= 1e-9,
        "candidate must lie on the unit circle"
    );
    let mut entries = y.entries().to_vec();
    entries[i - 1] = candidate;
    direct_lags(&entries)[1..]
        .iter()
        .map(|r| r.norm_sqr())
        .sum()
}

/// Exhaustive minimizer of [`oracle_block_objective`] over a uniform phase
/// grid `e^{j·2πg/G}`, `g = 0..G`. Ties break toward the smallest phase;
/// values within `1e-12` relative count as tied, since the objective is
/// evaluated in floating point and exact ties would otherwise be broken by
/// rounding noise many orders of magnitude below anything the grid resolves.
///
/// # Panics
///
/// Panics if `grid_points < 8` or `i` is out of range.
pub fn oracle_best_phase(y: &UnimodularSequence, i: usize, grid_points: usize) -> Complex64 {
    assert!(grid_points >= 8, "grid too coarse to mean anything");
    let mut best = Complex64::new(1.0, 0.0);
    let mut best_value = oracle_block_objective(y, i, best);
    for g in 1..grid_points {
        let phase = std::f64::consts::TAU * g as f64 / grid_points as f64;
        let candidate = Complex64::cis(phase);
        let value = oracle_block_objective(y, i, candidate);
        if value < best_value * (1.0 - 1e-12) {
            best = candidate;
            best_value = value;
        }
    }
    best
}
