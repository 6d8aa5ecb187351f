//! Aperiodic autocorrelation and the two sidelobe metrics, computed the
//! straightforward way.
//!
//! The direct `O(N²)` summation here is the reference implementation: it is
//! short enough to check by eye, and the FFT path in [`crate::spectral`] is
//! tested against it. Optimizer inner loops use the FFT path; anything that
//! wants an independent answer uses this one.

use num_complex::Complex64;

use crate::sequence::UnimodularSequence;

/// Autocorrelation lags of a sequence together with its sidelobe metrics.
///
/// `lags[k] = r(k) = Σ_{i=1}^{N-k} y_{i+k} · conj(y_i)` for `k = 0 … N-1`,
/// so `lags[0]` is the sequence energy `N`. The metrics summarize the
/// sidelobes only (`k ≥ 1`):
///
/// * ISL — integrated sidelobe level, `Σ_{k≥1} |r(k)|²`
/// * PSL — peak sidelobe level, `max_{k≥1} |r(k)|`
///
/// The metrics are computed from `lags` at construction, so a profile is
/// internally consistent by definition.
#[derive(Debug, Clone, PartialEq)]
pub struct AutocorrelationProfile {
    lags: Vec<Complex64>,
    isl: f64,
    psl: f64,
}

impl AutocorrelationProfile {
    /// Builds a profile from precomputed lags (`lags[k] = r(k)`, `k = 0…N-1`).
    pub(crate) fn from_lags(lags: Vec<Complex64>) -> Self {
        debug_assert!(lags.len() >= 2, "profiles need at least one sidelobe lag");
        let mut isl = 0.0;
        let mut psl = 0.0f64;
        for r in &lags[1..] {
            let magnitude_sq = r.norm_sqr();
            isl += magnitude_sq;
            psl = psl.max(magnitude_sq);
        }
        Self {
            lags,
            isl,
            psl: psl.sqrt(),
        }
    }

    /// The lags `r(0) … r(N-1)`.
    pub fn lags(&self) -> &[Complex64] {
        &self.lags
    }

    /// Integrated sidelobe level `Σ_{k≥1} |r(k)|²`.
    pub fn isl(&self) -> f64 {
        self.isl
    }

    /// Peak sidelobe level `max_{k≥1} |r(k)|`.
    pub fn psl(&self) -> f64 {
        self.psl
    }
}

/// Lags of a raw entry slice by direct summation; shared with the oracles,
/// which need autocorrelations of candidate edits that may not be wrapped in
/// a [`UnimodularSequence`].
pub(crate) fn direct_lags(entries: &[Complex64]) -> Vec<Complex64> {
    let n = entries.len();
    (0..n)
        .map(|k| {
            (0..n - k)
                .map(|i| entries[i + k] * entries[i].conj())
                .sum()
        })
        .collect()
}

/// Autocorrelation profile by direct `O(N²)` summation.
pub fn autocorrelation_direct(y: &UnimodularSequence) -> AutocorrelationProfile {
    AutocorrelationProfile::from_lags(direct_lags(y.entries()))
}

/// Integrated sidelobe level via the direct path.
pub fn isl(y: &UnimodularSequence) -> f64 {
    autocorrelation_direct(y).isl()
}

/// Peak sidelobe level via the direct path.
pub fn psl(y: &UnimodularSequence) -> f64 {
    autocorrelation_direct(y).psl()
}
