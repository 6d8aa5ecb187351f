//! FFT-based autocorrelation and the frequency-domain view of the ISL.
//!
//! Zero-padding a length-`N` sequence to length `2N` makes its aperiodic
//! autocorrelation circular: with `u = FFT_{2N}([y; 0])`, the inverse
//! transform of `|u|²` (scaled by `1/2N`) holds `r(0) … r(N-1)` in its first
//! `N` slots. The same padded spectrum gives the ISL a second form,
//!
//! ```text
//! ISL = (1/4N) · Σ_{f=1}^{2N} (|u_f|² - N)²
//! ```
//!
//! which is what the frequency-domain baselines in [`crate::baselines`]
//! descend on. Both identities are exercised against the direct summation in
//! [`crate::autocorr`] by the test suite.
//!
//! FFT plans are cached per thread and per size, so repeated transforms of
//! the same length — the common case inside optimizer loops — plan once.

use std::cell::RefCell;

use num_complex::Complex64;
use rustfft::FftPlanner;
use thiserror::Error;

use crate::autocorr::AutocorrelationProfile;
use crate::sequence::UnimodularSequence;

/// Errors from the spectral helpers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    /// A padded spectrum had the wrong length for the requested output size.
    #[error("spectrum has length {actual}, expected 2 x {n} = {expected}")]
    LengthMismatch {
        /// Requested time-domain length `N`.
        n: usize,
        /// Required spectrum length `2N`.
        expected: usize,
        /// Length actually supplied.
        actual: usize,
    },
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn fft_in_place(buffer: &mut [Complex64], forward: bool) {
    let fft = PLANNER.with(|planner| {
        let mut planner = planner.borrow_mut();
        if forward {
            planner.plan_fft_forward(buffer.len())
        } else {
            planner.plan_fft_inverse(buffer.len())
        }
    });
    fft.process(buffer);
}

/// Forward `2N`-point DFT of `y` zero-padded to twice its length:
/// `u_f = Σ_{i=1}^{N} y_i · e^{-j·2π(f-1)(i-1)/2N}` for `f = 1 … 2N`.
pub fn forward_2n(y: &UnimodularSequence) -> Vec<Complex64> {
    let n = y.len();
    let mut buffer = vec![Complex64::new(0.0, 0.0); 2 * n];
    buffer[..n].copy_from_slice(y.entries());
    fft_in_place(&mut buffer, true);
    buffer
}

/// First `n` entries of the unnormalized inverse `2n`-point DFT of `x`:
/// `g_i = Σ_{f=1}^{2n} x_f · e^{+j·2π(f-1)(i-1)/2n}` for `i = 1 … n`.
///
/// No `1/2n` factor is applied — every caller in this crate either
/// renormalizes the result onto the unit circle (where scale is irrelevant)
/// or accounts for the factor itself.
pub fn inverse_first_n(x: &[Complex64], n: usize) -> Result<Vec<Complex64>, SpectralError> {
    let expected = 2 * n;
    if x.len() != expected {
        return Err(SpectralError::LengthMismatch {
            n,
            expected,
            actual: x.len(),
        });
    }
    let mut buffer = x.to_vec();
    fft_in_place(&mut buffer, false);
    buffer.truncate(n);
    Ok(buffer)
}

/// Autocorrelation profile via zero-padded FFTs in `O(N log N)`.
///
/// The `1/2N` inverse-transform normalization is applied here, so the lags
/// match [`crate::autocorr::autocorrelation_direct`] exactly up to rounding
/// (`lags[0] = N` in particular).
pub fn autocorrelation_fft(y: &UnimodularSequence) -> AutocorrelationProfile {
    let n = y.len();
    let mut buffer = forward_2n(y);
    for u in &mut buffer {
        *u = Complex64::new(u.norm_sqr(), 0.0);
    }
    fft_in_place(&mut buffer, false);
    let scale = 1.0 / (2 * n) as f64;
    let lags = buffer[..n].iter().map(|r| r * scale).collect();
    AutocorrelationProfile::from_lags(lags)
}

/// ISL evaluated in the frequency domain: `(1/4N) · Σ_f (|u_f|² - N)²`.
pub fn isl_frequency(y: &UnimodularSequence) -> f64 {
    let n = y.len() as f64;
    let sum: f64 = forward_2n(y)
        .iter()
        .map(|u| {
            let deviation = u.norm_sqr() - n;
            deviation * deviation
        })
        .sum();
    sum / (4.0 * n)
}
