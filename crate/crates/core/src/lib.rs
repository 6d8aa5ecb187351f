//! Design of unimodular (constant-modulus) sequences with low aperiodic
//! autocorrelation sidelobes.
//!
//! A length-`N` unimodular sequence `y` has entries `y_i = e^{j·φ_i}` on the
//! complex unit circle. Its aperiodic autocorrelation at lag `k` is
//!
//! ```text
//! r(k) = Σ_{i=1}^{N-k} y_{i+k} · conj(y_i),      k = 0, …, N-1
//! ```
//!
//! and the quality of the sequence is judged by its sidelobes: the integrated
//! sidelobe level `ISL = Σ_{k=1}^{N-1} |r(k)|²` and the peak sidelobe level
//! `PSL = max_{k≥1} |r(k)|`. Low-sidelobe unimodular sequences are the
//! workhorse of pulse-compression radar, spread-spectrum communication, and
//! channel sounding, where transmit amplifiers demand constant envelope and
//! matched filtering demands an impulse-like autocorrelation.
//!
//! This crate minimizes the ISL over the unimodular constraint set with a
//! fast block majorization-minimization scheme ([`fbmm::run_fbmm`]): one
//! entry of the sequence is updated at a time, the coupling of that entry to
//! the rest of the sequence is captured exactly by a small quadratic form on
//! the unit circle, and a closed-form majorizer step moves the entry without
//! any line search. A constant-time recursion carries the coupling constants
//! from one entry to the next, so a full sweep over all `N` entries costs
//! `O(N²)` — the same order as evaluating the ISL once directly.
//!
//! Two classic fixed-point baselines operating in the frequency domain are
//! included for comparison ([`baselines`]): CAN, which alternates nearest
//! points between the time and frequency constraint sets, and MISL, a
//! majorization-minimization descent on the same frequency-domain objective.
//!
//! Everything here is deterministic: no randomness, no threads, no iteration
//! reordering. Given the same starting sequence and configuration, every run
//! produces bit-identical iterates.
//!
//! # Example
//!
//! ```
//! use num_complex::Complex64;
//! use unimod_core::autocorr::autocorrelation_direct;
//! use unimod_core::fbmm::run_fbmm;
//! use unimod_core::run::RunConfig;
//! use unimod_core::sequence::UnimodularSequence;
//!
//! // A crude starting point: the all-ones sequence of length 3 (ISL = 5).
//! let start = UnimodularSequence::new(vec![Complex64::new(1.0, 0.0); 3]).unwrap();
//!
//! let (designed, trace) = run_fbmm(&start, &RunConfig::default());
//! let profile = autocorrelation_direct(&designed);
//!
//! // Length 3 admits ISL = 1 (a Barker sequence); the optimizer finds it.
//! assert!(profile.isl() <= 1.0 + 1e-9);
//! assert!(trace.rows.len() >= 2);
//! ```

pub mod autocorr;
pub mod baselines;
pub mod fbmm;
pub mod oracle;
pub mod run;
pub mod sequence;
pub mod spectral;

pub use autocorr::{autocorrelation_direct, AutocorrelationProfile};
pub use sequence::{project_unimodular, SequenceError, UnimodularSequence};
