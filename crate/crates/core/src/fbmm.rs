//! Fast block majorization-minimization of the ISL, one sequence entry at a
//! time.
//!
//! # The single-entry objective
//!
//! Fix every entry of `y` except `y_i`. Each lag of the autocorrelation
//! contains `y_i` in at most two of its products — once multiplied against
//! the neighbor `k` places before it and once conjugated against the
//! neighbor `k` places after it:
//!
//! ```text
//! r(k) = c_k  +  y_i · conj(m_k)   (present iff k ≤ i-1,  m_k = y_{i-k})
//!             +  n_k · conj(y_i)   (present iff k ≤ N-i,  n_k = y_{i+k})
//! ```
//!
//! where `c_k` collects every product of `r(k)` that does not touch `y_i`.
//! Expanding `Σ_k |r(k)|²` and using `|y_i| = |m_k| = |n_k| = 1`, everything
//! independent of `y_i` drops into an additive constant and the ISL as a
//! function of the single entry collapses to
//!
//! ```text
//! f_i(y_i) ≅ 2·Re(α·y_i²) + 2·Re(β·y_i)
//!
//! α = Σ_{k ≤ min(i-1, N-i)} conj(m_k) · conj(n_k)
//! β = Σ_k  [k ≤ i-1]·conj(m_k)·conj(c_k)  +  [k ≤ N-i]·conj(n_k)·c_k
//! ```
//!
//! In real coordinates `v = (Re y_i, Im y_i)` this is `vᵀA·v + eᵀv` with the
//! traceless symmetric `A = [[a, -b/2], [-b/2, -a]]` and `e = (c, -d)`,
//! where `a = 2·Re α`, `b = 4·Im α`, `c = 2·Re β`, `d = 2·Im β`
//! (see [`BlockQuadratic`]).
//!
//! # The closed-form step
//!
//! On the unit circle, `vᵀA·v ≤ λ + 2vᵀ(A - λI)v_t + v_tᵀ(λI - A)v_t` for
//! any `v_t` with `|v_t| = 1`, where `λ = λ_max(A) = sqrt(a² + b²/4)` in
//! closed form for this 2×2 traceless `A`. Substituting into `f_i` gives a
//! surrogate that touches `f_i` at `v_t` and is *linear* in `v`, so its
//! constrained minimizer is a normalization:
//!
//! ```text
//! z = -[(A - λI)·v_t + e/2],     v_{t+1} = z / ‖z‖₂
//! ```
//!
//! Standard majorization-minimization reasoning then yields
//! `f_i(v_{t+1}) ≤ f_i(v_t)`: the step never increases the ISL. One such
//! step is applied per block visit — no inner iteration, no line search
//! ([`mm_step`]).
//!
//! # Carrying the constants between blocks
//!
//! Computing the `c_k` from scratch costs `O(N²)` per *block*, which would
//! make a sweep cubic. Instead [`ConstantsState`] computes them once for
//! block 1 from an FFT autocorrelation and then advances `i-1 → i` with four
//! products per lag: moving the excluded pair of neighbors costs
//!
//! ```text
//! c_k += y_{i-1}·conj(y_{i-1-k}) + y_{i-1+k}·conj(y_{i-1})
//!      - y_i·conj(y_{i-k})       - y_{i+k}·conj(y_i)
//! ```
//!
//! with out-of-range neighbors contributing zero — enforced by reading from
//! a zero-padded mirror of the sequence rather than by index case analysis.
//! The first pair re-adds what block `i-1` had excluded (using the *new*
//! `y_{i-1}`, which the exclusion made `c` independent of), the second pair
//! removes what block `i` must exclude. A full sweep over all `N` blocks is
//! therefore `O(N²)` — the same order as evaluating the ISL once — plus one
//! `O(N log N)` transform to seed the constants.

use std::time::Instant;

use num_complex::Complex64;

use crate::autocorr::AutocorrelationProfile;
use crate::run::{converged, elapsed_ms, trace_row, RunConfig, RunTrace, Termination};
use crate::sequence::UnimodularSequence;
use crate::spectral::autocorrelation_fft;

/// The coupling constants `c_k` for the current block, advanced
/// incrementally as a sweep moves through the sequence.
///
/// `c_k` is the part of lag `r(k)` that does not involve the block entry:
/// `c_k = Σ_{q=k+1..N, q≠i, q≠k+i} y_q·conj(y_{q-k})`. The state also keeps
/// a zero-padded mirror `s = [0_{N-2}, y, 0_N]` of the sequence so the
/// advance recursion can read any neighbor index without bounds analysis;
/// the caller must mirror every sequence write into it via [`note_entry`].
///
/// [`note_entry`]: ConstantsState::note_entry
#[derive(Debug, Clone)]
pub struct ConstantsState {
    n: usize,
    block: usize,
    c: Vec<Complex64>,
    s: Vec<Complex64>,
}

impl ConstantsState {
    /// Builds the constants for block 1 of `y` from one FFT autocorrelation.
    ///
    /// At block 1 no earlier neighbor exists, so
    /// `c_k = r(k) - y_{1+k}·conj(y_1)` for every lag.
    pub fn init(y: &UnimodularSequence) -> Self {
        Self::from_profile(y, &autocorrelation_fft(y))
    }

    /// Like [`init`](Self::init) but reuses an autocorrelation profile the
    /// caller already evaluated for `y`.
    pub fn from_profile(y: &UnimodularSequence, profile: &AutocorrelationProfile) -> Self {
        let n = y.len();
        debug_assert_eq!(profile.lags().len(), n, "profile must belong to y");
        let first_conj = y.entries()[0].conj();
        let c = (1..n)
            .map(|k| profile.lags()[k] - y.entries()[k] * first_conj)
            .collect();
        let mut s = vec![Complex64::new(0.0, 0.0); 3 * n - 2];
        s[n - 2..2 * n - 2].copy_from_slice(y.entries());
        Self { n, block: 1, c, s }
    }

    /// The block index `i` the constants currently describe, 1-based.
    pub fn block(&self) -> usize {
        self.block
    }

    /// The constants `c_1 … c_{N-1}` for the current block.
    pub fn constants(&self) -> &[Complex64] {
        &self.c
    }

    /// The zero-padded mirror `[0_{N-2}, y, 0_N]`; exposed so tests can
    /// check the padding invariant.
    pub fn padded(&self) -> &[Complex64] {
        &self.s
    }

    /// Mirrors a write of `y[index]` (0-based) into the padded copy.
    pub fn note_entry(&mut self, index: usize, value: Complex64) {
        self.s[index + self.n - 2] = value;
    }

    /// Entry `y_j` for 0-based `j` that may lie outside `0..N` (then zero).
    #[inline]
    fn entry_or_zero(&self, j: isize) -> Complex64 {
        // j + N - 2 underflows to -1 in exactly one reachable case (block 2,
        // lag N-1); the wrapping cast turns that into an index `get` rejects.
        self.s
            .get((j + self.n as isize - 2) as usize)
            .copied()
            .unwrap_or_default()
    }

    /// Advances the constants one block, from `i-1` to `i`.
    ///
    /// Must be called *after* the block-`i-1` entry has been written back
    /// and mirrored via [`note_entry`](Self::note_entry): the re-added pair
    /// of products uses the new `y_{i-1}`, which is correct precisely
    /// because block `i-1`'s constants excluded every product touching it.
    ///
    /// # Panics
    ///
    /// Panics when already at the last block.
    pub fn advance(&mut self) {
        assert!(self.block < self.n, "cannot advance past block N");
        let prev = self.block as isize - 1; // just-visited entry, 0-based
        let cur = self.block as isize;      // new block entry, 0-based
        let y_prev = self.entry_or_zero(prev);
        let y_cur = self.entry_or_zero(cur);
        for k in 1..self.n as isize {
            let restored = y_prev * self.entry_or_zero(prev - k).conj()
                + self.entry_or_zero(prev + k) * y_prev.conj();
            let excluded = y_cur * self.entry_or_zero(cur - k).conj()
                + self.entry_or_zero(cur + k) * y_cur.conj();
            let delta = restored - excluded;
            self.c[(k - 1) as usize] += delta;
        }
        self.block += 1;
    }

    /// Rolls the constants from block `N` straight back to block 1.
    ///
    /// Only the excluded products move: block `N` excluded
    /// `y_N·conj(y_{N-k})`, block 1 excludes `y_{1+k}·conj(y_1)`. This is
    /// the no-refresh way to start the next sweep; the default run
    /// configuration instead rebuilds the constants from a fresh
    /// autocorrelation (see [`RunConfig::refresh_each_sweep`]).
    ///
    /// # Panics
    ///
    /// Panics unless positioned at the last block.
    pub fn wrap_to_first_block(&mut self) {
        assert_eq!(self.block, self.n, "wrap is only defined from block N");
        let n = self.n as isize;
        let y_last = self.entry_or_zero(n - 1);
        let y_first_conj = self.entry_or_zero(0).conj();
        for k in 1..self.n as isize {
            let delta = y_last * self.entry_or_zero(n - 1 - k).conj()
                - self.entry_or_zero(k) * y_first_conj;
            self.c[(k - 1) as usize] += delta;
        }
        self.block = 1;
    }
}

/// The single-entry objective `f_i(y_i) ≅ 2·Re(α·y_i²) + 2·Re(β·y_i)` in
/// real coordinates: `f_i(v) = vᵀA·v + eᵀv` for `v = (Re y_i, Im y_i)`,
/// with `A = [[a, -b/2], [-b/2, -a]]` and `e = (c, -d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockQuadratic {
    /// `2·Re α` — diagonal of `A`.
    pub a: f64,
    /// `4·Im α` — the off-diagonal of `A` is `-b/2`.
    pub b: f64,
    /// `2·Re β` — first component of `e`.
    pub c: f64,
    /// `2·Im β` — second component of `e` is `-d`.
    pub d: f64,
    /// Complex coefficient of `y_i²`.
    pub alpha: Complex64,
    /// Complex coefficient of `y_i`.
    pub beta: Complex64,
}

impl BlockQuadratic {
    /// Derives the real coefficients from the complex accumulators.
    pub fn from_accumulators(alpha: Complex64, beta: Complex64) -> Self {
        Self {
            a: 2.0 * alpha.re,
            b: 4.0 * alpha.im,
            c: 2.0 * beta.re,
            d: 2.0 * beta.im,
            alpha,
            beta,
        }
    }

    /// The symmetric traceless matrix `A`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.a, -0.5 * self.b], [-0.5 * self.b, -self.a]]
    }

    /// The linear term `e = (c, -d)`.
    pub fn linear(&self) -> [f64; 2] {
        [self.c, -self.d]
    }

    /// Largest eigenvalue of `A` in closed form.
    ///
    /// `A` is traceless with determinant `-a² - b²/4`, so its eigenvalues
    /// are `±sqrt(a² + b²/4)` — no iterative eigensolver needed.
    pub fn lambda_max(&self) -> f64 {
        self.a.hypot(0.5 * self.b)
    }

    /// Evaluates `f_i` at a point `v = (Re y_i, Im y_i)`.
    pub fn value(&self, v: [f64; 2]) -> f64 {
        self.a * (v[0] * v[0] - v[1] * v[1]) - self.b * v[0] * v[1] + self.c * v[0]
            - self.d * v[1]
    }
}

/// Accumulates the quadratic for block `i` from the constants and the
/// current sequence in `O(N)`.
///
/// The one-sided linear contributions are formed as `conj(m_k)·conj(c_k)`
/// and `conj(n_k)·c_k` directly — products only, so a vanishing `c_k` needs
/// no special case.
///
/// # Panics
///
/// Panics if `state` is not positioned at `block`.
pub fn block_coefficients(
    state: &ConstantsState,
    y: &UnimodularSequence,
    block: usize,
) -> BlockQuadratic {
    assert_eq!(
        state.block(),
        block,
        "constants must be positioned at the requested block"
    );
    let n = y.len();
    let entries = y.entries();
    let constants = state.constants();
    let i0 = block - 1;
    let m_lags = block - 1; // m_k = y_{i-k} exists iff k ≤ i-1
    let n_lags = n - block; // n_k = y_{i+k} exists iff k ≤ N-i
    let mut alpha = Complex64::new(0.0, 0.0);
    let mut beta = Complex64::new(0.0, 0.0);
    for k in 1..=m_lags.max(n_lags) {
        let c_k = constants[k - 1];
        if k <= m_lags {
            let m_k = entries[i0 - k];
            beta += m_k.conj() * c_k.conj();
            if k <= n_lags {
                alpha += m_k.conj() * entries[i0 + k].conj();
            }
        }
        if k <= n_lags {
            beta += entries[i0 + k].conj() * c_k;
        }
    }
    BlockQuadratic::from_accumulators(alpha, beta)
}

/// One majorization-minimization step on a [`BlockQuadratic`], mapping a
/// unit 2-vector to a unit 2-vector.
///
/// Computes `z = -[(A - λI)·v_t + e/2]` with `λ = λ_max(A)` and returns
/// `z/‖z‖₂`. If `z` vanishes the surrogate is flat and `v_t` is returned
/// unchanged — a deterministic rule for a measure-zero event. The result
/// never increases `f_i`.
pub fn mm_step(quad: &BlockQuadratic, v: [f64; 2]) -> [f64; 2] {
    debug_assert!(
        (v[0].hypot(v[1]) - 1.0).abs() <= 1e-12,
        "mm_step input must be a unit vector"
    );
    let lambda = quad.lambda_max();
    let half_b = 0.5 * quad.b;
    let z1 = -((quad.a - lambda) * v[0] - half_b * v[1] + 0.5 * quad.c);
    let z2 = -(-half_b * v[0] - (quad.a + lambda) * v[1] - 0.5 * quad.d);
    let norm = z1.hypot(z2);
    if norm > 0.0 {
        [z1 / norm, z2 / norm]
    } else {
        v
    }
}

/// One full sweep: visits blocks `1..N` in ascending order, applying one
/// [`mm_step`] per block and advancing the constants behind it.
///
/// The ISL never increases over a sweep. On return `state` is positioned at
/// block `N`; start the next sweep with fresh constants or
/// [`ConstantsState::wrap_to_first_block`].
///
/// # Panics
///
/// Panics if `state` is not positioned at block 1 of `y`.
pub fn sweep(y: &mut UnimodularSequence, state: &mut ConstantsState) {
    assert_eq!(state.block(), 1, "sweeps start at block 1");
    let n = y.len();
    for i in 1..=n {
        let quad = block_coefficients(state, y, i);
        let current = y.entries()[i - 1];
        let updated = mm_step(&quad, [current.re, current.im]);
        y.set_entry(i - 1, Complex64::new(updated[0], updated[1]));
        state.note_entry(i - 1, y.entries()[i - 1]);
        if i < n {
            state.advance();
        }
    }
}

/// Minimizes the ISL of `y0` by repeated sweeps until the relative ISL
/// change reaches `config.tolerance` or `config.max_iterations` sweeps have
/// run. Returns the final sequence and a trace with one row per sweep
/// (row 0 is the starting point).
///
/// The ISL driving the trace and the stopping rule is evaluated once per
/// sweep by FFT; with `config.refresh_each_sweep` (the default) the same
/// evaluation also reseeds the constants for the next sweep.
pub fn run_fbmm(y0: &UnimodularSequence, config: &RunConfig) -> (UnimodularSequence, RunTrace) {
    let start = Instant::now();
    let mut y = y0.clone();
    let mut profile = autocorrelation_fft(&y);
    let mut rows = vec![trace_row(0, &profile, elapsed_ms(&start), config.record_psl)];
    let mut state = ConstantsState::from_profile(&y, &profile);
    let mut termination = Termination::MaxIterations;
    for t in 1..=config.max_iterations {
        if t > 1 {
            if config.refresh_each_sweep {
                state = ConstantsState::from_profile(&y, &profile);
            } else {
                state.wrap_to_first_block();
            }
        }
        sweep(&mut y, &mut state);
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
