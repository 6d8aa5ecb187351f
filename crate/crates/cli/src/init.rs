//! Starting sequences: seeded random phases and the two classic polyphase
//! families used as deterministic starting points.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use unimod_core::sequence::UnimodularSequence;

/// Errors from building a starting sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InitError {
    /// All initializers need at least two entries.
    #[error("sequence length must be at least 2, got {0}")]
    LengthTooShort(usize),
    /// The Frank construction only exists for square lengths.
    #[error("frank initializer requires a perfect-square length, got {0} (not a perfect square)")]
    NotPerfectSquare(usize),
}

/// How the starting sequence is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitKind {
    /// Independent uniform phases from a seeded ChaCha8 stream.
    RandomPhase {
        /// Base seed; Monte-Carlo run `r` derives its own stream as
        /// `seed ^ r`.
        seed: u64,
    },
    /// Golomb polyphase sequence (quadratic phase progression).
    Golomb,
    /// Frank polyphase sequence (square lengths only).
    Frank,
}

impl InitKind {
    /// Short name used in summaries and file headers.
    pub fn name(&self) -> &'static str {
        match self {
            InitKind::RandomPhase { .. } => "random",
            InitKind::Golomb => "golomb",
            InitKind::Frank => "frank",
        }
    }

    /// Whether distinct Monte-Carlo runs produce distinct sequences.
    pub fn is_random(&self) -> bool {
        matches!(self, InitKind::RandomPhase { .. })
    }

    /// Builds the starting sequence of length `n`.
    pub fn build(&self, n: usize) -> Result<UnimodularSequence, InitError> {
        match self {
            InitKind::RandomPhase { seed } => init_random(n, *seed),
            InitKind::Golomb => init_golomb(n),
            InitKind::Frank => init_frank(n),
        }
    }
}

/// Random unimodular sequence `y_i = e^{j·2πθ_i}` with `θ_i` i.i.d. uniform
/// on `[0, 1)`.
///
/// The generator is ChaCha8 seeded via `seed_from_u64`, which is documented,
/// versioned, and platform-independent: the same `(n, seed)` produces the
/// same sequence everywhere.
pub fn init_random(n: usize, seed: u64) -> Result<UnimodularSequence, InitError> {
    if n < 2 {
        return Err(InitError::LengthTooShort(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phases: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * TAU).collect();
    Ok(UnimodularSequence::from_phases(&phases).expect("length checked above"))
}

/// Golomb polyphase sequence `y_n = e^{j·π(n-1)n/N}`, `n = 1..N`; defined
/// for every length.
pub fn init_golomb(n: usize) -> Result<UnimodularSequence, InitError> {
    if n < 2 {
        return Err(InitError::LengthTooShort(n));
    }
    let phases: Vec<f64> = (1..=n)
        .map(|idx| PI * ((idx - 1) * idx) as f64 / n as f64)
        .collect();
    Ok(UnimodularSequence::from_phases(&phases).expect("length checked above"))
}

/// Frank polyphase sequence for `N = L²`:
/// `y_{(m-1)L+p} = e^{j·2π(m-1)(p-1)/L}` for `m, p = 1..L`.
pub fn init_frank(n: usize) -> Result<UnimodularSequence, InitError> {
    if n < 2 {
        return Err(InitError::LengthTooShort(n));
    }
    let l = (n as f64).sqrt().round() as usize;
    if l * l != n {
        return Err(InitError::NotPerfectSquare(n));
    }
    let mut phases = Vec::with_capacity(n);
    for m in 1..=l {
        for p in 1..=l {
            phases.push(TAU * ((m - 1) * (p - 1)) as f64 / l as f64);
        }
    }
    Ok(UnimodularSequence::from_phases(&phases).expect("length checked above"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use unimod_core::autocorr::autocorrelation_direct;

    fn assert_close(actual: Complex64, expected: Complex64) {
        assert!(
            (actual - expected).norm() < 1e-12,
            "{actual} != {expected}"
        );
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let a = init_random(64, 17).unwrap();
        let b = init_random(64, 17).unwrap();
        let c = init_random(64, 18).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn random_entries_sit_on_the_circle() {
        let y = init_random(128, 5).unwrap();
        for z in y.entries() {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn random_phases_average_out() {
        // Law of large numbers: the empirical mean of 1000 uniform-phase
        // entries is far inside the unit circle.
        for seed in [0u64, 1, 2, 3, 4] {
            let y = init_random(1000, seed).unwrap();
            let mean = y.entries().iter().sum::<Complex64>() / 1000.0;
            assert!(mean.norm() < 0.1, "seed {seed}: |mean| = {}", mean.norm());
        }
    }

    #[test]
    fn golomb_of_length_two() {
        let y = init_golomb(2).unwrap();
        assert_close(y.entries()[0], Complex64::new(1.0, 0.0));
        assert_close(y.entries()[1], Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn golomb_of_length_four() {
        // Phases π/4·[0, 2, 6, 12] = [0, π/2, 3π/2, π].
        let y = init_golomb(4).unwrap();
        assert_close(y.entries()[0], Complex64::new(1.0, 0.0));
        assert_close(y.entries()[1], Complex64::new(0.0, 1.0));
        assert_close(y.entries()[2], Complex64::new(0.0, -1.0));
        assert_close(y.entries()[3], Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn golomb_is_unimodular_for_odd_lengths() {
        let y = init_golomb(37).unwrap();
        for z in y.entries() {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn frank_of_length_four() {
        let y = init_frank(4).unwrap();
        assert_close(y.entries()[0], Complex64::new(1.0, 0.0));
        assert_close(y.entries()[1], Complex64::new(1.0, 0.0));
        assert_close(y.entries()[2], Complex64::new(1.0, 0.0));
        assert_close(y.entries()[3], Complex64::new(-1.0, 0.0));
        assert!((autocorrelation_direct(&y).isl() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn frank_rejects_non_square_lengths() {
        assert_eq!(init_frank(5), Err(InitError::NotPerfectSquare(5)));
        assert_eq!(init_frank(8), Err(InitError::NotPerfectSquare(8)));
        assert!(init_frank(9).is_ok());
        assert!(init_frank(289).is_ok());
    }

    #[test]
    fn everything_rejects_tiny_lengths() {
        assert_eq!(init_random(1, 0), Err(InitError::LengthTooShort(1)));
        assert_eq!(init_golomb(0), Err(InitError::LengthTooShort(0)));
        assert_eq!(init_frank(1), Err(InitError::LengthTooShort(1)));
    }

    #[test]
    fn kinds_report_their_names() {
        assert_eq!(InitKind::RandomPhase { seed: 3 }.name(), "random");
        assert_eq!(InitKind::Golomb.name(), "golomb");
        assert_eq!(InitKind::Frank.name(), "frank");
        assert!(InitKind::RandomPhase { seed: 3 }.is_random());
        assert!(!InitKind::Frank.is_random());
    }
}
