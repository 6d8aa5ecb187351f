//! The unimodular sequence type and the projection onto the unit circle.

use num_complex::Complex64;
use thiserror::Error;

/// How far an entry's modulus may stray from 1 before construction fails.
///
/// Iterative updates renormalize on every write, so honest callers sit many
/// orders of magnitude inside this bound; it exists to catch genuinely
/// non-unimodular input, not to absorb drift.
pub const UNIT_MODULUS_TOLERANCE: f64 = 1e-12;

/// Errors from constructing a [`UnimodularSequence`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SequenceError {
    /// Sequences must have at least two entries for a sidelobe to exist.
    #[error("sequence length must be at least 2, got {0}")]
    LengthTooShort(usize),
    /// An entry's modulus was not 1 within [`UNIT_MODULUS_TOLERANCE`].
    #[error("entry {index} has modulus {modulus} which is not 1 within {tolerance:e}")]
    NotUnimodular {
        /// Zero-based index of the offending entry.
        index: usize,
        /// The modulus that was found there.
        modulus: f64,
        /// The tolerance that was violated.
        tolerance: f64,
    },
}

/// A complex sequence whose entries all lie on the unit circle.
///
/// The constructors enforce the two type invariants — length at least 2 and
/// `|y_i| = 1` within [`UNIT_MODULUS_TOLERANCE`] — so every function that
/// accepts a `UnimodularSequence` may assume them.
#[derive(Debug, Clone, PartialEq)]
pub struct UnimodularSequence {
    entries: Vec<Complex64>,
}

impl UnimodularSequence {
    /// Wraps `entries`, verifying both invariants.
    pub fn new(entries: Vec<Complex64>) -> Result<Self, SequenceError> {
        if entries.len() < 2 {
            return Err(SequenceError::LengthTooShort(entries.len()));
        }
        for (index, z) in entries.iter().enumerate() {
            let modulus = z.norm();
            if (modulus - 1.0).abs() > UNIT_MODULUS_TOLERANCE {
                return Err(SequenceError::NotUnimodular {
                    index,
                    modulus,
                    tolerance: UNIT_MODULUS_TOLERANCE,
                });
            }
        }
        Ok(Self { entries })
    }

    /// Builds `y_i = e^{j·phases[i]}`; only the length can fail.
    pub fn from_phases(phases: &[f64]) -> Result<Self, SequenceError> {
        if phases.len() < 2 {
            return Err(SequenceError::LengthTooShort(phases.len()));
        }
        Ok(Self {
            entries: phases.iter().map(|&p| Complex64::cis(p)).collect(),
        })
    }

    /// Projects each entry of `z` onto the unit circle and wraps the result.
    ///
    /// Equivalent to `new(project_unimodular(z))` but skips the modulus
    /// re-check, since the projection lands on the circle by construction.
    pub fn from_unnormalized(z: &[Complex64]) -> Result<Self, SequenceError> {
        if z.len() < 2 {
            return Err(SequenceError::LengthTooShort(z.len()));
        }
        Ok(Self {
            entries: project_unimodular(z),
        })
    }

    /// Number of entries `N`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false — the constructors reject sequences shorter than 2.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entries as a slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Consumes the sequence, returning the raw entries.
    pub fn into_entries(self) -> Vec<Complex64> {
        self.entries
    }

    /// Overwrites entry `index` with `value` pushed onto the unit circle.
    ///
    /// Renormalizing on every write keeps the invariant exact no matter how
    /// many updates a long optimization run performs.
    pub fn set_entry(&mut self, index: usize, value: Complex64) {
        self.entries[index] = project_entry(value);
    }
}

/// Nearest point on the unit circle: `z / |z|`, with the convention that the
/// origin — where every direction is equally near — maps to `1 + 0j`.
#[inline]
pub(crate) fn project_entry(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        z / r
    }
}

/// Entrywise projection onto the unit circle (`z_i / |z_i|`, origin → `1`).
///
/// This is the exact minimizer of `Σ |y_i - z_i|²` over unimodular `y`, and
/// therefore the workhorse of every phase-retrieval-style update in this
/// crate: writing `e^{j·arg(z)}` as `z / |z|` avoids a trip through `atan2`.
pub fn project_unimodular(z: &[Complex64]) -> Vec<Complex64> {
    z.iter().copied().map(project_entry).collect()
}
