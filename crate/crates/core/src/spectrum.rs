//! Discrete magnitude spectra on a uniform frequency grid.
//!
//! A [`Spectrum`] holds `N + 1` magnitudes `A(ν_i)` with `ν_i = i · Δν`.
//! Frequencies are never stored; they are derived from the bin index and the
//! resolution, so the uniform-grid invariant cannot drift.

use crate::error::SpectrumError;
use crate::scalar::Scalar;

/// Relative tolerance used when comparing resolutions.
pub const CONGRUENCE_TOLERANCE: f64 = 1e-9;

/// One (frequency, magnitude) doublet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine<T> {
    pub frequency: T,
    pub magnitude: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    magnitudes: Vec<T>,
    resolution: T,
}

impl<T: Scalar> Spectrum<T> {
    /// Builds a spectrum with `lines[i] = (i · resolution, values[i])`.
    pub fn new(values: Vec<T>, resolution: T) -> Result<Self, SpectrumError> {
        if values.is_empty() {
            return Err(SpectrumError::EmptyInput);
        }
        if !resolution.is_finite() || resolution <= T::zero() {
            return Err(SpectrumError::NonPositiveResolution(resolution.as_f64()));
        }
        for (index, &value) in values.iter().enumerate() {
            if value.is_nan() || value.is_infinite() {
                return Err(SpectrumError::NonFiniteMagnitude {
                    index,
                    value: value.as_f64(),
                });
            }
            if value < T::zero() {
                return Err(SpectrumError::NegativeMagnitude {
                    index,
                    value: value.as_f64(),
                });
            }
        }
        Ok(Self::from_parts(values, resolution))
    }

    /// Spectrum with magnitude 1 on every line: the multiplicative identity.
    pub fn ones(len: usize, resolution: T) -> Result<Self, SpectrumError> {
        Self::new(vec![T::one(); len], resolution)
    }

    /// Caller guarantees non-empty, non-negative magnitudes and a positive resolution.
    pub(crate) fn from_parts(magnitudes: Vec<T>, resolution: T) -> Self {
        debug_assert!(!magnitudes.is_empty());
        Self {
            magnitudes,
            resolution,
        }
    }

    pub fn resolution(&self) -> T {
        self.resolution
    }

    /// Number of lines, `N + 1`.
    pub fn len(&self) -> usize {
        self.magnitudes.len()
    }

    /// Always false; a spectrum has at least one line.
    pub fn is_empty(&self) -> bool {
        self.magnitudes.is_empty()
    }

    pub fn magnitudes(&self) -> &[T] {
        &self.magnitudes
    }

    pub fn into_magnitudes(self) -> Vec<T> {
        self.magnitudes
    }

    /// Frequency of bin `index`.
    pub fn frequency(&self, index: usize) -> T {
        T::from_index(index) * self.resolution
    }

    pub fn line(&self, index: usize) -> Option<SpectralLine<T>> {
        self.magnitudes.get(index).map(|&magnitude| SpectralLine {
            frequency: self.frequency(index),
            magnitude,
        })
    }

    pub fn lines(&self) -> impl ExactSizeIterator<Item = SpectralLine<T>> + '_ {
        self.magnitudes
            .iter()
            .enumerate()
            .map(|(i, &magnitude)| SpectralLine {
                frequency: self.frequency(i),
                magnitude,
            })
    }

    /// Index of the largest magnitude, lowest index on ties.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &m) in self.magnitudes.iter().enumerate().skip(1) {
            if m > self.magnitudes[best] {
                best = i;
            }
        }
        best
    }

    pub fn max_magnitude(&self) -> T {
        self.magnitudes[self.argmax()]
    }

    pub(crate) fn map_magnitudes(&self, f: impl Fn(T) -> T) -> Self {
        Self::from_parts(self.magnitudes.iter().map(|&m| f(m)).collect(), self.resolution)
    }
}

/// Two spectra are congruent when their resolutions agree within
/// [`CONGRUENCE_TOLERANCE`] (relative to `a`) and they have the same number of lines.
pub fn is_congruent<T: Scalar>(a: &Spectrum<T>, b: &Spectrum<T>) -> bool {
    let tolerance = T::lit(CONGRUENCE_TOLERANCE);
    a.len() == b.len() && (a.resolution - b.resolution).abs() / a.resolution <= tolerance
}

/// Scales magnitudes so that the largest one is exactly 1.
pub fn normalize_max<T: Scalar>(s: &Spectrum<T>) -> Result<Spectrum<T>, SpectrumError> {
    let max = s.max_magnitude();
    if max < T::lit(crate::algebra::DIVISION_FLOOR) {
        return Err(SpectrumError::AllNearZero);
    }
    Ok(s.map_magnitudes(|m| m / max))
}
