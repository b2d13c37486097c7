//! Element-wise algebra on congruent spectra.
//!
//! The product of congruent spectra emphasizes lines that are large in every
//! factor (common frequencies). Multiplying by an inverse spectrum, i.e. the
//! element-wise ratio, emphasizes lines large in the numerator and small in
//! the denominator (non-common frequencies).

use crate::error::SpectrumError;
use crate::scalar::Scalar;
use crate::spectrum::{is_congruent, Spectrum};

/// Smallest magnitude [`invert`] accepts by default.
pub const DEFAULT_INVERSION_FLOOR: f64 = 1e-12;

/// Smallest denominator plain division accepts.
pub const DIVISION_FLOOR: f64 = 1e-12;

/// Default threshold below which a magnitude counts as numerical noise.
pub const DEFAULT_EPSILON: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisionMode {
    /// Ordinary element-wise quotient.
    Plain,
    /// Quotient with noise-over-noise suppression, see [`DivisionPolicy`].
    Conditioned,
}

/// How [`ratio`] treats lines whose magnitudes are at noise level.
///
/// In conditioned mode, with threshold `ε`:
/// * numerator and denominator both below `ε`: the output is `0`;
/// * only the denominator below `ε`: the numerator is divided by `ε`;
/// * otherwise: the ordinary quotient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivisionPolicy<T> {
    mode: DivisionMode,
    epsilon: T,
}

impl<T: Scalar> DivisionPolicy<T> {
    pub fn plain() -> Self {
        Self {
            mode: DivisionMode::Plain,
            epsilon: T::lit(DEFAULT_EPSILON),
        }
    }

    pub fn conditioned(epsilon: T) -> Result<Self, SpectrumError> {
        Self::new(DivisionMode::Conditioned, epsilon)
    }

    pub fn new(mode: DivisionMode, epsilon: T) -> Result<Self, SpectrumError> {
        if !epsilon.is_finite() || epsilon <= T::zero() {
            return Err(SpectrumError::NonPositiveThreshold(epsilon.as_f64()));
        }
        Ok(Self { mode, epsilon })
    }

    pub fn mode(&self) -> DivisionMode {
        self.mode
    }

    pub fn epsilon(&self) -> T {
        self.epsilon
    }

    fn divide(&self, index: usize, numerator: T, denominator: T) -> Result<T, SpectrumError> {
        match self.mode {
            DivisionMode::Plain => {
                if denominator < T::lit(DIVISION_FLOOR) {
                    Err(SpectrumError::DivisionByNearZero {
                        index,
                        value: denominator.as_f64(),
                    })
                } else {
                    Ok(numerator / denominator)
                }
            }
            DivisionMode::Conditioned => {
                let eps = self.epsilon;
                Ok(if numerator < eps && denominator < eps {
                    T::zero()
                } else if denominator < eps {
                    numerator / eps
                } else {
                    numerator / denominator
                })
            }
        }
    }
}

impl<T: Scalar> Default for DivisionPolicy<T> {
    fn default() -> Self {
        Self {
            mode: DivisionMode::Conditioned,
            epsilon: T::lit(DEFAULT_EPSILON),
        }
    }
}

/// Reciprocal spectrum: every magnitude `A` becomes `1 / A`.
///
/// Fails with [`SpectrumError::MagnitudeBelowFloor`] at the first magnitude
/// smaller than `floor` (see [`DEFAULT_INVERSION_FLOOR`]).
pub fn invert<T: Scalar>(s: &Spectrum<T>, floor: T) -> Result<Spectrum<T>, SpectrumError> {
    if floor.is_nan() || floor <= T::zero() {
        return Err(SpectrumError::NonPositiveThreshold(floor.as_f64()));
    }
    if let Some((index, &value)) = s.magnitudes().iter().enumerate().find(|(_, &m)| m < floor) {
        return Err(SpectrumError::MagnitudeBelowFloor {
            index,
            value: value.as_f64(),
            floor: floor.as_f64(),
        });
    }
    Ok(s.map_magnitudes(|m| T::one() / m))
}

/// First pair `(i, j)`, `i < j`, of non-congruent spectra.
pub(crate) fn first_incongruent<'a, T: Scalar>(
    spectra: impl Iterator<Item = &'a Spectrum<T>> + Clone,
) -> Option<(usize, usize)> {
    for (i, a) in spectra.clone().enumerate() {
        for (j, b) in spectra.clone().enumerate().skip(i + 1) {
            if !is_congruent(a, b) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Element-wise product of congruent spectra, folded left to right.
pub fn product<T: Scalar>(spectra: &[Spectrum<T>]) -> Result<Spectrum<T>, SpectrumError> {
    let (first, rest) = spectra.split_first().ok_or(SpectrumError::EmptyList)?;
    if let Some((first, second)) = first_incongruent(spectra.iter()) {
        return Err(SpectrumError::NotCongruent { first, second });
    }
    Ok(multiply_unchecked(first, rest))
}

fn multiply_unchecked<T: Scalar>(first: &Spectrum<T>, rest: &[Spectrum<T>]) -> Spectrum<T> {
    let mut acc = first.magnitudes().to_vec();
    for s in rest {
        for (a, &m) in acc.iter_mut().zip(s.magnitudes()) {
            *a = *a * m;
        }
    }
    Spectrum::from_parts(acc, first.resolution())
}

/// Element-wise quotient `numerator / denominator` under `policy`.
pub fn ratio<T: Scalar>(
    numerator: &Spectrum<T>,
    denominator: &Spectrum<T>,
    policy: &DivisionPolicy<T>,
) -> Result<Spectrum<T>, SpectrumError> {
    if !is_congruent(numerator, denominator) {
        return Err(SpectrumError::NotCongruent { first: 0, second: 1 });
    }
    let values = numerator
        .magnitudes()
        .iter()
        .zip(denominator.magnitudes())
        .enumerate()
        .map(|(i, (&n, &d))| policy.divide(i, n, d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Spectrum::from_parts(values, numerator.resolution()))
}

/// `ratio(product(emphasize), product(suppress), policy)`.
///
/// Congruence is checked across both lists together; a reported pair indexes
/// into `emphasize` followed by `suppress`.
pub fn group_contrast<T: Scalar>(
    emphasize: &[Spectrum<T>],
    suppress: &[Spectrum<T>],
    policy: &DivisionPolicy<T>,
) -> Result<Spectrum<T>, SpectrumError> {
    if emphasize.is_empty() || suppress.is_empty() {
        return Err(SpectrumError::EmptyList);
    }
    if let Some((first, second)) = first_incongruent(emphasize.iter().chain(suppress)) {
        return Err(SpectrumError::NotCongruent { first, second });
    }
    let top = multiply_unchecked(&emphasize[0], &emphasize[1..]);
    let bottom = multiply_unchecked(&suppress[0], &suppress[1..]);
    ratio(&top, &bottom, policy)
}
