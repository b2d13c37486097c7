//! Ranked reports of emphasized lines.
//!
//! A line is emphasized when its magnitude ranks among the `k` largest in the
//! spectrum. The pipelines rank the product of a group (common frequencies)
//! or the contrast between two groups (non-common frequencies).

use std::cmp::Ordering;

use crate::algebra::{group_contrast, product, DivisionPolicy};
use crate::error::SpectrumError;
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectedFrequency<T> {
    pub bin_index: usize,
    pub frequency: T,
    pub magnitude: T,
    /// 1 is the largest magnitude.
    pub rank: usize,
}

/// The `k` largest lines of `s`, largest first, lower bin first on ties.
///
/// Returns fewer than `k` detections when fewer lines are eligible, and none
/// when `k == 0`.
pub fn emphasized<T: Scalar>(s: &Spectrum<T>, k: usize, exclude_dc: bool) -> Vec<DetectedFrequency<T>> {
    let mags = s.magnitudes();
    let start = usize::from(exclude_dc);
    let mut order: Vec<usize> = (start..mags.len()).collect();
    // Stable sort keeps ascending bin order among equal magnitudes.
    order.sort_by(|&a, &b| mags[b].partial_cmp(&mags[a]).unwrap_or(Ordering::Equal));
    order
        .into_iter()
        .take(k)
        .enumerate()
        .map(|(i, bin)| DetectedFrequency {
            bin_index: bin,
            frequency: s.frequency(bin),
            magnitude: mags[bin],
            rank: i + 1,
        })
        .collect()
}

/// Lines significant in every spectrum: `emphasized(product(spectra))`.
pub fn common_frequencies<T: Scalar>(
    spectra: &[Spectrum<T>],
    k: usize,
    exclude_dc: bool,
) -> Result<Vec<DetectedFrequency<T>>, SpectrumError> {
    Ok(emphasized(&product(spectra)?, k, exclude_dc))
}

/// Lines significant in every `emphasize` spectrum and insignificant in every
/// `suppress` spectrum: `emphasized(group_contrast(..))`.
pub fn non_common_frequencies<T: Scalar>(
    emphasize: &[Spectrum<T>],
    suppress: &[Spectrum<T>],
    policy: &DivisionPolicy<T>,
    k: usize,
    exclude_dc: bool,
) -> Result<Vec<DetectedFrequency<T>>, SpectrumError> {
    Ok(emphasized(
        &group_contrast(emphasize, suppress, policy)?,
        k,
        exclude_dc,
    ))
}
