//! Detection of common and non-common frequencies in congruent discrete
//! magnitude spectra.
//!
//! Spectra sharing a resolution and line count are *congruent* and can be
//! combined line by line. The element-wise [`product`] of a group emphasizes
//! lines that are large in every member; the element-wise [`ratio`] (or
//! [`group_contrast`] for groups) emphasizes lines large on one side and
//! small on the other. [`detector`] turns the combined spectra into ranked
//! frequency reports, and [`dsp`] produces spectra from sampled signals.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! `*64`/`*32` aliases below name the concrete types.
//!
//! ```
//! use congruent_spectra::{common_frequencies, dsp, SamplingConfig64, Spectrum64};
//!
//! let cfg = SamplingConfig64::paper();
//! let spectra: Vec<Spectrum64> = [1, 2]
//!     .into_iter()
//!     .map(|n| dsp::magnitude_spectrum(&dsp::synthesize(&dsp::paper_signal(n).unwrap(), &cfg)).unwrap())
//!     .collect();
//! let top = common_frequencies(&spectra, 1, true).unwrap();
//! assert_eq!(top[0].bin_index, 33); // the shared 13 Hz term
//! ```

pub mod algebra;
pub mod detector;
pub mod dsp;
pub mod error;
pub mod io;
mod scalar;
pub mod scenario;
pub mod spectrum;

pub use algebra::{group_contrast, invert, product, ratio, DivisionMode, DivisionPolicy};
pub use detector::{common_frequencies, emphasized, non_common_frequencies, DetectedFrequency};
pub use dsp::{AxisConvention, SampleSeries, SamplingConfig, SignalSpec};
pub use error::{DspError, Error, IoError, ScenarioError, SpectrumError};
pub use scalar::Scalar;
pub use spectrum::{is_congruent, normalize_max, SpectralLine, Spectrum};

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type SpectralLine64 = SpectralLine<f64>;
pub type SpectralLine32 = SpectralLine<f32>;
pub type DivisionPolicy64 = DivisionPolicy<f64>;
pub type DivisionPolicy32 = DivisionPolicy<f32>;
pub type SamplingConfig64 = SamplingConfig<f64>;
pub type SamplingConfig32 = SamplingConfig<f32>;
pub type SampleSeries64 = SampleSeries<f64>;
pub type SampleSeries32 = SampleSeries<f32>;
pub type SignalSpec64 = SignalSpec<f64>;
pub type SignalSpec32 = SignalSpec<f32>;
pub type DetectedFrequency64 = DetectedFrequency<f64>;
pub type DetectedFrequency32 = DetectedFrequency<f32>;
