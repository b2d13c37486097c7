//! Signal synthesis and one-sided magnitude spectra.

mod config;
mod signal;
mod transform;

pub use config::{AxisConvention, SampleSeries, SamplingConfig};
pub use signal::{paper_signal, synthesize, Sign, SignalSpec, Term, Waveform};
pub use transform::{dft_oracle, fft_in_place, magnitude_spectrum};
