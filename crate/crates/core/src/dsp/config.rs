use crate::error::DspError;
use crate::scalar::Scalar;

/// How bin indices map to frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AxisConvention {
    /// `Δν = ν_s / (N_s − 1)`, the spacing implied by the sampling time
    /// `t_s = (N_s − 1) / ν_s` (100 Hz and 256 samples give 0.392157 Hz).
    #[default]
    Paper,
    /// `Δν = ν_s / N_s`, the textbook DFT bin spacing.
    Standard,
}

impl AxisConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            AxisConvention::Paper => "paper",
            AxisConvention::Standard => "standard",
        }
    }
}

impl std::str::FromStr for AxisConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(AxisConvention::Paper),
            "standard" => Ok(AxisConvention::Standard),
            other => Err(format!(
                "unknown axis convention `{other}` (expected paper|standard)"
            )),
        }
    }
}

/// Acquisition parameters: sample rate, sample count and how many spectral
/// lines to keep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingConfig<T> {
    sample_rate: T,
    sample_count: usize,
    drawn_lines: usize,
    axis: AxisConvention,
}

impl<T: Scalar> SamplingConfig<T> {
    pub fn new(
        sample_rate: T,
        sample_count: usize,
        drawn_lines: usize,
        axis: AxisConvention,
    ) -> Result<Self, DspError> {
        if !sample_rate.is_finite() || sample_rate <= T::zero() {
            return Err(DspError::InvalidSampleRate(sample_rate.as_f64()));
        }
        if sample_count < 2 {
            return Err(DspError::TooFewSamples(sample_count));
        }
        let max = sample_count / 2 + 1;
        if drawn_lines == 0 || drawn_lines > max {
            return Err(DspError::InvalidDrawnLines {
                requested: drawn_lines,
                max,
            });
        }
        Ok(Self {
            sample_rate,
            sample_count,
            drawn_lines,
            axis,
        })
    }

    /// 100 Hz, 256 samples, 128 drawn lines, paper axis.
    pub fn paper() -> Self {
        Self::new(T::lit(100.0), 256, 128, AxisConvention::Paper).expect("valid constants")
    }

    pub fn sample_rate(&self) -> T {
        self.sample_rate
    }

    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    pub fn drawn_lines(&self) -> usize {
        self.drawn_lines
    }

    pub fn axis(&self) -> AxisConvention {
        self.axis
    }

    pub fn with_axis(self, axis: AxisConvention) -> Self {
        Self { axis, ..self }
    }

    /// `t_s = (N_s − 1) / ν_s`.
    pub fn sampling_time(&self) -> T {
        T::from_index(self.sample_count - 1) / self.sample_rate
    }

    pub fn resolution(&self) -> T {
        match self.axis {
            AxisConvention::Paper => self.sample_rate / T::from_index(self.sample_count - 1),
            AxisConvention::Standard => self.sample_rate / T::from_index(self.sample_count),
        }
    }
}

/// Samples taken at `n / ν_s`, `n = 0..N_s`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSeries<T> {
    values: Vec<T>,
    config: SamplingConfig<T>,
}

impl<T: Scalar> SampleSeries<T> {
    pub fn new(values: Vec<T>, config: SamplingConfig<T>) -> Result<Self, DspError> {
        if values.len() != config.sample_count {
            return Err(DspError::LengthMismatch {
                expected: config.sample_count,
                actual: values.len(),
            });
        }
        Ok(Self { values, config })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn config(&self) -> &SamplingConfig<T> {
        &self.config
    }

    pub fn with_axis(mut self, axis: AxisConvention) -> Self {
        self.config = self.config.with_axis(axis);
        self
    }

    /// Every sample multiplied by `factor`.
    pub fn scaled(&self, factor: T) -> Self {
        Self {
            values: self.values.iter().map(|&v| v * factor).collect(),
            config: self.config,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_defaults() {
        let cfg = SamplingConfig::<f64>::paper();
        assert_eq!(cfg.sample_count(), 256);
        assert_eq!(cfg.drawn_lines(), 128);
        assert!((cfg.sampling_time() - 2.55).abs() < 1e-12);
        assert!((cfg.resolution() - 0.392157).abs() < 1e-6);
        let std = cfg.with_axis(AxisConvention::Standard);
        assert_eq!(std.resolution(), 100.0 / 256.0);
    }

    #[test]
    fn validation() {
        assert_eq!(
            SamplingConfig::new(100.0, 1, 1, AxisConvention::Paper),
            Err(DspError::TooFewSamples(1))
        );
        assert_eq!(
            SamplingConfig::new(0.0, 8, 1, AxisConvention::Paper),
            Err(DspError::InvalidSampleRate(0.0))
        );
        assert_eq!(
            SamplingConfig::new(1.0, 8, 6, AxisConvention::Paper),
            Err(DspError::InvalidDrawnLines { requested: 6, max: 5 })
        );
        assert!(SamplingConfig::new(1.0, 8, 5, AxisConvention::Paper).is_ok());
        let cfg = SamplingConfig::new(1.0, 4, 2, AxisConvention::Paper).unwrap();
        assert_eq!(
            SampleSeries::new(vec![1.0; 3], cfg),
            Err(DspError::LengthMismatch {
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn axis_parsing() {
        assert_eq!("paper".parse(), Ok(AxisConvention::Paper));
        assert_eq!("standard".parse(), Ok(AxisConvention::Standard));
        assert!("other".parse::<AxisConvention>().is_err());
    }
}
