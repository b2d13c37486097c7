use crate::dsp::config::{SampleSeries, SamplingConfig};
use crate::error::DspError;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Waveform {
    Sin,
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// One `sign · amplitude · shape(2π · frequency · t)` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term<T> {
    pub waveform: Waveform,
    pub sign: Sign,
    pub frequency: T,
    pub amplitude: T,
}

impl<T: Scalar> Term<T> {
    pub fn sin(frequency: T) -> Self {
        Self {
            waveform: Waveform::Sin,
            sign: Sign::Plus,
            frequency,
            amplitude: T::one(),
        }
    }

    pub fn cos(frequency: T) -> Self {
        Self {
            waveform: Waveform::Cos,
            ..Self::sin(frequency)
        }
    }

    pub fn negated(self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        Self { sign, ..self }
    }

    pub fn with_amplitude(self, amplitude: T) -> Self {
        Self { amplitude, ..self }
    }

    fn value_at(&self, t: T) -> T {
        let phase = T::TAU() * self.frequency * t;
        let shape = match self.waveform {
            Waveform::Sin => phase.sin(),
            Waveform::Cos => phase.cos(),
        };
        let signed = match self.sign {
            Sign::Plus => self.amplitude,
            Sign::Minus => -self.amplitude,
        };
        signed * shape
    }
}

/// A synthetic test signal: a sum of sinusoidal terms.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec<T> {
    terms: Vec<Term<T>>,
}

impl<T: Scalar> SignalSpec<T> {
    pub fn new(terms: Vec<Term<T>>) -> Result<Self, DspError> {
        if terms.is_empty() {
            return Err(DspError::EmptySignal);
        }
        for (index, term) in terms.iter().enumerate() {
            if !term.frequency.is_finite() || term.frequency < T::zero() {
                return Err(DspError::InvalidFrequency {
                    index,
                    value: term.frequency.as_f64(),
                });
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn value_at(&self, t: T) -> T {
        self.terms
            .iter()
            .fold(T::zero(), |acc, term| acc + term.value_at(t))
    }
}

/// Samples `spec` at `t = n / ν_s` for `n = 0..N_s`.
pub fn synthesize<T: Scalar>(spec: &SignalSpec<T>, cfg: &SamplingConfig<T>) -> SampleSeries<T> {
    let values = (0..cfg.sample_count())
        .map(|n| spec.value_at(T::from_index(n) / cfg.sample_rate()))
        .collect();
    SampleSeries::new(values, *cfg).expect("length matches configuration")
}

/// The five demonstration signals `s1`..`s5`:
///
/// | # | terms |
/// |---|-------|
/// | 1 | sin 11 Hz + cos 13 Hz − sin 17 Hz |
/// | 2 | sin 7 Hz + cos 13 Hz − sin 23 Hz |
/// | 3 | sin 7 Hz + cos 11 Hz − sin 23 Hz |
/// | 4 | sin 7 Hz + cos 17 Hz − sin 23 Hz |
/// | 5 | sin 10 Hz + cos 17 Hz − sin 23 Hz |
pub fn paper_signal<T: Scalar>(number: usize) -> Option<SignalSpec<T>> {
    let (a, b, c) = match number {
        1 => (11.0, 13.0, 17.0),
        2 => (7.0, 13.0, 23.0),
        3 => (7.0, 11.0, 23.0),
        4 => (7.0, 17.0, 23.0),
        5 => (10.0, 17.0, 23.0),
        _ => return None,
    };
    SignalSpec::new(vec![
        Term::sin(T::lit(a)),
        Term::cos(T::lit(b)),
        Term::sin(T::lit(c)).negated(),
    ])
    .ok()
}
