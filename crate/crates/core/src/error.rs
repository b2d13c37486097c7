use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the spectrum algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("spectrum needs at least one magnitude")]
    EmptyInput,
    #[error("resolution must be positive and finite, got {0}")]
    NonPositiveResolution(f64),
    #[error("negative magnitude {value} at index {index}")]
    NegativeMagnitude { index: usize, value: f64 },
    #[error("non-finite magnitude {value} at index {index}")]
    NonFiniteMagnitude { index: usize, value: f64 },
    #[error("magnitude {value} at index {index} is below the inversion floor {floor}")]
    MagnitudeBelowFloor { index: usize, value: f64, floor: f64 },
    #[error("threshold must be positive, got {0}")]
    NonPositiveThreshold(f64),
    #[error("operation needs a non-empty list of spectra")]
    EmptyList,
    #[error("spectra {first} and {second} are not congruent")]
    NotCongruent { first: usize, second: usize },
    #[error("denominator magnitude {value} at index {index} is too close to zero for plain division")]
    DivisionByNearZero { index: usize, value: f64 },
    #[error("every magnitude is near zero, cannot normalize")]
    AllNearZero,
}

/// Errors raised while configuring sampling or transforming samples.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DspError {
    #[error("at least 2 samples are required, got {0}")]
    TooFewSamples(usize),
    #[error("sample rate must be positive and finite, got {0}")]
    InvalidSampleRate(f64),
    #[error("drawn lines must be in 1..={max}, got {requested}")]
    InvalidDrawnLines { requested: usize, max: usize },
    #[error("series has {actual} samples but the configuration declares {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("signal needs at least one term")]
    EmptySignal,
    #[error("term {index} has an invalid frequency {value}")]
    InvalidFrequency { index: usize, value: f64 },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Errors raised while reading or writing files.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}:{line}: {message}")]
    MalformedCsv {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: missing header `{header}`")]
    MissingHeader { path: PathBuf, header: &'static str },
    #[error("{path}: declared {declared} samples but found {found} rows")]
    LengthMismatch {
        path: PathBuf,
        declared: usize,
        found: usize,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Samples {
        path: PathBuf,
        #[source]
        source: DspError,
    },
}

impl IoError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        IoError::Io {
            path: path.into(),
            source,
        }
    }
}

/// Errors raised while validating or running a scenario.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("job `{job}`: {source}")]
    Job {
        job: String,
        #[source]
        source: Box<Error>,
    },
}

/// Any error the crate can produce.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Dsp(#[from] DspError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
}

/// Process exit codes used by the command-line tool.
pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const VALIDATION: i32 = 2;
    pub const NUMERIC: i32 = 3;
    pub const IO: i32 = 4;
}

impl SpectrumError {
    pub fn exit_code(&self) -> i32 {
        match self {
            SpectrumError::NegativeMagnitude { .. }
            | SpectrumError::NonFiniteMagnitude { .. }
            | SpectrumError::MagnitudeBelowFloor { .. }
            | SpectrumError::DivisionByNearZero { .. }
            | SpectrumError::AllNearZero => exit_code::NUMERIC,
            _ => exit_code::VALIDATION,
        }
    }
}

impl DspError {
    pub fn exit_code(&self) -> i32 {
        match self {
            DspError::Spectrum(e) => e.exit_code(),
            _ => exit_code::VALIDATION,
        }
    }
}

impl IoError {
    pub fn exit_code(&self) -> i32 {
        match self {
            IoError::Io { .. } => exit_code::IO,
            IoError::Samples { source, .. } => source.exit_code(),
            _ => exit_code::VALIDATION,
        }
    }
}

impl ScenarioError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ScenarioError::Invalid(_) | ScenarioError::Json(_) => exit_code::VALIDATION,
            ScenarioError::Io(e) => e.exit_code(),
            ScenarioError::Job { source, .. } => source.exit_code(),
        }
    }
}

impl Error {
    /// Exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Spectrum(e) => e.exit_code(),
            Error::Dsp(e) => e.exit_code(),
            Error::Io(e) => e.exit_code(),
            Error::Scenario(e) => e.exit_code(),
        }
    }
}
