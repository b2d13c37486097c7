//! Declarative experiment runs.
//!
//! A scenario names synthetic signals (and optionally ingested sample files),
//! fixes a sampling configuration and lists jobs. Each job writes
//! `<job>.spectrum.csv` and `<job>.detections.csv` to the output directory.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{group_contrast, product, DivisionMode, DivisionPolicy, DEFAULT_EPSILON};
use crate::detector::{emphasized, DetectedFrequency};
use crate::dsp::{
    magnitude_spectrum, synthesize, AxisConvention, SamplingConfig, Sign, SignalSpec, Term, Waveform,
};
use crate::error::{Error, IoError, ScenarioError};
use crate::io::{read_samples_csv, write_detections_csv, write_spectrum_csv};
use crate::spectrum::Spectrum;

pub const SCHEMA_VERSION: u32 = 1;

const BUNDLED: &[(&str, &str)] = &[
    ("figures_1_to_4", include_str!("../scenarios/figures_1_to_4.json")),
    ("figures_5_to_7", include_str!("../scenarios/figures_5_to_7.json")),
    (
        "figures_8_to_10",
        include_str!("../scenarios/figures_8_to_10.json"),
    ),
];

/// JSON text of a scenario shipped with the crate.
pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub schema_version: u32,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub sampling: SamplingSpec,
    #[serde(default)]
    pub signals: BTreeMap<String, SignalDef>,
    /// Sample files ingested under a name; relative paths resolve against the
    /// scenario file's directory when loaded with [`load_scenario`].
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub inputs: BTreeMap<String, PathBuf>,
    pub jobs: Vec<Job>,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplingSpec {
    pub sample_rate: f64,
    pub sample_count: usize,
    pub drawn_lines: usize,
    pub axis: AxisName,
}

impl Default for SamplingSpec {
    fn default() -> Self {
        Self {
            sample_rate: 100.0,
            sample_count: 256,
            drawn_lines: 128,
            axis: AxisName::Paper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisName {
    Paper,
    Standard,
}

impl From<AxisName> for AxisConvention {
    fn from(a: AxisName) -> Self {
        match a {
            AxisName::Paper => AxisConvention::Paper,
            AxisName::Standard => AxisConvention::Standard,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignalDef {
    pub terms: Vec<TermDef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDef {
    pub shape: ShapeName,
    #[serde(default = "plus_one")]
    pub sign: i8,
    pub frequency: f64,
    #[serde(default = "one")]
    pub amplitude: f64,
}

fn plus_one() -> i8 {
    1
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeName {
    Sin,
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicyDef {
    pub mode: ModeName,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
}

impl Default for PolicyDef {
    fn default() -> Self {
        Self {
            mode: ModeName::Conditioned,
            epsilon: DEFAULT_EPSILON,
        }
    }
}

fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeName {
    Plain,
    Conditioned,
}

fn default_k() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Job {
    Spectrum {
        name: String,
        signal: String,
        #[serde(default = "default_k")]
        k: usize,
        #[serde(default)]
        keep_dc: bool,
    },
    Common {
        name: String,
        signals: Vec<String>,
        #[serde(default = "default_k")]
        k: usize,
        #[serde(default)]
        keep_dc: bool,
    },
    NonCommon {
        name: String,
        emphasize: Vec<String>,
        suppress: Vec<String>,
        #[serde(default)]
        policy: PolicyDef,
        #[serde(default = "default_k")]
        k: usize,
        #[serde(default)]
        keep_dc: bool,
    },
}

impl Job {
    pub fn name(&self) -> &str {
        match self {
            Job::Spectrum { name, .. } | Job::Common { name, .. } | Job::NonCommon { name, .. } => name,
        }
    }

    fn k(&self) -> usize {
        match self {
            Job::Spectrum { k, .. } | Job::Common { k, .. } | Job::NonCommon { k, .. } => *k,
        }
    }

    fn keep_dc(&self) -> bool {
        match self {
            Job::Spectrum { keep_dc, .. } | Job::Common { keep_dc, .. } | Job::NonCommon { keep_dc, .. } => {
                *keep_dc
            }
        }
    }

    fn references(&self) -> Vec<&str> {
        match self {
            Job::Spectrum { signal, .. } => vec![signal.as_str()],
            Job::Common { signals, .. } => signals.iter().map(String::as_str).collect(),
            Job::NonCommon {
                emphasize, suppress, ..
            } => emphasize.iter().chain(suppress).map(String::as_str).collect(),
        }
    }
}

impl TermDef {
    fn to_term(self) -> Result<Term<f64>, String> {
        let sign = match self.sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            other => return Err(format!("term sign must be 1 or -1, got {other}")),
        };
        let waveform = match self.shape {
            ShapeName::Sin => Waveform::Sin,
            ShapeName::Cos => Waveform::Cos,
        };
        Ok(Term {
            waveform,
            sign,
            frequency: self.frequency,
            amplitude: self.amplitude,
        })
    }
}

impl SignalDef {
    pub fn to_signal(&self) -> Result<SignalSpec<f64>, String> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.to_term())
            .collect::<Result<Vec<_>, _>>()?;
        SignalSpec::new(terms).map_err(|e| e.to_string())
    }
}

impl SamplingSpec {
    pub fn to_config(self) -> Result<SamplingConfig<f64>, String> {
        SamplingConfig::new(
            self.sample_rate,
            self.sample_count,
            self.drawn_lines,
            self.axis.into(),
        )
        .map_err(|e| e.to_string())
    }
}

impl PolicyDef {
    pub fn to_policy(self) -> Result<DivisionPolicy<f64>, String> {
        let mode = match self.mode {
            ModeName::Plain => DivisionMode::Plain,
            ModeName::Conditioned => DivisionMode::Conditioned,
        };
        DivisionPolicy::new(mode, self.epsilon).map_err(|e| e.to_string())
    }
}

fn valid_file_stem(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
        && !name.starts_with('.')
}

impl ScenarioSpec {
    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        let spec: Self = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("scenario serializes");
        text.push('\n');
        text
    }

    /// Checks everything that can be checked without touching the filesystem.
    pub fn validate(&self) -> Result<(), ScenarioError> {
        let invalid = |msg: String| Err(ScenarioError::Invalid(msg));
        if self.schema_version != SCHEMA_VERSION {
            return invalid(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            ));
        }
        if self.jobs.is_empty() {
            return invalid("job list is empty".into());
        }
        self.sampling
            .to_config()
            .map_err(|e| ScenarioError::Invalid(format!("sampling: {e}")))?;
        for (name, def) in &self.signals {
            def.to_signal()
                .map_err(|e| ScenarioError::Invalid(format!("signal `{name}`: {e}")))?;
            if self.inputs.contains_key(name) {
                return invalid(format!("`{name}` is both a signal and an input"));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for job in &self.jobs {
            let name = job.name();
            if !valid_file_stem(name) {
                return invalid(format!("job name `{name}` is not a valid file name"));
            }
            if !seen.insert(name) {
                return invalid(format!("duplicate job name `{name}`"));
            }
            if job.k() == 0 {
                return invalid(format!("job `{name}`: k must be at least 1"));
            }
            let refs = job.references();
            if refs.is_empty() {
                return invalid(format!("job `{name}` references no signals"));
            }
            if let Job::NonCommon {
                emphasize,
                suppress,
                policy,
                ..
            } = job
            {
                if emphasize.is_empty() || suppress.is_empty() {
                    return invalid(format!(
                        "job `{name}`: emphasize and suppress must both be non-empty"
                    ));
                }
                policy
                    .to_policy()
                    .map_err(|e| ScenarioError::Invalid(format!("job `{name}`: {e}")))?;
            }
            for r in refs {
                if !self.signals.contains_key(r) && !self.inputs.contains_key(r) {
                    return invalid(format!("job `{name}` references unknown signal `{r}`"));
                }
            }
        }
        Ok(())
    }
}

/// Reads and validates a scenario file, resolving relative input paths
/// against the file's directory.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<ScenarioSpec, ScenarioError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    let mut spec = ScenarioSpec::from_json(&text)?;
    if let Some(base) = path.parent() {
        for input in spec.inputs.values_mut() {
            if input.is_relative() {
                *input = base.join(&*input);
            }
        }
    }
    Ok(spec)
}

/// Loads a scenario from a file path, or from the bundled set when no such
/// file exists and `name_or_path` names a bundled scenario.
pub fn resolve_scenario(name_or_path: &str) -> Result<ScenarioSpec, ScenarioError> {
    let path = Path::new(name_or_path);
    if !path.exists() {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(name_or_path);
        if let Some(text) = bundled(name_or_path).or_else(|| bundled(stem)) {
            return ScenarioSpec::from_json(text);
        }
    }
    load_scenario(path)
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobSummary {
    pub job: String,
    pub spectrum_path: PathBuf,
    pub detections_path: PathBuf,
    pub top: Option<DetectedFrequency<f64>>,
}

/// Per-job outcome in declared job order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    pub output_dir: PathBuf,
    pub jobs: Vec<JobSummary>,
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "job\tbin\tfrequency_hz\tmagnitude")?;
        for j in &self.jobs {
            match &j.top {
                Some(d) => writeln!(
                    f,
                    "{}\t{}\t{}\t{}",
                    j.job,
                    d.bin_index,
                    crate::io::format_sig9(d.frequency),
                    crate::io::format_sig9(d.magnitude)
                )?,
                None => writeln!(f, "{}\t-\t-\t-", j.job)?,
            }
        }
        Ok(())
    }
}

struct Sources<'a> {
    spec: &'a ScenarioSpec,
    config: SamplingConfig<f64>,
    cache: BTreeMap<&'a str, Spectrum<f64>>,
}

impl<'a> Sources<'a> {
    fn spectrum(&mut self, name: &'a str) -> Result<Spectrum<f64>, Error> {
        if let Some(s) = self.cache.get(name) {
            return Ok(s.clone());
        }
        let series = if let Some(def) = self.spec.signals.get(name) {
            let signal = def.to_signal().map_err(ScenarioError::Invalid)?;
            synthesize(&signal, &self.config)
        } else {
            read_samples_csv(&self.spec.inputs[name])?
        };
        let spectrum = magnitude_spectrum(&series)?;
        self.cache.insert(name, spectrum.clone());
        Ok(spectrum)
    }

    fn spectra(&mut self, names: &'a [String]) -> Result<Vec<Spectrum<f64>>, Error> {
        names.iter().map(|n| self.spectrum(n)).collect()
    }
}

fn run_job<'a>(
    job: &'a Job,
    sources: &mut Sources<'a>,
) -> Result<(Spectrum<f64>, Vec<DetectedFrequency<f64>>), Error> {
    let spectrum = match job {
        Job::Spectrum { signal, .. } => sources.spectrum(signal)?,
        Job::Common { signals, .. } => product(&sources.spectra(signals)?)?,
        Job::NonCommon {
            emphasize,
            suppress,
            policy,
            ..
        } => {
            let policy = policy.to_policy().map_err(ScenarioError::Invalid)?;
            group_contrast(&sources.spectra(emphasize)?, &sources.spectra(suppress)?, &policy)?
        }
    };
    let detections = emphasized(&spectrum, job.k(), !job.keep_dc());
    Ok((spectrum, detections))
}

/// Runs every job in order. `output_dir` overrides the scenario's own.
pub fn run_scenario(spec: &ScenarioSpec, output_dir: Option<&Path>) -> Result<ScenarioReport, ScenarioError> {
    spec.validate()?;
    let out = output_dir.map_or_else(|| spec.output_dir.clone(), Path::to_path_buf);
    fs::create_dir_all(&out).map_err(|e| IoError::io(&out, e))?;
    let mut sources = Sources {
        spec,
        config: spec.sampling.to_config().map_err(ScenarioError::Invalid)?,
        cache: BTreeMap::new(),
    };
    let mut jobs = Vec::with_capacity(spec.jobs.len());
    for job in &spec.jobs {
        let wrap = |e: Error| ScenarioError::Job {
            job: job.name().to_owned(),
            source: Box::new(e),
        };
        let (spectrum, detections) = run_job(job, &mut sources).map_err(wrap)?;
        let spectrum_path = out.join(format!("{}.spectrum.csv", job.name()));
        let detections_path = out.join(format!("{}.detections.csv", job.name()));
        write_spectrum_csv(&spectrum, &spectrum_path).map_err(|e| wrap(e.into()))?;
        write_detections_csv(&detections, &detections_path).map_err(|e| wrap(e.into()))?;
        jobs.push(JobSummary {
            job: job.name().to_owned(),
            spectrum_path,
            detections_path,
            top: detections.first().copied(),
        });
    }
    Ok(ScenarioReport {
        output_dir: out,
        jobs,
    })
}
