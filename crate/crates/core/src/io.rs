//! CSV formats for sample series, spectra and detection reports.
//!
//! Samples:
//!
//! ```text
//! # sample_rate=100
//! # axis=paper
//! index,value
//! 0,1.0
//! 1,0.73
//! ```
//!
//! `sample_rate` is required. `axis` (default `paper`), `sample_count` and
//! `drawn_lines` (default `N_s / 2`) are optional. The `index,value` column
//! header is optional.
//!
//! Spectra are written as `bin,frequency_hz,magnitude` and detections as
//! `rank,bin,frequency_hz,magnitude`, numbers with 9 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::detector::DetectedFrequency;
use crate::dsp::{AxisConvention, SampleSeries, SamplingConfig};
use crate::error::{DspError, IoError};
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;

pub const SPECTRUM_HEADER: &str = "bin,frequency_hz,magnitude";
pub const DETECTIONS_HEADER: &str = "rank,bin,frequency_hz,magnitude";
pub const SAMPLES_HEADER: &str = "index,value";

/// Formats like C's `%.9g`.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..9).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (8 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Writes `contents` next to `path` and renames it into place.
fn write_atomic(path: &Path, contents: &str) -> Result<(), IoError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(|e| IoError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| IoError::io(path, e))
}

fn malformed(path: &Path, line: usize, message: impl Into<String>) -> IoError {
    IoError::MalformedCsv {
        path: path.to_owned(),
        line,
        message: message.into(),
    }
}

pub fn read_samples_csv(path: impl AsRef<Path>) -> Result<SampleSeries<f64>, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    parse_samples(&text, path)
}

/// Parses the samples format; `path` is only used in error reports.
pub fn parse_samples(text: &str, path: &Path) -> Result<SampleSeries<f64>, IoError> {
    let mut sample_rate = None;
    let mut axis = AxisConvention::Paper;
    let mut declared_count = None;
    let mut drawn_lines = None;
    let mut values = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(meta) = line.strip_prefix('#') {
            let Some((key, value)) = meta.split_once('=') else {
                continue;
            };
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| malformed(path, line_no, format!("invalid {what} `{value}`"));
            match key {
                "sample_rate" => sample_rate = Some(value.parse::<f64>().map_err(|_| bad(key))?),
                "axis" => axis = value.parse().map_err(|_| bad(key))?,
                "sample_count" => declared_count = Some(value.parse::<usize>().map_err(|_| bad(key))?),
                "drawn_lines" => drawn_lines = Some(value.parse::<usize>().map_err(|_| bad(key))?),
                _ => {}
            }
            continue;
        }
        if values.is_empty() && line.eq_ignore_ascii_case(SAMPLES_HEADER) {
            continue;
        }
        let (index, value) = line
            .split_once(',')
            .ok_or_else(|| malformed(path, line_no, "expected `index,value`"))?;
        let index: usize = index
            .trim()
            .parse()
            .map_err(|_| malformed(path, line_no, format!("invalid index `{}`", index.trim())))?;
        if index != values.len() {
            return Err(malformed(
                path,
                line_no,
                format!("expected index {}, found {index}", values.len()),
            ));
        }
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| malformed(path, line_no, format!("invalid value `{}`", value.trim())))?;
        if !value.is_finite() {
            return Err(malformed(path, line_no, "sample value is not finite"));
        }
        values.push(value);
    }

    let sample_rate = sample_rate.ok_or_else(|| IoError::MissingHeader {
        path: path.to_owned(),
        header: "sample_rate",
    })?;
    if let Some(declared) = declared_count {
        if declared != values.len() {
            return Err(IoError::LengthMismatch {
                path: path.to_owned(),
                declared,
                found: values.len(),
            });
        }
    }
    let samples_err = |source: DspError| IoError::Samples {
        path: path.to_owned(),
        source,
    };
    if values.len() < 2 {
        return Err(samples_err(DspError::TooFewSamples(values.len())));
    }
    let drawn = drawn_lines.unwrap_or((values.len() / 2).max(1));
    let config = SamplingConfig::new(sample_rate, values.len(), drawn, axis).map_err(samples_err)?;
    SampleSeries::new(values, config).map_err(samples_err)
}

pub fn samples_csv_string<T: Scalar>(series: &SampleSeries<T>) -> String {
    let cfg = series.config();
    let mut out = String::new();
    let _ = writeln!(out, "# sample_rate={}", cfg.sample_rate());
    let _ = writeln!(out, "# axis={}", cfg.axis().as_str());
    let _ = writeln!(out, "# sample_count={}", cfg.sample_count());
    let _ = writeln!(out, "# drawn_lines={}", cfg.drawn_lines());
    out.push_str(SAMPLES_HEADER);
    out.push('\n');
    for (i, v) in series.values().iter().enumerate() {
        // Shortest round-tripping representation keeps samples lossless.
        let _ = writeln!(out, "{i},{}", v.as_f64());
    }
    out
}

pub fn write_samples_csv<T: Scalar>(series: &SampleSeries<T>, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_atomic(path.as_ref(), &samples_csv_string(series))
}

pub fn spectrum_csv_string<T: Scalar>(s: &Spectrum<T>) -> String {
    let mut out = String::with_capacity(32 * (s.len() + 1));
    out.push_str(SPECTRUM_HEADER);
    out.push('\n');
    for (i, line) in s.lines().enumerate() {
        let _ = writeln!(
            out,
            "{i},{},{}",
            format_sig9(line.frequency.as_f64()),
            format_sig9(line.magnitude.as_f64())
        );
    }
    out
}

pub fn write_spectrum_csv<T: Scalar>(s: &Spectrum<T>, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_atomic(path.as_ref(), &spectrum_csv_string(s))
}

/// Reads a spectrum written by [`write_spectrum_csv`]. The resolution is
/// recovered from the frequency of bin 1 (1 Hz for a single-line file).
pub fn read_spectrum_csv(path: impl AsRef<Path>) -> Result<Spectrum<f64>, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == SPECTRUM_HEADER => {}
        _ => {
            return Err(IoError::MissingHeader {
                path: path.to_owned(),
                header: SPECTRUM_HEADER,
            })
        }
    }
    let mut magnitudes = Vec::new();
    let mut resolution = 1.0;
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [bin, freq, mag] = fields[..] else {
            return Err(malformed(path, line_no, "expected 3 fields"));
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| malformed(path, line_no, format!("invalid number `{s}`")))
        };
        let bin: usize = bin
            .parse()
            .map_err(|_| malformed(path, line_no, format!("invalid bin `{bin}`")))?;
        if bin != magnitudes.len() {
            return Err(malformed(
                path,
                line_no,
                format!("expected bin {}", magnitudes.len()),
            ));
        }
        if bin == 1 {
            resolution = parse(freq)?;
        }
        magnitudes.push(parse(mag)?);
    }
    Spectrum::new(magnitudes, resolution).map_err(|e| IoError::Samples {
        path: path.to_owned(),
        source: e.into(),
    })
}

pub fn detections_csv_string<T: Scalar>(detections: &[DetectedFrequency<T>]) -> String {
    let mut out = String::from(DETECTIONS_HEADER);
    out.push('\n');
    for d in detections {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            d.rank,
            d.bin_index,
            format_sig9(d.frequency.as_f64()),
            format_sig9(d.magnitude.as_f64())
        );
    }
    out
}

pub fn write_detections_csv<T: Scalar>(
    detections: &[DetectedFrequency<T>],
    path: impl AsRef<Path>,
) -> Result<(), IoError> {
    write_atomic(path.as_ref(), &detections_csv_string(detections))
}
