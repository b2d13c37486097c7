//! Reference computations for integration tests.
//!
//! Written against plain `Vec<f64>` with literal loops so that expectations
//! do not depend on the library's transform, algebra or ranking code.

#![allow(dead_code)]

use std::f64::consts::PI;

pub const SAMPLE_RATE: f64 = 100.0;
pub const SAMPLE_COUNT: usize = 256;
pub const DRAWN_LINES: usize = 128;

/// (sin, cos, −sin) frequencies of the five demonstration signals.
pub const SIGNALS: [(f64, f64, f64); 5] = [
    (11.0, 13.0, 17.0),
    (7.0, 13.0, 23.0),
    (7.0, 11.0, 23.0),
    (7.0, 17.0, 23.0),
    (10.0, 17.0, 23.0),
];

pub fn samples(signal: usize, rate: f64, count: usize) -> Vec<f64> {
    let (a, b, c) = SIGNALS[signal - 1];
    (0..count)
        .map(|n| {
            let t = n as f64 / rate;
            (2.0 * PI * a * t).sin() + (2.0 * PI * b * t).cos() - (2.0 * PI * c * t).sin()
        })
        .collect()
}

/// Direct summation of X_k = Σ x_n e^{−2πikn/N}, one-sided, 1/N at DC and 2/N elsewhere.
pub fn direct_magnitudes(x: &[f64], lines: usize) -> Vec<f64> {
    let n = x.len() as f64;
    (0..lines)
        .map(|k| {
            let mut re = 0.0;
            let mut im = 0.0;
            for (i, &v) in x.iter().enumerate() {
                let angle = 2.0 * PI * (k as f64) * (i as f64) / n;
                re += v * angle.cos();
                im -= v * angle.sin();
            }
            let scale = if k == 0 { 1.0 } else { 2.0 };
            scale * (re * re + im * im).sqrt() / n
        })
        .collect()
}

pub fn paper_magnitudes(signal: usize) -> Vec<f64> {
    direct_magnitudes(&samples(signal, SAMPLE_RATE, SAMPLE_COUNT), DRAWN_LINES)
}

pub fn multiply(spectra: &[Vec<f64>]) -> Vec<f64> {
    let mut out = vec![1.0; spectra[0].len()];
    for s in spectra {
        for i in 0..out.len() {
            out[i] *= s[i];
        }
    }
    out
}

pub fn divide_plain(a: &[f64], b: &[f64]) -> Vec<f64> {
    (0..a.len()).map(|i| a[i] / b[i]).collect()
}

pub fn divide_conditioned(a: &[f64], b: &[f64], eps: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        if a[i] < eps && b[i] < eps {
            out.push(0.0);
        } else if b[i] < eps {
            out.push(a[i] / eps);
        } else {
            out.push(a[i] / b[i]);
        }
    }
    out
}

/// Indices of the `k` largest values by repeated linear scan (lowest index on ties).
pub fn top_k(values: &[f64], k: usize, exclude_dc: bool) -> Vec<usize> {
    let mut taken = vec![false; values.len()];
    if exclude_dc && !values.is_empty() {
        taken[0] = true;
    }
    let mut out = Vec::new();
    for _ in 0..k {
        let mut best: Option<usize> = None;
        for i in 0..values.len() {
            if !taken[i] && best.is_none_or(|b| values[i] > values[b]) {
                best = Some(i);
            }
        }
        match best {
            Some(b) => {
                taken[b] = true;
                out.push(b);
            }
            None => break,
        }
    }
    out
}

pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}
