//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p congruent-spectra --test acceptance`.

mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use congruent_spectra::dsp::{dft_oracle, magnitude_spectrum, paper_signal, synthesize, Term};
use congruent_spectra::{
    common_frequencies, emphasized, group_contrast, invert, is_congruent, non_common_frequencies, product,
    ratio, AxisConvention, DivisionPolicy, SampleSeries, SamplingConfig, SignalSpec, Spectrum,
};

use common::{divide_conditioned, divide_plain, multiply, paper_magnitudes, sorted, top_k};

const RESOLUTION_PRINTED: f64 = 0.392157;
const RESOLUTION_TOL: f64 = 1e-6;
const EPSILON: f64 = 1e-6;
const ORACLE_REL_TOL: f64 = 1e-9;
const ALGEBRA_REL_TOL: f64 = 1e-12;
const PROPERTY_CASES: usize = 1000;
const HILL_CUTOFF_HZ: f64 = 25.0;
const SHARED_HZ: f64 = 14.7;
const MAX_RELATIVE_FREQUENCY_ERROR: f64 = 0.01;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn paper_spectrum(n: usize) -> Spectrum<f64> {
    magnitude_spectrum(&synthesize(&paper_signal(n).unwrap(), &SamplingConfig::paper())).unwrap()
}

fn paper_spectra() -> Vec<Spectrum<f64>> {
    (1..=5).map(paper_spectrum).collect()
}

fn bins<T>(report: &[congruent_spectra::DetectedFrequency<T>]) -> Vec<usize> {
    report.iter().map(|d| d.bin_index).collect()
}

fn conditioned() -> DivisionPolicy<f64> {
    DivisionPolicy::conditioned(EPSILON).unwrap()
}

fn resolution_reproduction() -> Outcome {
    let s1 = paper_spectrum(1);
    let dv = s1.resolution();
    check((dv - RESOLUTION_PRINTED).abs() <= RESOLUTION_TOL, || {
        format!("resolution {dv} differs from {RESOLUTION_PRINTED}")
    })?;
    Ok(format!("Δν = {dv:.9} Hz"))
}

fn common_frequency_reproduction() -> Outcome {
    const EXPECTED: usize = 33;
    let oracle = top_k(&multiply(&[paper_magnitudes(1), paper_magnitudes(2)]), 1, true);
    check(oracle == [EXPECTED], || format!("oracle top-1 {oracle:?}"))?;
    let s = paper_spectra();
    let got = bins(&common_frequencies(&s[..2], 1, true).unwrap());
    check(got == [EXPECTED], || format!("pipeline top-1 {got:?}"))?;
    Ok(format!(
        "S1·S2 top-1 = bin {EXPECTED} ({:.4} Hz)",
        s[0].frequency(EXPECTED)
    ))
}

fn non_common_reproduction() -> Outcome {
    let (m1, m2) = (paper_magnitudes(1), paper_magnitudes(2));
    let s = paper_spectra();
    let cases = [
        (&m1, &m2, &s[0], &s[1], vec![28, 44], "S1/S2"),
        (&m2, &m1, &s[1], &s[0], vec![18, 59], "S2/S1"),
    ];
    let mut notes = Vec::new();
    for (num, den, sn, sd, expected, label) in cases {
        let oracle = sorted(top_k(&divide_conditioned(num, den, EPSILON), 2, true));
        check(oracle == expected, || format!("{label} oracle top-2 {oracle:?}"))?;
        let got = sorted(bins(
            &non_common_frequencies(
                std::slice::from_ref(sn),
                std::slice::from_ref(sd),
                &conditioned(),
                2,
                true,
            )
            .unwrap(),
        ));
        check(got == expected, || {
            format!("{label} top-2 {got:?}, expected {expected:?}")
        })?;
        notes.push(format!("{label} → {got:?}"));
    }
    Ok(notes.join(", "))
}

fn group_reproduction() -> Outcome {
    let m: Vec<Vec<f64>> = (1..=5).map(paper_magnitudes).collect();
    let s = paper_spectra();

    let expected_contrast = vec![28, 33];
    let oracle = sorted(top_k(
        &divide_conditioned(&multiply(&m[..3]), &multiply(&m[3..]), EPSILON),
        2,
        true,
    ));
    check(oracle == expected_contrast, || {
        format!("contrast oracle {oracle:?}")
    })?;
    let got = sorted(bins(&emphasized(
        &group_contrast(&s[..3], &s[3..], &conditioned()).unwrap(),
        2,
        true,
    )));
    check(got == expected_contrast, || format!("S123/S45 top-2 {got:?}"))?;

    let expected_common = vec![44, 59];
    let oracle = sorted(top_k(&multiply(&m[3..]), 2, true));
    check(oracle == expected_common, || format!("S45 oracle {oracle:?}"))?;
    let got45 = sorted(bins(&common_frequencies(&s[3..], 2, true).unwrap()));
    check(got45 == expected_common, || format!("S45 top-2 {got45:?}"))?;
    Ok(format!("S123/S45 → {got:?}, S45 → {got45:?}"))
}

fn conditioned_division_effect() -> Outcome {
    let m: Vec<Vec<f64>> = (1..=5).map(paper_magnitudes).collect();
    let s = paper_spectra();
    let dv = s[0].resolution();
    let above = |b: &usize| *b as f64 * dv > HILL_CUTOFF_HZ;

    let oracle_plain = top_k(&divide_plain(&multiply(&m[3..]), &multiply(&m[..3])), 5, true);
    let oracle_cond = top_k(
        &divide_conditioned(&multiply(&m[3..]), &multiply(&m[..3]), EPSILON),
        5,
        true,
    );
    check(oracle_plain.iter().any(above), || {
        format!("oracle plain top-5 {oracle_plain:?} has no hill")
    })?;
    check(!oracle_cond.iter().any(above), || {
        format!("oracle conditioned top-5 {oracle_cond:?}")
    })?;

    let plain = bins(&non_common_frequencies(&s[3..], &s[..3], &DivisionPolicy::plain(), 5, true).unwrap());
    let cond = bins(&non_common_frequencies(&s[3..], &s[..3], &conditioned(), 5, true).unwrap());
    check(plain == oracle_plain, || {
        format!("plain top-5 {plain:?} vs oracle {oracle_plain:?}")
    })?;
    check(cond == oracle_cond, || {
        format!("conditioned top-5 {cond:?} vs oracle {oracle_cond:?}")
    })?;
    check(plain.iter().any(above), || {
        format!("plain top-5 {plain:?} has no line above {HILL_CUTOFF_HZ} Hz")
    })?;
    check(!cond.iter().any(above), || {
        format!("conditioned top-5 {cond:?} has a line above {HILL_CUTOFF_HZ} Hz")
    })?;
    Ok(format!("plain top-5 {plain:?}, conditioned top-5 {cond:?}"))
}

fn max_relative_difference(a: &Spectrum<f64>, b: &Spectrum<f64>) -> f64 {
    a.magnitudes()
        .iter()
        .zip(b.magnitudes())
        .map(|(x, y)| {
            let scale = x.abs().max(y.abs());
            if scale == 0.0 {
                0.0
            } else {
                (x - y).abs() / scale
            }
        })
        .fold(0.0, f64::max)
}

fn oracle_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    let cfg = SamplingConfig::paper();
    for n in 1..=5 {
        let series = synthesize(&paper_signal(n).unwrap(), &cfg);
        let fast = magnitude_spectrum(&series).unwrap();
        let slow = dft_oracle(&series).unwrap();
        let d = max_relative_difference(&fast, &slow);
        check(d <= ORACLE_REL_TOL, || format!("s{n}: relative difference {d:e}"))?;
        // The library oracle must itself agree with the test-only transform.
        let literal = Spectrum::new(paper_magnitudes(n), slow.resolution()).unwrap();
        let d2 = max_relative_difference(&slow, &literal);
        check(d2 <= ORACLE_REL_TOL, || format!("s{n}: oracle vs literal {d2:e}"))?;
        worst = worst.max(d).max(d2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..50 {
        let len = 1usize << rng.gen_range(2..=8);
        let values: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let cfg = SamplingConfig::new(100.0, len, len / 2 + 1, AxisConvention::Paper).unwrap();
        let series = SampleSeries::new(values, cfg).unwrap();
        let d = max_relative_difference(
            &magnitude_spectrum(&series).unwrap(),
            &dft_oracle(&series).unwrap(),
        );
        check(d <= ORACLE_REL_TOL, || {
            format!("random case {case} (N = {len}): {d:e}")
        })?;
        worst = worst.max(d);
    }
    Ok(format!("max relative difference {worst:.2e}"))
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

fn random_spectrum(rng: &mut ChaCha8Rng, len: usize, dv: f64, lo: f64, hi: f64) -> Spectrum<f64> {
    Spectrum::new((0..len).map(|_| log_uniform(rng, lo, hi)).collect(), dv).unwrap()
}

fn algebra_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let floor = congruent_spectra::algebra::DEFAULT_INVERSION_FLOOR;

    for case in 0..PROPERTY_CASES {
        let len = rng.gen_range(1..=64);
        let s = random_spectrum(&mut rng, len, 0.392157, 1e-6, 1e6);
        let back = invert(&invert(&s, floor).unwrap(), floor).unwrap();
        for (a, b) in s.magnitudes().iter().zip(back.magnitudes()) {
            check(((a - b) / a).abs() <= ALGEBRA_REL_TOL, || {
                format!("involution case {case}")
            })?;
        }
    }

    for case in 0..PROPERTY_CASES {
        let len = rng.gen_range(1..=32);
        let count = rng.gen_range(2..=5);
        let list: Vec<_> = (0..count)
            .map(|_| random_spectrum(&mut rng, len, 0.5, 1e-3, 1e3))
            .collect();
        let reference = product(&list).unwrap();
        let mut shuffled = list.clone();
        shuffled.shuffle(&mut rng);
        let permuted = product(&shuffled).unwrap();
        check(reference.argmax() == permuted.argmax(), || {
            format!("permutation argmax case {case}")
        })?;
        for (a, b) in reference.magnitudes().iter().zip(permuted.magnitudes()) {
            check(((a - b) / a).abs() <= ALGEBRA_REL_TOL, || {
                format!("permutation magnitude case {case}")
            })?;
        }
    }

    for case in 0..PROPERTY_CASES {
        let len = rng.gen_range(1..=48);
        let dv = rng.gen_range(0.01..5.0);
        let a = random_spectrum(&mut rng, len, dv, 1e-9, 1e3);
        let b = random_spectrum(&mut rng, len, dv, 1e-9, 1e3);
        let outputs = [
            product(&[a.clone(), b.clone()]).unwrap(),
            ratio(&a, &b, &conditioned()).unwrap(),
            ratio(&a, &b, &DivisionPolicy::plain()).unwrap(),
            group_contrast(std::slice::from_ref(&a), std::slice::from_ref(&b), &conditioned()).unwrap(),
        ];
        for out in &outputs {
            check(is_congruent(out, &a) && is_congruent(out, &b), || {
                format!("closure congruence case {case}")
            })?;
            check(
                Spectrum::new(out.magnitudes().to_vec(), out.resolution()).is_ok(),
                || format!("closure invariants case {case}"),
            )?;
            for (i, line) in out.lines().enumerate() {
                let expected = i as f64 * dv;
                check(
                    (line.frequency - expected).abs() <= 1e-9 * expected.max(dv),
                    || format!("closure frequency case {case}"),
                )?;
            }
        }
    }

    for case in 0..PROPERTY_CASES {
        let len = rng.gen_range(1..=64);
        let s = random_spectrum(&mut rng, len, 1.0, 1e-12, 1e12);
        let r = ratio(&s, &s, &DivisionPolicy::plain()).unwrap();
        check(
            r.magnitudes().iter().all(|&m| (m - 1.0).abs() <= ALGEBRA_REL_TOL),
            || format!("self-ratio case {case}"),
        )?;
    }

    for case in 0..PROPERTY_CASES {
        let len = rng.gen_range(1..=64);
        // Straddle ε so every branch of the rule is exercised.
        let a = random_spectrum(&mut rng, len, 1.0, 1e-12, 1.0);
        let b = random_spectrum(&mut rng, len, 1.0, 1e-12, 1.0);
        let cond = ratio(&a, &b, &conditioned()).unwrap();
        let plain = ratio(&a, &b, &DivisionPolicy::plain()).unwrap();
        for i in 0..len {
            let (n, d) = (a.magnitudes()[i], b.magnitudes()[i]);
            if n < EPSILON && d < EPSILON {
                check(cond.magnitudes()[i] == 0.0, || {
                    format!("exact-zero case {case} index {i}")
                })?;
            }
            if n >= EPSILON && d >= EPSILON {
                check(cond.magnitudes()[i] == plain.magnitudes()[i], || {
                    format!("plain/conditioned agreement case {case} index {i}")
                })?;
            }
        }
    }
    Ok(format!("5 properties × {PROPERTY_CASES} cases"))
}

fn shared_component_analog() -> Outcome {
    let cfg = SamplingConfig::new(100.0, 256, 128, AxisConvention::Standard).unwrap();
    let bin_width = cfg.sample_rate() / cfg.sample_count() as f64;
    let channel = |distinct: f64, rng: &mut ChaCha8Rng| {
        let clean = synthesize(
            &SignalSpec::new(vec![Term::sin(SHARED_HZ), Term::sin(distinct)]).unwrap(),
            &cfg,
        );
        let noisy = clean
            .values()
            .iter()
            .map(|v| v + rng.gen_range(-0.05..=0.05))
            .collect();
        magnitude_spectrum(&SampleSeries::new(noisy, cfg).unwrap()).unwrap()
    };
    let mut worst: f64 = 0.0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = channel(7.3, &mut rng);
        let b = channel(21.9, &mut rng);
        let top = common_frequencies(&[a, b], 1, true).unwrap()[0];
        let bin_distance = (top.bin_index as f64 - SHARED_HZ / bin_width).abs();
        let rel = (top.frequency - SHARED_HZ).abs() / SHARED_HZ;
        check(bin_distance <= 1.0, || {
            format!(
                "seed {seed}: bin {} is {bin_distance:.2} bins away",
                top.bin_index
            )
        })?;
        check(rel < MAX_RELATIVE_FREQUENCY_ERROR, || {
            format!("seed {seed}: {:.4} Hz, relative error {rel:.4}", top.frequency)
        })?;
        worst = worst.max(rel);
    }
    Ok(format!(
        "100/100 seeds, worst relative error {:.3}%",
        worst * 100.0
    ))
}

fn run_synth(scenario: &str, out: &Path) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(["synth", "--scenario", scenario, "--out"])
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    check(status.status.code() == Some(0), || {
        format!(
            "{scenario} exited with {:?}: {}",
            status.status.code(),
            String::from_utf8_lossy(&status.stderr)
        )
    })
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn cli_end_to_end() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut count = 0;
    for scenario in ["figures_1_to_4", "figures_8_to_10"] {
        let first = tmp.path().join(format!("{scenario}_a"));
        let second = tmp.path().join(format!("{scenario}_b"));
        run_synth(scenario, &first)?;
        run_synth(scenario, &second)?;
        let (a, b) = (read_dir_sorted(&first), read_dir_sorted(&second));
        check(!a.is_empty(), || format!("{scenario} wrote no files"))?;
        check(a == b, || format!("{scenario} outputs differ between runs"))?;
        count += a.len();
    }
    Ok(format!("{count} files byte-identical across runs"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "1 resolution reproduction",
            Duration::from_secs(1),
            resolution_reproduction,
        ),
        (
            "2 common-frequency reproduction",
            Duration::from_secs(1),
            common_frequency_reproduction,
        ),
        (
            "3 non-common reproduction",
            Duration::from_secs(1),
            non_common_reproduction,
        ),
        ("4 group reproduction", Duration::from_secs(2), group_reproduction),
        (
            "5 conditioned-division effect",
            Duration::from_secs(2),
            conditioned_division_effect,
        ),
        ("6 oracle equivalence", Duration::from_secs(5), oracle_equivalence),
        (
            "7 algebra property suite",
            Duration::from_secs(10),
            algebra_properties,
        ),
        (
            "8 shared-component analog",
            Duration::from_secs(10),
            shared_component_analog,
        ),
        ("9 CLI end-to-end", Duration::from_secs(60), cli_end_to_end),
    ];
    let mut failures = 0;
    for (name, budget, criterion) in criteria {
        let start = Instant::now();
        let outcome = criterion();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({elapsed:.2?})"),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {name}: {reason} ({elapsed:.2?})");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
