use num_complex::Complex;

use crate::dsp::config::SampleSeries;
use crate::error::DspError;
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;

/// In-place iterative radix-2 decimation-in-time FFT.
///
/// `buf.len()` must be a power of two.
pub fn fft_in_place<T: Scalar>(buf: &mut [Complex<T>]) {
    let n = buf.len();
    assert!(n.is_power_of_two(), "radix-2 FFT needs a power-of-two length");
    if n < 2 {
        return;
    }

    let shift = usize::BITS - n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> shift;
        if i < j {
            buf.swap(i, j);
        }
    }

    // Twiddles from direct cos/sin; a running product drifts at large n.
    let step = -T::TAU() / T::from_index(n);
    let twiddles: Vec<Complex<T>> = (0..n / 2)
        .map(|k| Complex::from_polar(T::one(), step * T::from_index(k)))
        .collect();

    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for chunk in buf.chunks_exact_mut(len) {
            let (even, odd) = chunk.split_at_mut(half);
            for (k, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
                let t = twiddles[k * stride] * *o;
                *o = *e - t;
                *e = *e + t;
            }
        }
        len <<= 1;
    }
}

/// One-sided magnitude of DFT output, scaled so an on-bin unit sinusoid reads 1.
fn one_sided<T: Scalar>(bins: impl Iterator<Item = Complex<T>>, n: usize) -> Vec<T> {
    let n = T::from_index(n);
    let two = T::lit(2.0);
    bins.enumerate()
        .map(|(k, z)| {
            let scale = if k == 0 { T::one() } else { two };
            z.norm() * scale / n
        })
        .collect()
}

fn direct_bins<T: Scalar>(values: &[T], lines: usize) -> Vec<Complex<T>> {
    let n = values.len();
    let step = T::TAU() / T::from_index(n);
    (0..lines)
        .map(|k| {
            values
                .iter()
                .enumerate()
                .fold(Complex::new(T::zero(), T::zero()), |acc, (i, &x)| {
                    // Reduce k·i modulo n so the angle stays in [0, 2π).
                    let angle = step * T::from_index(k * i % n);
                    acc + Complex::new(x * angle.cos(), -x * angle.sin())
                })
        })
        .collect()
}

fn finish<T: Scalar>(samples: &SampleSeries<T>, magnitudes: Vec<T>) -> Result<Spectrum<T>, DspError> {
    Ok(Spectrum::new(magnitudes, samples.config().resolution())?)
}

/// One-sided magnitude spectrum of `samples`.
///
/// Keeps the first `drawn_lines` bins, scaled by `1/N_s` at DC and `2/N_s`
/// elsewhere. Power-of-two lengths go through [`fft_in_place`]; other lengths
/// use the direct transform.
pub fn magnitude_spectrum<T: Scalar>(samples: &SampleSeries<T>) -> Result<Spectrum<T>, DspError> {
    let values = samples.values();
    let n = values.len();
    if n < 2 {
        return Err(DspError::TooFewSamples(n));
    }
    let lines = samples.config().drawn_lines();
    let magnitudes = if n.is_power_of_two() {
        let mut buf: Vec<Complex<T>> = values.iter().map(|&x| Complex::new(x, T::zero())).collect();
        fft_in_place(&mut buf);
        one_sided(buf.into_iter().take(lines), n)
    } else {
        one_sided(direct_bins(values, lines).into_iter(), n)
    };
    finish(samples, magnitudes)
}

/// Same contract as [`magnitude_spectrum`], computed by literal O(N²)
/// summation of the transform definition for every length.
pub fn dft_oracle<T: Scalar>(samples: &SampleSeries<T>) -> Result<Spectrum<T>, DspError> {
    let n = samples.values().len();
    if n < 2 {
        return Err(DspError::TooFewSamples(n));
    }
    let bins = direct_bins(samples.values(), samples.config().drawn_lines());
    finish(samples, one_sided(bins.into_iter(), n))
}
