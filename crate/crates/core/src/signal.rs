//! Discrete-time signal primitives: FIR vectors, convolution, convolution
//! matrices, DFTs, band-pass filtering and the differentiable norm
//! surrogates used by the objective terms.

use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Result, SfrError};

/// A finite impulse response: real samples at a fixed sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct Fir {
    pub samples: Vec<f64>,
    pub sample_rate: f64,
}

impl Fir {
    pub fn new(samples: Vec<f64>, sample_rate: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(SfrError::InvalidInput("Fir must hold at least one sample".into()));
        }
        if !samples.iter().all(|s| s.is_finite()) {
            return Err(SfrError::InvalidInput("Fir samples must be finite".into()));
        }
        if !(sample_rate > 0.0) {
            return Err(SfrError::InvalidInput("sample rate must be positive".into()));
        }
        Ok(Self { samples, sample_rate })
    }

    /// Unit impulse at sample index `at`, total length `len`.
    pub fn delta(at: usize, len: usize, sample_rate: f64) -> Self {
        let mut samples = vec![0.0; len.max(at + 1)];
        samples[at] = 1.0;
        Self { samples, sample_rate }
    }

    pub fn zeros(len: usize, sample_rate: f64) -> Self {
        Self { samples: vec![0.0; len], sample_rate }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s * s).sum()
    }
}

/// Complex spectrum over uniformly spaced frequency bins.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub bins: Vec<Complex64>,
    /// Frequency spacing between adjacent bins in Hz.
    pub bin_hz: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn magnitude(&self) -> Vec<f64> {
        self.bins.iter().map(|b| b.norm()).collect()
    }
}

/// Dense Toeplitz convolution matrix: `entry(i, j) = source[i - j]`.
///
/// Multiplying by a filter of length `cols` performs linear convolution with
/// the source sequence; kept dense for small instances and as the oracle for
/// the FFT-backed operator used in the solvers.
#[derive(Debug, Clone)]
pub struct ConvolutionMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl ConvolutionMatrix {
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    /// `y = C x` with `x.len() == cols`.
    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(SfrError::DimensionMismatch(format!(
                "matvec: expected {} coefficients, got {}",
                self.cols,
                x.len()
            )));
        }
        let mut y = vec![0.0; self.rows];
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        Ok(y)
    }

    /// `x = C^T y` with `y.len() == rows`.
    pub fn matvec_transpose(&self, y: &[f64]) -> Result<Vec<f64>> {
        if y.len() != self.rows {
            return Err(SfrError::DimensionMismatch(format!(
                "matvec_transpose: expected {} entries, got {}",
                self.rows,
                y.len()
            )));
        }
        let mut x = vec![0.0; self.cols];
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (xj, a) in x.iter_mut().zip(row) {
                *xj += a * y[i];
            }
        }
        Ok(x)
    }
}

/// Build the convolution matrix of `c` so that `C h == convolve(c, h)` for
/// any `h` of length `filter_len`.
pub fn build_conv_matrix(c: &Fir, filter_len: usize) -> Result<ConvolutionMatrix> {
    if filter_len == 0 {
        return Err(SfrError::InvalidInput("filter_len must be at least 1".into()));
    }
    let rows = c.len() + filter_len - 1;
    let cols = filter_len;
    let mut data = vec![0.0; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            if i >= j && i - j < c.len() {
                data[i * cols + j] = c.samples[i - j];
            }
        }
    }
    Ok(ConvolutionMatrix { rows, cols, data })
}

/// Linear convolution of two FIRs; output length `len(a) + len(b) - 1`.
pub fn convolve(a: &Fir, b: &Fir) -> Result<Fir> {
    if (a.sample_rate - b.sample_rate).abs() > 1e-9 {
        return Err(SfrError::SampleRateMismatch(a.sample_rate, b.sample_rate));
    }
    Ok(Fir {
        samples: fft_convolve(&a.samples, &b.samples),
        sample_rate: a.sample_rate,
    })
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// In-place forward FFT, unnormalized: `X[k] = sum_n x[n] e^{-i 2 pi k n / N}`.
pub fn fft_forward(buf: &mut [Complex64]) {
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_forward(buf.len());
        fft.process(buf);
    });
}

/// In-place inverse FFT, unnormalized: `y[n] = sum_k X[k] e^{+i 2 pi k n / N}`.
pub fn fft_inverse(buf: &mut [Complex64]) {
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_inverse(buf.len());
        fft.process(buf);
    });
}

pub fn next_pow2(n: usize) -> usize {
    let mut p = 1;
    while p < n {
        p <<= 1;
    }
    p
}

/// Linear convolution of raw slices via zero-padded FFTs.
pub fn fft_convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let out_len = a.len() + b.len() - 1;
    // Direct sum is faster for very small operands.
    if a.len().min(b.len()) <= 16 {
        let mut out = vec![0.0; out_len];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
        return out;
    }
    let n = next_pow2(out_len);
    let mut fa: Vec<Complex64> = a.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    fa.resize(n, Complex64::new(0.0, 0.0));
    let mut fb: Vec<Complex64> = b.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    fb.resize(n, Complex64::new(0.0, 0.0));
    fft_forward(&mut fa);
    fft_forward(&mut fb);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    fft_inverse(&mut fa);
    let scale = 1.0 / n as f64;
    fa[..out_len].iter().map(|c| c.re * scale).collect()
}

/// Forward DFT of a real sequence over `n_bins` uniformly spaced bins.
///
/// Rejects `n_bins < len(x)`: the transform zero-pads but never truncates.
pub fn dft(x: &Fir, n_bins: usize) -> Result<Spectrum> {
    if n_bins < x.len() {
        return Err(SfrError::InvalidInput(format!(
            "dft: n_bins {} is shorter than the input ({} samples)",
            n_bins,
            x.len()
        )));
    }
    let mut buf: Vec<Complex64> = x.samples.iter().map(|&s| Complex64::new(s, 0.0)).collect();
    buf.resize(n_bins, Complex64::new(0.0, 0.0));
    fft_forward(&mut buf);
    Ok(Spectrum {
        bins: buf,
        bin_hz: x.sample_rate / n_bins as f64,
    })
}

/// Inverse DFT; returns the real part of the time sequence.
pub fn idft(spectrum: &Spectrum) -> Vec<f64> {
    let n = spectrum.len();
    let mut buf = spectrum.bins.clone();
    fft_inverse(&mut buf);
    let scale = 1.0 / n as f64;
    buf.iter().map(|c| c.re * scale).collect()
}

/// Differentiable large-p surrogate of the max norm: `(sum |v_i|^p)^(1/p)`.
///
/// Magnitudes are max-factored before exponentiation so large `p` cannot
/// overflow. Empty or all-zero input yields 0.
pub fn large_p_norm(v: &[f64], p: f64) -> f64 {
    assert!(p >= 2.0, "norm order must be at least 2");
    let m = v.iter().fold(0.0f64, |acc, &x| acc.max(x.abs()));
    if m == 0.0 {
        return 0.0;
    }
    let sum: f64 = v.iter().map(|&x| (x.abs() / m).powf(p)).sum();
    m * sum.powf(1.0 / p)
}

/// Gradient of [`large_p_norm`] with respect to `v`; zero at `v = 0`.
pub fn large_p_norm_grad(v: &[f64], p: f64) -> Vec<f64> {
    let norm = large_p_norm(v, p);
    if norm == 0.0 {
        return vec![0.0; v.len()];
    }
    v.iter()
        .map(|&x| {
            if x == 0.0 {
                0.0
            } else {
                x.signum() * (x.abs() / norm).powf(p - 1.0)
            }
        })
        .collect()
}

/// Per-bin weights in [0, 1]; zero outside `[f_lo, f_hi]` with monotone
/// raised-cosine transitions just inside the band edges.
#[derive(Debug, Clone)]
pub struct BandMask {
    pub weights: Vec<f64>,
    pub bin_hz: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl BandMask {
    /// Mask over `n_bins` bins spaced `bin_hz` apart. `transition_hz` is the
    /// width of each raised-cosine edge, clamped to fit inside the band.
    pub fn new(n_bins: usize, bin_hz: f64, f_lo: f64, f_hi: f64, transition_hz: f64) -> Result<Self> {
        if !(0.0 < f_lo && f_lo < f_hi) {
            return Err(SfrError::InvalidInput("band edges must satisfy 0 < f_lo < f_hi".into()));
        }
        let tw = transition_hz.min((f_hi - f_lo) / 4.0).max(0.0);
        let nyquist = bin_hz * n_bins as f64 / 2.0;
        let weights = (0..n_bins)
            .map(|k| {
                // Two-sided spectrum: bins above Nyquist mirror negative frequencies.
                let f_raw = k as f64 * bin_hz;
                let f = if f_raw > nyquist { n_bins as f64 * bin_hz - f_raw } else { f_raw };
                edge_weight(f, f_lo, f_hi, tw)
            })
            .collect();
        Ok(Self { weights, bin_hz, f_lo, f_hi })
    }

    /// Complementary mask (`1 - w`), selecting out-of-band bins.
    pub fn complement(&self) -> BandMask {
        BandMask {
            weights: self.weights.iter().map(|w| 1.0 - w).collect(),
            bin_hz: self.bin_hz,
            f_lo: self.f_lo,
            f_hi: self.f_hi,
        }
    }

    /// Bin indices in the flat core of the pass band (weight == 1), one-sided.
    pub fn core_bins(&self) -> Vec<usize> {
        let half = self.weights.len() / 2;
        (0..=half)
            .filter(|&k| self.weights[k] >= 1.0 - 1e-12)
            .collect()
    }
}

fn edge_weight(f: f64, f_lo: f64, f_hi: f64, tw: f64) -> f64 {
    if f < f_lo || f > f_hi {
        0.0
    } else if tw > 0.0 && f < f_lo + tw {
        0.5 - 0.5 * (PI * (f_lo + tw - f) / tw).cos()
    } else if tw > 0.0 && f > f_hi - tw {
        0.5 - 0.5 * (PI * (f - (f_hi - tw)) / tw).cos()
    } else {
        1.0
    }
}

// ---------------------------------------------------------------------------
// Zero-phase band-pass filtering
// ---------------------------------------------------------------------------

/// Zero-phase band-pass filter: a Kaiser-windowed sinc kernel applied forward
/// and backward, so peak positions are preserved and the stop-band
/// attenuation doubles (in dB) relative to the one-way design.
#[derive(Debug, Clone)]
pub struct ZeroPhaseBandpass {
    /// Symmetric combined kernel `k * reverse(k)`.
    kernel: Vec<f64>,
    /// Group delay of the combined kernel in samples.
    center: usize,
    sample_rate: f64,
}

impl ZeroPhaseBandpass {
    pub fn new(sample_rate: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(0.0 < f_lo && f_lo < f_hi && f_hi < sample_rate / 2.0) {
            return Err(SfrError::InvalidInput(format!(
                "band edges ({f_lo}, {f_hi}) invalid for fs = {sample_rate}"
            )));
        }
        // One-way design: 60 dB stop-band, transitions kept inside the band so
        // everything outside [f_lo, f_hi] sits in the stop band.
        let atten_db = 60.0;
        let tw_lo = (0.3 * f_lo).min(120.0);
        let tw_hi = (0.06 * f_hi).min((sample_rate / 2.0 - f_hi) * 0.9).max(tw_lo.min(200.0));
        let tw = tw_lo.min(tw_hi);
        let one_way = kaiser_bandpass(sample_rate, f_lo + tw_lo / 2.0, f_hi - tw_hi / 2.0, tw, atten_db);
        let kernel = fft_convolve(&one_way, &one_way); // symmetric kernel => backward pass
        let center = one_way.len() - 1;
        Ok(Self { kernel, center, sample_rate })
    }

    /// Filter `x`, returning a sequence of the same length with zero phase
    /// shift.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let full = fft_convolve(x, &self.kernel);
        full[self.center..self.center + x.len()].to_vec()
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }
}

/// Band-pass `x` to `[f_lo, f_hi]` with zero phase.
pub fn bandpass(x: &Fir, f_lo: f64, f_hi: f64) -> Result<Fir> {
    let filter = ZeroPhaseBandpass::new(x.sample_rate, f_lo, f_hi)?;
    Ok(Fir {
        samples: filter.apply(&x.samples),
        sample_rate: x.sample_rate,
    })
}

/// Kaiser-windowed sinc band-pass kernel (low-pass difference form).
fn kaiser_bandpass(fs: f64, fc_lo: f64, fc_hi: f64, transition_hz: f64, atten_db: f64) -> Vec<f64> {
    let delta_omega = 2.0 * PI * transition_hz / fs;
    let n_taps = (((atten_db - 7.95) / (2.285 * delta_omega)).ceil() as usize) | 1;
    let beta = kaiser_beta(atten_db);
    let half = (n_taps - 1) as f64 / 2.0;
    let w_lo = 2.0 * fc_lo / fs;
    let w_hi = 2.0 * fc_hi / fs;
    (0..n_taps)
        .map(|i| {
            let t = i as f64 - half;
            let ideal = w_hi * sinc(w_hi * t) - w_lo * sinc(w_lo * t);
            let win = bessel_i0(beta * (1.0 - (t / half).powi(2)).max(0.0).sqrt()) / bessel_i0(beta);
            ideal * win
        })
        .collect()
}

fn kaiser_beta(atten_db: f64) -> f64 {
    if atten_db > 50.0 {
        0.1102 * (atten_db - 8.7)
    } else if atten_db >= 21.0 {
        0.5842 * (atten_db - 21.0).powf(0.4) + 0.07886 * (atten_db - 21.0)
    } else {
        0.0
    }
}

/// Normalized sinc: `sin(pi x) / (pi x)`.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        (PI * x).sin() / (PI * x)
    }
}

fn bessel_i0(x: f64) -> f64 {
    // Power series; converges quickly for the argument range of Kaiser betas.
    let mut term = 1.0;
    let mut sum = 1.0;
    let half_x2 = (x / 2.0) * (x / 2.0);
    for k in 1..64 {
        term *= half_x2 / ((k * k) as f64);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Inject a unit impulse at fractional sample position `delay` using a
/// Hann-windowed sinc of `taps` points, scaled by `amplitude`.
pub fn add_fractional_impulse(out: &mut [f64], delay: f64, amplitude: f64, taps: usize) {
    let center = delay.round() as isize;
    let frac = delay - center as f64;
    let half = (taps / 2) as isize;
    for k in -half..=half {
        let n = center + k;
        if n < 0 || n as usize >= out.len() {
            continue;
        }
        let t = k as f64 - frac;
        let win = 0.5 + 0.5 * (PI * t / (half as f64 + 1.0)).cos();
        out[n as usize] += amplitude * sinc(t) * win;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fir(samples: &[f64]) -> Fir {
        Fir::new(samples.to_vec(), 48_000.0).unwrap()
    }

    #[test]
    fn convolve_identity() {
        let x = fir(&[0.5, -1.0, 2.0, 0.25]);
        let d = Fir::delta(0, 1, 48_000.0);
        let y = convolve(&d, &x).unwrap();
        assert_eq!(y.samples, x.samples);
    }

    #[test]
    fn convolve_hand_example() {
        let y = convolve(&fir(&[1.0, 2.0]), &fir(&[3.0, 4.0])).unwrap();
        assert_eq!(y.samples, vec![3.0, 10.0, 8.0]);
    }

    #[test]
    fn convolve_annihilator() {
        let x = fir(&[1.0, -2.0, 3.0]);
        let z = Fir::zeros(8, 48_000.0);
        let y = convolve(&z, &x).unwrap();
        assert_eq!(y.len(), 7 + x.len());
        assert!(y.samples.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn convolve_rejects_rate_mismatch() {
        let a = Fir::new(vec![1.0], 48_000.0).unwrap();
        let b = Fir::new(vec![1.0], 44_100.0).unwrap();
        assert!(matches!(convolve(&a, &b), Err(SfrError::SampleRateMismatch(_, _))));
    }

    #[test]
    fn conv_matrix_delta_is_padded_identity() {
        let c = Fir::delta(0, 1, 48_000.0);
        let m = build_conv_matrix(&c, 4).unwrap();
        assert_eq!(m.rows, 4);
        assert_eq!(m.cols, 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(i, j), if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn conv_matrix_rejects_zero_filter_len() {
        let c = fir(&[1.0, 2.0]);
        assert!(build_conv_matrix(&c, 0).is_err());
    }

    #[test]
    fn conv_matrix_row_count_at_ir_scale() {
        let c = Fir::zeros(4096, 48_000.0);
        let m = build_conv_matrix(&c, 7).unwrap();
        assert_eq!(m.rows, 4096 + 7 - 1);
    }

    #[test]
    fn dft_delta_is_flat() {
        let d = Fir::delta(0, 8, 48_000.0);
        let s = dft(&d, 8).unwrap();
        for b in &s.bins {
            assert!((b - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn dft_rejects_truncation() {
        let x = fir(&[1.0, 2.0, 3.0]);
        assert!(dft(&x, 2).is_err());
    }

    #[test]
    fn dft_sinusoid_concentrates_at_symmetric_bins() {
        let n = 64;
        let k = 5;
        let samples: Vec<f64> = (0..n)
            .map(|i| (2.0 * PI * k as f64 * i as f64 / n as f64).cos())
            .collect();
        let s = dft(&Fir::new(samples, 48_000.0).unwrap(), n).unwrap();
        let mags = s.magnitude();
        let total: f64 = mags.iter().map(|m| m * m).sum();
        let at_k = mags[k] * mags[k] + mags[n - k] * mags[n - k];
        assert!(at_k / total > 0.999);
    }

    #[test]
    fn dft_idft_round_trip() {
        let x = fir(&[0.3, -0.7, 1.5, 0.0, 2.25, -0.1]);
        let s = dft(&x, 16).unwrap();
        let back = idft(&s);
        for (a, b) in x.samples.iter().zip(&back) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn large_p_norm_one_hot() {
        let v = [0.0, 0.0, 3.0, 0.0];
        assert!((large_p_norm(&v, 7.0) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn large_p_norm_hand_value() {
        let v = [1.0, 1.0];
        assert!((large_p_norm(&v, 10.0) - 2.0f64.powf(0.1)).abs() < 1e-12);
    }

    #[test]
    fn large_p_norm_zero_and_empty() {
        assert_eq!(large_p_norm(&[0.0, 0.0], 4.0), 0.0);
        assert_eq!(large_p_norm(&[], 4.0), 0.0);
    }

    #[test]
    fn large_p_norm_grad_matches_finite_differences() {
        let v = [0.4, -1.2, 0.9, 2.0, -0.3];
        let p = 10.0;
        let g = large_p_norm_grad(&v, p);
        let eps = 1e-6;
        for i in 0..v.len() {
            let mut vp = v;
            vp[i] += eps;
            let mut vm = v;
            vm[i] -= eps;
            let fd = (large_p_norm(&vp, p) - large_p_norm(&vm, p)) / (2.0 * eps);
            assert!((fd - g[i]).abs() < 1e-6, "component {i}: fd {fd} vs {g:?}");
        }
    }

    #[test]
    fn band_mask_zero_outside_band() {
        let m = BandMask::new(256, 48_000.0 / 256.0, 1_000.0, 8_000.0, 500.0).unwrap();
        for (k, &w) in m.weights.iter().enumerate() {
            let f_raw = k as f64 * m.bin_hz;
            let f = if f_raw > 24_000.0 { 48_000.0 - f_raw } else { f_raw };
            if !(1_000.0..=8_000.0).contains(&f) {
                assert_eq!(w, 0.0, "bin {k} at {f} Hz");
            }
            assert!((0.0..=1.0).contains(&w));
        }
    }

    #[test]
    fn bandpass_preserves_in_band_tone() {
        let fs = 48_000.0;
        let n = 8192;
        let tone: Vec<f64> = (0..n).map(|i| (2.0 * PI * 1_000.0 * i as f64 / fs).sin()).collect();
        let x = Fir::new(tone, fs).unwrap();
        let y = bandpass(&x, 200.0, 12_000.0).unwrap();
        // Compare RMS over the center to avoid edge transients.
        let rms = |v: &[f64]| (v.iter().map(|s| s * s).sum::<f64>() / v.len() as f64).sqrt();
        let rin = rms(&x.samples[2048..6144]);
        let rout = rms(&y.samples[2048..6144]);
        let db = 20.0 * (rout / rin).log10();
        assert!(db.abs() < 0.5, "pass-band change {db} dB");
    }

    #[test]
    fn bandpass_attenuates_low_tone() {
        let fs = 48_000.0;
        let n = 16384;
        let tone: Vec<f64> = (0..n).map(|i| (2.0 * PI * 50.0 * i as f64 / fs).sin()).collect();
        let x = Fir::new(tone, fs).unwrap();
        let y = bandpass(&x, 200.0, 12_000.0).unwrap();
        let rms = |v: &[f64]| (v.iter().map(|s| s * s).sum::<f64>() / v.len() as f64).sqrt();
        let db = 20.0 * (rms(&y.samples[4096..12288]) / rms(&x.samples[4096..12288])).log10();
        assert!(db <= -60.0, "stop-band attenuation only {db} dB");
    }

    #[test]
    fn bandpass_rejects_bad_edges() {
        let x = fir(&[1.0; 32]);
        assert!(bandpass(&x, 0.0, 100.0).is_err());
        assert!(bandpass(&x, 300.0, 200.0).is_err());
        assert!(bandpass(&x, 200.0, 30_000.0).is_err());
    }

    #[test]
    fn fractional_impulse_peaks_at_delay() {
        let mut buf = vec![0.0; 64];
        add_fractional_impulse(&mut buf, 20.25, 1.0, 32);
        let peak = buf
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .unwrap()
            .0;
        assert_eq!(peak, 20);
    }
}
