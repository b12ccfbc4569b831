//! Discrete Fourier machinery: the classical complex DFT, the right-sided
//! quaternion Fourier transform (QFT) with an arbitrary unit pure axis, the
//! discrete sign / one-sided multipliers, and circular convolution.
//!
//! Conventions, fixed throughout the crate:
//! - forward transforms are un-normalized, inverse transforms carry `1/N`;
//! - the transform exponential sits on the *right* of the signal samples
//!   (`Z[k] = sum_n s[n] exp(-mu 2 pi k n / N)`), which matters for
//!   quaternion-valued signals because multiplication does not commute;
//! - bin `k` represents normalized frequency `k/N` for `k < N/2` and
//!   `(k - N)/N` otherwise.
//!
//! The QFT fast path splits a quaternion signal into two complex channels in
//! the `(1, mu)`-plane and runs two complex DFTs; tests check it against a
//! direct O(N^2) quaternion summation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::quat::{Quaternion, QuaternionBasis, UnitPureQuaternion};

/// Errors from signal construction and signal-level operations.
#[derive(Debug, Clone, PartialEq)]
pub enum SignalError {
    /// Signals must hold at least two samples.
    TooShort { len: usize },
    /// A sample was NaN or infinite.
    NonFinite { index: usize },
    /// The sample period must be finite and positive.
    BadSamplePeriod { period: f64 },
    /// Two signals that must have equal lengths did not.
    LengthMismatch { left: usize, right: usize },
    /// The transform axis must be orthogonal to the embedding axis.
    AxisNotOrthogonal { dot: f64 },
}

impl fmt::Display for SignalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignalError::TooShort { len } => {
                write!(f, "signal too short: {len} samples (minimum 2)")
            }
            SignalError::NonFinite { index } => {
                write!(f, "non-finite sample at index {index}")
            }
            SignalError::BadSamplePeriod { period } => {
                write!(f, "sample period must be finite and positive, got {period}")
            }
            SignalError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            SignalError::AxisNotOrthogonal { dot } => {
                write!(f, "transform axis not orthogonal to embedding axis (S(xi*mu) = {dot})")
            }
        }
    }
}

impl core::error::Error for SignalError {}

/// A uniformly sampled finite complex signal, at least two samples long, all
/// values finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
    sample_period: f64,
}

impl ComplexSignal {
    /// Unit sample period.
    pub fn new(samples: Vec<Complex64>) -> Result<Self, SignalError> {
        Self::with_period(samples, 1.0)
    }

    pub fn with_period(samples: Vec<Complex64>, sample_period: f64) -> Result<Self, SignalError> {
        if samples.len() < 2 {
            return Err(SignalError::TooShort { len: samples.len() });
        }
        for (index, s) in samples.iter().enumerate() {
            if !s.re.is_finite() || !s.im.is_finite() {
                return Err(SignalError::NonFinite { index });
            }
        }
        if !sample_period.is_finite() || sample_period <= 0.0 {
            return Err(SignalError::BadSamplePeriod { period: sample_period });
        }
        Ok(Self { samples, sample_period })
    }

    pub fn from_real(samples: &[f64]) -> Result<Self, SignalError> {
        Self::new(samples.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    #[inline]
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    #[inline]
    pub fn sample_period(&self) -> f64 {
        self.sample_period
    }

    pub fn real(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.re).collect()
    }

    pub fn imag(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.im).collect()
    }

    /// Energy `sum |z[n]|^2` (no sample-period weighting).
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s.norm_sqr()).sum()
    }

    pub(crate) fn from_raw(samples: Vec<Complex64>, sample_period: f64) -> Self {
        Self { samples, sample_period }
    }
}

/// A uniformly sampled finite quaternion signal.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionSignal {
    samples: Vec<Quaternion>,
    sample_period: f64,
}

impl QuaternionSignal {
    pub fn new(samples: Vec<Quaternion>) -> Result<Self, SignalError> {
        Self::with_period(samples, 1.0)
    }

    pub fn with_period(samples: Vec<Quaternion>, sample_period: f64) -> Result<Self, SignalError> {
        if samples.len() < 2 {
            return Err(SignalError::TooShort { len: samples.len() });
        }
        for (index, s) in samples.iter().enumerate() {
            if !s.is_finite() {
                return Err(SignalError::NonFinite { index });
            }
        }
        if !sample_period.is_finite() || sample_period <= 0.0 {
            return Err(SignalError::BadSamplePeriod { period: sample_period });
        }
        Ok(Self { samples, sample_period })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    #[inline]
    pub fn samples(&self) -> &[Quaternion] {
        &self.samples
    }

    #[inline]
    pub fn sample_period(&self) -> f64 {
        self.sample_period
    }

    /// Energy `sum |q[n]|^2`.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s.norm_sqr()).sum()
    }

    pub(crate) fn from_raw(samples: Vec<Quaternion>, sample_period: f64) -> Self {
        Self { samples, sample_period }
    }
}

/// A quaternion Fourier spectrum: one quaternion bin per input sample, tagged
/// with the transform axis. Bin `k` is normalized frequency `k/N` for
/// `k < N/2` and `(k - N)/N` above.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionSpectrum {
    bins: Vec<Quaternion>,
    axis: UnitPureQuaternion,
    sample_period: f64,
}

impl QuaternionSpectrum {
    pub fn from_bins(
        bins: Vec<Quaternion>,
        axis: UnitPureQuaternion,
        sample_period: f64,
    ) -> Result<Self, SignalError> {
        if bins.len() < 2 {
            return Err(SignalError::TooShort { len: bins.len() });
        }
        Ok(Self { bins, axis, sample_period })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bins.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    #[inline]
    pub fn bins(&self) -> &[Quaternion] {
        &self.bins
    }

    #[inline]
    pub fn axis(&self) -> UnitPureQuaternion {
        self.axis
    }

    #[inline]
    pub fn sample_period(&self) -> f64 {
        self.sample_period
    }

    /// Map a bin and apply an arbitrary per-bin transform, keeping axis and
    /// period.
    pub fn map_bins<F: FnMut(usize, Quaternion) -> Quaternion>(&self, mut f: F) -> Self {
        Self {
            bins: self.bins.iter().enumerate().map(|(k, &q)| f(k, q)).collect(),
            axis: self.axis,
            sample_period: self.sample_period,
        }
    }
}

/// The discrete signum multiplier: `s[0] = 0`, `s[k] = +1` for `1 <= k < N/2`,
/// `s[N/2] = 0` for even `N`, `s[k] = -1` for `k > N/2`.
///
/// With this convention `1 + s[k]` is the one-sided (Marple) multiplier
/// `{1, 2, ..., 2, 1, 0, ..., 0}`, so the analytic and hyperanalytic
/// constructions stay mutually consistent.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSign {
    values: Vec<i8>,
}

impl DiscreteSign {
    pub fn new(n: usize) -> Self {
        let values = (0..n)
            .map(|k| {
                if k == 0 || 2 * k == n {
                    0
                } else if 2 * k < n {
                    1
                } else {
                    -1
                }
            })
            .collect();
        Self { values }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, k: usize) -> i8 {
        self.values[k]
    }

    /// `s[k]` as a float.
    #[inline]
    pub fn signum(&self, k: usize) -> f64 {
        f64::from(self.values[k])
    }

    /// The one-sided multiplier `1 + s[k]`.
    #[inline]
    pub fn marple(&self, k: usize) -> f64 {
        1.0 + f64::from(self.values[k])
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }
}

/// Transform direction for [`dft`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Complex DFT. Forward: `X[k] = sum_n x[n] exp(-i 2 pi k n / N)`; inverse
/// carries `1/N`. Any length `N >= 2` is supported, including non-powers of
/// two.
pub fn dft(x: &ComplexSignal, direction: Direction) -> ComplexSignal {
    let out = match direction {
        Direction::Forward => fft_forward(x.samples()),
        Direction::Inverse => fft_inverse(x.samples()),
    };
    ComplexSignal::from_raw(out, x.sample_period())
}

pub(crate) fn fft_forward(x: &[Complex64]) -> Vec<Complex64> {
    fft_rec(x, -1.0)
}

pub(crate) fn fft_inverse(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len() as f64;
    let mut out = fft_rec(x, 1.0);
    for v in &mut out {
        *v /= n;
    }
    out
}

fn unit_phasor(sign: f64, t: usize, n: usize) -> Complex64 {
    let ang = sign * core::f64::consts::TAU * (t as f64) / (n as f64);
    Complex64::new(libm::cos(ang), libm::sin(ang))
}

fn smallest_prime_factor(n: usize) -> usize {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return f;
        }
        f += 2;
    }
    n
}

fn dft_direct(x: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (t, &v) in x.iter().enumerate() {
                acc += v * unit_phasor(sign, (k * t) % n, n);
            }
            acc
        })
        .collect()
}

/// Recursive mixed-radix Cooley-Tukey; prime lengths fall back to the direct
/// sum. The angle argument is reduced mod N before the trig call.
fn fft_rec(x: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = x.len();
    if n == 1 {
        return x.to_vec();
    }
    let p = smallest_prime_factor(n);
    if p == n {
        return dft_direct(x, sign);
    }
    let m = n / p;
    let subs: Vec<Vec<Complex64>> = (0..p)
        .map(|r| {
            let chan: Vec<Complex64> = (0..m).map(|t| x[t * p + r]).collect();
            fft_rec(&chan, sign)
        })
        .collect();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (k, out_k) in out.iter_mut().enumerate() {
        let base = k % m;
        let mut acc = Complex64::new(0.0, 0.0);
        for (r, sub) in subs.iter().enumerate() {
            acc += sub[base] * unit_phasor(sign, (k * r) % n, n);
        }
        *out_k = acc;
    }
    out
}

/// Embed a complex signal as a quaternion signal `z_r + xi * z_i` along the
/// given embedding axis.
pub fn embed_complex(z: &ComplexSignal, xi: UnitPureQuaternion) -> QuaternionSignal {
    let axis = xi.as_quaternion();
    let samples = z
        .samples()
        .iter()
        .map(|s| Quaternion::scalar(s.re) + axis.scale(s.im))
        .collect();
    QuaternionSignal::from_raw(samples, z.sample_period())
}

/// A deterministic unit pure axis orthogonal to `mu`, used to complete `mu`
/// to a basis for the QFT channel split.
pub fn orthogonal_completion(mu: UnitPureQuaternion) -> UnitPureQuaternion {
    let m = mu.as_quaternion();
    let candidates = [Quaternion::I, Quaternion::J, Quaternion::K];
    let mut best = candidates[0];
    let mut best_align = f64::INFINITY;
    for e in candidates {
        let align = libm::fabs(e.dot(m));
        if align < best_align {
            best_align = align;
            best = e;
        }
    }
    let v = best - m.scale(best.dot(m));
    let inv = 1.0 / v.abs();
    UnitPureQuaternion::new(v.b * inv, v.c * inv, v.d * inv)
        .expect("Gram-Schmidt step yields a unit pure axis")
}

/// Split quaternion samples into the two `(1, mu)`-plane channels
/// `q = p + xi' * r`; returns the channels and the completion axis `xi'`.
fn mu_channels(
    samples: &[Quaternion],
    mu: UnitPureQuaternion,
) -> (Vec<Complex64>, Vec<Complex64>, UnitPureQuaternion) {
    let xi = orthogonal_completion(mu);
    let mq = mu.as_quaternion();
    let xq = xi.as_quaternion();
    let ximu = xq * mq;
    let mut p = Vec::with_capacity(samples.len());
    let mut r = Vec::with_capacity(samples.len());
    for q in samples {
        p.push(Complex64::new(q.scalar_part(), q.dot(mq)));
        r.push(Complex64::new(q.dot(xq), q.dot(ximu)));
    }
    (p, r, xi)
}

fn from_mu_channels(
    p: &[Complex64],
    r: &[Complex64],
    mu: UnitPureQuaternion,
    xi: UnitPureQuaternion,
) -> Vec<Quaternion> {
    let mq = mu.as_quaternion();
    let xq = xi.as_quaternion();
    let ximu = xq * mq;
    p.iter()
        .zip(r.iter())
        .map(|(pc, rc)| {
            Quaternion::scalar(pc.re) + mq.scale(pc.im) + xq.scale(rc.re) + ximu.scale(rc.im)
        })
        .collect()
}

/// Forward QFT with axis `mu`: `Z[k] = sum_n s[n] exp(-mu 2 pi k n / N)`,
/// exponential on the right.
pub fn qft(s: &QuaternionSignal, mu: UnitPureQuaternion) -> QuaternionSpectrum {
    let (p, r, xi) = mu_channels(s.samples(), mu);
    let hat_p = fft_forward(&p);
    let hat_r = fft_forward(&r);
    QuaternionSpectrum {
        bins: from_mu_channels(&hat_p, &hat_r, mu, xi),
        axis: mu,
        sample_period: s.sample_period(),
    }
}

/// Inverse QFT: `s[n] = (1/N) sum_k Z[k] exp(+mu 2 pi k n / N)`.
pub fn qft_inverse(spectrum: &QuaternionSpectrum) -> QuaternionSignal {
    let (p, r, xi) = mu_channels(spectrum.bins(), spectrum.axis());
    let inv_p = fft_inverse(&p);
    let inv_r = fft_inverse(&r);
    QuaternionSignal::from_raw(
        from_mu_channels(&inv_p, &inv_r, spectrum.axis(), xi),
        spectrum.sample_period(),
    )
}

/// The four component sequences of the QFT of a complex signal (embedded with
/// `xi = i`), resolved on the basis `(1, xi, mu, xi*mu)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    /// Coefficients on `1`: carries the even part of `z_r`.
    pub scalar: Vec<f64>,
    /// Coefficients on `xi`: carries the even part of `z_i`.
    pub xi: Vec<f64>,
    /// Coefficients on `mu`: carries the odd part of `z_r`.
    pub mu: Vec<f64>,
    /// Coefficients on `xi*mu`: carries the odd part of `z_i`.
    pub ximu: Vec<f64>,
}

/// Resolve the QFT of `z` (embedded with `xi = i`) on `(1, i, mu, i*mu)`.
///
/// Errors if `mu` is not orthogonal to the embedding axis `i`.
pub fn qft_symmetry_report(
    z: &ComplexSignal,
    mu: UnitPureQuaternion,
) -> Result<SymmetryReport, SignalError> {
    let xi = UnitPureQuaternion::I;
    let basis = QuaternionBasis::new(xi, mu).map_err(|_| SignalError::AxisNotOrthogonal {
        dot: (xi.as_quaternion() * mu.as_quaternion()).scalar_part(),
    })?;
    let spectrum = qft(&embed_complex(z, xi), mu);
    let n = spectrum.len();
    let mut report = SymmetryReport {
        scalar: Vec::with_capacity(n),
        xi: Vec::with_capacity(n),
        mu: Vec::with_capacity(n),
        ximu: Vec::with_capacity(n),
    };
    for &bin in spectrum.bins() {
        let [w0, wxi, wmu, wximu] = basis.resolve(bin);
        report.scalar.push(w0);
        report.xi.push(wxi);
        report.mu.push(wmu);
        report.ximu.push(wximu);
    }
    Ok(report)
}

/// Circular convolution of a complex signal with a real kernel of the same
/// length: `(g*f)[n] = sum_m g[m] f[(n-m) mod N]`.
pub fn circular_convolve(g: &ComplexSignal, f: &[f64]) -> Result<ComplexSignal, SignalError> {
    let n = g.len();
    if f.len() != n {
        return Err(SignalError::LengthMismatch { left: n, right: f.len() });
    }
    let gs = g.samples();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (nn, out_n) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, &gm) in gs.iter().enumerate() {
            acc += gm * f[(nn + n - m) % n];
        }
        *out_n = acc;
    }
    Ok(ComplexSignal::from_raw(out, g.sample_period()))
}
