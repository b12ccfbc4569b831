//! The orthogonal (quadrature) signal of a complex signal, by three routes,
//! and the hyperanalytic signal with its one-sided quaternion spectrum.
//!
//! The canonical orthogonal signal is `o = H(z_r) - i H(z_i)` (a pair of real
//! Hilbert transforms). The complex-Fourier route computes `conj(o)` as
//! `IDFT(-i sign(nu) Z(nu))` and conjugates before returning. The quaternion
//! route embeds `z` in the `(1, xi)`-plane, suppresses negative frequencies
//! of the axis-`mu` QFT with the one-sided multiplier `1 + sign`, and reads
//! `o` back out of the perplex part. All three agree; the discrete sign
//! multiplier annihilates DC and Nyquist content in `o` on every route.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::quat::{QuaternionBasis, UnitPureQuaternion};
use crate::spectral::{
    embed_complex, fft_forward, fft_inverse, qft, qft_inverse, ComplexSignal, DiscreteSign,
    QuaternionSignal, SignalError,
};

/// Which construction produced an orthogonal signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthogonalMethod {
    HilbertPair,
    ComplexFft,
    QftOneSided,
}

impl fmt::Display for OrthogonalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OrthogonalMethod::HilbertPair => "hilbert_pair",
            OrthogonalMethod::ComplexFft => "complex_fft",
            OrthogonalMethod::QftOneSided => "qft_one_sided",
        };
        f.write_str(name)
    }
}

/// An orthogonal signal together with the method that built it.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalResult {
    pub o: ComplexSignal,
    pub method: OrthogonalMethod,
}

/// A quaternion signal with a one-sided axis-`mu` QFT spectrum, carrying its
/// embedding/transform axes. Built by [`hyperanalytic`]; the simplex part
/// reproduces the input `z` and the perplex part carries `o`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperanalyticSignal {
    signal: QuaternionSignal,
    basis: QuaternionBasis,
}

impl HyperanalyticSignal {
    /// Wrap an existing quaternion signal with its axes. No one-sidedness
    /// check is performed here; use [`hyperanalytic`] to construct from a
    /// complex signal.
    pub fn from_parts(signal: QuaternionSignal, basis: QuaternionBasis) -> Self {
        Self { signal, basis }
    }

    #[inline]
    pub fn signal(&self) -> &QuaternionSignal {
        &self.signal
    }

    #[inline]
    pub fn basis(&self) -> &QuaternionBasis {
        &self.basis
    }

    #[inline]
    pub fn xi(&self) -> UnitPureQuaternion {
        self.basis.xi()
    }

    #[inline]
    pub fn mu(&self) -> UnitPureQuaternion {
        self.basis.mu()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.signal.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.signal.is_empty()
    }
}

/// Discrete Hilbert transform of a real signal: DFT-domain multiplication by
/// `-i sign(nu)`, inverse DFT, imaginary residue discarded. DC and Nyquist
/// components are annihilated.
pub fn hilbert_real(x: &[f64]) -> Result<Vec<f64>, SignalError> {
    if x.len() < 2 {
        return Err(SignalError::TooShort { len: x.len() });
    }
    let n = x.len();
    let sign = DiscreteSign::new(n);
    let mut bins = fft_forward(
        &x.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>(),
    );
    for (k, bin) in bins.iter_mut().enumerate() {
        *bin *= Complex64::new(0.0, -sign.signum(k));
    }
    Ok(fft_inverse(&bins).iter().map(|c| c.re).collect())
}

/// Orthogonal signal by a pair of real Hilbert transforms:
/// `o = H(z_r) - i H(z_i)`.
pub fn orthogonal_hilbert_pair(z: &ComplexSignal) -> OrthogonalResult {
    let o_r = hilbert_real(&z.real()).expect("signal length checked at construction");
    let h_i = hilbert_real(&z.imag()).expect("signal length checked at construction");
    let samples = o_r
        .iter()
        .zip(h_i.iter())
        .map(|(&re, &im)| Complex64::new(re, -im))
        .collect();
    OrthogonalResult {
        o: raw_signal(samples, z.sample_period()),
        method: OrthogonalMethod::HilbertPair,
    }
}

/// Orthogonal signal by a single complex Fourier pass: one full-signal DFT,
/// bins multiplied by `-i sign(nu)`, inverse DFT, then conjugation (the
/// Fourier pass yields `conj(o)`).
pub fn orthogonal_complex_fft(z: &ComplexSignal) -> OrthogonalResult {
    let n = z.len();
    let sign = DiscreteSign::new(n);
    let mut bins = fft_forward(z.samples());
    for (k, bin) in bins.iter_mut().enumerate() {
        *bin *= Complex64::new(0.0, -sign.signum(k));
    }
    let samples = fft_inverse(&bins).iter().map(|c| c.conj()).collect();
    OrthogonalResult {
        o: raw_signal(samples, z.sample_period()),
        method: OrthogonalMethod::ComplexFft,
    }
}

/// Orthogonal signal via the one-sided quaternion spectrum: build the
/// hyperanalytic signal and extract the perplex content.
pub fn orthogonal_qft(z: &ComplexSignal, basis: &QuaternionBasis) -> OrthogonalResult {
    let h = hyperanalytic(z, basis);
    let (_, o) = simplex_perplex(&h);
    OrthogonalResult { o, method: OrthogonalMethod::QftOneSided }
}

/// Hypercomplex Hilbert transform: inverse QFT of `-mu sign(nu) Z_mu(nu)`
/// with the stated left multiplication by `-mu`. The output lies in the
/// `(1, xi)`-plane and embeds the canonical orthogonal signal.
pub fn hyperhilbert(z: &ComplexSignal, basis: &QuaternionBasis) -> QuaternionSignal {
    let mu = basis.mu();
    let mq = mu.as_quaternion();
    let spectrum = qft(&embed_complex(z, basis.xi()), mu);
    let n = spectrum.len();
    let sign = DiscreteSign::new(n);
    let weighted = spectrum.map_bins(|k, bin| (mq * bin).scale(-sign.signum(k)));
    qft_inverse(&weighted)
}

/// The hyperanalytic signal of `z`: inverse QFT of `[1 + sign(nu)] Z_mu(nu)`.
///
/// Equivalently `h = z + mu * hyperhilbert(z)` (exact algebra, since
/// `mu * (-mu) = 1`); the negative-frequency bins of `QFT_mu(h)` vanish and
/// the simplex part of `h` reproduces `z`, DC and Nyquist included.
pub fn hyperanalytic(z: &ComplexSignal, basis: &QuaternionBasis) -> HyperanalyticSignal {
    let mu = basis.mu();
    let spectrum = qft(&embed_complex(z, basis.xi()), mu);
    let n = spectrum.len();
    let sign = DiscreteSign::new(n);
    let one_sided = spectrum.map_bins(|k, bin| bin.scale(sign.marple(k)));
    HyperanalyticSignal::from_parts(qft_inverse(&one_sided), *basis)
}

/// Split a hyperanalytic signal into its simplex and perplex content:
/// `z = (h - xi h xi)/2` read in the `(1, xi)`-plane, and `o` recovered by
/// left-multiplying the perplex part `(h + xi h xi)/2` by `mu^-1 = -mu` and
/// reading the same plane.
pub fn simplex_perplex(h: &HyperanalyticSignal) -> (ComplexSignal, ComplexSignal) {
    let xi = h.xi().as_quaternion();
    let neg_mu = -h.mu().as_quaternion();
    let mut z = Vec::with_capacity(h.len());
    let mut o = Vec::with_capacity(h.len());
    for &q in h.signal().samples() {
        let reflected = xi * q * xi;
        let simplex = (q - reflected).scale(0.5);
        let perplex = (q + reflected).scale(0.5);
        z.push(Complex64::new(simplex.scalar_part(), simplex.dot(xi)));
        let o_emb = neg_mu * perplex;
        o.push(Complex64::new(o_emb.scalar_part(), o_emb.dot(xi)));
    }
    let period = h.signal().sample_period();
    (raw_signal(z, period), raw_signal(o, period))
}

/// The orthogonality residual `sum_n x[n] conj(y[n]) * T`. Callers compare
/// `|residual|` against a tolerance times `||x|| ||y||`; the real and
/// imaginary parts correspond to the two separated orthogonality integrals.
pub fn orthogonality_residual(
    x: &ComplexSignal,
    y: &ComplexSignal,
) -> Result<Complex64, SignalError> {
    if x.len() != y.len() {
        return Err(SignalError::LengthMismatch { left: x.len(), right: y.len() });
    }
    let acc: Complex64 = x
        .samples()
        .iter()
        .zip(y.samples())
        .map(|(a, b)| a * b.conj())
        .sum();
    Ok(acc * x.sample_period())
}

fn raw_signal(samples: Vec<Complex64>, period: f64) -> ComplexSignal {
    ComplexSignal::with_period(samples, period).expect("derived from a validated signal")
}
