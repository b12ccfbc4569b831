//! Complex envelope and complex phase of a hyperanalytic signal via the
//! Cayley-Dickson polar form, with continuity-restoring unwrapping, plus the
//! modulated-signal generator used to exercise the amplitude-recovery
//! contract.
//!
//! Per-sample polar decomposition carries an inherent `(A, B)` vs
//! `(-A, B +- pi)` sign ambiguity (the per-sample canonical form keeps
//! `Re(A) >= 0`, which would trap the envelope in a half-plane). The coupled
//! unwrap below picks, sample to sample, the branch minimizing the phase jump
//! and flips the envelope sign to match, then removes residual `2 pi` jumps;
//! the envelope is then free to travel through all four quadrants.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::analytic::{
    hyperanalytic, simplex_perplex, HyperanalyticSignal, OrthogonalMethod, OrthogonalResult,
};
use crate::quat::{cd_split, pair_from_polar, polar_from_pair, Quaternion, QuaternionBasis};
use crate::spectral::{fft_forward, ComplexSignal};

const PI: f64 = core::f64::consts::PI;
const TAU: f64 = core::f64::consts::TAU;

/// Maximum fraction of modulator energy allowed at or above the carrier
/// frequency for the band-separation premise to count as satisfied.
pub const BAND_SEPARATION_MAX_OUT_OF_BAND: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub enum EnvelopeError {
    /// Every sample of the signal was degenerate (or zero); no envelope
    /// exists.
    AllSamplesDegenerate,
    /// The carrier frequency must satisfy `0 < omega < 1/2` cycles/sample.
    CarrierFreqOutOfRange { freq: f64 },
}

impl fmt::Display for EnvelopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvelopeError::AllSamplesDegenerate => {
                write!(f, "all samples degenerate: no complex envelope exists")
            }
            EnvelopeError::CarrierFreqOutOfRange { freq } => {
                write!(f, "carrier frequency {freq} outside (0, 1/2) cycles/sample")
            }
        }
    }
}

impl core::error::Error for EnvelopeError {}

/// Per-sample complex envelope `e[n]` and complex phase `phi[n]`, with the
/// indices of degenerate samples that were filled by interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarDecomposition {
    envelope: Vec<Complex64>,
    phase: Vec<Complex64>,
    flagged: Vec<usize>,
}

impl PolarDecomposition {
    #[inline]
    pub fn len(&self) -> usize {
        self.envelope.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.envelope.is_empty()
    }

    #[inline]
    pub fn envelope(&self) -> &[Complex64] {
        &self.envelope
    }

    #[inline]
    pub fn phase(&self) -> &[Complex64] {
        &self.phase
    }

    /// Indices of samples whose polar form was degenerate and was filled by
    /// linear interpolation of neighbors.
    #[inline]
    pub fn flagged(&self) -> &[usize] {
        &self.flagged
    }

    /// Rebuild the quaternion samples `e[n] (cos phi[n] + sin phi[n] mu)` in
    /// the given basis; off flagged samples this reproduces the decomposed
    /// signal.
    pub fn reconstruct(&self, basis: &QuaternionBasis) -> Vec<Quaternion> {
        self.envelope
            .iter()
            .zip(&self.phase)
            .map(|(&a, &b)| crate::quat::cd_assemble(pair_from_polar(a, b), basis))
            .collect()
    }
}

/// A real sinusoidal carrier `A cos(2 pi omega n + theta)` together with a
/// complex modulating signal `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulationModel {
    carrier_amplitude: f64,
    carrier_freq: f64,
    carrier_phase: f64,
    modulator: ComplexSignal,
}

impl ModulationModel {
    /// `carrier_freq` is in cycles/sample and must lie in `(0, 1/2)`.
    pub fn new(
        carrier_amplitude: f64,
        carrier_freq: f64,
        carrier_phase: f64,
        modulator: ComplexSignal,
    ) -> Result<Self, EnvelopeError> {
        if !(carrier_freq > 0.0 && carrier_freq < 0.5) {
            return Err(EnvelopeError::CarrierFreqOutOfRange { freq: carrier_freq });
        }
        Ok(Self { carrier_amplitude, carrier_freq, carrier_phase, modulator })
    }

    #[inline]
    pub fn carrier_amplitude(&self) -> f64 {
        self.carrier_amplitude
    }

    #[inline]
    pub fn carrier_freq(&self) -> f64 {
        self.carrier_freq
    }

    #[inline]
    pub fn carrier_phase(&self) -> f64 {
        self.carrier_phase
    }

    #[inline]
    pub fn modulator(&self) -> &ComplexSignal {
        &self.modulator
    }

    /// Fraction of modulator energy in bins at or above the carrier
    /// frequency (in absolute normalized frequency). Zero for an all-zero
    /// modulator.
    pub fn out_of_band_fraction(&self) -> f64 {
        let n = self.modulator.len();
        let bins = fft_forward(self.modulator.samples());
        let mut total = 0.0;
        let mut out = 0.0;
        for (k, bin) in bins.iter().enumerate() {
            let freq = if 2 * k <= n {
                k as f64 / n as f64
            } else {
                (k as f64 - n as f64) / n as f64
            };
            let e = bin.norm_sqr();
            total += e;
            if libm::fabs(freq) >= self.carrier_freq {
                out += e;
            }
        }
        if total == 0.0 {
            0.0
        } else {
            out / total
        }
    }

    /// The Bedrosian premise: modulator spectrum concentrated below the
    /// carrier, out-of-band fraction at most
    /// [`BAND_SEPARATION_MAX_OUT_OF_BAND`].
    pub fn satisfies_band_separation(&self) -> bool {
        self.out_of_band_fraction() <= BAND_SEPARATION_MAX_OUT_OF_BAND
    }
}

/// Synthesize `z[n] = g[n] * A cos(2 pi omega n + theta)` over the
/// modulator's length.
pub fn synthesize_modulated(model: &ModulationModel) -> ComplexSignal {
    let a = model.carrier_amplitude;
    let omega = model.carrier_freq;
    let theta = model.carrier_phase;
    let samples: Vec<Complex64> = model
        .modulator
        .samples()
        .iter()
        .enumerate()
        .map(|(n, &g)| g * (a * libm::cos(TAU * omega * n as f64 + theta)))
        .collect();
    ComplexSignal::with_period(samples, model.modulator.sample_period())
        .expect("modulated signal inherits validity from the modulator")
}

/// Resolve the `(A, B) <-> (-A, B +- pi)` ambiguity along a phase sequence by
/// continuity, then remove residual `2 pi` jumps in `Re(phase)`.
///
/// With `coupled_sign_fix` the branch at each step may shift by any multiple
/// of `pi` (odd multiples imply an envelope sign flip for the caller); without
/// it only `2 pi` multiples are used, i.e. classical unwrapping. The first
/// sample is anchored with `Re(phase[0])` in `(-pi, pi]`. Branch shifts are
/// purely real, so `Im(phase)` passes through unchanged.
pub fn unwrap_phase(phase: &[Complex64], coupled_sign_fix: bool) -> Vec<Complex64> {
    if phase.is_empty() {
        return Vec::new();
    }
    let step = if coupled_sign_fix { PI } else { TAU };
    let mut out = Vec::with_capacity(phase.len());

    let mut first = phase[0];
    let mut r = first.re - TAU * libm::round(first.re / TAU);
    if r <= -PI {
        r += TAU;
    }
    first.re = r;
    out.push(first);

    for &cur in &phase[1..] {
        let prev_re = out.last().expect("non-empty").re;
        let k = libm::round((prev_re - cur.re) / step);
        out.push(Complex64::new(cur.re + k * step, cur.im));
    }
    out
}

/// Complex envelope and phase of a hyperanalytic signal: per-sample
/// Cayley-Dickson polar form in the signal's own basis, followed by the
/// coupled sign/phase unwrap. Degenerate samples (including exact zeros) are
/// filled by linear interpolation of their neighbors and flagged.
///
/// Errors only when every sample is degenerate.
pub fn envelope_phase(h: &HyperanalyticSignal) -> Result<PolarDecomposition, EnvelopeError> {
    let basis = *h.basis();
    let n = h.len();
    let mut amp = vec![Complex64::new(0.0, 0.0); n];
    let mut phase_raw = Vec::with_capacity(n);
    let mut valid = Vec::with_capacity(n);
    let mut flagged = Vec::new();

    for (idx, &q) in h.signal().samples().iter().enumerate() {
        match polar_from_pair(cd_split(q, &basis)) {
            Ok((a, b)) if q != Quaternion::ZERO => {
                amp[idx] = a;
                phase_raw.push(b);
                valid.push(idx);
            }
            _ => flagged.push(idx),
        }
    }
    if valid.is_empty() {
        return Err(EnvelopeError::AllSamplesDegenerate);
    }

    let unwrapped = unwrap_phase(&phase_raw, true);
    let mut phase = vec![Complex64::new(0.0, 0.0); n];
    for ((&idx, &raw), &fixed) in valid.iter().zip(&phase_raw).zip(&unwrapped) {
        let shifts = libm::round((fixed.re - raw.re) / PI) as i64;
        if shifts.rem_euclid(2) == 1 {
            amp[idx] = -amp[idx];
        }
        phase[idx] = fixed;
    }

    interpolate_flagged(&mut amp, &valid, &flagged);
    interpolate_flagged(&mut phase, &valid, &flagged);

    Ok(PolarDecomposition { envelope: amp, phase, flagged })
}

/// Fill flagged indices by linear interpolation between the nearest valid
/// neighbors; runs touching an end copy the single available neighbor.
fn interpolate_flagged(values: &mut [Complex64], valid: &[usize], flagged: &[usize]) {
    if flagged.is_empty() {
        return;
    }
    let mut pos = 0;
    while pos < flagged.len() {
        let start = flagged[pos];
        let mut end = start;
        while pos + 1 < flagged.len() && flagged[pos + 1] == end + 1 {
            pos += 1;
            end = flagged[pos];
        }
        let left = valid.iter().rev().find(|&&v| v < start).copied();
        let right = valid.iter().find(|&&v| v > end).copied();
        match (left, right) {
            (Some(l), Some(r)) => {
                let span = (r - l) as f64;
                for idx in start..=end {
                    let t = (idx - l) as f64 / span;
                    values[idx] = values[l] * (1.0 - t) + values[r] * t;
                }
            }
            (Some(l), None) => {
                for idx in start..=end {
                    values[idx] = values[l];
                }
            }
            (None, Some(r)) => {
                for idx in start..=end {
                    values[idx] = values[r];
                }
            }
            (None, None) => unreachable!("at least one valid sample exists"),
        }
        pos += 1;
    }
}

/// Full demodulation pipeline: hyperanalytic signal, envelope/phase
/// extraction, and the orthogonal signal for inspection.
pub fn demodulate(
    z: &ComplexSignal,
    basis: &QuaternionBasis,
) -> Result<(PolarDecomposition, OrthogonalResult), EnvelopeError> {
    let h = hyperanalytic(z, basis);
    let polar = envelope_phase(&h)?;
    let (_, o) = simplex_perplex(&h);
    Ok((polar, OrthogonalResult { o, method: OrthogonalMethod::QftOneSided }))
}
