//! Example signal families: a pure tone, a Gaussian-pulse AM signal, and the
//! helix-Gaussian family (a real sinusoidal carrier modulated by two
//! Gaussian pulses and a complex helix).
//!
//! All waveforms share the carrier `A cos(2 pi f_c n + theta)` and a global
//! complex-plane rotation `exp(i psi)`; the rotation folds into the
//! modulator, since demodulation cannot attribute it to either factor. The
//! default parameters keep the modulator spectrum well below the carrier, so
//! generated signals satisfy the band-separation premise (checked in tests,
//! not assumed).

use hypersig_core::envelope::synthesize_modulated;
use hypersig_core::{Complex64, ComplexSignal, ModulationModel};

use crate::error::AppError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Waveform {
    Tone,
    AmGauss,
    HelixGauss,
}

impl Waveform {
    pub fn name(&self) -> &'static str {
        match self {
            Waveform::Tone => "tone",
            Waveform::AmGauss => "am_gauss",
            Waveform::HelixGauss => "helix_gauss",
        }
    }
}

/// Parameters of a generated example signal. Frequencies are in
/// cycles/sample; angles in radians; centers and sigma in samples.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub waveform: Waveform,
    pub n: usize,
    pub carrier_freq: f64,
    pub theta: f64,
    pub psi: f64,
    pub helix_freq: f64,
    pub gauss_centers: (f64, f64),
    pub gauss_sigma: f64,
    pub amplitude: f64,
}

impl GeneratorSpec {
    /// The stock example family: n = 1000, carrier 0.05, helix 0.005,
    /// Gaussians at 300/700 with sigma 60, unit amplitude.
    pub fn defaults(waveform: Waveform) -> Self {
        Self {
            waveform,
            n: 1000,
            carrier_freq: 0.05,
            theta: 0.0,
            psi: 0.0,
            helix_freq: 0.005,
            gauss_centers: (300.0, 700.0),
            gauss_sigma: 60.0,
            amplitude: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), AppError> {
        if self.n < 2 {
            return Err(AppError::InvalidArg(format!("n = {} (need at least 2 samples)", self.n)));
        }
        if !(self.carrier_freq > 0.0 && self.carrier_freq < 0.5) {
            return Err(AppError::InvalidArg(format!(
                "carrier frequency {} outside (0, 0.5) cycles/sample",
                self.carrier_freq
            )));
        }
        if !self.amplitude.is_finite() || !self.theta.is_finite() || !self.psi.is_finite() {
            return Err(AppError::InvalidArg("amplitude/theta/psi must be finite".into()));
        }
        match self.waveform {
            Waveform::Tone => {}
            Waveform::AmGauss => self.validate_gaussians()?,
            Waveform::HelixGauss => {
                self.validate_gaussians()?;
                if !(self.helix_freq.abs() < self.carrier_freq) {
                    return Err(AppError::InvalidArg(format!(
                        "helix frequency {} must stay below the carrier frequency {} in magnitude",
                        self.helix_freq, self.carrier_freq
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_gaussians(&self) -> Result<(), AppError> {
        if !(self.gauss_sigma > 0.0 && self.gauss_sigma.is_finite()) {
            return Err(AppError::InvalidArg(format!("gauss sigma {} must be positive", self.gauss_sigma)));
        }
        if !self.gauss_centers.0.is_finite() || !self.gauss_centers.1.is_finite() {
            return Err(AppError::InvalidArg("gauss centers must be finite".into()));
        }
        Ok(())
    }

    /// The complex modulating signal `g[n]`, with the `exp(i psi)` rotation
    /// folded in. Tone: constant; am_gauss: two real Gaussian pulses;
    /// helix_gauss: the pulses times a complex helix.
    pub fn modulator(&self) -> Vec<Complex64> {
        let rot = Complex64::from_polar(1.0, self.psi);
        (0..self.n)
            .map(|t| {
                let tt = t as f64;
                let base = match self.waveform {
                    Waveform::Tone => Complex64::new(1.0, 0.0),
                    Waveform::AmGauss => Complex64::new(self.gaussian_pair(tt), 0.0),
                    Waveform::HelixGauss => Complex64::from_polar(
                        self.gaussian_pair(tt),
                        std::f64::consts::TAU * self.helix_freq * tt,
                    ),
                };
                rot * base
            })
            .collect()
    }

    fn gaussian_pair(&self, t: f64) -> f64 {
        let s2 = 2.0 * self.gauss_sigma * self.gauss_sigma;
        let (c1, c2) = self.gauss_centers;
        ((t - c1) * (t - c1) / -s2).exp() + ((t - c2) * (t - c2) / -s2).exp()
    }

    /// The carrier/modulator pair as a modulation model.
    pub fn modulation_model(&self) -> Result<ModulationModel, AppError> {
        self.validate()?;
        let g = ComplexSignal::new(self.modulator())
            .map_err(|e| AppError::InvalidArg(e.to_string()))?;
        ModulationModel::new(self.amplitude, self.carrier_freq, self.theta, g)
            .map_err(|e| AppError::InvalidArg(e.to_string()))
    }

    /// Synthesize `z[n] = g[n] * A cos(2 pi f_c n + theta)`.
    pub fn build(&self) -> Result<ComplexSignal, AppError> {
        Ok(synthesize_modulated(&self.modulation_model()?))
    }
}
