//! Hyperanalytic signal processing for complex-valued 1-D signals.
//!
//! A complex signal `z` has an orthogonal (quadrature) companion `o`
//! obtainable three equivalent ways: a pair of real Hilbert transforms acting
//! on the real and imaginary parts, a single complex Fourier pass, or a
//! one-sided quaternion Fourier spectrum. Packing `(z, o)` into a quaternion
//! signal gives the *hyperanalytic signal*; its Cayley-Dickson polar form
//! yields a complex envelope and complex phase, and its 4x4 zero-lag
//! covariance exposes properness structure.
//!
//! The crate is `no_std` (`alloc` required); float math goes through `libm`.
//!
//! Modules:
//! - [`quat`]: quaternion arithmetic, bases, Cayley-Dickson split and polar form
//! - [`spectral`]: complex DFT, quaternion Fourier transform, sign multipliers,
//!   circular convolution
//! - [`analytic`]: Hilbert transforms, the three orthogonal-signal
//!   constructions, the hyperanalytic signal, simplex/perplex split
//! - [`envelope`]: complex envelope and phase extraction with coupled
//!   sign/phase unwrapping
//! - [`properness`]: covariance pattern analysis and properness
//!   classification

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analytic;
pub mod envelope;
pub mod properness;
pub mod quat;
pub mod spectral;

pub use num_complex::Complex64;

pub use analytic::{HyperanalyticSignal, OrthogonalMethod, OrthogonalResult};
pub use envelope::{ModulationModel, PolarDecomposition};
pub use properness::{Covariance4, PropernessClass, PropernessReport};
pub use quat::{ComplexPair, Quaternion, QuaternionBasis, UnitPureQuaternion};
pub use spectral::{ComplexSignal, DiscreteSign, QuaternionSignal, QuaternionSpectrum};
