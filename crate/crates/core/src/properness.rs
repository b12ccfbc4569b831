//! Zero-lag covariance analysis of the hyperanalytic signal and
//! properness classification.
//!
//! The covariance matrix is taken over the four component sequences
//! `(z_r, z_i, o_r, o_i)` extracted from the hyperanalytic signal, using
//! plain discrete inner products weighted by the sample period: deterministic
//! signals, no mean removal, no `1/N`. For an improper input the matrix falls
//! into the pattern
//!
//! ```text
//!   [ alpha  gamma    0     beta  ]
//!   [ gamma  omega   beta    0    ]
//!   [   0    beta   alpha  -gamma ]
//!   [ beta    0    -gamma  omega  ]
//! ```
//!
//! and for a proper input additionally `gamma = 0` and `alpha = omega`
//! ("superproper").

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::analytic::{simplex_perplex, HyperanalyticSignal};

/// Labels for the four covariance components, in matrix order.
pub const COMPONENT_LABELS: [&str; 4] = ["z_r", "z_i", "o_r", "o_i"];

/// Real symmetric 4x4 matrix of zero-lag cross-correlations over
/// `(z_r, z_i, o_r, o_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Covariance4 {
    m: [[f64; 4]; 4],
}

impl Covariance4 {
    pub fn from_entries(m: [[f64; 4]; 4]) -> Self {
        Self { m }
    }

    #[inline]
    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    /// Trace, i.e. total component energy; the scale against which the
    /// pattern checks are measured.
    pub fn trace_energy(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }
}

impl Index<(usize, usize)> for Covariance4 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.m[i][j]
    }
}

/// Zero-lag covariance of a hyperanalytic signal: entries
/// `C_ab = T * sum_n a[n] b[n]` over the component sequences
/// `(z_r, z_i, o_r, o_i)` obtained from the simplex/perplex split.
pub fn covariance(h: &HyperanalyticSignal) -> Covariance4 {
    let (z, o) = simplex_perplex(h);
    let t = h.signal().sample_period();
    let comps: [Vec<f64>; 4] = [z.real(), z.imag(), o.real(), o.imag()];
    let mut m = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let dot: f64 = comps[i].iter().zip(&comps[j]).map(|(a, b)| a * b).sum();
            m[i][j] = dot * t;
            m[j][i] = m[i][j];
        }
    }
    Covariance4 { m }
}

/// Classification outcome of the covariance pattern tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropernessClass {
    CMuProper,
    CMuSuperproper,
    Unstructured,
}

impl fmt::Display for PropernessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PropernessClass::CMuProper => "c_mu_proper",
            PropernessClass::CMuSuperproper => "c_mu_superproper",
            PropernessClass::Unstructured => "unstructured",
        };
        f.write_str(name)
    }
}

/// One failed pattern predicate, with its residual relative to the trace
/// energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternViolation {
    pub check: &'static str,
    pub residual: f64,
}

/// Scalars of the covariance pattern plus the classification verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct PropernessReport {
    pub alpha: f64,
    pub omega: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Trace energy used as the relative scale.
    pub energy: f64,
    /// Relative tolerance the checks ran at.
    pub tol: f64,
    pub classification: PropernessClass,
    /// Worst violated predicate, for diagnosability: the proper-pattern
    /// check that failed hardest when unstructured, or the superproper
    /// check that blocked promotion when merely proper.
    pub worst: Option<PatternViolation>,
}

/// Test the covariance matrix against the proper and superproper patterns at
/// relative tolerance `tol` (against the trace energy).
///
/// An all-zero matrix satisfies every predicate trivially and classifies as
/// superproper; presentation layers may withhold the verdict for zero-energy
/// signals.
///
/// # Panics
/// If `tol <= 0`.
pub fn classify(c: &Covariance4, tol: f64) -> PropernessReport {
    assert!(tol > 0.0, "tolerance must be positive");
    let e = c.trace_energy();
    let m = c.entries();

    let proper_checks: [(&'static str, f64); 6] = [
        ("C_zr_or = 0", libm::fabs(m[0][2])),
        ("C_zi_oi = 0", libm::fabs(m[1][3])),
        ("C_zr_zr = C_or_or", libm::fabs(m[0][0] - m[2][2])),
        ("C_zi_zi = C_oi_oi", libm::fabs(m[1][1] - m[3][3])),
        ("C_zi_or = C_zr_oi", libm::fabs(m[1][2] - m[0][3])),
        ("C_or_oi = -C_zr_zi", libm::fabs(m[2][3] + m[0][1])),
    ];
    let super_checks: [(&'static str, f64); 2] = [
        ("gamma = 0", libm::fabs(m[0][1])),
        ("alpha = omega", libm::fabs(m[0][0] - m[1][1])),
    ];

    let bound = tol * e;
    let worst_of = |checks: &[(&'static str, f64)]| -> Option<PatternViolation> {
        checks
            .iter()
            .filter(|(_, r)| *r > bound)
            .max_by(|a, b| a.1.partial_cmp(&b.1).expect("residuals are finite"))
            .map(|&(check, residual)| PatternViolation {
                check,
                residual: if e > 0.0 { residual / e } else { residual },
            })
    };

    let proper_violation = worst_of(&proper_checks);
    let (classification, worst) = match proper_violation {
        Some(v) => (PropernessClass::Unstructured, Some(v)),
        None => match worst_of(&super_checks) {
            Some(v) => (PropernessClass::CMuProper, Some(v)),
            None => (PropernessClass::CMuSuperproper, None),
        },
    };

    PropernessReport {
        alpha: m[0][0],
        omega: m[1][1],
        beta: 0.5 * (m[1][2] + m[0][3]),
        gamma: m[0][1],
        energy: e,
        tol,
        classification,
        worst,
    }
}
