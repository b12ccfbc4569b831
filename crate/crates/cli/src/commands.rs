//! Implementations behind the CLI subcommands. Each takes plain values and
//! paths so the integration tests can call straight through.

use std::fmt::Write as _;
use std::path::Path;

use hypersig_core::analytic::{
    hyperanalytic, orthogonal_complex_fft, orthogonal_hilbert_pair, orthogonal_qft,
};
use hypersig_core::envelope::demodulate;
use hypersig_core::properness::{classify, covariance, Covariance4, PropernessReport, COMPONENT_LABELS};
use hypersig_core::QuaternionBasis;

use crate::error::AppError;
use crate::generate::GeneratorSpec;
use crate::io;
use crate::selftest;

/// Orthogonal-signal construction selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    HilbertPair,
    ComplexFft,
    Qft,
}

pub fn cmd_generate(spec: &GeneratorSpec, out: &Path) -> Result<(), AppError> {
    let z = spec.build()?;
    io::write_complex_csv(out, &z)
}

pub fn cmd_orthogonal(
    input: &Path,
    method: Method,
    out: &Path,
    basis: &QuaternionBasis,
) -> Result<(), AppError> {
    let z = io::read_complex_csv(input)?;
    let result = match method {
        Method::HilbertPair => orthogonal_hilbert_pair(&z),
        Method::ComplexFft => orthogonal_complex_fft(&z),
        Method::Qft => orthogonal_qft(&z, basis),
    };
    io::write_complex_csv(out, &result.o)
}

pub fn cmd_hyperanalytic(input: &Path, out: &Path, basis: &QuaternionBasis) -> Result<(), AppError> {
    let z = io::read_complex_csv(input)?;
    let h = hyperanalytic(&z, basis);
    io::write_quaternion_csv(out, h.signal())
}

pub fn cmd_demodulate(input: &Path, out: &Path, basis: &QuaternionBasis) -> Result<(), AppError> {
    let z = io::read_complex_csv(input)?;
    let (polar, ortho) =
        demodulate(&z, basis).map_err(|e| AppError::Numeric(e.to_string()))?;
    io::write_demodulation_csv(out, &z, &ortho.o, &polar)
}

pub fn cmd_properness(input: &Path, tol: f64, basis: &QuaternionBasis) -> Result<String, AppError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(AppError::InvalidArg(format!("tolerance must be positive, got {tol}")));
    }
    let z = io::read_complex_csv(input)?;
    let h = hyperanalytic(&z, basis);
    let c = covariance(&h);
    let report = classify(&c, tol);
    Ok(format_properness(&c, &report, z.sample_period()))
}

/// Runs all criteria; returns the rendered report and the pass/fail verdict.
pub fn cmd_selftest() -> (String, Result<(), AppError>) {
    let (results, text) = selftest::run_and_render();
    let failed = results.iter().filter(|r| !r.passed).count();
    let verdict = if failed == 0 {
        Ok(())
    } else {
        Err(AppError::SelftestFailed { failed, total: results.len() })
    };
    (text, verdict)
}

fn format_properness(c: &Covariance4, report: &PropernessReport, period: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "covariance matrix Gamma_h over ({}) at T = {period}:",
        COMPONENT_LABELS.join(", ")
    );
    for row in c.entries() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:+.6e}")).collect();
        let _ = writeln!(out, "  [ {} ]", cells.join("  "));
    }
    let _ = writeln!(out, "alpha = {:.6e}", report.alpha);
    let _ = writeln!(out, "omega = {:.6e}", report.omega);
    let _ = writeln!(out, "beta  = {:.6e}", report.beta);
    let _ = writeln!(out, "gamma = {:.6e}", report.gamma);
    let _ = writeln!(out, "trace energy = {:.6e}", report.energy);

    let withheld = report.energy == 0.0;
    if withheld {
        let _ = writeln!(out, "classification: withheld (zero-energy signal)");
    } else {
        let _ = writeln!(out, "classification: {}", report.classification);
    }
    match &report.worst {
        Some(v) if !withheld => {
            let _ = writeln!(out, "worst violated check: {} (residual {:.3e} relative)", v.check, v.residual);
        }
        _ => {
            let _ = writeln!(out, "worst violated check: none");
        }
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "[report]");
    let _ = writeln!(out, "alpha={}", io::fmt_f64(report.alpha));
    let _ = writeln!(out, "omega={}", io::fmt_f64(report.omega));
    let _ = writeln!(out, "beta={}", io::fmt_f64(report.beta));
    let _ = writeln!(out, "gamma={}", io::fmt_f64(report.gamma));
    let _ = writeln!(out, "energy={}", io::fmt_f64(report.energy));
    let _ = writeln!(out, "tol={}", io::fmt_f64(report.tol));
    let classification = if withheld { "withheld".to_string() } else { report.classification.to_string() };
    let _ = writeln!(out, "classification={classification}");
    match &report.worst {
        Some(v) if !withheld => {
            let _ = writeln!(out, "worst_check={}", v.check);
            let _ = writeln!(out, "worst_residual={}", io::fmt_f64(v.residual));
        }
        _ => {
            let _ = writeln!(out, "worst_check=none");
        }
    }
    out
}
