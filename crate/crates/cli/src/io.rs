//! CSV schemas for signals and decompositions.
//!
//! Complex signals travel as `index,real,imag`; quaternion signals as
//! `index,a,b,c,d`; demodulation output carries the original, orthogonal,
//! envelope and phase series side by side. Floats are written with 17
//! significant digits so a write/read round trip is bit-exact. UTF-8, LF
//! line endings, indices contiguous from 0.

use std::fs;
use std::path::Path;

use hypersig_core::{Complex64, ComplexSignal, PolarDecomposition, QuaternionSignal};

use crate::error::AppError;

pub const COMPLEX_HEADER: &str = "index,real,imag";
pub const QUATERNION_HEADER: &str = "index,a,b,c,d";
pub const DEMOD_HEADER: &str = "index,z_re,z_im,o_re,o_im,env_re,env_im,phase_re,phase_im";

/// 17 significant digits: enough to reproduce any f64 exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn io_err(path: &Path, source: std::io::Error) -> AppError {
    AppError::Io { path: path.display().to_string(), source }
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> AppError {
    AppError::Parse { path: path.display().to_string(), line, message: message.into() }
}

/// Read an `index,real,imag` file into a complex signal (unit sample
/// period). Diagnostics name the offending 1-based line.
pub fn read_complex_csv(path: &Path) -> Result<ComplexSignal, AppError> {
    let content = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let mut lines = content.lines().enumerate();

    let header = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, format!("empty file: expected header '{COMPLEX_HEADER}'")))?;
    if header.1.trim() != COMPLEX_HEADER {
        return Err(parse_err(
            path,
            1,
            format!("bad header '{}': expected '{COMPLEX_HEADER}'", header.1.trim()),
        ));
    }

    let mut samples: Vec<Complex64> = Vec::new();
    let mut last_line = 1;
    for (idx0, raw) in lines {
        let line_no = idx0 + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(parse_err(path, line_no, format!("expected 3 fields, found {}", fields.len())));
        }
        let index: usize = fields[0]
            .trim()
            .parse()
            .map_err(|_| parse_err(path, line_no, format!("bad index '{}'", fields[0].trim())))?;
        if index != samples.len() {
            return Err(parse_err(
                path,
                line_no,
                format!("non-contiguous index {index}, expected {}", samples.len()),
            ));
        }
        let re = parse_float(path, line_no, fields[1], "real")?;
        let im = parse_float(path, line_no, fields[2], "imag")?;
        samples.push(Complex64::new(re, im));
    }

    ComplexSignal::new(samples).map_err(|e| parse_err(path, last_line, e.to_string()))
}

fn parse_float(path: &Path, line: usize, field: &str, name: &str) -> Result<f64, AppError> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| parse_err(path, line, format!("bad {name} value '{}'", field.trim())))?;
    if !v.is_finite() {
        return Err(parse_err(path, line, format!("non-finite {name} value '{}'", field.trim())));
    }
    Ok(v)
}

pub fn write_complex_csv(path: &Path, signal: &ComplexSignal) -> Result<(), AppError> {
    let mut out = String::with_capacity(signal.len() * 48 + COMPLEX_HEADER.len() + 1);
    out.push_str(COMPLEX_HEADER);
    out.push('\n');
    for (n, s) in signal.samples().iter().enumerate() {
        out.push_str(&format!("{n},{},{}\n", fmt_f64(s.re), fmt_f64(s.im)));
    }
    fs::write(path, out).map_err(|e| io_err(path, e))
}

pub fn write_quaternion_csv(path: &Path, signal: &QuaternionSignal) -> Result<(), AppError> {
    let mut out = String::with_capacity(signal.len() * 96 + QUATERNION_HEADER.len() + 1);
    out.push_str(QUATERNION_HEADER);
    out.push('\n');
    for (n, q) in signal.samples().iter().enumerate() {
        out.push_str(&format!(
            "{n},{},{},{},{}\n",
            fmt_f64(q.a),
            fmt_f64(q.b),
            fmt_f64(q.c),
            fmt_f64(q.d)
        ));
    }
    fs::write(path, out).map_err(|e| io_err(path, e))
}

/// Plot-ready demodulation table: original, orthogonal, envelope, phase.
pub fn write_demodulation_csv(
    path: &Path,
    z: &ComplexSignal,
    o: &ComplexSignal,
    polar: &PolarDecomposition,
) -> Result<(), AppError> {
    let mut out = String::with_capacity(z.len() * 160 + DEMOD_HEADER.len() + 1);
    out.push_str(DEMOD_HEADER);
    out.push('\n');
    for n in 0..z.len() {
        let zs = z.samples()[n];
        let os = o.samples()[n];
        let e = polar.envelope()[n];
        let p = polar.phase()[n];
        out.push_str(&format!(
            "{n},{},{},{},{},{},{},{},{}\n",
            fmt_f64(zs.re),
            fmt_f64(zs.im),
            fmt_f64(os.re),
            fmt_f64(os.im),
            fmt_f64(e.re),
            fmt_f64(e.im),
            fmt_f64(p.re),
            fmt_f64(p.im)
        ));
    }
    fs::write(path, out).map_err(|e| io_err(path, e))
}
