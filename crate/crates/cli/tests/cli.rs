//! End-to-end tests of the command-line surface: CSV schemas, exit codes,
//! diagnostics, and cross-command consistency.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hypersig::error::AppError;
use hypersig::io::{read_complex_csv, write_complex_csv};
use hypersig_core::{Complex64, ComplexSignal};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypersig"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn max_diff(a: &ComplexSignal, b: &ComplexSignal) -> f64 {
    a.samples()
        .iter()
        .zip(b.samples())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[test]
fn generate_tone_writes_a_real_cosine() {
    let dir = tempfile::tempdir().unwrap();
    let out = tmp(&dir, "tone.csv");
    let status = run(&[
        "generate",
        "--waveform",
        "tone",
        "--n",
        "64",
        "--carrier-freq",
        "0.0625",
        "--out",
        &path_str(&out),
    ]);
    assert!(status.status.success());
    let z = read_complex_csv(&out).unwrap();
    assert_eq!(z.len(), 64);
    for (n, v) in z.samples().iter().enumerate() {
        let expect = (std::f64::consts::TAU * 0.0625 * n as f64).cos();
        assert!((v.re - expect).abs() < 1e-12 && v.im == 0.0, "sample {n}");
    }
}

#[test]
fn csv_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let path = tmp(&dir, "roundtrip.csv");
    let samples: Vec<Complex64> = (0..50)
        .map(|n| {
            let x = (n as f64 + 1.0) / 3.0;
            Complex64::new(x.sin() * 1e-7, -x.cos() * 1e9)
        })
        .collect();
    let z = ComplexSignal::new(samples).unwrap();
    write_complex_csv(&path, &z).unwrap();
    let back = read_complex_csv(&path).unwrap();
    for (a, b) in z.samples().iter().zip(back.samples()) {
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }
}

#[test]
fn orthogonal_methods_agree_on_generated_signal() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "z.csv");
    // Band signal with zero DC/Nyquist: an AM tone family keeps content
    // around the carrier only.
    assert!(run(&["generate", "--waveform", "helix_gauss", "--out", &path_str(&z_path)])
        .status
        .success());

    let mut outputs = Vec::new();
    for method in ["hilbert_pair", "complex_fft", "qft"] {
        let o_path = tmp(&dir, &format!("o_{method}.csv"));
        let out = run(&[
            "orthogonal",
            "--in",
            &path_str(&z_path),
            "--method",
            method,
            "--out",
            &path_str(&o_path),
        ]);
        assert!(out.status.success(), "method {method}");
        outputs.push(read_complex_csv(&o_path).unwrap());
    }
    let scale = outputs[0].samples().iter().map(|c| c.norm()).fold(0.0, f64::max);
    assert!(max_diff(&outputs[0], &outputs[1]) <= 1e-9 * scale);
    assert!(max_diff(&outputs[0], &outputs[2]) <= 1e-9 * scale);
    assert!(max_diff(&outputs[1], &outputs[2]) <= 1e-9 * scale);
}

#[test]
fn orthogonal_of_tone_is_quadrature_tone() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "z.csv");
    let o_path = tmp(&dir, "o.csv");
    assert!(run(&[
        "generate", "--waveform", "tone", "--n", "64", "--carrier-freq", "0.0625", "--out",
        &path_str(&z_path)
    ])
    .status
    .success());
    assert!(run(&[
        "orthogonal", "--in", &path_str(&z_path), "--method", "hilbert_pair", "--out",
        &path_str(&o_path)
    ])
    .status
    .success());
    let o = read_complex_csv(&o_path).unwrap();
    for (n, v) in o.samples().iter().enumerate() {
        let expect = (std::f64::consts::TAU * 0.0625 * n as f64).sin();
        assert!((v.re - expect).abs() < 1e-10 && v.im.abs() < 1e-12, "sample {n}");
    }
}

#[test]
fn malformed_row_reports_line_number_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = tmp(&dir, "bad.csv");
    fs::write(&bad, "index,real,imag\n0,1.0,0.0\n1,not_a_number,0.0\n").unwrap();
    let out_path = tmp(&dir, "o.csv");
    let out = run(&["orthogonal", "--in", &path_str(&bad), "--out", &path_str(&out_path)]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_PARSE));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(":3:"), "diagnostic should name line 3, got: {stderr}");
}

#[test]
fn non_contiguous_index_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = tmp(&dir, "bad.csv");
    fs::write(&bad, "index,real,imag\n0,1.0,0.0\n2,0.5,0.0\n").unwrap();
    let out = run(&["properness", "--in", &path_str(&bad)]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_PARSE));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("non-contiguous"), "got: {stderr}");
}

#[test]
fn empty_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = tmp(&dir, "empty.csv");
    fs::write(&empty, "").unwrap();
    let out_path = tmp(&dir, "d.csv");
    let out = run(&["demodulate", "--in", &path_str(&empty), "--out", &path_str(&out_path)]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_PARSE));
}

#[test]
fn missing_input_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "properness",
        "--in",
        &path_str(&tmp(&dir, "nope.csv")),
    ]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_IO));
}

#[test]
fn non_orthogonal_axes_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "z.csv");
    assert!(run(&["generate", "--waveform", "tone", "--out", &path_str(&z_path)])
        .status
        .success());
    let out_path = tmp(&dir, "o.csv");
    let out = run(&[
        "orthogonal",
        "--in",
        &path_str(&z_path),
        "--out",
        &path_str(&out_path),
        "--xi",
        "0,1,0,0",
        "--mu",
        "0,1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_PARSE));
}

#[test]
fn invalid_generator_spec_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = tmp(&dir, "z.csv");
    let out = run(&[
        "generate",
        "--waveform",
        "helix_gauss",
        "--carrier-freq",
        "0.7",
        "--out",
        &path_str(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_PARSE));
}

#[test]
fn demodulate_tone_recovers_unit_envelope_and_ramp() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "z.csv");
    let d_path = tmp(&dir, "d.csv");
    assert!(run(&[
        "generate", "--waveform", "tone", "--n", "512", "--carrier-freq", "0.0625", "--theta",
        "0.3", "--out", &path_str(&z_path)
    ])
    .status
    .success());
    assert!(run(&["demodulate", "--in", &path_str(&z_path), "--out", &path_str(&d_path)])
        .status
        .success());

    let content = fs::read_to_string(&d_path).unwrap();
    let mut lines = content.lines();
    assert_eq!(
        lines.next().unwrap(),
        "index,z_re,z_im,o_re,o_im,env_re,env_im,phase_re,phase_im"
    );
    for line in lines {
        let fields: Vec<f64> =
            line.split(',').skip(1).map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 8);
        let n: usize = line.split(',').next().unwrap().parse().unwrap();
        if !(52..460).contains(&n) {
            continue; // interior 80% only
        }
        let (env_re, env_im) = (fields[4], fields[5]);
        let (ph_re, ph_im) = (fields[6], fields[7]);
        assert!((env_re - 1.0).abs() <= 1e-2 && env_im.abs() <= 1e-2, "envelope at {n}");
        let expect = std::f64::consts::TAU * 0.0625 * n as f64 + 0.3;
        let diff = ph_re - expect;
        let wrapped = diff - std::f64::consts::TAU * (diff / std::f64::consts::TAU).round();
        assert!(wrapped.abs() <= 1e-2 && ph_im.abs() <= 1e-2, "phase at {n}");
    }
}

#[test]
fn demodulate_zero_signal_is_a_numeric_error() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "zero.csv");
    let zero = ComplexSignal::new(vec![Complex64::new(0.0, 0.0); 16]).unwrap();
    write_complex_csv(&z_path, &zero).unwrap();
    let d_path = tmp(&dir, "d.csv");
    let out = run(&["demodulate", "--in", &path_str(&z_path), "--out", &path_str(&d_path)]);
    assert_eq!(out.status.code(), Some(AppError::EXIT_NUMERIC));
}

#[test]
fn properness_classifies_proper_tone_as_superproper() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "tone.csv");
    let n = 256;
    let tone = ComplexSignal::new(
        (0..n)
            .map(|t| Complex64::from_polar(1.0, std::f64::consts::TAU * (8 * t) as f64 / n as f64))
            .collect(),
    )
    .unwrap();
    write_complex_csv(&z_path, &tone).unwrap();
    let out = run(&["properness", "--in", &path_str(&z_path)]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("classification: c_mu_superproper"), "got: {stdout}");
    assert!(stdout.contains("classification=c_mu_superproper"));
    assert!(stdout.contains("[report]"));
}

#[test]
fn properness_of_improper_pair_reports_proper_with_nonzero_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "improper.csv");
    let n = 256;
    let chi: f64 = 0.7;
    let signal = ComplexSignal::new(
        (0..n)
            .map(|t| {
                let ang = std::f64::consts::TAU * (9 * t) as f64 / n as f64;
                Complex64::new(ang.cos(), (ang - chi).cos())
            })
            .collect(),
    )
    .unwrap();
    write_complex_csv(&z_path, &signal).unwrap();
    let out = run(&["properness", "--in", &path_str(&z_path)]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("classification: c_mu_proper"), "got: {stdout}");
}

#[test]
fn properness_of_zero_signal_is_withheld() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "zero.csv");
    let zero = ComplexSignal::new(vec![Complex64::new(0.0, 0.0); 16]).unwrap();
    write_complex_csv(&z_path, &zero).unwrap();
    let out = run(&["properness", "--in", &path_str(&z_path)]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("withheld"), "got: {stdout}");
    assert!(stdout.contains("classification=withheld"));
}

#[test]
fn hyperanalytic_writes_quaternion_csv() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "z.csv");
    let h_path = tmp(&dir, "h.csv");
    assert!(run(&[
        "generate", "--waveform", "tone", "--n", "64", "--carrier-freq", "0.0625", "--out",
        &path_str(&z_path)
    ])
    .status
    .success());
    assert!(run(&["hyperanalytic", "--in", &path_str(&z_path), "--out", &path_str(&h_path)])
        .status
        .success());
    let content = fs::read_to_string(&h_path).unwrap();
    let mut lines = content.lines();
    assert_eq!(lines.next().unwrap(), "index,a,b,c,d");
    // For a real cosine the hyperanalytic signal is cos + j sin.
    for (n, line) in lines.enumerate() {
        let fields: Vec<f64> = line.split(',').skip(1).map(|f| f.parse().unwrap()).collect();
        let ang = std::f64::consts::TAU * 0.0625 * n as f64;
        assert!((fields[0] - ang.cos()).abs() <= 1e-10, "a at {n}");
        assert!(fields[1].abs() <= 1e-12, "b at {n}");
        assert!((fields[2] - ang.sin()).abs() <= 1e-10, "c at {n}");
        assert!(fields[3].abs() <= 1e-12, "d at {n}");
    }
}

#[test]
fn custom_axes_flow_through_demodulation() {
    let dir = tempfile::tempdir().unwrap();
    let z_path = tmp(&dir, "z.csv");
    let d_path = tmp(&dir, "d.csv");
    assert!(run(&["generate", "--waveform", "helix_gauss", "--out", &path_str(&z_path)])
        .status
        .success());
    // xi = i, mu = k is a legitimate basis choice.
    let out = run(&[
        "demodulate",
        "--in",
        &path_str(&z_path),
        "--out",
        &path_str(&d_path),
        "--xi",
        "0,1,0,0",
        "--mu",
        "0,0,0,1",
    ]);
    assert!(out.status.success());
    let content = fs::read_to_string(&d_path).unwrap();
    assert_eq!(content.lines().count(), 1001);
}
