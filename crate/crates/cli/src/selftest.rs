//! The selftest criteria: end-to-end numerical checks of the whole pipeline
//! at desk scale, each with its tolerance pinned. `hypersig selftest` runs
//! them all and exits nonzero if any fails; the acceptance test suite drives
//! the same functions one criterion per test.
//!
//! Everything is deterministic: each criterion seeds its own ChaCha stream.
//! Criteria that must share inputs (1 and 2 run "over the same 100 signals")
//! share a seed. The direct O(N^2) quaternion summation used as the QFT
//! oracle lives here, independent of the channelized fast path in the core
//! crate.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypersig_core::analytic::{
    hilbert_real, hyperanalytic, orthogonal_complex_fft, orthogonal_hilbert_pair, orthogonal_qft,
    orthogonality_residual, simplex_perplex, HyperanalyticSignal,
};
use hypersig_core::envelope::demodulate;
use hypersig_core::properness::{classify, covariance, PropernessClass};
use hypersig_core::quat::{cd_split, cdpolar, cdpolar_inverse, QuatError};
use hypersig_core::spectral::{circular_convolve, embed_complex, qft, qft_inverse};
use hypersig_core::{
    Complex64, ComplexSignal, Quaternion, QuaternionBasis, QuaternionSignal, UnitPureQuaternion,
};

use crate::generate::{GeneratorSpec, Waveform};

const TAU: f64 = std::f64::consts::TAU;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: u8, name: &'static str, passed: bool, detail: String) -> Self {
        Self { id, name, passed, detail }
    }
}

/// Run criteria 1-8 in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1_cross_method_equivalence(),
        criterion_2_one_sided_spectrum(),
        criterion_3_orthogonality(),
        criterion_4_simplex_perplex(),
        criterion_5_qft_correctness(),
        criterion_6_cd_polar_form(),
        criterion_7_modulation_recovery(),
        criterion_8_properness(),
    ]
}

/// One pass/fail line per criterion plus a summary.
pub fn render(results: &[CriterionResult], elapsed: Duration) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{}/8] {:<42} {}  {}", r.id, r.name, status, r.detail);
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(
        out,
        "selftest: {passed}/{} criteria passed in {:.2} s",
        results.len(),
        elapsed.as_secs_f64()
    );
    out
}

pub fn run_and_render() -> (Vec<CriterionResult>, String) {
    let start = Instant::now();
    let results = run_all();
    let text = render(&results, start.elapsed());
    (results, text)
}

// ---------------------------------------------------------------- helpers

fn seeded(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5EED_0000 ^ tag)
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen::<f64>() * 2.0 - 1.0
}

/// Random real samples with the DC and (even N) Nyquist projections removed.
fn random_real_band(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut x: Vec<f64> = (0..n).map(|_| uniform(rng)).collect();
    let mean = x.iter().sum::<f64>() / n as f64;
    for v in x.iter_mut() {
        *v -= mean;
    }
    if n.is_multiple_of(2) {
        let alt = x
            .iter()
            .enumerate()
            .map(|(t, &v)| if t % 2 == 0 { v } else { -v })
            .sum::<f64>()
            / n as f64;
        for (t, v) in x.iter_mut().enumerate() {
            *v -= if t % 2 == 0 { alt } else { -alt };
        }
    }
    x
}

fn random_complex_band(rng: &mut ChaCha8Rng, n: usize) -> ComplexSignal {
    let re = random_real_band(rng, n);
    let im = random_real_band(rng, n);
    ComplexSignal::new(re.iter().zip(&im).map(|(&r, &i)| Complex64::new(r, i)).collect())
        .expect("generated signals are valid")
}

fn random_complex_full(rng: &mut ChaCha8Rng, n: usize) -> ComplexSignal {
    ComplexSignal::new((0..n).map(|_| Complex64::new(uniform(rng), uniform(rng))).collect())
        .expect("generated signals are valid")
}

fn random_quaternion_signal(rng: &mut ChaCha8Rng, n: usize) -> QuaternionSignal {
    QuaternionSignal::new(
        (0..n)
            .map(|_| Quaternion::new(uniform(rng), uniform(rng), uniform(rng), uniform(rng)))
            .collect(),
    )
    .expect("generated signals are valid")
}

fn max_abs_c(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn max_diff_c(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn max_abs_q(v: &[Quaternion]) -> f64 {
    v.iter().map(|q| q.abs()).fold(0.0, f64::max)
}

fn max_diff_q(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| (x - y).abs()).fold(0.0, f64::max)
}

fn norm2_c(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn wrapped_distance(a: f64, b: f64) -> f64 {
    let d = a - b;
    (d - TAU * (d / TAU).round()).abs()
}

/// Direct O(N^2) quaternion-arithmetic QFT, the oracle for the fast path.
/// `sign = -1` forward; `sign = +1` with `normalize` for the inverse.
fn qft_direct(
    samples: &[Quaternion],
    mu: UnitPureQuaternion,
    sign: f64,
    normalize: bool,
) -> Vec<Quaternion> {
    let n = samples.len();
    let mq = mu.as_quaternion();
    let scale = if normalize { 1.0 / n as f64 } else { 1.0 };
    (0..n)
        .map(|k| {
            let mut acc = Quaternion::ZERO;
            for (t, &q) in samples.iter().enumerate() {
                let ang = sign * TAU * ((k * t) % n) as f64 / n as f64;
                let kernel = Quaternion::scalar(ang.cos()) + mq.scale(ang.sin());
                acc = acc + q * kernel;
            }
            acc.scale(scale)
        })
        .collect()
}

fn pass_line(worst: f64, tol: f64) -> String {
    format!("worst {worst:.2e} (tol {tol:.0e})")
}

// --------------------------------------------------------------- criteria

/// Criterion 1: the three orthogonal-signal constructions agree pairwise to
/// 1e-9 x max|o| on 100 random zero-DC/zero-Nyquist signals of length 256.
pub fn criterion_1_cross_method_equivalence() -> CriterionResult {
    const TOL: f64 = 1e-9;
    let mut rng = seeded(1);
    let basis = QuaternionBasis::standard();
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let z = random_complex_band(&mut rng, 256);
        let o1 = orthogonal_hilbert_pair(&z).o;
        let o2 = orthogonal_complex_fft(&z).o;
        let o3 = orthogonal_qft(&z, &basis).o;
        let scale = max_abs_c(o1.samples());
        let d = max_diff_c(o1.samples(), o2.samples())
            .max(max_diff_c(o1.samples(), o3.samples()))
            .max(max_diff_c(o2.samples(), o3.samples()));
        worst = worst.max(d / scale);
    }
    CriterionResult::new(
        1,
        "cross-method equivalence (3 routes)",
        worst <= TOL,
        pass_line(worst, TOL),
    )
}

/// Criterion 2: negative-frequency bins of QFT_mu(h) are below 1e-9 x peak
/// bin over the same 100 signals as criterion 1.
pub fn criterion_2_one_sided_spectrum() -> CriterionResult {
    const TOL: f64 = 1e-9;
    let mut rng = seeded(1); // same stream as criterion 1
    let basis = QuaternionBasis::standard();
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let z = random_complex_band(&mut rng, 256);
        let h = hyperanalytic(&z, &basis);
        let spec = qft(h.signal(), h.mu());
        let n = spec.len();
        let peak = max_abs_q(spec.bins());
        let neg = spec.bins()[n / 2 + 1..].iter().map(|q| q.abs()).fold(0.0, f64::max);
        worst = worst.max(neg / peak);
    }
    CriterionResult::new(2, "one-sided quaternion spectrum", worst <= TOL, pass_line(worst, TOL))
}

/// Criterion 3: `|sum z conj(o)| <= 1e-9 ||z|| ||o||`, and the Hilbert cross
/// sum `sum f H(g) + sum H(f) g` vanishes to 1e-10 ||f|| ||g|| on random
/// real pairs.
pub fn criterion_3_orthogonality() -> CriterionResult {
    const TOL_ORTHO: f64 = 1e-9;
    const TOL_CROSS: f64 = 1e-10;
    let mut rng = seeded(3);
    let mut worst_ortho: f64 = 0.0;
    for _ in 0..100 {
        let z = random_complex_band(&mut rng, 256);
        let o = orthogonal_hilbert_pair(&z).o;
        let r = orthogonality_residual(&z, &o).expect("equal lengths");
        worst_ortho = worst_ortho.max(r.norm() / (norm2_c(z.samples()) * norm2_c(o.samples())));
    }
    let mut worst_cross: f64 = 0.0;
    for _ in 0..100 {
        let f = random_real_band(&mut rng, 256);
        let g = random_real_band(&mut rng, 256);
        let hf = hilbert_real(&f).expect("length ok");
        let hg = hilbert_real(&g).expect("length ok");
        let cross = f.iter().zip(&hg).map(|(a, b)| a * b).sum::<f64>()
            + hf.iter().zip(&g).map(|(a, b)| a * b).sum::<f64>();
        let nf = f.iter().map(|v| v * v).sum::<f64>().sqrt();
        let ng = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        worst_cross = worst_cross.max(cross.abs() / (nf * ng));
    }
    let passed = worst_ortho <= TOL_ORTHO && worst_cross <= TOL_CROSS;
    CriterionResult::new(
        3,
        "orthogonality and Hilbert cross sum",
        passed,
        format!("residual {worst_ortho:.2e} (tol {TOL_ORTHO:.0e}), cross {worst_cross:.2e} (tol {TOL_CROSS:.0e})"),
    )
}

/// Criterion 4: simplex(hyperanalytic(z)) reproduces z to 1e-10 on random
/// unrestricted signals, and the constant-signal split is exact to rounding.
pub fn criterion_4_simplex_perplex() -> CriterionResult {
    const TOL: f64 = 1e-10;
    let mut rng = seeded(4);
    let basis = QuaternionBasis::standard();
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let z = random_complex_full(&mut rng, 256);
        let h = hyperanalytic(&z, &basis);
        let (z_back, _) = simplex_perplex(&h);
        worst = worst.max(max_diff_c(z_back.samples(), z.samples()));
    }

    // Constant algebraic case: h = 1 + 2i + 3j + 4k splits exactly.
    let h = HyperanalyticSignal::from_parts(
        QuaternionSignal::new(vec![Quaternion::new(1.0, 2.0, 3.0, 4.0); 4]).expect("valid"),
        basis,
    );
    let (z, o) = simplex_perplex(&h);
    let exact = z.samples().iter().all(|&v| v == Complex64::new(1.0, 2.0))
        && o.samples().iter().all(|&v| v == Complex64::new(3.0, -4.0));

    CriterionResult::new(
        4,
        "simplex/perplex split",
        worst <= TOL && exact,
        format!("worst {worst:.2e} (tol {TOL:.0e}), constant case exact: {exact}"),
    )
}

/// Criterion 5: QFT fast path vs direct O(N^2) summation (N in 8/64/256),
/// round trip, the convolution theorem with a real kernel, and the symmetry
/// placement of even/odd parts.
pub fn criterion_5_qft_correctness() -> CriterionResult {
    const TOL_ORACLE: f64 = 1e-10;
    const TOL_ROUND: f64 = 1e-12;
    const TOL_CONV: f64 = 1e-10;
    const TOL_SYM: f64 = 1e-12;
    let mut rng = seeded(5);
    let mu = UnitPureQuaternion::J;

    let mut worst_oracle: f64 = 0.0;
    let mut worst_round: f64 = 0.0;
    for n in [8usize, 64, 256] {
        let s = random_quaternion_signal(&mut rng, n);
        let fast = qft(&s, mu);
        let direct = qft_direct(s.samples(), mu, -1.0, false);
        worst_oracle =
            worst_oracle.max(max_diff_q(fast.bins(), &direct) / max_abs_q(&direct).max(1.0));
        let back = qft_inverse(&fast);
        worst_round =
            worst_round.max(max_diff_q(back.samples(), s.samples()) / max_abs_q(s.samples()).max(1.0));
    }

    // Convolution theorem: QFT(g*f) = QFT(g) QFT(f) bin-wise, f real.
    let n = 64;
    let g = random_complex_full(&mut rng, n);
    let f: Vec<f64> = (0..n).map(|_| uniform(&mut rng)).collect();
    let conv = circular_convolve(&g, &f).expect("equal lengths");
    let xi = UnitPureQuaternion::I;
    let lhs = qft(&embed_complex(&conv, xi), mu);
    let g_hat = qft(&embed_complex(&g, xi), mu);
    let f_hat = qft(
        &QuaternionSignal::new(f.iter().map(|&v| Quaternion::scalar(v)).collect()).expect("valid"),
        mu,
    );
    let rhs: Vec<Quaternion> =
        g_hat.bins().iter().zip(f_hat.bins()).map(|(&gh, &fh)| gh * fh).collect();
    let worst_conv = max_diff_q(lhs.bins(), &rhs) / max_abs_q(&rhs).max(1.0);

    // Symmetry placement: each probe signal must land on exactly one axis.
    let n = 16;
    let cos: Vec<f64> = (0..n).map(|t| (TAU * t as f64 / n as f64).cos()).collect();
    let sin: Vec<f64> = (0..n).map(|t| (TAU * t as f64 / n as f64).sin()).collect();
    let probes: [(Vec<Complex64>, usize); 4] = [
        (cos.iter().map(|&v| Complex64::new(v, 0.0)).collect(), 0),
        (sin.iter().map(|&v| Complex64::new(v, 0.0)).collect(), 2),
        (cos.iter().map(|&v| Complex64::new(0.0, v)).collect(), 1),
        (sin.iter().map(|&v| Complex64::new(0.0, v)).collect(), 3),
    ];
    let mut worst_sym: f64 = 0.0;
    for (samples, live) in probes {
        let z = ComplexSignal::new(samples).expect("valid");
        let rep = hypersig_core::spectral::qft_symmetry_report(&z, mu).expect("orthogonal axes");
        let comps = [&rep.scalar, &rep.xi, &rep.mu, &rep.ximu];
        let live_peak = comps[live].iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        for (idx, comp) in comps.iter().enumerate() {
            if idx != live {
                let leak = comp.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
                worst_sym = worst_sym.max(leak / live_peak);
            }
        }
    }

    let passed = worst_oracle <= TOL_ORACLE
        && worst_round <= TOL_ROUND
        && worst_conv <= TOL_CONV
        && worst_sym <= TOL_SYM;
    CriterionResult::new(
        5,
        "QFT correctness (oracle/round trip/conv/symmetry)",
        passed,
        format!(
            "oracle {worst_oracle:.2e}, round {worst_round:.2e}, conv {worst_conv:.2e}, sym {worst_sym:.2e}"
        ),
    )
}

/// Criterion 6: Cayley-Dickson polar round trip to 1e-10 relative on 10^4
/// random non-degenerate quaternions; the degenerate set reports an error,
/// never values.
pub fn criterion_6_cd_polar_form() -> CriterionResult {
    const TOL: f64 = 1e-10;
    let mut rng = seeded(6);
    let basis = QuaternionBasis::standard();
    let mut worst: f64 = 0.0;
    let mut accepted = 0usize;
    while accepted < 10_000 {
        let q = Quaternion::new(uniform(&mut rng), uniform(&mut rng), uniform(&mut rng), uniform(&mut rng));
        let pair = cd_split(q, &basis);
        let s = pair.z1 * pair.z1 + pair.z2 * pair.z2;
        if s.norm() <= 0.01 * q.norm_sqr() {
            continue;
        }
        accepted += 1;
        match cdpolar(q) {
            Ok((a, b)) => {
                let back = cdpolar_inverse(a, b);
                worst = worst.max((back - q).max_abs_component() / q.abs());
            }
            Err(_) => {
                return CriterionResult::new(
                    6,
                    "Cayley-Dickson polar form",
                    false,
                    format!("unexpected degeneracy report for {q:?}"),
                );
            }
        }
    }
    // The analytically degenerate input must be detected.
    let degenerate_detected =
        matches!(cdpolar(Quaternion::new(1.0, 0.0, 0.0, 1.0)), Err(QuatError::DegeneratePolar));
    CriterionResult::new(
        6,
        "Cayley-Dickson polar form",
        worst <= TOL && degenerate_detected,
        format!("worst {worst:.2e} (tol {TOL:.0e}), degenerate detected: {degenerate_detected}"),
    )
}

/// Criterion 7: helix-Gaussian defaults demodulate back to the modulator:
/// interior-80% envelope error <= 1e-2 x peak, |Im phi| <= 1e-2 rad,
/// carrier-ramp error <= 1e-2 rad mod 2pi, and the envelope visits all four
/// quadrants.
pub fn criterion_7_modulation_recovery() -> CriterionResult {
    const TOL: f64 = 1e-2;
    let spec = GeneratorSpec::defaults(Waveform::HelixGauss);
    let model = spec.modulation_model().expect("default spec is valid");
    let z = spec.build().expect("default spec is valid");
    let (polar, _) = match demodulate(&z, &QuaternionBasis::standard()) {
        Ok(v) => v,
        Err(e) => {
            return CriterionResult::new(7, "modulation recovery", false, format!("demodulate failed: {e}"))
        }
    };

    let n = z.len();
    let (lo, hi) = (n / 10, n - n / 10);
    let g = model.modulator().samples();
    let a = model.carrier_amplitude();
    let peak = g.iter().map(|v| (v * a).norm()).fold(0.0, f64::max);

    let mut worst_env: f64 = 0.0;
    let mut worst_im: f64 = 0.0;
    let mut worst_ramp: f64 = 0.0;
    for t in lo..hi {
        worst_env = worst_env.max((polar.envelope()[t] - g[t] * a).norm() / peak);
        worst_im = worst_im.max(polar.phase()[t].im.abs());
        let expect = TAU * model.carrier_freq() * t as f64 + model.carrier_phase();
        worst_ramp = worst_ramp.max(wrapped_distance(polar.phase()[t].re, expect));
    }

    // Quadrant coverage of the complex envelope (ignoring near-zero samples).
    let floor = 1e-3 * polar.envelope().iter().map(|e| e.norm()).fold(0.0, f64::max);
    let mut quadrants = [false; 4];
    for e in &polar.envelope()[lo..hi] {
        if e.norm() < floor {
            continue;
        }
        let idx = match (e.re >= 0.0, e.im >= 0.0) {
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        };
        quadrants[idx] = true;
    }
    let all_quadrants = quadrants.iter().all(|&q| q);

    let passed =
        worst_env <= TOL && worst_im <= TOL && worst_ramp <= TOL && all_quadrants;
    CriterionResult::new(
        7,
        "modulation recovery (helix-Gaussian)",
        passed,
        format!(
            "env {worst_env:.2e}, Im(phi) {worst_im:.2e}, ramp {worst_ramp:.2e} (tol {TOL:.0e}), quadrants {}",
            quadrants.iter().filter(|&&q| q).count()
        ),
    )
}

/// Criterion 8: the improper family shows the proper covariance pattern at
/// 1e-6 relative with nonzero beta; the proper tone is superproper with
/// alpha = beta = N/2 at unit sample period, verified by direct summation.
pub fn criterion_8_properness() -> CriterionResult {
    const TOL: f64 = 1e-6;
    let mut rng = seeded(8);
    let basis = QuaternionBasis::standard();

    // Improper family: z_i is a phase-shifted copy of z_r.
    let chi: f64 = 0.7;
    let mut worst_pattern: f64 = 0.0;
    let mut min_beta: f64 = f64::INFINITY;
    let mut improper_ok = true;
    for _ in 0..10 {
        let zr = random_real_band(&mut rng, 256);
        let hzr = hilbert_real(&zr).expect("length ok");
        let z = ComplexSignal::new(
            zr.iter()
                .zip(&hzr)
                .map(|(&r, &h)| Complex64::new(r, chi.cos() * r + chi.sin() * h))
                .collect(),
        )
        .expect("valid");
        let h = hyperanalytic(&z, &basis);
        let c = covariance(&h);
        let e = c.trace_energy();
        for residual in [
            c[(0, 2)].abs(),
            c[(1, 3)].abs(),
            (c[(0, 0)] - c[(2, 2)]).abs(),
            (c[(1, 1)] - c[(3, 3)]).abs(),
            (c[(1, 2)] - c[(0, 3)]).abs(),
            (c[(2, 3)] + c[(0, 1)]).abs(),
        ] {
            worst_pattern = worst_pattern.max(residual / e);
        }
        let report = classify(&c, TOL);
        min_beta = min_beta.min(report.beta.abs() / e);
        improper_ok &= report.classification == PropernessClass::CMuProper;
    }
    let beta_nonzero = min_beta > 1e-3;

    // Proper tone: z = exp(i 2 pi k0 n / N), N = 256, k0 = 8.
    let n = 256;
    let tone = ComplexSignal::new(
        (0..n).map(|t| Complex64::from_polar(1.0, TAU * (8 * t) as f64 / n as f64)).collect(),
    )
    .expect("valid");
    let c = covariance(&hyperanalytic(&tone, &basis));
    let report = classify(&c, TOL);
    let half = n as f64 / 2.0;
    // Direct summation oracle for the expected scalar values.
    let alpha_direct: f64 = tone.samples().iter().map(|v| v.re * v.re).sum();
    let tone_ok = report.classification == PropernessClass::CMuSuperproper
        && (report.alpha - half).abs() <= TOL * half
        && (report.beta - half).abs() <= TOL * half
        && (report.alpha - alpha_direct).abs() <= TOL * half
        && report.gamma.abs() <= TOL * c.trace_energy();

    let passed = worst_pattern <= TOL && beta_nonzero && improper_ok && tone_ok;
    CriterionResult::new(
        8,
        "properness patterns (proper/superproper)",
        passed,
        format!(
            "pattern {worst_pattern:.2e} (tol {TOL:.0e}), min |beta|/E {min_beta:.2e}, tone superproper: {tone_ok}"
        ),
    )
}
