use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hypersig::commands::{self, Method};
use hypersig::error::AppError;
use hypersig::generate::{GeneratorSpec, Waveform};
use hypersig_core::{QuaternionBasis, UnitPureQuaternion};

#[derive(Parser)]
#[command(
    name = "hypersig",
    version,
    about = "Hyperanalytic signal toolkit: orthogonal signals, complex envelope and phase, properness analysis of complex 1-D signals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum WaveformArg {
    #[value(name = "tone")]
    Tone,
    #[value(name = "am_gauss")]
    AmGauss,
    #[value(name = "helix_gauss")]
    HelixGauss,
}

impl From<WaveformArg> for Waveform {
    fn from(w: WaveformArg) -> Self {
        match w {
            WaveformArg::Tone => Waveform::Tone,
            WaveformArg::AmGauss => Waveform::AmGauss,
            WaveformArg::HelixGauss => Waveform::HelixGauss,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(name = "hilbert_pair")]
    HilbertPair,
    #[value(name = "complex_fft")]
    ComplexFft,
    #[value(name = "qft")]
    Qft,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::HilbertPair => Method::HilbertPair,
            MethodArg::ComplexFft => Method::ComplexFft,
            MethodArg::Qft => Method::Qft,
        }
    }
}

fn parse_axis(s: &str) -> Result<UnitPureQuaternion, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated components w,x,y,z, found {}", parts.len()));
    }
    let mut vals = [0.0f64; 4];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p.trim().parse().map_err(|_| format!("bad component '{}'", p.trim()))?;
    }
    if vals[0] != 0.0 {
        return Err(format!("axis must be a pure quaternion (scalar component {}, expected 0)", vals[0]));
    }
    UnitPureQuaternion::new(vals[1], vals[2], vals[3]).map_err(|e| e.to_string())
}

fn parse_centers(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two comma-separated centers a,b, found {}", parts.len()));
    }
    let a = parts[0].trim().parse().map_err(|_| format!("bad center '{}'", parts[0].trim()))?;
    let b = parts[1].trim().parse().map_err(|_| format!("bad center '{}'", parts[1].trim()))?;
    Ok((a, b))
}

#[derive(clap::Args)]
struct AxisArgs {
    /// Embedding axis xi as w,x,y,z (unit pure quaternion)
    #[arg(long, value_parser = parse_axis, default_value = "0,1,0,0")]
    xi: UnitPureQuaternion,
    /// Transform axis mu as w,x,y,z (unit pure, orthogonal to xi)
    #[arg(long, value_parser = parse_axis, default_value = "0,0,1,0")]
    mu: UnitPureQuaternion,
}

impl AxisArgs {
    fn basis(&self) -> Result<QuaternionBasis, AppError> {
        QuaternionBasis::new(self.xi, self.mu).map_err(|e| AppError::InvalidArg(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write an example signal (tone, Gaussian AM, or helix-Gaussian) as CSV
    Generate {
        #[arg(long, value_enum, default_value = "helix_gauss")]
        waveform: WaveformArg,
        /// Number of samples
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Carrier frequency in cycles/sample, in (0, 0.5)
        #[arg(long = "carrier-freq", default_value_t = 0.05)]
        carrier_freq: f64,
        /// Helix frequency in cycles/sample (helix_gauss only)
        #[arg(long = "helix-freq", default_value_t = 0.005)]
        helix_freq: f64,
        /// Carrier phase in radians
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Global complex-plane rotation in radians
        #[arg(long, default_value_t = 0.0)]
        psi: f64,
        /// Gaussian pulse width in samples
        #[arg(long, default_value_t = 60.0)]
        sigma: f64,
        /// Gaussian pulse centers as a,b in samples
        #[arg(long, value_parser = parse_centers, default_value = "300,700")]
        centers: (f64, f64),
        /// Carrier amplitude
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the orthogonal (quadrature) signal of a CSV signal
    Orthogonal {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "qft")]
        method: MethodArg,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        axes: AxisArgs,
    },
    /// Compute the hyperanalytic (quaternion) signal of a CSV signal
    Hyperanalytic {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        axes: AxisArgs,
    },
    /// Extract complex envelope and phase (plus the orthogonal signal)
    Demodulate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        axes: AxisArgs,
    },
    /// Covariance pattern analysis and properness classification
    Properness {
        #[arg(long = "in")]
        input: PathBuf,
        /// Relative tolerance for the pattern checks
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        axes: AxisArgs,
    },
    /// Run the built-in acceptance criteria; exit 0 iff all pass
    Selftest,
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Generate {
            waveform,
            n,
            carrier_freq,
            helix_freq,
            theta,
            psi,
            sigma,
            centers,
            amplitude,
            out,
        } => {
            let spec = GeneratorSpec {
                waveform: waveform.into(),
                n,
                carrier_freq,
                theta,
                psi,
                helix_freq,
                gauss_centers: centers,
                gauss_sigma: sigma,
                amplitude,
            };
            commands::cmd_generate(&spec, &out)
        }
        Command::Orthogonal { input, method, out, axes } => {
            commands::cmd_orthogonal(&input, method.into(), &out, &axes.basis()?)
        }
        Command::Hyperanalytic { input, out, axes } => {
            commands::cmd_hyperanalytic(&input, &out, &axes.basis()?)
        }
        Command::Demodulate { input, out, axes } => {
            commands::cmd_demodulate(&input, &out, &axes.basis()?)
        }
        Command::Properness { input, tol, axes } => {
            let text = commands::cmd_properness(&input, tol, &axes.basis()?)?;
            print!("{text}");
            Ok(())
        }
        Command::Selftest => {
            let (text, verdict) = commands::cmd_selftest();
            print!("{text}");
            verdict
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
