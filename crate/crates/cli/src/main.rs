use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use swapsim_cli::{fig_recipe, run_sweep, CliError, Quantity, Result, Settings, SweepConfig};
use swapsim_core::AverageSpec;

/// Qubits in lossy cavities: amplitudes, entropies and swapped entanglement
/// as CSV time series.
#[derive(Parser)]
#[command(name = "swapsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Survival amplitude of the excited qubit.
    Amplitude(SweepArgs),
    /// Cavity-photon amplitude.
    Gamma(SweepArgs),
    /// Haar-averaged qubit linear entropy.
    EntropyAvg(SweepArgs),
    /// Swapped concurrence for one initial pair.
    Concurrence(SweepArgs),
    /// Entangling power (Haar-averaged swapped concurrence).
    Epower(SweepArgs),
    /// Times where the |e,e⟩ pair reaches unit concurrence after Φ⁺.
    PeakTimes(SweepArgs),
    /// Reproduce the data behind one figure.
    Fig {
        #[arg(long)]
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// key=value file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    channel: Option<String>,
    /// Coupling ratio g/κ.
    #[arg(long)]
    r: Option<f64>,
    /// Detuning Δ/κ (Δ/g with --ideal).
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<f64>,
    /// Lossless cavity; time is measured in 1/g.
    #[arg(long)]
    ideal: bool,
    #[arg(long)]
    theta1: Option<f64>,
    #[arg(long)]
    phi1: Option<f64>,
    #[arg(long)]
    theta2: Option<f64>,
    #[arg(long)]
    phi2: Option<f64>,
    #[arg(long)]
    tau_max: Option<f64>,
    #[arg(long)]
    tau_step: Option<f64>,
    /// q (quadrature) or mc (Monte Carlo).
    #[arg(long)]
    scheme: Option<String>,
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    /// Monte Carlo seed [default: $SWAPSIM_SEED, else 42].
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn settings(&self) -> Result<Settings> {
        let mut s = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                Settings::parse_file(&text)?
            }
            None => Settings::default(),
        };
        let mut flags = Settings::default();
        let numbers = [
            ("r", self.r),
            ("delta", self.delta),
            ("theta1", self.theta1),
            ("phi1", self.phi1),
            ("theta2", self.theta2),
            ("phi2", self.phi2),
            ("tau-max", self.tau_max),
            ("tau-step", self.tau_step),
        ];
        for (k, v) in numbers {
            if let Some(v) = v {
                flags.set(k, v.to_string())?;
            }
        }
        if let Some(v) = &self.channel {
            flags.set("channel", v.clone())?;
        }
        if let Some(v) = &self.scheme {
            flags.set("scheme", v.clone())?;
        }
        if let Some(v) = self.nodes {
            flags.set("nodes", v.to_string())?;
        }
        if let Some(v) = self.samples {
            flags.set("samples", v.to_string())?;
        }
        if let Some(v) = self.seed {
            flags.set("seed", v.to_string())?;
        }
        if let Some(v) = &self.out {
            flags.set("out", v.display().to_string())?;
        }
        if self.ideal {
            flags.set("ideal", "true")?;
        }
        s.merge(&flags);
        Ok(s)
    }
}

fn env_seed() -> Result<u64> {
    match std::env::var("SWAPSIM_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("SWAPSIM_SEED must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(AverageSpec::DEFAULT_SEED),
    }
}

fn run(cli: Cli) -> Result<()> {
    let (cfg, out): (SweepConfig, Option<PathBuf>) = match cli.command {
        Command::Fig { id, out } => (fig_recipe(&id)?, out),
        cmd => {
            let (q, args) = match cmd {
                Command::Amplitude(a) => (Quantity::Amplitude, a),
                Command::Gamma(a) => (Quantity::Gamma, a),
                Command::EntropyAvg(a) => (Quantity::EntropyAvg, a),
                Command::Concurrence(a) => (Quantity::Concurrence, a),
                Command::Epower(a) => (Quantity::Epower, a),
                Command::PeakTimes(a) => (Quantity::PeakTimes, a),
                Command::Fig { .. } => unreachable!(),
            };
            let cfg = args.settings()?.into_config(q, env_seed()?)?;
            let out = cfg.out.clone();
            (cfg, out)
        }
    };
    let series = run_sweep(&cfg)?;
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(&path)?);
            series.write_csv(&mut w)?;
            w.flush()?;
        }
        None => series.write_csv(io::stdout().lock())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("swapsim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
