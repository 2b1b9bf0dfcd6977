//! Sweep configuration, assembled from flags and `key=value` files.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use swapsim_core::{AverageSpec, BellChannel, PairInit, SystemParams};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Amplitude,
    Gamma,
    EntropyAvg,
    Concurrence,
    Epower,
    PeakTimes,
}

impl Quantity {
    pub const ALL: [Quantity; 6] = [
        Quantity::Amplitude,
        Quantity::Gamma,
        Quantity::EntropyAvg,
        Quantity::Concurrence,
        Quantity::Epower,
        Quantity::PeakTimes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Amplitude => "amplitude",
            Quantity::Gamma => "gamma",
            Quantity::EntropyAvg => "entropy-avg",
            Quantity::Concurrence => "concurrence",
            Quantity::Epower => "epower",
            Quantity::PeakTimes => "peak-times",
        }
    }

    fn default_channel(self) -> BellChannel {
        match self {
            Quantity::Epower => BellChannel::PsiMinus,
            _ => BellChannel::PhiPlus,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| CliError::usage(format!("unknown quantity {s:?}")))
    }
}

/// One line on a plot: a cavity and, where it matters, an initial pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    /// Column prefix; empty for single-curve sweeps.
    pub label: String,
    pub params: SystemParams,
    pub init: PairInit,
}

impl Curve {
    pub fn column(&self, base: &str) -> String {
        if self.label.is_empty() {
            base.to_string()
        } else {
            format!("{}_{base}", self.label)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub quantity: Quantity,
    pub channel: BellChannel,
    pub curves: Vec<Curve>,
    pub tau_max: f64,
    pub tau_step: f64,
    pub average: AverageSpec,
    pub out: Option<PathBuf>,
}

const MAX_POINTS: usize = 10_000_000;

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tau_step.is_finite() && self.tau_step > 0.0) {
            return Err(CliError::usage(format!("tau-step must be positive, got {}", self.tau_step)));
        }
        if !(self.tau_max.is_finite() && self.tau_max >= self.tau_step) {
            return Err(CliError::usage(format!(
                "tau-max must be at least tau-step, got {} < {}",
                self.tau_max, self.tau_step
            )));
        }
        if self.tau_max / self.tau_step > MAX_POINTS as f64 {
            return Err(CliError::usage("grid has more than 1e7 points"));
        }
        if self.curves.is_empty() {
            return Err(CliError::usage("no curves to evaluate"));
        }
        if self.quantity == Quantity::PeakTimes && self.curves.len() != 1 {
            return Err(CliError::usage("peak-times takes exactly one parameter set"));
        }
        self.average.validate().map_err(|e| CliError::usage(e.to_string()))
    }

    /// `0, h, 2h, …` up to and including `tau_max` (with a little rounding
    /// slack).
    pub fn taus(&self) -> Vec<f64> {
        let n = (self.tau_max / self.tau_step + 1e-9).floor() as usize;
        (0..=n).map(|k| k as f64 * self.tau_step).collect()
    }

    pub fn seed(&self) -> Option<u64> {
        match self.average {
            AverageSpec::MonteCarlo { seed, .. } => Some(seed),
            AverageSpec::Quadrature { .. } => None,
        }
    }
}

pub const KEYS: &[&str] = &[
    "channel", "r", "delta", "ideal", "theta1", "phi1", "theta2", "phi2", "tau-max", "tau-step", "scheme", "nodes",
    "samples", "seed", "out",
];

/// Raw `key → value` strings. Later sources override earlier ones.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings(BTreeMap<String, String>);

impl Settings {
    /// `key=value` lines; `#` starts a comment, blank lines are skipped.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut s = Settings::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("config line {}: expected key=value", n + 1)))?;
            s.set(k.trim(), v.trim())?;
        }
        Ok(s)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<()> {
        let key = key.replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(CliError::usage(format!("unknown setting {key:?}")));
        }
        self.0.insert(key, value.into());
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn merge(&mut self, over: &Settings) {
        for (k, v) in &over.0 {
            self.0.insert(k.clone(), v.clone());
        }
    }

    fn number<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| CliError::usage(format!("{key}: cannot parse {v:?}"))),
        }
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes") => Ok(true),
            Some("false" | "0" | "no") => Ok(false),
            Some(v) => Err(CliError::usage(format!("{key}: expected true/false, got {v:?}"))),
        }
    }

    /// Resolves into a single-curve sweep. `default_seed` applies when no
    /// `seed` key is present.
    pub fn into_config(&self, quantity: Quantity, default_seed: u64) -> Result<SweepConfig> {
        let usage = |e: swapsim_core::Error| CliError::usage(e.to_string());
        let channel = match self.get("channel") {
            Some(c) => c.parse::<BellChannel>().map_err(CliError::Usage)?,
            None => quantity.default_channel(),
        };
        let delta = self.number("delta", 0.0)?;
        let params = if self.flag("ideal")? {
            SystemParams::ideal(delta)
        } else {
            SystemParams::scaled(self.number("r", 10.0)?, delta)
        }
        .map_err(usage)?;
        let init = PairInit::new(
            self.number("theta1", 0.0)?,
            self.number("phi1", 0.0)?,
            self.number("theta2", 0.0)?,
            self.number("phi2", 0.0)?,
        )
        .map_err(usage)?;
        let average = match self.get("scheme").unwrap_or("q") {
            "q" | "quadrature" => AverageSpec::quadrature(self.number("nodes", 32)?),
            "mc" | "montecarlo" => AverageSpec::monte_carlo(
                self.number("samples", AverageSpec::DEFAULT_SAMPLES)?,
                self.number("seed", default_seed)?,
            ),
            other => return Err(CliError::usage(format!("scheme must be q or mc, got {other:?}"))),
        };
        let cfg = SweepConfig {
            quantity,
            channel,
            curves: vec![Curve { label: String::new(), params, init }],
            tau_max: self.number("tau-max", 3.0)?,
            tau_step: self.number("tau-step", 0.01)?,
            average,
            out: self.get("out").map(PathBuf::from),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let s = Settings::parse_file("# cavity\nr = 0.1\n\ndelta=1.5 # detuned\ntau_max=20\n").unwrap();
        assert_eq!(s.get("r"), Some("0.1"));
        assert_eq!(s.get("delta"), Some("1.5"));
        assert_eq!(s.get("tau-max"), Some("20"));
        assert!(Settings::parse_file("r 0.1").is_err());
        assert!(Settings::parse_file("colour=blue").is_err());
    }

    #[test]
    fn later_settings_win() {
        let mut base = Settings::parse_file("r=0.1\ndelta=2").unwrap();
        let mut flags = Settings::default();
        flags.set("r", "10").unwrap();
        base.merge(&flags);
        let cfg = base.into_config(Quantity::Amplitude, 42).unwrap();
        assert_eq!(cfg.curves[0].params.ratio(), Some(10.0));
        assert_eq!(cfg.curves[0].params.delta, 2.0);
    }

    #[test]
    fn grid_and_validation() {
        let mut s = Settings::default();
        s.set("tau-max", "1").unwrap();
        s.set("tau-step", "0.1").unwrap();
        let cfg = s.into_config(Quantity::Gamma, 42).unwrap();
        let t = cfg.taus();
        assert_eq!(t.len(), 11);
        assert!((t[10] - 1.0).abs() < 1e-12);
        s.set("tau-step", "0").unwrap();
        assert!(s.into_config(Quantity::Gamma, 42).is_err());
        s.set("tau-step", "2").unwrap();
        assert!(s.clone().into_config(Quantity::Gamma, 42).is_err());
    }

    #[test]
    fn seed_defaults() {
        let mut s = Settings::default();
        s.set("scheme", "mc").unwrap();
        assert_eq!(s.into_config(Quantity::Epower, 9).unwrap().seed(), Some(9));
        s.set("seed", "5").unwrap();
        assert_eq!(s.into_config(Quantity::Epower, 9).unwrap().seed(), Some(5));
        assert_eq!(Settings::default().into_config(Quantity::Epower, 9).unwrap().seed(), None);
    }

    #[test]
    fn quantity_names_round_trip() {
        for q in Quantity::ALL {
            assert_eq!(q.name().parse::<Quantity>().unwrap(), q);
        }
        assert!("entropy".parse::<Quantity>().is_err());
    }
}
