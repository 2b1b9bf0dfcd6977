//! Curve sets for the `fig` subcommand, one per figure id.

use std::f64::consts::FRAC_PI_2;

use swapsim_core::{AverageSpec, BellChannel, PairInit, SystemParams};

use crate::config::{Curve, Quantity, SweepConfig};
use crate::error::{CliError, Result};

pub const FIG_IDS: [&str; 9] = ["2a", "2b", "3a", "3b", "4a", "4b", "5", "6a", "6b"];

// Strong coupling evolves on τ ~ 1; weak coupling decays on τ ~ 1/R².
const STRONG: (f64, f64) = (3.0, 0.005);
const WEAK: (f64, f64) = (150.0, 0.25);

fn cavity_pair(r: f64, deltas: [f64; 2]) -> Result<Vec<Curve>> {
    deltas
        .iter()
        .map(|&d| Ok(Curve { label: format!("d{d}"), params: SystemParams::scaled(r, d)?, init: PairInit::excited() }))
        .collect()
}

fn init_pair(r: f64, d: f64) -> Result<Vec<Curve>> {
    let params = SystemParams::scaled(r, d)?;
    Ok(vec![
        Curve { label: "ee".into(), params, init: PairInit::excited() },
        Curve { label: "half".into(), params, init: PairInit::new(FRAC_PI_2, 0.0, FRAC_PI_2, 0.0)? },
    ])
}

pub fn fig_recipe(id: &str) -> Result<SweepConfig> {
    let (quantity, channel, curves, (tau_max, tau_step)) = match id {
        "2a" => (Quantity::EntropyAvg, BellChannel::PsiMinus, cavity_pair(10.0, [0.0, 15.0])?, STRONG),
        "2b" => (Quantity::EntropyAvg, BellChannel::PsiMinus, cavity_pair(0.1, [0.0, 1.5])?, WEAK),
        "3a" => (Quantity::Epower, BellChannel::PsiMinus, cavity_pair(10.0, [0.0, 15.0])?, (3.0, 0.01)),
        "3b" => (Quantity::Epower, BellChannel::PsiMinus, cavity_pair(0.1, [0.0, 1.5])?, (150.0, 1.0)),
        "4a" => (Quantity::Concurrence, BellChannel::PhiPlus, init_pair(10.0, 0.0)?, (3.0, 0.001)),
        "4b" => (Quantity::Concurrence, BellChannel::PhiPlus, init_pair(10.0, 15.0)?, (10.0, 0.001)),
        "5" => (Quantity::Concurrence, BellChannel::PhiPlus, init_pair(0.1, 0.0)?, (150.0, 0.05)),
        "6a" => (Quantity::Epower, BellChannel::PhiPlus, cavity_pair(10.0, [0.0, 15.0])?, (3.0, 0.01)),
        "6b" => (Quantity::Epower, BellChannel::PhiPlus, cavity_pair(0.1, [0.0, 1.5])?, (150.0, 1.0)),
        other => {
            return Err(CliError::usage(format!("unknown figure {other:?}; expected one of {}", FIG_IDS.join(", "))))
        }
    };
    let cfg = SweepConfig { quantity, channel, curves, tau_max, tau_step, average: AverageSpec::default(), out: None };
    cfg.validate()?;
    Ok(cfg)
}
