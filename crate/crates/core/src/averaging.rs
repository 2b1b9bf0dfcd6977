//! Input-independent figures of merit: Haar averages over pure initial states.

use crate::dynamics::{survival_amplitude, AmplitudePair, SystemParams};
use crate::error::{Error, Result};
use crate::haar::{theta_of, BlochSampler, MeanAccumulator};
use crate::quadrature::{periodic_nodes, GaussLegendre};
use crate::qubit::{linear_entropy, qubit_reduced_density, QubitInit};
use crate::swap::{BellChannel, SwapKernel};

/// How a Haar average is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AverageSpec {
    /// Gauss–Legendre in each `x = cos²(θ/2)` and a periodic trapezoid rule
    /// in the phase.
    Quadrature { nodes: usize, angle_nodes: usize },
    /// Haar-random initial states from a seeded ChaCha8 stream.
    MonteCarlo { samples: usize, seed: u64 },
}

impl Default for AverageSpec {
    fn default() -> Self {
        AverageSpec::Quadrature { nodes: 32, angle_nodes: 64 }
    }
}

impl AverageSpec {
    pub const DEFAULT_SAMPLES: usize = 200_000;
    pub const DEFAULT_SEED: u64 = 42;

    /// Quadrature with `nodes` Gauss–Legendre points and twice as many phase
    /// points.
    pub fn quadrature(nodes: usize) -> Self {
        AverageSpec::Quadrature { nodes, angle_nodes: 2 * nodes }
    }

    pub fn monte_carlo(samples: usize, seed: u64) -> Self {
        AverageSpec::MonteCarlo { samples, seed }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            AverageSpec::Quadrature { nodes, angle_nodes } if nodes < 8 || angle_nodes < 8 => {
                Err(Error::InvalidAverageSpec(format!("quadrature needs at least 8 nodes, got {nodes}/{angle_nodes}")))
            }
            AverageSpec::MonteCarlo { samples, .. } if samples < 1000 => {
                Err(Error::InvalidAverageSpec(format!("Monte Carlo needs at least 1000 samples, got {samples}")))
            }
            _ => Ok(()),
        }
    }
}

/// An average and its statistical uncertainty (zero for quadrature).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
}

/// Haar average of the qubit–environment linear entropy `1 − Tr ρ_A²`.
pub fn average_linear_entropy(params: &SystemParams, tau: f64, spec: &AverageSpec) -> Result<f64> {
    Ok(average_linear_entropy_estimate(params, tau, spec)?.value)
}

pub fn average_linear_entropy_estimate(params: &SystemParams, tau: f64, spec: &AverageSpec) -> Result<Estimate> {
    spec.validate()?;
    survival_amplitude(params, tau)?;
    let entropy = |theta: f64, phi: f64| -> Result<f64> {
        let init = QubitInit::new(theta, phi)?;
        Ok(linear_entropy(&qubit_reduced_density(params, &init, tau)?))
    };
    match *spec {
        AverageSpec::Quadrature { nodes, angle_nodes } => {
            let rule = GaussLegendre::unit(nodes);
            let mut total = 0.0;
            for (x, w) in rule.iter() {
                let theta = theta_of(x);
                let mut ring = 0.0;
                for phi in periodic_nodes(angle_nodes) {
                    ring += entropy(theta, phi)?;
                }
                total += w * ring / angle_nodes as f64;
            }
            Ok(Estimate { value: total, stderr: 0.0 })
        }
        AverageSpec::MonteCarlo { samples, seed } => {
            let mut sampler = BlochSampler::new(seed);
            let mut acc = MeanAccumulator::default();
            for _ in 0..samples {
                let s = sampler.sample();
                acc.push(entropy(s.theta, s.phi)?);
            }
            let (value, stderr) = acc.finish();
            Ok(Estimate { value, stderr })
        }
    }
}

/// Closed form of the Haar-averaged linear entropy: `(2/3)ε(1−ε)` with
/// `ε = |𝓔(τ)|²`.
///
/// Per input state `S_A = 2x²ε(1−ε)` with `x = cos²(θ/2)`, and `x` is uniform
/// under the Haar measure.
pub fn linear_entropy_closed_form(params: &SystemParams, tau: f64) -> Result<f64> {
    let eps = survival_amplitude(params, tau)?.norm_sqr();
    Ok(2.0 / 3.0 * eps * (1.0 - eps))
}

/// Entangling power: Haar average of the swapped concurrence over product
/// initial states.
///
/// Zero-probability inputs (a measure-zero set) contribute zero.
pub fn entangling_power(channel: BellChannel, params: &SystemParams, tau: f64, spec: &AverageSpec) -> Result<f64> {
    Ok(entangling_power_estimate(channel, params, tau, spec)?.value)
}

pub fn entangling_power_estimate(
    channel: BellChannel,
    params: &SystemParams,
    tau: f64,
    spec: &AverageSpec,
) -> Result<Estimate> {
    spec.validate()?;
    let kernel = SwapKernel::new(channel, &AmplitudePair::at(params, tau)?);
    let integrand = |x1: f64, x2: f64, phase: f64| kernel.concurrence(x1, x2, phase).unwrap_or(0.0);
    let estimate = match *spec {
        AverageSpec::Quadrature { nodes, angle_nodes } => {
            // The integrand depends on the two phases only through one
            // combination, which is itself uniform on the circle.
            let rule = GaussLegendre::unit(nodes);
            let phases: Vec<f64> = periodic_nodes(angle_nodes).collect();
            let mut total = 0.0;
            for (x1, w1) in rule.iter() {
                let mut inner = 0.0;
                for (x2, w2) in rule.iter() {
                    let ring: f64 = phases.iter().map(|&p| integrand(x1, x2, p)).sum();
                    inner += w2 * ring;
                }
                total += w1 * inner;
            }
            Estimate { value: total / angle_nodes as f64, stderr: 0.0 }
        }
        AverageSpec::MonteCarlo { samples, seed } => {
            let mut sampler = BlochSampler::new(seed);
            let mut acc = MeanAccumulator::default();
            for _ in 0..samples {
                let a = sampler.sample();
                let b = sampler.sample();
                let phase = if channel.is_psi() { a.phi - b.phi } else { a.phi + b.phi };
                acc.push(integrand(a.x, b.x, phase));
            }
            let (value, stderr) = acc.finish();
            Estimate { value, stderr }
        }
    };
    Ok(Estimate { value: estimate.value.clamp(0.0, 1.0), ..estimate })
}
