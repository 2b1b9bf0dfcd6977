//! Entanglement swapping by Bell-state measurement on the leaked fields.
//!
//! Each qubit starts in `cos(θ/2)|e⟩ + sin(θ/2)e^{iφ}|g⟩` with its cavity and
//! environment in vacuum. Projecting the two environments onto a field Bell
//! state leaves the qubit pair in a conditional pure state. The photon
//! wavepacket of subsystem `k` is `cos(θ_k/2)` times a function shared by both
//! subsystems, so its overlap with any pulse shape `Θ` is `cos(θ_k/2)·G(t)`
//! with one common `G`:
//!
//! * `Ψ^∓` outcomes carry exactly one factor `G` in every amplitude, which
//!   drops out on normalization; the result does not depend on `Θ`.
//! * `Φ^±` outcomes mix the vacuum–vacuum branch with the two-photon branch
//!   `G²`. For `Θ` equal to the cavity's Lorentzian response `G = Γ(t)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::dynamics::{AmplitudePair, SystemParams};
use crate::error::{Error, Result};
use crate::qubit::{PureTwoQubitState, QubitInit};

/// Outcome weights below this are treated as impossible.
const ZERO_PROBABILITY: f64 = 1e-14;
const ROOT_SCAN_STEP: f64 = 1e-3;
const ROOT_TOL: f64 = 1e-10;

/// Bloch angles of both qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairInit {
    pub theta1: f64,
    pub phi1: f64,
    pub theta2: f64,
    pub phi2: f64,
}

impl PairInit {
    pub fn new(theta1: f64, phi1: f64, theta2: f64, phi2: f64) -> Result<Self> {
        QubitInit::new(theta1, phi1)?;
        QubitInit::new(theta2, phi2)?;
        Ok(Self { theta1, phi1, theta2, phi2 })
    }

    /// Both qubits excited.
    pub fn excited() -> Self {
        Self { theta1: 0.0, phi1: 0.0, theta2: 0.0, phi2: 0.0 }
    }

    pub fn qubits(&self) -> Result<(QubitInit, QubitInit)> {
        Ok((QubitInit::new(self.theta1, self.phi1)?, QubitInit::new(self.theta2, self.phi2)?))
    }

    /// The same pair with the qubit labels exchanged.
    pub fn swapped(&self) -> Self {
        Self { theta1: self.theta2, phi1: self.phi2, theta2: self.theta1, phi2: self.phi1 }
    }
}

/// Field Bell state selected by the measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellChannel {
    PsiMinus,
    PsiPlus,
    PhiPlus,
    PhiMinus,
}

impl BellChannel {
    pub const ALL: [BellChannel; 4] =
        [BellChannel::PsiMinus, BellChannel::PsiPlus, BellChannel::PhiPlus, BellChannel::PhiMinus];

    fn sign(self) -> f64 {
        match self {
            BellChannel::PsiMinus | BellChannel::PhiMinus => -1.0,
            BellChannel::PsiPlus | BellChannel::PhiPlus => 1.0,
        }
    }

    /// `Ψ` outcomes keep one photon in total, `Φ` outcomes zero or two.
    pub fn is_psi(self) -> bool {
        matches!(self, BellChannel::PsiMinus | BellChannel::PsiPlus)
    }

    /// The single phase combination the concurrence depends on: `φ₁ − φ₂`
    /// for `Ψ^±`, `φ₁ + φ₂` for `Φ^±`.
    pub fn phase(self, init: &PairInit) -> f64 {
        if self.is_psi() {
            init.phi1 - init.phi2
        } else {
            init.phi1 + init.phi2
        }
    }
}

impl fmt::Display for BellChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellChannel::PsiMinus => "psi-minus",
            BellChannel::PsiPlus => "psi-plus",
            BellChannel::PhiPlus => "phi-plus",
            BellChannel::PhiMinus => "phi-minus",
        })
    }
}

impl FromStr for BellChannel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        match key.as_str() {
            "psiminus" | "psim" => Ok(BellChannel::PsiMinus),
            "psiplus" | "psip" => Ok(BellChannel::PsiPlus),
            "phiplus" | "phip" => Ok(BellChannel::PhiPlus),
            "phiminus" | "phim" => Ok(BellChannel::PhiMinus),
            _ => Err(format!("unknown Bell channel '{s}'")),
        }
    }
}

/// Ψ amplitudes with an explicit photon-overlap factor.
fn psi_amplitudes(sign: f64, c1: f64, d1: C64, c2: f64, d2: C64, e: C64, overlap: C64) -> [C64; 4] {
    let cc = e * (c1 * c2);
    [C64::new(0.0, 0.0), cc * overlap, cc * sign * overlap, (d1 * c2 + d2 * c1 * sign) * overlap]
}

fn phi_amplitudes(sign: f64, c1: f64, d1: C64, c2: f64, d2: C64, e: C64, gamma: C64) -> [C64; 4] {
    [e * e * (c1 * c2), e * d2 * c1, e * d1 * c2, d1 * d2 + gamma * gamma * (sign * c1 * c2)]
}

/// Conditional two-qubit state after projecting the fields onto `channel`.
pub fn post_bsm_state(
    channel: BellChannel,
    params: &SystemParams,
    init: &PairInit,
    tau: f64,
) -> Result<PureTwoQubitState> {
    let (q1, q2) = init.qubits()?;
    let amps = AmplitudePair::at(params, tau)?;
    let (c1, d1, c2, d2) = (q1.excited(), q1.ground(), q2.excited(), q2.ground());
    let raw = if channel.is_psi() {
        psi_amplitudes(channel.sign(), c1, d1, c2, d2, amps.survival, C64::new(1.0, 0.0))
    } else {
        phi_amplitudes(channel.sign(), c1, d1, c2, d2, amps.survival, amps.gamma)
    };
    PureTwoQubitState::from_unnormalized(raw)
}

/// Closed-form concurrence of the swapped state, parametrized by
/// `x_k = cos²(θ_k/2)` and [`BellChannel::phase`].
///
/// Fixing the time fixes `|𝓔|²` and `Γ²`; the remaining dependence on the
/// initial state is what the entangling-power averages integrate over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapKernel {
    pub channel: BellChannel,
    survival_sq: f64,
    gamma_sq: C64,
}

impl SwapKernel {
    pub fn new(channel: BellChannel, amps: &AmplitudePair) -> Self {
        Self { channel, survival_sq: amps.survival.norm_sqr(), gamma_sq: amps.gamma * amps.gamma }
    }

    pub fn at(channel: BellChannel, params: &SystemParams, tau: f64) -> Result<Self> {
        Ok(Self::new(channel, &AmplitudePair::at(params, tau)?))
    }

    /// `(numerator, denominator)` of the concurrence; the denominator is the
    /// squared norm of the unnormalized post-measurement state.
    pub fn terms(&self, x1: f64, x2: f64, phase: f64) -> (f64, f64) {
        let s = self.channel.sign();
        let cos1 = 2.0 * x1 - 1.0;
        let cos2 = 2.0 * x2 - 1.0;
        let sin12 = 4.0 * (x1 * (1.0 - x1) * x2 * (1.0 - x2)).max(0.0).sqrt();
        let e2 = self.survival_sq;
        if self.channel.is_psi() {
            let t1 = 2.0 * x1 * x2 * e2;
            let t2 = 0.5 * (1.0 - cos1 * cos2 + s * sin12 * phase.cos());
            (t1, t1 + t2.max(0.0))
        } else {
            let g2 = self.gamma_sq.norm();
            let t = 2.0 * x1 * x2 * e2 * g2;
            let cross = (C64::from_polar(1.0, -phase) * self.gamma_sq).re;
            let n = x1 * x2 * (e2 * e2 + g2 * g2)
                + 0.5 * e2 * (1.0 - cos1 * cos2)
                + (1.0 - x1) * (1.0 - x2)
                + s * 0.5 * sin12 * cross;
            (t, n)
        }
    }

    /// Concurrence, or `None` for a zero-probability outcome.
    pub fn concurrence(&self, x1: f64, x2: f64, phase: f64) -> Option<f64> {
        let (num, den) = self.terms(x1, x2, phase);
        (den > ZERO_PROBABILITY).then(|| (num / den).clamp(0.0, 1.0))
    }

    pub fn concurrence_for(&self, init: &PairInit) -> Result<f64> {
        let x1 = (0.5 * init.theta1).cos().powi(2);
        let x2 = (0.5 * init.theta2).cos().powi(2);
        self.concurrence(x1, x2, self.channel.phase(init))
            .ok_or_else(|| Error::ZeroProbability(self.terms(x1, x2, self.channel.phase(init)).1))
    }
}

/// Closed-form concurrence of the swapped state for any channel.
pub fn concurrence(channel: BellChannel, params: &SystemParams, init: &PairInit, tau: f64) -> Result<f64> {
    PairInit::new(init.theta1, init.phi1, init.theta2, init.phi2)?;
    SwapKernel::at(channel, params, tau)?.concurrence_for(init)
}

/// `T₁/(T₁+T₂)` for the `Ψ⁻` outcome.
pub fn concurrence_psi_minus(params: &SystemParams, init: &PairInit, tau: f64) -> Result<f64> {
    concurrence(BellChannel::PsiMinus, params, init, tau)
}

/// `T/N⁺` for the `Φ⁺` outcome with a Lorentzian pulse shape.
pub fn concurrence_phi_plus(params: &SystemParams, init: &PairInit, tau: f64) -> Result<f64> {
    concurrence(BellChannel::PhiPlus, params, init, tau)
}

/// Times in `(0, τ_max]` where `|𝓔| = |Γ|`, i.e. where the `Φ⁺` concurrence
/// of the `|e,e⟩` input reaches 1.
pub fn maximal_entanglement_times(params: &SystemParams, tau_max: f64) -> Result<Vec<f64>> {
    if !(tau_max.is_finite() && tau_max >= 0.0) {
        return Err(Error::InvalidParams(format!("tau_max must be non-negative, got {tau_max}")));
    }
    let gap = |tau: f64| -> Result<f64> {
        let a = AmplitudePair::at(params, tau)?;
        Ok(a.survival.norm() - a.gamma.norm())
    };
    let steps = (tau_max / ROOT_SCAN_STEP).ceil() as usize;
    let mut roots = Vec::new();
    let mut lo = 0.0;
    let mut f_lo = gap(lo)?;
    for k in 1..=steps {
        let hi = (k as f64 * ROOT_SCAN_STEP).min(tau_max);
        let f_hi = gap(hi)?;
        if f_hi == 0.0 {
            roots.push(hi);
        } else if f_lo != 0.0 && f_lo.signum() != f_hi.signum() {
            let (mut a, mut b, mut fa) = (lo, hi, f_lo);
            while b - a > ROOT_TOL {
                let m = 0.5 * (a + b);
                let fm = gap(m)?;
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push(0.5 * (a + b));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(roots)
}
