//! Closed-form amplitude dynamics of a single qubit in a leaky cavity.
//!
//! The cavity couples to a flat continuum, which yields a Lorentzian spectral
//! density and an exponential memory kernel. The excited-state amplitude then
//! has an exact closed form valid in both the weak (Markovian) and strong
//! (non-Markovian) coupling regimes.
//!
//! All quantities use scaled units: with `kappa > 0` time is `τ = κt` and
//! frequencies are in units of `κ`; for an ideal cavity (`kappa == 0`) the
//! coupling `g` is the unit instead.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Below this value of `|Ω|τ` the hyperbolic functions are replaced by their
/// Taylor series.
const SERIES_SWITCH: f64 = 1e-6;

/// Physical parameters of one qubit + lossy cavity subsystem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Qubit–cavity coupling.
    pub g: f64,
    /// Cavity decay rate.
    pub kappa: f64,
    /// Detuning `ω_c − ω_qb`.
    pub delta: f64,
    /// Lossless cavity; implies `kappa == 0`.
    pub ideal_cavity: bool,
}

impl SystemParams {
    pub fn new(g: f64, kappa: f64, delta: f64) -> Result<Self> {
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::InvalidParams(format!("coupling g must be positive, got {g}")));
        }
        if !(kappa.is_finite() && kappa >= 0.0) {
            return Err(Error::InvalidParams(format!("decay rate kappa must be non-negative, got {kappa}")));
        }
        if !delta.is_finite() {
            return Err(Error::InvalidParams(format!("detuning must be finite, got {delta}")));
        }
        Ok(Self { g, kappa, delta, ideal_cavity: kappa == 0.0 })
    }

    /// Parameters in `κ = 1` units: `g = R`, `Δ = delta_over_kappa`.
    pub fn scaled(r: f64, delta_over_kappa: f64) -> Result<Self> {
        Self::new(r, 1.0, delta_over_kappa)
    }

    /// Ideal (lossless) cavity in `g = 1` units.
    pub fn ideal(delta_over_g: f64) -> Result<Self> {
        Self::new(1.0, 0.0, delta_over_g)
    }

    /// Coupling-to-decay ratio `R = g/κ`; `None` for an ideal cavity.
    pub fn ratio(&self) -> Option<f64> {
        (self.kappa > 0.0).then(|| self.g / self.kappa)
    }

    /// `iΔ + κ`, the complex decay constant of the cavity mode.
    pub fn damping(&self) -> C64 {
        C64::new(self.kappa, self.delta)
    }
}

/// Rates entering the closed-form solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateConstants {
    /// Rabi frequency `Ω_R = sqrt(Δ² + 4g²)`.
    pub omega_r: f64,
    /// `Ω = sqrt(κ² − Ω_R² + 2iΔκ)`, principal branch.
    pub omega: C64,
    /// `(−(iΔ+κ) + Ω)/2`.
    pub lambda_plus: C64,
    /// `(−(iΔ+κ) − Ω)/2`.
    pub lambda_minus: C64,
}

/// Principal square root with the tie rule `Im ≥ 0` on the imaginary axis.
fn principal_sqrt(z: C64) -> C64 {
    let mut w = z.sqrt();
    if w.re < 0.0 || (w.re == 0.0 && w.im < 0.0) {
        w = -w;
    }
    w
}

pub fn rate_constants(params: &SystemParams) -> RateConstants {
    let SystemParams { g, kappa, delta, .. } = *params;
    let omega_r = (delta * delta + 4.0 * g * g).sqrt();
    let omega = principal_sqrt(C64::new(kappa * kappa - omega_r * omega_r, 2.0 * delta * kappa));
    let a = params.damping();
    RateConstants { omega_r, omega, lambda_plus: (-a + omega) * 0.5, lambda_minus: (-a - omega) * 0.5 }
}

/// `(e^{−aτ/2} cosh(Ωτ/2), e^{−aτ/2} sinh(Ωτ/2)/Ω)` with `a = iΔ + κ`.
fn hyperbolic_pair(a: C64, rates: &RateConstants, tau: f64) -> (C64, C64) {
    let omega = rates.omega;
    let z = omega * tau;
    if z.norm() < SERIES_SWITCH {
        // w = (Ωτ/2)²; four terms of cosh and of sinh(y)/y.
        let w = z * z * 0.25;
        let cosh = C64::new(1.0, 0.0) + w / 2.0 + w * w / 24.0 + w * w * w / 720.0;
        let sinhc = C64::new(1.0, 0.0) + w / 6.0 + w * w / 120.0 + w * w * w / 5040.0;
        let envelope = (-a * tau * 0.5).exp();
        return (envelope * cosh, envelope * sinhc * (tau * 0.5));
    }
    if z.re * 0.5 > 20.0 {
        // Growing and decaying exponentials separated to avoid overflow.
        let ep = (rates.lambda_plus * tau).exp();
        let em = (rates.lambda_minus * tau).exp();
        return ((ep + em) * 0.5, (ep - em) / (omega * 2.0));
    }
    let envelope = (-a * tau * 0.5).exp();
    let half = z * 0.5;
    (envelope * half.cosh(), envelope * half.sinh() / omega)
}

fn check_time(tau: f64) -> Result<()> {
    if tau.is_nan() || tau < 0.0 {
        return Err(Error::NegativeTime(tau));
    }
    Ok(())
}

/// Survival amplitude `𝓔(τ) = C(τ)/C(0)` of the excited qubit state.
pub fn survival_amplitude(params: &SystemParams, tau: f64) -> Result<C64> {
    check_time(tau)?;
    let rates = rate_constants(params);
    Ok(survival_with(params, &rates, tau))
}

fn survival_with(params: &SystemParams, rates: &RateConstants, tau: f64) -> C64 {
    if params.ideal_cavity && params.delta == 0.0 {
        return C64::new((params.g * tau).cos(), 0.0);
    }
    let a = params.damping();
    let (ch, sh) = hyperbolic_pair(a, rates, tau);
    ch + a * sh
}

/// Cavity-photon amplitude `Γ(τ)` for an incoming pulse shaped like the
/// cavity's own Lorentzian response.
pub fn gamma_amplitude(params: &SystemParams, tau: f64) -> Result<C64> {
    check_time(tau)?;
    let rates = rate_constants(params);
    Ok(gamma_with(params, &rates, tau))
}

fn gamma_with(params: &SystemParams, rates: &RateConstants, tau: f64) -> C64 {
    if params.ideal_cavity && params.delta == 0.0 {
        return C64::new(0.0, -(params.g * tau).sin());
    }
    let (_, sh) = hyperbolic_pair(params.damping(), rates, tau);
    -I * 2.0 * params.g * sh
}

/// The pair `(𝓔(τ), Γ(τ))` at one time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePair {
    pub survival: C64,
    pub gamma: C64,
}

impl AmplitudePair {
    pub fn at(params: &SystemParams, tau: f64) -> Result<Self> {
        check_time(tau)?;
        let rates = rate_constants(params);
        Ok(Self { survival: survival_with(params, &rates, tau), gamma: gamma_with(params, &rates, tau) })
    }
}

/// Lorentzian spectral density `J` at a frequency offset from the cavity
/// resonance.
pub fn spectral_density(params: &SystemParams, offset: f64) -> Result<f64> {
    if params.ideal_cavity {
        return Err(Error::IdealCavitySpectrum);
    }
    let SystemParams { g, kappa, .. } = *params;
    Ok(g * g * kappa / (std::f64::consts::PI * (offset * offset + kappa * kappa)))
}

/// Memory kernel `f(s) = g² e^{−κs} e^{−iΔs}`.
pub fn correlation_kernel(params: &SystemParams, s: f64) -> Result<C64> {
    check_time(s)?;
    Ok((-params.damping() * s).exp() * (params.g * params.g))
}

/// Long-time limit of the swapped concurrence for the `|e,e⟩` input and the
/// `Φ⁺` outcome: `2r²/(1+r⁴)` with `r = |2g/(Ω + iΔ + κ)|`.
///
/// Both amplitudes end up carried by the slower exponent `λ₊`; when
/// `Re λ₊ = Re λ₋` the ratio keeps oscillating and there is no limit.
pub fn stationary_concurrence_limit(params: &SystemParams) -> Result<f64> {
    let rates = rate_constants(params);
    let gap = rates.lambda_plus.re - rates.lambda_minus.re;
    if params.ideal_cavity || gap <= 1e-9 * rates.omega.norm().max(1.0) {
        return Err(Error::DegenerateMode(rates.omega.re));
    }
    let r = (2.0 * params.g) / (rates.omega + params.damping()).norm();
    let r2 = r * r;
    Ok(2.0 * r2 / (1.0 + r2 * r2))
}
