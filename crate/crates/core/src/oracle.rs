//! Brute-force reference solvers.
//!
//! Nothing here is used to produce results; these routines exist so the
//! closed forms elsewhere in the crate can be checked against an independent
//! numerical route.

use num_complex::Complex64 as C64;

use crate::dynamics::{correlation_kernel, rate_constants, survival_amplitude, SystemParams};
use crate::error::{Error, Result};
use crate::haar::{theta_of, BlochSampler, MeanAccumulator};
use crate::quadrature::{adaptive_simpson, periodic_nodes, GaussLegendre};

/// Time-stepping scheme for the amplitude equation
/// `C'(τ) = −∫₀^τ f(τ−s) C(s) ds`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolterraMethod {
    /// Exponential kernel folded into an auxiliary amplitude
    /// `y = ∫ f(τ−s) C(s) ds`, integrated with classical RK4.
    OdeReduction,
    /// Direct discretization with trapezoidal memory sums, Richardson
    /// extrapolated over `h, h/2, h/4`.
    TrapezoidVolterra,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub t_max: f64,
    pub steps: usize,
    pub method: VolterraMethod,
}

impl GridSpec {
    pub fn new(t_max: f64, steps: usize, method: VolterraMethod) -> Result<Self> {
        if !(t_max.is_finite() && t_max > 0.0) {
            return Err(Error::InvalidGrid(format!("t_max must be positive, got {t_max}")));
        }
        if steps < 10 {
            return Err(Error::InvalidGrid(format!("need at least 10 steps, got {steps}")));
        }
        Ok(Self { t_max, steps, method })
    }

    pub fn step(&self) -> f64 {
        self.t_max / self.steps as f64
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        (0..=self.steps).map(move |k| k as f64 * h)
    }
}

/// `C(τ_k)/C(0)` on the grid, by brute-force integration of the memory
/// equation.
pub fn solve_volterra_amplitude(params: &SystemParams, grid: &GridSpec) -> Result<Vec<C64>> {
    let grid = GridSpec::new(grid.t_max, grid.steps, grid.method)?;
    let h = grid.step();
    let stiffness = rate_constants(params).omega.norm().max(params.g) * h;
    if stiffness > 0.1 {
        return Err(Error::GridTooCoarse(stiffness));
    }
    match grid.method {
        VolterraMethod::OdeReduction => Ok(rk4_reduction(params, h, grid.steps)),
        VolterraMethod::TrapezoidVolterra => {
            let coarse = trapezoid_memory(params, h, grid.steps)?;
            let mid = trapezoid_memory(params, h / 2.0, 2 * grid.steps)?;
            let fine = trapezoid_memory(params, h / 4.0, 4 * grid.steps)?;
            Ok((0..=grid.steps)
                .map(|k| {
                    let r1 = (mid[2 * k] * 4.0 - coarse[k]) / 3.0;
                    let r2 = (fine[4 * k] * 4.0 - mid[2 * k]) / 3.0;
                    (r2 * 16.0 - r1) / 15.0
                })
                .collect())
        }
    }
}

fn rk4_reduction(params: &SystemParams, h: f64, steps: usize) -> Vec<C64> {
    let g2 = params.g * params.g;
    let a = params.damping();
    let rhs = |c: C64, y: C64| (-y, c * g2 - a * y);
    let mut c = C64::new(1.0, 0.0);
    let mut y = C64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(steps + 1);
    out.push(c);
    for _ in 0..steps {
        let (k1c, k1y) = rhs(c, y);
        let (k2c, k2y) = rhs(c + k1c * (h / 2.0), y + k1y * (h / 2.0));
        let (k3c, k3y) = rhs(c + k2c * (h / 2.0), y + k2y * (h / 2.0));
        let (k4c, k4y) = rhs(c + k3c * h, y + k3y * h);
        c += (k1c + k2c * 2.0 + k3c * 2.0 + k4c) * (h / 6.0);
        y += (k1y + k2y * 2.0 + k3y * 2.0 + k4y) * (h / 6.0);
        out.push(c);
    }
    out
}

/// Second-order scheme: trapezoid rule for the memory integral
/// `M_n ≈ ∫₀^{τ_n} f(τ_n − s) C(s) ds` and for `C_{n+1} = C_n − ∫ M`.
fn trapezoid_memory(params: &SystemParams, h: f64, steps: usize) -> Result<Vec<C64>> {
    let f: Vec<C64> = (0..=steps).map(|k| correlation_kernel(params, k as f64 * h)).collect::<Result<_>>()?;
    let mut c = Vec::with_capacity(steps + 1);
    c.push(C64::new(1.0, 0.0));
    let mut memory = C64::new(0.0, 0.0);
    let implicit = C64::new(1.0, 0.0) + f[0] * (h * h / 4.0);
    for n in 0..steps {
        // Memory at τ_{n+1} without its C_{n+1} endpoint.
        let mut partial = f[n + 1] * (0.5 * c[0]);
        for k in 1..=n {
            partial += f[n + 1 - k] * c[k];
        }
        partial *= h;
        let next = (c[n] - (memory + partial) * (h / 2.0)) / implicit;
        memory = partial + f[0] * next * (h / 2.0);
        c.push(next);
    }
    Ok(c)
}

/// `Γ(τ) = −ig ∫₀^τ 𝓔(s) e^{−(iΔ+κ)(τ−s)} ds` by adaptive Simpson
/// quadrature (tolerance `1e-9` on the integral).
///
/// The frequency integral over the Lorentzian pulse has already been done:
/// it is the Fourier transform of `|α(ω)|²`, i.e. the cavity propagator.
pub fn gamma_by_quadrature(params: &SystemParams, tau: f64) -> Result<C64> {
    if tau.is_nan() || tau < 0.0 {
        return Err(Error::NegativeTime(tau));
    }
    let a = params.damping();
    let integral = adaptive_simpson(
        |s| {
            let e = survival_amplitude(params, s).expect("s within [0, tau]");
            e * (-a * (tau - s)).exp()
        },
        0.0,
        tau,
        1e-9,
    );
    Ok(C64::new(0.0, -params.g) * integral)
}

/// Product-Haar average of `f(θ₁, φ₁, θ₂, φ₂)` by a full tensor rule:
/// `nodes` Gauss–Legendre points in each `x_k = cos²(θ_k/2)` and `2·nodes`
/// periodic trapezoid points in each `φ_k`.
pub fn haar_average_quadrature<F>(f: F, nodes: usize) -> f64
where
    F: Fn(f64, f64, f64, f64) -> f64,
{
    let rule = GaussLegendre::unit(nodes);
    let phis: Vec<f64> = periodic_nodes(2 * nodes).collect();
    let ring = (phis.len() * phis.len()) as f64;
    let mut total = 0.0;
    for (x1, w1) in rule.iter() {
        let t1 = theta_of(x1);
        for (x2, w2) in rule.iter() {
            let t2 = theta_of(x2);
            let mut s = 0.0;
            for &p1 in &phis {
                for &p2 in &phis {
                    s += f(t1, p1, t2, p2);
                }
            }
            total += w1 * w2 * s / ring;
        }
    }
    total
}

/// Monte Carlo product-Haar average: `(mean, stderr)`.
pub fn haar_average_montecarlo<F>(f: F, samples: usize, seed: u64) -> (f64, f64)
where
    F: Fn(f64, f64, f64, f64) -> f64,
{
    let mut sampler = BlochSampler::new(seed);
    let mut acc = MeanAccumulator::default();
    for _ in 0..samples {
        let a = sampler.sample();
        let b = sampler.sample();
        acc.push(f(a.theta, a.phi, b.theta, b.phi));
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(1.0, 9, VolterraMethod::OdeReduction).is_err());
        assert!(GridSpec::new(0.0, 100, VolterraMethod::OdeReduction).is_err());
        let g = GridSpec::new(1.0, 100, VolterraMethod::OdeReduction).unwrap();
        assert!((g.step() - 0.01).abs() < 1e-15);
        assert_eq!(g.times().count(), 101);
    }

    #[test]
    fn coarse_grid_rejected() {
        let p = SystemParams::scaled(10.0, 15.0).unwrap();
        let g = GridSpec::new(3.0, 100, VolterraMethod::OdeReduction).unwrap();
        assert!(matches!(solve_volterra_amplitude(&p, &g), Err(Error::GridTooCoarse(_))));
    }

    #[test]
    fn initial_condition() {
        let p = SystemParams::scaled(1.0, 0.5).unwrap();
        for method in [VolterraMethod::OdeReduction, VolterraMethod::TrapezoidVolterra] {
            let g = GridSpec::new(0.1, 100, method).unwrap();
            let c = solve_volterra_amplitude(&p, &g).unwrap();
            assert_eq!(c[0], C64::new(1.0, 0.0));
            assert_eq!(c.len(), 101);
        }
    }

    #[test]
    fn uncorrected_trapezoid_is_second_order() {
        let p = SystemParams::scaled(2.0, 1.0).unwrap();
        let exact = survival_amplitude(&p, 1.0).unwrap();
        let e1 = (trapezoid_memory(&p, 0.01, 100).unwrap()[100] - exact).norm();
        let e2 = (trapezoid_memory(&p, 0.005, 200).unwrap()[200] - exact).norm();
        let order = (e1 / e2).log2();
        assert!((order - 2.0).abs() < 0.05, "order {order}");
    }

    #[test]
    fn gamma_quadrature_at_zero() {
        let p = SystemParams::scaled(10.0, 0.0).unwrap();
        assert_eq!(gamma_by_quadrature(&p, 0.0).unwrap(), C64::new(0.0, 0.0));
        assert!(gamma_by_quadrature(&p, -0.5).is_err());
    }

    #[test]
    fn haar_quadrature_moments() {
        assert!((haar_average_quadrature(|_, _, _, _| 1.0, 8) - 1.0).abs() < 1e-14);
        let half = haar_average_quadrature(|t1, _, _, _| (0.5 * t1).cos().powi(2), 8);
        assert!((half - 0.5).abs() < 1e-14);
        let third = haar_average_quadrature(|t1, _, _, _| (0.5 * t1).cos().powi(4), 8);
        assert!((third - 1.0 / 3.0).abs() < 1e-14);
        let ring = haar_average_quadrature(|_, p1, _, p2| (p1 - p2).cos().powi(2), 8);
        assert!((ring - 0.5).abs() < 1e-14);
    }

    #[test]
    fn haar_montecarlo_constant() {
        let (m, se) = haar_average_montecarlo(|_, _, _, _| 1.0, 500, 1);
        assert_eq!((m, se), (1.0, 0.0));
    }
}
