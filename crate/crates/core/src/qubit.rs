//! One- and two-qubit states, linear entropy and concurrence.
//!
//! Basis order is `|e⟩, |g⟩` for one qubit and `|ee⟩, |eg⟩, |ge⟩, |gg⟩` for
//! two.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix2, Matrix4, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::dynamics::{survival_amplitude, SystemParams};
use crate::error::{Error, Result};

const STATE_TOL: f64 = 1e-12;
/// Negative or spurious eigenvalues of `ρρ̃` below this are treated as zero.
const CLAMP_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix below this (relative to the trace) are
/// rounding noise.
const RANK_TOL: f64 = 1e-14;

fn check_angle(name: &'static str, value: f64, max: f64, closed: bool) -> Result<()> {
    let ok = value >= 0.0 && if closed { value <= max } else { value < max };
    if ok {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange { name, value, range: if closed { "[0, π]" } else { "[0, 2π)" } })
    }
}

/// Bloch angles of a pure qubit state `cos(θ/2)|e⟩ + sin(θ/2)e^{iφ}|g⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitInit {
    pub theta: f64,
    pub phi: f64,
}

impl QubitInit {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        check_angle("theta", theta, PI, true)?;
        check_angle("phi", phi, TAU, false)?;
        Ok(Self { theta, phi })
    }

    /// Initial excited-state amplitude `cos(θ/2)`.
    pub fn excited(&self) -> f64 {
        (0.5 * self.theta).cos()
    }

    /// Initial ground-state amplitude `sin(θ/2)e^{iφ}`, constant in time.
    pub fn ground(&self) -> C64 {
        C64::from_polar((0.5 * self.theta).sin(), self.phi)
    }
}

/// Normalized pure state of two qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureTwoQubitState {
    amps: [C64; 4],
}

impl PureTwoQubitState {
    pub fn new(amps: [C64; 4]) -> Result<Self> {
        let n = norm_sqr(&amps);
        if (n - 1.0).abs() > STATE_TOL {
            return Err(Error::NotNormalized(n));
        }
        Ok(Self { amps })
    }

    /// Normalizes `amps`; a squared norm below `1e-14` is a zero-probability
    /// outcome.
    pub fn from_unnormalized(amps: [C64; 4]) -> Result<Self> {
        let n = norm_sqr(&amps);
        if n.is_nan() || n < 1e-14 {
            return Err(Error::ZeroProbability(n));
        }
        let s = 1.0 / n.sqrt();
        Ok(Self { amps: amps.map(|a| a * s) })
    }

    pub fn amplitudes(&self) -> [C64; 4] {
        self.amps
    }

    pub fn projector(&self) -> DensityMatrix4 {
        let v = self.amps;
        DensityMatrix4 { m: Matrix4::from_fn(|i, j| v[i] * v[j].conj()) }
    }

    /// `|⟨self|other⟩|`, which is 1 when the states agree up to a phase.
    pub fn overlap(&self, other: &Self) -> f64 {
        self.amps.iter().zip(other.amps.iter()).map(|(a, b)| a.conj() * b).sum::<C64>().norm()
    }
}

fn norm_sqr(amps: &[C64; 4]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

/// Single-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    m: Matrix2<C64>,
}

impl DensityMatrix2 {
    pub fn new(m: Matrix2<C64>) -> Result<Self> {
        let herm = (m - m.adjoint()).norm();
        if herm > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("not Hermitian ({herm:e})")));
        }
        let tr = m.trace();
        if (tr - 1.0).norm() > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        let (p, q) = (m[(0, 0)].re, m[(1, 1)].re);
        let disc = ((p - q) * (p - q) + 4.0 * m[(0, 1)].norm_sqr()).sqrt();
        let low = 0.5 * (p + q - disc);
        if low < -STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("eigenvalue {low:e}")));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix2<C64> {
        &self.m
    }

    pub fn purity(&self) -> f64 {
        (self.m * self.m).trace().re
    }
}

/// Two-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    m: Matrix4<C64>,
}

impl DensityMatrix4 {
    pub fn new(m: Matrix4<C64>) -> Result<Self> {
        let herm = (m - m.adjoint()).norm();
        if herm > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("not Hermitian ({herm:e})")));
        }
        let tr = m.trace();
        if (tr - 1.0).norm() > STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        let low = SymmetricEigen::new(m).eigenvalues.min();
        if low < -STATE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("eigenvalue {low:e}")));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix4<C64> {
        &self.m
    }

    /// Convex combination `p·self + (1−p)·other`.
    pub fn mix(&self, other: &Self, p: f64) -> Result<Self> {
        Self::new(self.m * C64::from(p) + other.m * C64::from(1.0 - p))
    }

    pub fn maximally_mixed() -> Self {
        Self { m: Matrix4::identity() * C64::from(0.25) }
    }
}

/// Reduced density matrix of one qubit after tracing out its cavity and
/// environment.
pub fn qubit_reduced_density(params: &SystemParams, init: &QubitInit, tau: f64) -> Result<DensityMatrix2> {
    let init = QubitInit::new(init.theta, init.phi)?;
    let c = survival_amplitude(params, tau)? * init.excited();
    let d = init.ground();
    let pe = c.norm_sqr();
    let coh = c * d.conj();
    DensityMatrix2::new(Matrix2::new(C64::from(pe), coh, coh.conj(), C64::from(1.0 - pe)))
}

/// `1 − Tr ρ²`.
pub fn linear_entropy(rho: &DensityMatrix2) -> f64 {
    (1.0 - rho.purity()).clamp(0.0, 0.5)
}

/// `2|ad − bc|` for `a|ee⟩ + b|eg⟩ + c|ge⟩ + d|gg⟩`.
pub fn concurrence_pure(state: &PureTwoQubitState) -> f64 {
    let [a, b, c, d] = state.amps;
    (2.0 * (a * d - b * c).norm()).min(1.0)
}

/// `σʸ⊗σʸ` in the fixed basis order.
fn spin_flip() -> Matrix4<C64> {
    let one = C64::from(1.0);
    let mut s = Matrix4::zeros();
    s[(0, 3)] = -one;
    s[(1, 2)] = one;
    s[(2, 1)] = one;
    s[(3, 0)] = -one;
    s
}

/// Spin-flipped matrix `ρ̃ = (σʸ⊗σʸ) ρ* (σʸ⊗σʸ)`.
pub fn spin_flipped(rho: &DensityMatrix4) -> Matrix4<C64> {
    let s = spin_flip();
    s * rho.m.conjugate() * s
}

/// Eigenvalues of `ρρ̃` in decreasing order.
///
/// With `ρ = V V†` (columns of `V` are eigenvectors scaled by the square root
/// of their weights) the square roots of these eigenvalues are the singular
/// values of the complex-symmetric matrix `Vᵀ (σʸ⊗σʸ) V`.
pub fn spin_flip_eigenvalues(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    Ok(spin_flip_roots(rho)?.map(|s| s * s))
}

fn spin_flip_roots(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    let eig = SymmetricEigen::new(rho.m);
    let scale = rho.m.trace().re.max(1.0);
    let mut v = Matrix4::<C64>::zeros();
    for (k, &w) in eig.eigenvalues.iter().enumerate() {
        if w < -1e-8 {
            return Err(Error::InvalidDensityMatrix(format!("eigenvalue {w:e}")));
        }
        if w > RANK_TOL * scale {
            v.set_column(k, &(eig.eigenvectors.column(k) * C64::from(w.sqrt())));
        }
    }
    let tau = v.transpose() * spin_flip() * v;
    let mut sv: [f64; 4] = tau.singular_values().as_slice().try_into().expect("4x4 matrix has four singular values");
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Wootters concurrence `max{0, √λ₁ − √λ₂ − √λ₃ − √λ₄}`.
pub fn concurrence_wootters(rho: &DensityMatrix4) -> Result<f64> {
    let roots = spin_flip_roots(rho)?;
    let roots = roots.map(|s| if s * s < CLAMP_TOL { 0.0 } else { s });
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).clamp(0.0, 1.0))
}
