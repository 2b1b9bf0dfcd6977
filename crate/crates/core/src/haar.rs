//! Product Haar measure on pairs of qubit pure states.
//!
//! Under `x = cos²(θ/2)` the Bloch-sphere measure `sin θ dθ dφ / 4π` becomes
//! `dx dφ / 2π` with `x` uniform on `[0, 1]`.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Polar angle for a given `x = cos²(θ/2)`.
pub fn theta_of(x: f64) -> f64 {
    2.0 * x.clamp(0.0, 1.0).sqrt().acos()
}

/// One sampled qubit: `(x, θ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochSample {
    pub x: f64,
    pub theta: f64,
    pub phi: f64,
}

/// Deterministic sampler of Haar-random qubit states.
#[derive(Debug, Clone)]
pub struct BlochSampler {
    rng: ChaCha8Rng,
}

impl BlochSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn sample(&mut self) -> BlochSample {
        let x: f64 = self.rng.random();
        let phi = TAU * self.rng.random::<f64>();
        BlochSample { x, theta: theta_of(x), phi }
    }
}

/// Running mean and standard error, accumulated in sample order.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct MeanAccumulator {
    n: usize,
    mean: f64,
    m2: f64,
}

impl MeanAccumulator {
    pub(crate) fn push(&mut self, v: f64) {
        self.n += 1;
        let d = v - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (v - self.mean);
    }

    /// `(mean, sample standard deviation / sqrt(n))`.
    pub(crate) fn finish(&self) -> (f64, f64) {
        if self.n < 2 {
            return (self.mean, 0.0);
        }
        let var = self.m2 / (self.n - 1) as f64;
        (self.mean, (var / self.n as f64).sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_mapping_endpoints() {
        assert_eq!(theta_of(1.0), 0.0);
        assert!((theta_of(0.0) - std::f64::consts::PI).abs() < 1e-15);
        assert!((theta_of(0.5) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn sampler_is_reproducible() {
        let a: Vec<_> = {
            let mut s = BlochSampler::new(7);
            (0..10).map(|_| s.sample()).collect()
        };
        let mut s = BlochSampler::new(7);
        for v in a {
            assert_eq!(v, s.sample());
        }
        let v = BlochSampler::new(8).sample();
        assert!(v.phi >= 0.0 && v.phi < TAU && (0.0..1.0).contains(&v.x));
    }

    #[test]
    fn accumulator_matches_two_pass() {
        let data = [0.3, 1.2, -0.7, 4.0, 2.2];
        let mut acc = MeanAccumulator::default();
        data.iter().for_each(|&v| acc.push(v));
        let (mean, se) = acc.finish();
        let m = data.iter().sum::<f64>() / 5.0;
        let var = data.iter().map(|v| (v - m).powi(2)).sum::<f64>() / 4.0;
        assert!((mean - m).abs() < 1e-15);
        assert!((se - (var / 5.0).sqrt()).abs() < 1e-15);
    }
}
