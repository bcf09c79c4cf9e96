//! Seeded sampling of test points.

use nalgebra::DVector;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::Real;

/// Entries are a uniform integer offset in `[−2, 2]` plus a standard
/// Gaussian, so samples avoid both the origin and special lattices.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn scalar(&mut self) -> f64 {
        let g: f64 = self.rng.sample(StandardNormal);
        f64::from(self.rng.random_range(-2i32..=2)) + g
    }

    pub fn vector<T: Real>(&mut self, n: usize) -> DVector<T> {
        DVector::from_iterator(n, (0..n).map(|_| T::of(self.scalar())))
    }

    pub fn unit_vector<T: Real>(&mut self, n: usize) -> DVector<T> {
        let v = self.vector::<T>(n);
        let norm = v.norm();
        if norm > T::zero() {
            v / norm
        } else {
            v
        }
    }

    /// Rationals `p/q` with `|p| ≤ 20`, `1 ≤ q ≤ 6`.
    pub fn rational(&mut self) -> Rational64 {
        Rational64::new(self.rng.random_range(-20i64..=20), self.rng.random_range(1i64..=6))
    }
}
