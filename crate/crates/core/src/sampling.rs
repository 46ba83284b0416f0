//! Deterministic point sets on discs and circles.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Seeded source of point pairs in the closed disc of radius `radius`.
///
/// Radii are drawn as `radius·√u` so the points are area-uniform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairSampler {
    pub seed: u64,
    pub count: usize,
    pub radius: f64,
}

impl PairSampler {
    pub fn new(seed: u64, count: usize, radius: f64) -> Result<Self> {
        if count < 1 {
            return Err(Error::Parameter("pair count must be >= 1".into()));
        }
        if !(radius > 0.0 && radius < 1.0) {
            return Err(Error::Parameter(format!(
                "sampling radius must lie in (0, 1), got {radius}"
            )));
        }
        Ok(Self {
            seed,
            count,
            radius,
        })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Complex64, Complex64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let radius = self.radius;
        (0..self.count).map(move |_| {
            let a = disc_point(&mut rng, radius);
            let b = disc_point(&mut rng, radius);
            (a, b)
        })
    }
}

fn disc_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    Complex64::from_polar(radius * u.sqrt(), TAU * v)
}

/// `n_points` equally spaced points `r·e^{2πij/n}` on a circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundarySampler {
    pub radius: f64,
    pub n_points: usize,
}

impl BoundarySampler {
    pub fn new(radius: f64, n_points: usize) -> Result<Self> {
        if n_points < 8 {
            return Err(Error::Parameter(format!(
                "boundary sampler needs at least 8 points, got {n_points}"
            )));
        }
        if !(radius > 0.0 && radius <= 1.0) {
            return Err(Error::Parameter(format!(
                "boundary radius must lie in (0, 1], got {radius}"
            )));
        }
        Ok(Self { radius, n_points })
    }

    pub fn angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.n_points as f64
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        (0..self.n_points).map(|j| {
            let theta = self.angle(j);
            (theta, Complex64::from_polar(self.radius, theta))
        })
    }
}

/// Area-uniform golden-angle spiral of `n` points in the closed disc of
/// radius `radius`, starting at the origin.
pub fn spiral_points(n: usize, radius: f64) -> Vec<Complex64> {
    let golden = TAU * (1.0 - (5f64.sqrt() - 1.0) / 2.0);
    (0..n)
        .map(|j| {
            let rho = if n > 1 {
                radius * (j as f64 / (n - 1) as f64).sqrt()
            } else {
                0.0
            };
            Complex64::from_polar(rho, golden * j as f64)
        })
        .collect()
}
