//! Rejection sampling from the exact bounding box.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bounding_box, InequalitySystem, PolyhedraError};
use crate::exact::rat_to_f64;

/// Upper limit on box draws per requested accepted sample.
const MAX_DRAWS_PER_SAMPLE: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct SampleResult {
    pub points: Vec<Vec<f64>>,
    pub draws: u64,
    pub acceptance_rate: f64,
    pub box_volume: f64,
}

/// Uniform proposals from the bounding box of a full-dimensional bounded
/// system, with a floating-point membership test.
#[derive(Clone, Debug)]
pub struct BoxSampler {
    lo: Vec<f64>,
    hi: Vec<f64>,
    exact_volume: BigRational,
    normals: Vec<Vec<f64>>,
    bounds: Vec<f64>,
}

impl BoxSampler {
    pub fn new(sys: &InequalitySystem) -> Result<Self, PolyhedraError> {
        if !sys.equations().is_empty() {
            return Err(PolyhedraError::DegenerateBox(
                "equality constraints give the feasible set zero volume".into(),
            ));
        }
        let bx = bounding_box(sys)?;
        let mut exact_volume = BigRational::one();
        for (j, (lo, hi)) in bx.iter().enumerate() {
            if hi <= lo {
                return Err(PolyhedraError::DegenerateBox(format!(
                    "coordinate {j} is pinned to {}",
                    crate::exact::fmt_rational(lo)
                )));
            }
            exact_volume *= hi - lo;
        }
        Ok(Self {
            lo: bx.iter().map(|(l, _)| rat_to_f64(l)).collect(),
            hi: bx.iter().map(|(_, h)| rat_to_f64(h)).collect(),
            exact_volume,
            normals: sys.inequalities().iter().map(|c| c.normal.to_f64()).collect(),
            bounds: sys.inequalities().iter().map(|c| rat_to_f64(&c.bound)).collect(),
        })
    }

    pub fn box_volume(&self) -> f64 {
        rat_to_f64(&self.exact_volume)
    }

    pub fn exact_box_volume(&self) -> &BigRational {
        &self.exact_volume
    }

    pub fn lower(&self) -> &[f64] {
        &self.lo
    }

    pub fn upper(&self) -> &[f64] {
        &self.hi
    }

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    pub fn draw(&self, rng: &mut impl Rng) -> Vec<f64> {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| l + (h - l) * rng.gen::<f64>())
            .collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.normals
            .iter()
            .zip(&self.bounds)
            .all(|(n, &b)| n.iter().zip(x).map(|(a, v)| a * v).sum::<f64>() >= b)
    }

    /// Draws until `n_samples` points are accepted.
    pub fn sample_accepted(&self, n_samples: usize, seed: u64) -> Result<SampleResult, PolyhedraError> {
        let mut rng = Self::rng(seed);
        let cap = (n_samples as u64)
            .saturating_mul(MAX_DRAWS_PER_SAMPLE)
            .max(MAX_DRAWS_PER_SAMPLE);
        let mut points = Vec::with_capacity(n_samples);
        let mut draws = 0u64;
        while points.len() < n_samples {
            if draws >= cap {
                return Err(PolyhedraError::SampleBudgetExhausted {
                    accepted: points.len(),
                    requested: n_samples,
                    draws,
                });
            }
            let x = self.draw(&mut rng);
            draws += 1;
            if self.contains(&x) {
                points.push(x);
            }
        }
        let acceptance_rate = if draws.is_zero() {
            1.0
        } else {
            n_samples as f64 / draws as f64
        };
        Ok(SampleResult {
            points,
            draws,
            acceptance_rate,
            box_volume: self.box_volume(),
        })
    }
}
