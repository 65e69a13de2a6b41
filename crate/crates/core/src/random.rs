//! Seeded random rational bodies. ChaCha8 keeps streams identical across
//! platforms, so a seed fully determines the generated body.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rat;
use crate::geometry::{Direction, Polytope, Vector};

pub type BodyRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> BodyRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coordinates `p / q` with `|p| <= numerator_bound` and `1 <= q <= denominator_bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampler {
    pub numerator_bound: i64,
    pub denominator_bound: i64,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler {
            numerator_bound: 100,
            denominator_bound: 10,
        }
    }
}

impl Sampler {
    pub const SMALL: Sampler = Sampler {
        numerator_bound: 12,
        denominator_bound: 3,
    };

    pub fn rational<R: Rng>(&self, rng: &mut R) -> Rat {
        let p = rng.random_range(-self.numerator_bound..=self.numerator_bound);
        let q = rng.random_range(1..=self.denominator_bound);
        Rat::new(p.into(), q.into())
    }

    pub fn point<R: Rng>(&self, rng: &mut R, dim: usize) -> Vector {
        Vector::new((0..dim).map(|_| self.rational(rng)).collect())
    }

    /// Hull of `count` sampled points, resampling until it is full-dimensional.
    pub fn polytope<R: Rng>(&self, rng: &mut R, dim: usize, count: usize) -> Polytope {
        assert!(count > dim, "need at least dim + 1 points");
        loop {
            let pts: Vec<Vector> = (0..count).map(|_| self.point(rng, dim)).collect();
            if let Ok(p) = Polytope::convex_hull(&pts) {
                return p;
            }
        }
    }
}

pub fn random_polytope<R: Rng>(rng: &mut R, dim: usize, count: usize) -> Polytope {
    Sampler::default().polytope(rng, dim, count)
}

/// Non-zero integer direction with entries in `[-bound, bound]`.
pub fn random_direction<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Direction {
    loop {
        let c: Vec<i64> = (0..dim).map(|_| rng.random_range(-bound..=bound)).collect();
        if let Ok(d) = Direction::from_ints(&c) {
            return d;
        }
    }
}

/// Integer translation vector with entries in `[-bound, bound]`.
pub fn random_translation<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Vector {
    Vector::from_ints(&(0..dim).map(|_| rng.random_range(-bound..=bound)).collect::<Vec<_>>())
}
