use std::fmt;
use std::ops::{Add, Index, Sub};

use num_traits::{Signed, Zero};

use crate::arith::{int, Rat};
use crate::error::{Error, Result};

/// Point or vector with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rat::zero(); dim])
    }

    /// The `i`-th standard basis vector of R^dim.
    pub fn axis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = int(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_squared(&self) -> Rat {
        self.dot(self)
    }

    pub fn scaled(&self, s: &Rat) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: &Rat, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + s * b).collect())
    }

    pub fn map(&self, f: impl Fn(&Rat) -> Rat) -> Vector {
        Vector(self.0.iter().map(f).collect())
    }

    /// Coordinate-wise absolute value.
    pub fn abs(&self) -> Vector {
        self.map(|c| c.abs())
    }
}

impl Index<usize> for Vector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Non-zero rational direction. Never normalized: every statement about unit
/// vectors is applied in a homogeneity-corrected form instead.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction(Vector);

impl Direction {
    pub fn new(w: Vector) -> Result<Self> {
        if w.is_zero() {
            Err(Error::ZeroDirection)
        } else {
            Ok(Direction(w))
        }
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(Vector::from_ints(coords))
    }

    pub fn axis(dim: usize, i: usize) -> Self {
        Direction(Vector::axis(dim, i))
    }

    pub fn vector(&self) -> &Vector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn neg(&self) -> Direction {
        Direction(self.0.neg())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
