use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};

/// Exact coordinate vector in the ambient orthonormal ε-basis.
///
/// Ordering is lexicographic on coordinates; every "first"/"smallest" choice
/// in the crate uses it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector {
    #[serde(with = "rational::serde_rational_vec")]
    coords: Vec<Rational>,
}

impl RootVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "ambient dimension must be positive");
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| rational::int(c)).collect())
    }

    /// Coordinates given as numerators over 2.
    pub fn from_halves(numerators: &[i64]) -> Self {
        Self::new(numerators.iter().map(|&c| rational::frac(c, 2)).collect())
    }

    /// `ε_i` (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = rational::int(1);
        v
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.ambient_dim(), other.ambient_dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self::new(self.coords.iter().map(|c| c * t).collect())
    }

    /// `self + t·other`
    pub fn add_scaled(&self, t: &Rational, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + t * b)
                .collect(),
        )
    }

    pub fn add_assign_scaled(&mut self, t: &Rational, other: &Self) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += t * b;
        }
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if c.is_integer() {
                write!(f, "{}", c.numer())?;
            } else {
                let sign = if c.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", c.numer().abs(), c.denom())?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
