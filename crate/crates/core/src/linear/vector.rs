use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::linear::Rational;

/// Coordinates in the fixed basis `e_0 .. e_{dim-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Rational>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { coords: vec![Rational::zero(); dim] }
    }

    /// The basis vector `e_index`. Panics if `index >= dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut v = Self::zeros(dim);
        v.coords[index] = Rational::one();
        v
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector { coords: coords.iter().map(|&c| Rational::int(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coords_mut(&mut self) -> &mut [Rational] {
        &mut self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// Nonzero coordinates in index order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        if s.is_zero() {
            return Vector::zeros(self.dim());
        }
        Vector { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Rational, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<(), Error> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.dim() });
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coords.iter()).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(mut self, rhs: Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        for (a, b) in self.coords.iter_mut().zip(rhs.coords) {
            *a += b;
        }
        self
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(mut self, rhs: Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        for (a, b) in self.coords.iter_mut().zip(rhs.coords) {
            *a -= &b;
        }
        self
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { coords: self.coords.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { coords: self.coords.iter().map(|c| -c).collect() }
    }
}
