use std::fmt;

use crate::error::Error;
use crate::linear::{Rational, Vector};

/// Square rational matrix acting on column vectors.
///
/// Entry `(r, c)` is the coefficient of `e_r` in the image of `e_c`, so
/// application is `y = M x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim: usize,
    // row-major
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn scalar(dim: usize, s: &Rational) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = s.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare { rows: dim, cols: row.len() });
            }
            entries.extend(row);
        }
        Ok(LinearMap { dim, entries })
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(columns: Vec<Vec<Rational>>) -> Result<Self, Error> {
        Ok(Self::from_rows(columns)?.transpose())
    }

    /// Integer-literal convenience over [`LinearMap::from_columns`].
    pub fn from_int_columns(columns: &[&[i64]]) -> Result<Self, Error> {
        Self::from_columns(
            columns.iter().map(|c| c.iter().map(|&x| Rational::int(x)).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim)
    }

    /// Image of `e_col`.
    pub fn column(&self, col: usize) -> Vector {
        Vector::from_coords((0..self.dim).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut t = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                t.entries[c * n + r] = self.entries[r * n + c].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector, Error> {
        x.check_dim(self.dim)?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector) -> Vector {
        let n = self.dim;
        let mut out = Vector::zeros(n);
        for (c, xc) in x.nonzeros() {
            for r in 0..n {
                let m = &self.entries[r * n + c];
                if !m.is_zero() {
                    out.coords_mut()[r] += m * xc;
                }
            }
        }
        out
    }

    /// `self ∘ g`: applies `g` first.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap, Error> {
        self.check_same_dim(g)?;
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &LinearMap) -> LinearMap {
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.entries[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &g.entries[k * n + c];
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn commutes_with(&self, g: &LinearMap) -> Result<bool, Error> {
        self.check_same_dim(g)?;
        Ok(self.compose_unchecked(g) == g.compose_unchecked(self))
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<LinearMap, Error> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::SingularMap)?;
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a[col * n + col].recip()?;
            for c in 0..n {
                a[col * n + c] *= &p;
                inv[col * n + c] *= &p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let da = &factor * &a[col * n + c];
                    a[r * n + c] -= &da;
                    let di = &factor * &inv[col * n + c];
                    inv[r * n + c] -= &di;
                }
            }
        }
        Ok(LinearMap { dim: n, entries: inv })
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            let pinv = p.recip().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = &a[r * n + col] * &pinv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let d = &factor * &a[col * n + c];
                    a[r * n + c] -= &d;
                }
            }
        }
        det
    }

    /// Integer power; negative exponents go through [`LinearMap::inverse`].
    pub fn pow(&self, exp: i32) -> Result<LinearMap, Error> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut result = Self::identity(self.dim);
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.compose_unchecked(&sq);
            }
        }
        Ok(result)
    }

    fn check_same_dim(&self, g: &LinearMap) -> Result<(), Error> {
        if self.dim != g.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: g.dim });
        }
        Ok(())
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
