use std::fmt;

use crate::error::Error;
use crate::linear::{LinearMap, Rational, Vector};

pub const MIN_ARITY: usize = 2;
pub const MAX_ARITY: usize = 4;

/// Structure constants of a `k`-linear map `V^k -> V`, `k` in 2..=4.
///
/// Stored densely over input tuples and sparsely over outputs: the row for
/// `(i_1, .., i_k)` lists the nonzero `(out, c)` with
/// `m(e_{i_1}, .., e_{i_k}) = Σ c e_out`, sorted by `out`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultilinearMap {
    dim: usize,
    arity: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl MultilinearMap {
    pub fn zero(dim: usize, arity: usize) -> Result<Self, Error> {
        if !(MIN_ARITY..=MAX_ARITY).contains(&arity) {
            return Err(Error::UnsupportedArity(arity));
        }
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(MultilinearMap { dim, arity, rows: vec![Vec::new(); dim.pow(arity as u32)] })
    }

    /// Builds from sparse `(inputs, out, value)` triples. Zero values are
    /// dropped; a repeated `(inputs, out)` pair is an error.
    pub fn from_entries<I>(dim: usize, arity: usize, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<usize>, usize, Rational)>,
    {
        let mut m = Self::zero(dim, arity)?;
        for (inputs, out, value) in entries {
            if inputs.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: inputs.len() });
            }
            for &i in inputs.iter().chain(std::iter::once(&out)) {
                if i >= dim {
                    return Err(Error::IndexOutOfRange { index: i, dim });
                }
            }
            let row = &mut m.rows[flat_index(dim, &inputs)];
            match row.binary_search_by_key(&out, |(o, _)| *o) {
                Ok(_) => return Err(Error::DuplicateEntry { inputs, out }),
                Err(pos) => {
                    if !value.is_zero() {
                        row.insert(pos, (out, value));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Materializes a map from its values on basis tuples.
    pub fn from_basis_fn<F>(dim: usize, arity: usize, mut f: F) -> Result<Self, Error>
    where
        F: FnMut(&[usize]) -> Vector,
    {
        let mut m = Self::zero(dim, arity)?;
        let mut idx = vec![0usize; arity];
        for flat in 0..m.rows.len() {
            unflatten(dim, flat, &mut idx);
            let v = f(&idx);
            debug_assert_eq!(v.dim(), dim);
            m.rows[flat] = v.into_coords().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Nonzero structure constants in lexicographic `(inputs, out)` order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, usize, &Rational)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(flat, row)| {
            let mut idx = vec![0usize; self.arity];
            unflatten(self.dim, flat, &mut idx);
            row.iter().map(move |(out, c)| (idx.clone(), *out, c))
        })
    }

    /// Sparse value on a basis tuple.
    pub fn on_basis(&self, inputs: &[usize]) -> &[(usize, Rational)] {
        &self.rows[flat_index(self.dim, inputs)]
    }

    pub fn on_basis_vector(&self, inputs: &[usize]) -> Vector {
        let mut v = Vector::zeros(self.dim);
        for (out, c) in self.on_basis(inputs) {
            v.coords_mut()[*out] = c.clone();
        }
        v
    }

    pub fn eval(&self, args: &[&Vector]) -> Result<Vector, Error> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: args.len() });
        }
        for a in args {
            a.check_dim(self.dim)?;
        }
        Ok(self.eval_unchecked(args))
    }

    pub(crate) fn eval_unchecked(&self, args: &[&Vector]) -> Vector {
        let mut out = Vector::zeros(self.dim);
        let nz: Vec<Vec<(usize, &Rational)>> = args.iter().map(|v| v.nonzeros().collect()).collect();
        if nz.iter().any(Vec::is_empty) {
            return out;
        }
        self.accumulate(&nz, 0, 0, None, out.coords_mut());
        out
    }

    fn accumulate(
        &self,
        nz: &[Vec<(usize, &Rational)>],
        pos: usize,
        flat: usize,
        coeff: Option<&Rational>,
        out: &mut [Rational],
    ) {
        if pos == nz.len() {
            for (o, c) in &self.rows[flat] {
                match coeff {
                    None => out[*o] += c,
                    Some(k) => out[*o] += k * c,
                }
            }
            return;
        }
        for (i, x) in &nz[pos] {
            let next = flat * self.dim + i;
            if x.is_one() {
                self.accumulate(nz, pos + 1, next, coeff, out);
            } else {
                let k = match coeff {
                    None => (*x).clone(),
                    Some(k) => k * *x,
                };
                self.accumulate(nz, pos + 1, next, Some(&k), out);
            }
        }
    }

    /// `m ∘ (f_1 ⊗ .. ⊗ f_k)`.
    pub fn precompose(&self, maps: &[&LinearMap]) -> Result<MultilinearMap, Error> {
        if maps.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: maps.len() });
        }
        for f in maps {
            if f.dim() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: f.dim() });
            }
        }
        let cols: Vec<Vec<Vector>> = maps.iter().map(|f| (0..self.dim).map(|c| f.column(c)).collect()).collect();
        Self::from_basis_fn(self.dim, self.arity, |idx| {
            let args: Vec<&Vector> = idx.iter().zip(&cols).map(|(&i, c)| &c[i]).collect();
            self.eval_unchecked(&args)
        })
    }

    /// `f ∘ m`.
    pub fn postcompose(&self, f: &LinearMap) -> Result<MultilinearMap, Error> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.dim() });
        }
        let mut idx = vec![0usize; self.arity];
        Self::from_basis_fn(self.dim, self.arity, |inputs| {
            idx.copy_from_slice(inputs);
            f.apply_unchecked(&self.on_basis_vector(&idx))
        })
    }

    /// `self - other`, entrywise.
    pub fn sub(&self, other: &MultilinearMap) -> Result<MultilinearMap, Error> {
        self.check_same_shape(other)?;
        Self::from_basis_fn(self.dim, self.arity, |idx| &self.on_basis_vector(idx) - &other.on_basis_vector(idx))
    }

    pub fn add(&self, other: &MultilinearMap) -> Result<MultilinearMap, Error> {
        self.check_same_shape(other)?;
        Self::from_basis_fn(self.dim, self.arity, |idx| &self.on_basis_vector(idx) + &other.on_basis_vector(idx))
    }

    pub fn scale(&self, s: &Rational) -> MultilinearMap {
        let rows = if s.is_zero() {
            vec![Vec::new(); self.rows.len()]
        } else {
            self.rows.iter().map(|r| r.iter().map(|(o, c)| (*o, c * s)).collect()).collect()
        };
        MultilinearMap { dim: self.dim, arity: self.arity, rows }
    }

    fn check_same_shape(&self, other: &MultilinearMap) -> Result<(), Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }
}

impl fmt::Debug for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (inputs, out, c) in self.entries() {
            list.entry(&format_args!("{inputs:?} -> {c}·e{out}"));
        }
        list.finish()
    }
}

pub(crate) fn flat_index(dim: usize, inputs: &[usize]) -> usize {
    inputs.iter().fold(0, |acc, &i| acc * dim + i)
}

pub(crate) fn unflatten(dim: usize, mut flat: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
}
