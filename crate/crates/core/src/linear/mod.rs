//! Exact rational linear algebra: scalars, coordinate vectors, square
//! matrices and multilinear structure-constant tensors.

mod linear_map;
mod multilinear;
mod rational;
mod vector;

pub use linear_map::LinearMap;
pub use multilinear::{MultilinearMap, MAX_ARITY, MIN_ARITY};
pub use rational::Rational;
pub use vector::Vector;

pub(crate) use multilinear::unflatten;
