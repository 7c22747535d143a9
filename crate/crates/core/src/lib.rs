//! Exact structure constants for BiHom-algebras and BiHom-Akivis algebras.
//!
//! Everything is computed over the rationals: linear and multilinear maps are
//! stored as structure constants, constructions materialize their results, and
//! identities are decided by polarization plus enumeration of basis tuples.
//!
//! ```
//! use bihom::catalog;
//! use bihom::identities::{check, IdentityId, Verdict};
//! use bihom::linear::Rational;
//! use bihom::structures::Structure;
//!
//! let a = catalog::make_ex1(&Rational::int(1)).unwrap();
//! let report = check(&Structure::BiHom(a), IdentityId::BiHomAssociative);
//! assert_eq!(report.verdict, Verdict::Fail);
//! assert_eq!(report.witness, Some(vec![0, 1, 1]));
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod identities;
pub mod io;
pub mod linear;
pub mod structures;

pub use error::Error;
