//! The Seifert complex of a forest over the two-element field.
//!
//! A forest `T` spans a bigraded vector space whose basis is the set of
//! *configurations*: markings of vertices by plus/minus together with a
//! matching of "red" edges covering exactly the unmarked vertices. Two
//! commuting differentials act on it:
//!
//! * `D` ([`Differential::Resolve`]) resolves a red edge into the two
//!   plus/minus orderings of its endpoints, bidegree `(1, 0)`;
//! * `d` ([`Differential::Flip`]) turns a plus into a minus, bidegree `(1, 1)`.
//!
//! The crate computes the `D`-cohomology (Seifert cohomology), the spectral
//! sequence of the `(D, d)` bicomplex, the Alexander polynomial of the forest
//! by several independent routes, the `K₂` degeneration operator and the
//! Heegaard–Floer style polynomials extracted from the Alexander polynomial.
//!
//! ```
//! use seifert_core::{Forest, SeifertComplex, alexander};
//!
//! let d4 = Forest::dynkin('D', 4).unwrap();
//! let complex = SeifertComplex::new(d4.clone());
//! let p = complex.poincare_polynomial();
//! assert_eq!(p.coefficient(1, 2), 1);
//! assert_eq!(alexander::alexander_det(&d4).coefficients(), &[1, -1, 0, -1, 1]);
//! ```

pub mod alexander;
pub mod complex;
mod error;
pub mod forest;
pub mod gf2;
pub mod hf;
pub mod par;
pub mod poly;
pub mod spectral;

pub use complex::{Bidegree, BigradedTable, ChainVector, Configuration, Differential, Mark, SeifertComplex};
pub use error::{Error, Result};
pub use forest::{Forest, Matching};
pub use gf2::{BitVec, Gf2Matrix, Subspace};
pub use poly::{BiPolynomial, IntPolynomial};
