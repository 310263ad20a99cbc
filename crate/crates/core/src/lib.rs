//! Exact computations with the Dunkl operators of the symmetric group `S_N`.
//!
//! The crate builds the polynomials `p_{mn}`, the Jack-type polynomials
//! `ω_{mn}` (nonsymmetric Jack polynomials with label `(m, n, 0, ..., 0)`) and
//! the Krawtchouk-transformed basis `q_{mn}`, and certifies families of
//! singular polynomials: nonzero polynomials annihilated by every Dunkl
//! operator at a particular value of the parameter κ. All arithmetic is exact,
//! either over Q(κ) with κ symbolic or over Q with κ fixed.

pub mod dunkl;
pub mod error;
pub mod field;
pub mod jackbasis;
pub mod krawtchouk;
pub mod polyring;
pub mod singular;
pub mod verify;

pub use dunkl::{DunklContext, KappaMode, Partition};
pub use error::{Error, Result};
pub use field::{Rational, Scalar};
pub use polyring::{MultiIndex, Permutation, Polynomial};
