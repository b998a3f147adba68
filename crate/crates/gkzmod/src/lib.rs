//! Exact computer algebra for modified A-hypergeometric systems.
//!
//! Given an integer matrix A, a rational parameter vector beta, and an
//! integer weight vector w, this crate builds the extended matrix produced
//! by adjoining the row (w, 1), computes the associated toric ideal and its
//! initial ideal under the weight giving t weight -1, decomposes the
//! resulting monomial ideal into standard pairs, derives the indicial
//! polynomial along t = 0 by two independent routes, and constructs and
//! symbolically verifies truncated Gamma-series solutions.
//!
//! All arithmetic is exact: arbitrary-precision rationals everywhere, no
//! floating point in any computational path.

pub mod error;
pub mod rational;
pub mod matrix;
pub mod poly;
pub mod groebner;
pub mod standard_pairs;
pub mod toric;
pub mod indicial;
pub mod series;
pub mod problem;

pub use error::{Error, Result};
pub use rational::Rat;
