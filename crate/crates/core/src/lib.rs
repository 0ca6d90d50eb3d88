//! Exact-arithmetic combinatorics and graph algorithms.
//!
//! Counts are arbitrary-precision naturals ([`Natural`]), series coefficients
//! and recurrence data are exact rationals ([`Rational`]). Floating point only
//! appears where a result is inherently irrational: Binet's formula, numeric
//! recurrence roots and partial fractions over irrational roots.

pub mod coloring;
pub mod counting;
pub mod error;
pub mod genfunc;
pub mod graph;
pub mod graphopt;
pub mod num;
pub mod poly;
pub mod sequences;

pub use error::{Error, Result};
pub use num::{Integer, Natural, Rational};
pub use poly::Polynomial;
