//! Negative curves on blowups of toric surfaces at a general torus point.
//!
//! The crate enumerates the solutions of `(M+N)^2 = K M N + 1`, builds the
//! integral and rational triangles they index, computes the curve polynomials
//! both by exact linear algebra and by the recurrence between the two families,
//! and decides the Mori Dream Space status of the enlarged triangles.
//!
//! All arithmetic is exact.

pub mod arith;
pub mod error;
pub mod families;
pub mod geometry;
pub mod laurent;
pub mod linalg;
pub mod mds;
pub mod pell;
pub mod recurrence;
pub mod render;
pub mod report;
pub mod search;
pub mod solver;
pub mod verify;

pub use arith::Rational;
pub use error::{Error, Result};
