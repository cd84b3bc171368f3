//! Complementary sequence design from Florentine rectangles.
//!
//! * [`florentine`] builds Florentine rectangles over `Z_n` and checks them
//!   by brute force.
//! * [`seqgen`] turns each row of a rectangle into an `(n, n, n)` complete
//!   complementary code and merges the codes into one collection.
//! * [`correlation`] computes aperiodic set correlations, exactly over the
//!   cyclotomic integers or in floating point.
//! * [`bounds`] holds the Welch and Liu lower bounds and the optimality factor.
//! * [`verify`] and [`tables`] tie these together into exhaustive audits and
//!   reproductions of published parameter tables.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod correlation;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod florentine;
pub mod seqgen;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
