//! Counting partitions of n into distinct Fibonacci numbers, three
//! independent ways, together with the golden-rotation dynamics that
//! organizes those counts: the orbit lattice, the ratio staircase and its
//! level sets, patch windows, and the log-periodic growth profile of the
//! summatory function.

pub mod golden;
pub mod counting;
pub mod zeckendorf;
pub mod asymptotics;
pub mod dynamics;
pub mod staircase;

mod error;

pub use error::{Error, Result};

/// Exact rational values (count ratios, staircase heights, densities).
pub type Ratio = num_rational::BigRational;
