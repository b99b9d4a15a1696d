//! Exact constructions of Macdonald and Jack polynomials by creation
//! operators, with Pieri/norm machinery and a verification harness for the
//! conjectural operator families.

pub mod cli;
pub mod coeff;
pub mod conjecture_lab;
pub mod error;
pub mod jack;
pub mod partitions;
pub mod macdonald;
pub mod polyring;
pub mod symmetric;

pub use error::{Error, Result};
