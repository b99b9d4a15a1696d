//! Exact coefficient arithmetic: arbitrary-precision rationals, sparse
//! integer polynomials in two variables, and the fraction fields Q(q,t),
//! Q(alpha) and Q(t) built on them.

mod intpoly;
mod ratfunc;

pub use intpoly::IntPoly2;
pub use ratfunc::{RatFunc, VarSet};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
