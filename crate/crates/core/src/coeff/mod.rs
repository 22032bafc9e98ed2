//! Exact coefficient rings and fields.

mod laurent;
mod qt;
mod rational;
pub(crate) mod upoly;

pub use laurent::{q_factorial, q_int, LaurentScalar};
pub use qt::QTRational;
pub use rational::{laurent_div_exact, laurent_gcd, RationalScalar};
