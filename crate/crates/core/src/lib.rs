//! Exact computations in the quantum matrix algebra, its quantum-symplectic
//! invariants, and Macdonald polynomials.

pub mod coeff;
pub mod cpoly;
pub mod error;
pub mod isotypic;
pub mod macdonald;
pub mod qmatrix;
pub mod symplectic;
pub mod uq;

pub use error::{QzError, Result};
