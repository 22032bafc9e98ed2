//! Symmetric functions over `ℚ(q, t)`: monomial symmetric polynomials,
//! the Macdonald difference operators and polynomials `P_λ(x; q, t)`, the
//! central-element scalar, and the comparison against q-zonal vectors.

mod central;
mod compare;
mod operators;
mod partition;
mod poly;
mod solve;

pub use central::ck_scalar;
pub use compare::{
    compare_zonal, specialize, standard_conventions, CoefficientEntry, Convention, ConventionResult, ZonalComparison,
};
pub use operators::{dr_eigenvalue, eigenvalue, macdonald_d1, macdonald_dr, shift};
pub use partition::Partition;
pub use poly::{vandermonde, MPoly, SymPolynomial};
pub use solve::{basis, d1_columns, macdonald_p, schur_bialternant};
