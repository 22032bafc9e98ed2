//! Quantum-symplectic invariant theory on `A_q(X)` for even `N = 2m`.

mod invariants;
mod pfaffian;
mod relations;
mod restrict;
mod sp;
mod zgen;

pub use invariants::{
    a_r, a_r_lambda, e_r, full_invariance_check, invariance_failures, invariance_kernel_check,
    relative_invariant_check, CosetSide,
};
pub use pfaffian::{
    classical_antisymmetric_det, classical_pfaffian, matching_length, matchings, partial_pfaffian, quantum_pfaffian,
    quantum_pfaffian_by_matchings, Matching,
};
pub use relations::{verify_as_relations, RelationCheck};
pub use restrict::{restrict_borel, restrict_h, to_s_variables, Borel};
pub use sp::{full_sp_set, generating_set, sp_element, SpKind};
pub use zgen::{z_generator, z_table};

use crate::error::{QzError, Result};

/// Returns `m = N/2`, or an error for odd `N`.
pub(crate) fn half(n: usize) -> Result<usize> {
    if n.is_multiple_of(2) && n > 0 {
        Ok(n / 2)
    } else {
        Err(QzError::OddAmbient(n))
    }
}

/// `φ(J) = ∪_{α ∈ J} {2α−1, 2α}`, sorted.
pub fn phi(set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().flat_map(|&a| [2 * a - 1, 2 * a]).collect();
    out.sort_unstable();
    out
}
