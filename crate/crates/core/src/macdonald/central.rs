use itertools::Itertools;

use super::Partition;
use crate::coeff::{q_factorial, LaurentScalar};
use crate::error::{QzError, Result};

/// Scalar by which the `k`-th central element acts on the component of
/// highest weight `λ` in `n` variables:
///
/// `q^{2|λ| + C(n,2) + k(n−1)} [k]! [n−k]! Σ_{i_1<⋯<i_k} q^{Σ_j (−2λ_{i_j} + 2(i_j − n))}`.
///
/// `k = n` is accepted as well; the sum then has a single term.
pub fn ck_scalar(k: usize, lambda: &Partition, n: usize) -> Result<LaurentScalar> {
    if k == 0 || k > n {
        return Err(QzError::IndexOutOfRange { index: k, bound: n });
    }
    if lambda.len() > n {
        return Err(QzError::InvalidPartition(format!("{lambda} has more than {n} parts")));
    }
    let parts = lambda.padded(n);
    let n_i = n as i32;
    let sum = LaurentScalar::from_terms((1..=n).combinations(k).map(|idx| {
        let e: i32 = idx
            .iter()
            .map(|&i| -2 * parts[i - 1] as i32 + 2 * (i as i32 - n_i))
            .sum();
        (2 * e, 1.into())
    }));
    let exp = 2 * lambda.size() as i32 + n_i * (n_i - 1) / 2 + k as i32 * (n_i - 1);
    Ok(&(&LaurentScalar::q_pow(exp) * &(&q_factorial(k as u32) * &q_factorial((n - k) as u32))) * &sum)
}
