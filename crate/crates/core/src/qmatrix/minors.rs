use itertools::Itertools;

use super::{Generator, Monomial, QPolynomial};
use crate::coeff::LaurentScalar;
use crate::error::{QzError, Result};

/// Number of pairs `a < b` with `w[a] > w[b]`.
pub fn inversions<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                count += 1;
            }
        }
    }
    count
}

fn check_indices(n: usize, idx: &[usize]) -> Result<()> {
    for &i in idx {
        QPolynomial::check_index(n, i)?;
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(QzError::UnsortedIndices);
    }
    Ok(())
}

/// The quantum minor `ξ^I_J = Σ_σ (−q)^{l(σ)} x_{i1 j_σ(1)} ⋯ x_{ir j_σ(r)}`.
///
/// Rows strictly increase along every word, so each term is already a
/// normal monomial and no straightening is needed.
pub fn quantum_minor(n: usize, rows: &[usize], cols: &[usize]) -> Result<QPolynomial> {
    if rows.len() != cols.len() {
        return Err(QzError::SizeMismatch(rows.len(), cols.len()));
    }
    check_indices(n, rows)?;
    check_indices(n, cols)?;
    let r = rows.len();
    let terms = (0..r).permutations(r).map(|sigma| {
        let word: Monomial = rows
            .iter()
            .zip(&sigma)
            .map(|(&i, &s)| Generator::new(i, cols[s]))
            .collect();
        (word, LaurentScalar::neg_q_pow(inversions(&sigma) as u32))
    });
    Ok(QPolynomial::from_sorted_terms(n, terms))
}

/// `det_q`, the quantum minor on all rows and columns.
pub fn quantum_det(n: usize) -> QPolynomial {
    let all: Vec<usize> = (1..=n).collect();
    quantum_minor(n, &all, &all).expect("full index set is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_minor() {
        let d = quantum_det(2);
        let expected = &QPolynomial::from_word(2, &[(1, 1), (2, 2)], LaurentScalar::one()).unwrap()
            + &QPolynomial::from_word(2, &[(1, 2), (2, 1)], -LaurentScalar::q_pow(1)).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn degenerate_and_invalid_minors() {
        assert_eq!(quantum_minor(3, &[], &[]).unwrap(), QPolynomial::one(3));
        assert_eq!(quantum_minor(3, &[1], &[1, 2]), Err(QzError::SizeMismatch(1, 2)));
        assert_eq!(quantum_minor(3, &[2, 1], &[1, 2]), Err(QzError::UnsortedIndices));
        assert!(matches!(
            quantum_minor(3, &[1, 4], &[1, 2]),
            Err(QzError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn det_term_counts() {
        assert_eq!(quantum_det(1).num_terms(), 1);
        assert_eq!(quantum_det(3).num_terms(), 6);
        assert_eq!(quantum_det(5).num_terms(), 120);
    }
}
