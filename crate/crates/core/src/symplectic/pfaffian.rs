use std::collections::HashMap;

use super::half;
use super::zgen::z_table;
use crate::coeff::LaurentScalar;
use crate::cpoly::CommPoly;
use crate::error::{QzError, Result};
use crate::qmatrix::{inversions, QPolynomial};
use crate::uq::Side;

/// A perfect matching `(i_1,j_1)…(i_m,j_m)` with `i_k < j_k` and
/// `i_1 < i_2 < ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// The word `i_1 j_1 i_2 j_2 …`.
    pub fn word(&self) -> Vec<usize> {
        self.pairs.iter().flat_map(|&(i, j)| [i, j]).collect()
    }
}

/// All perfect matchings of `set` (sorted ascending), in lexicographic order.
pub fn matchings(set: &[usize]) -> Result<Vec<Matching>> {
    if !set.len().is_multiple_of(2) {
        return Err(QzError::OddSubset(set.len()));
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(QzError::UnsortedIndices);
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(Matching { pairs: cur.clone() });
            return;
        };
        for (pos, &j) in tail.iter().enumerate() {
            let mut remaining = tail.to_vec();
            remaining.remove(pos);
            cur.push((first, j));
            rec(&remaining, cur, out);
            cur.pop();
        }
    }
    rec(set, &mut cur, &mut out);
    Ok(out)
}

/// `l(π)`: the inversion count of `i_1 j_1 i_2 j_2 …`.
pub fn matching_length(m: &Matching) -> usize {
    inversions(&m.word())
}

/// `Pf_q(Z) = Σ_π (−q)^{l(π)} z^L_π` over all perfect matchings of `1..N`.
pub fn quantum_pfaffian(n: usize) -> Result<QPolynomial> {
    half(n)?;
    pfaffian_on(n, n)
}

/// The Pfaffian restricted to matchings of `I = {1..r}`.
pub fn partial_pfaffian(r: usize, n: usize) -> Result<QPolynomial> {
    half(n)?;
    if !r.is_multiple_of(2) {
        return Err(QzError::OddSubset(r));
    }
    if r > n {
        return Err(QzError::IndexOutOfRange { index: r, bound: n });
    }
    pfaffian_on(r, n)
}

/// Expansion along the smallest index: removing the pair `(s_1, j)` from the
/// word costs `#{s : s_1 < s < j}` inversions.
fn pfaffian_on(r: usize, n: usize) -> Result<QPolynomial> {
    let z = z_table(Side::Left, n)?;
    let mut memo: HashMap<u32, QPolynomial> = HashMap::new();
    fn rec(mask: u32, n: usize, z: &[Vec<QPolynomial>], memo: &mut HashMap<u32, QPolynomial>) -> QPolynomial {
        if mask == 0 {
            return QPolynomial::one(n);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let mut out = QPolynomial::zero(n);
        let mut between = 0i32;
        for j in first + 1..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let rest = rec(mask & !(1 << first) & !(1 << j), n, z, memo);
            let c = LaurentScalar::neg_q_pow(between as u32);
            out.add_scaled(&(&z[first][j] * &rest), &c);
            between += 1;
        }
        memo.insert(mask, out.clone());
        out
    }
    let mask = if r == 0 { 0 } else { (1u32 << r) - 1 };
    Ok(rec(mask, n, &z, &mut memo))
}

/// The defining sum over matchings, term by term. Exponential in `N`; kept as
/// an independent cross-check of [`quantum_pfaffian`].
pub fn quantum_pfaffian_by_matchings(n: usize) -> Result<QPolynomial> {
    half(n)?;
    let z = z_table(Side::Left, n)?;
    let set: Vec<usize> = (1..=n).collect();
    let mut out = QPolynomial::zero(n);
    for m in matchings(&set)? {
        let mut term = QPolynomial::one(n);
        for &(i, j) in &m.pairs {
            term = &term * &z[i - 1][j - 1];
        }
        out.add_scaled(&term, &LaurentScalar::neg_q_pow(matching_length(&m) as u32));
    }
    Ok(out)
}

/// Index of the variable `a_ij` (`i < j`, 1-based) among the `N(N−1)/2`
/// commuting entries of a generic antisymmetric matrix.
fn antisym_var(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// The classical Pfaffian `Σ_π sgn(π) a_π` of the generic antisymmetric
/// matrix, as a polynomial in its upper entries `a_ij`.
pub fn classical_pfaffian(n: usize) -> Result<CommPoly> {
    half(n)?;
    let nv = n * (n - 1) / 2;
    let set: Vec<usize> = (1..=n).collect();
    let mut out = CommPoly::zero(nv);
    for m in matchings(&set)? {
        let mut exps = vec![0; nv];
        for &(i, j) in &m.pairs {
            exps[antisym_var(n, i, j)] += 1;
        }
        let sign = if matching_length(&m).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(exps, &LaurentScalar::from_int(sign));
    }
    Ok(out)
}

/// The determinant of the generic antisymmetric matrix, by cofactor
/// expansion, in the same variables as [`classical_pfaffian`].
pub fn classical_antisymmetric_det(n: usize) -> CommPoly {
    let nv = n * (n - 1) / 2;
    let entry = |i: usize, j: usize| -> CommPoly {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => CommPoly::zero(nv),
            std::cmp::Ordering::Less => CommPoly::var(nv, antisym_var(n, i, j)),
            std::cmp::Ordering::Greater => -&CommPoly::var(nv, antisym_var(n, j, i)),
        }
    };
    fn det(rows: &[usize], cols: &[usize], nv: usize, entry: &dyn Fn(usize, usize) -> CommPoly) -> CommPoly {
        if rows.is_empty() {
            return CommPoly::one(nv);
        }
        let mut out = CommPoly::zero(nv);
        for (pos, &c) in cols.iter().enumerate() {
            let a = entry(rows[0], c);
            if a.is_zero() {
                continue;
            }
            let mut rest = cols.to_vec();
            rest.remove(pos);
            let minor = &a * &det(&rows[1..], &rest, nv, entry);
            out = if pos % 2 == 0 { &out + &minor } else { &out - &minor };
        }
        out
    }
    let idx: Vec<usize> = (1..=n).collect();
    det(&idx, &idx, nv, &entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::quantum_det;
    use crate::symplectic::z_generator;

    #[test]
    fn matching_counts_and_lengths() {
        let set: Vec<usize> = (1..=6).collect();
        assert_eq!(matchings(&set).unwrap().len(), 15);
        let m = Matching {
            pairs: vec![(1, 3), (2, 4)],
        };
        assert_eq!(matching_length(&m), 1);
        assert!(matchings(&[1, 2, 3]).is_err());
    }

    #[test]
    fn four_by_four_expansion() {
        let z = |i, j| z_generator(Side::Left, i, j, 4).unwrap();
        let mut expected = &z(1, 2) * &z(3, 4);
        expected.add_scaled(&(&z(1, 3) * &z(2, 4)), &LaurentScalar::neg_q_pow(1));
        expected.add_scaled(&(&z(1, 4) * &z(2, 3)), &LaurentScalar::q_pow(2));
        assert_eq!(quantum_pfaffian(4).unwrap(), expected);
    }

    #[test]
    fn pfaffian_is_determinant_small() {
        assert_eq!(quantum_pfaffian(2).unwrap(), quantum_det(2));
        assert_eq!(quantum_pfaffian(4).unwrap(), quantum_det(4));
        assert_eq!(quantum_pfaffian_by_matchings(4).unwrap(), quantum_det(4));
    }

    #[test]
    fn partial_cases() {
        assert_eq!(
            partial_pfaffian(2, 4).unwrap(),
            z_generator(Side::Left, 1, 2, 4).unwrap()
        );
        assert_eq!(partial_pfaffian(0, 4).unwrap(), QPolynomial::one(4));
        assert_eq!(partial_pfaffian(3, 4), Err(QzError::OddSubset(3)));
    }

    #[test]
    fn classical_square_is_det() {
        let pf = classical_pfaffian(4).unwrap();
        assert_eq!(pf.num_terms(), 3);
        assert_eq!(&pf * &pf, classical_antisymmetric_det(4));
    }
}
