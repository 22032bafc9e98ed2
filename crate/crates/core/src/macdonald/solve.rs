use std::collections::BTreeMap;

use itertools::Itertools;

use super::operators::{eigenvalue, macdonald_d1};
use super::{MPoly, Partition, SymPolynomial};
use crate::coeff::QTRational;
use crate::error::{QzError, Result};

/// Partitions of `d` with at most `n` parts, lexicographically decreasing.
pub fn basis(d: u32, n: usize) -> Vec<Partition> {
    Partition::all_of_size(d, n)
}

/// `D_1 m_μ` for every `μ` in the degree-`d` basis.
pub fn d1_columns(d: u32, n: usize) -> Result<BTreeMap<Partition, SymPolynomial>> {
    basis(d, n)
        .into_iter()
        .map(|mu| {
            let col = macdonald_d1(&SymPolynomial::monomial_symmetric(&mu, n)?)?;
            Ok((mu, col))
        })
        .collect()
}

/// `P_λ(x; q, t)` in `n` variables: the monic eigenvector of `D_1` with
/// leading term `m_λ`, by back-substitution down the lexicographic order.
pub fn macdonald_p(lambda: &Partition, n: usize) -> Result<SymPolynomial> {
    if lambda.len() > n {
        return Err(QzError::InvalidPartition(format!("{lambda} has more than {n} parts")));
    }
    let below: Vec<Partition> = basis(lambda.size(), n).into_iter().filter(|mu| mu <= lambda).collect();
    let cols = below
        .iter()
        .map(|mu| Ok((mu.clone(), macdonald_d1(&SymPolynomial::monomial_symmetric(mu, n)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let ev = eigenvalue(lambda, n);
    let mut p = SymPolynomial::zero(n);
    p.set_coeff(lambda.clone(), QTRational::one());
    for nu in below.iter().skip(1) {
        let mut rhs = QTRational::zero();
        for (mu, col) in cols.iter().take_while(|(mu, _)| mu > nu) {
            let u = p.coeff(mu);
            if !u.is_zero() {
                rhs = &rhs - &(&col.coeff(nu) * &u);
            }
        }
        let gap = &eigenvalue(nu, n) - &ev;
        if gap.is_zero() {
            return Err(QzError::EigenvalueCollision(lambda.to_string(), nu.to_string()));
        }
        p.set_coeff(nu.clone(), rhs.checked_div(&gap)?);
    }
    Ok(p)
}

/// The Schur polynomial `s_λ = a_{λ+δ} / a_δ` in `n` variables.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> Result<SymPolynomial> {
    if lambda.len() > n {
        return Err(QzError::InvalidPartition(format!("{lambda} has more than {n} parts")));
    }
    let alpha: Vec<u32> = lambda
        .padded(n)
        .iter()
        .enumerate()
        .map(|(i, &l)| l + (n - 1 - i) as u32)
        .collect();
    let mut a = MPoly::zero(n);
    for perm in (0..n).permutations(n) {
        let e: Vec<u32> = perm.iter().map(|&k| alpha[k]).collect();
        let inv = perm.iter().tuple_combinations().filter(|(x, y)| x > y).count();
        a.add_term(e, &QTRational::from_int(if inv % 2 == 0 { 1 } else { -1 }));
    }
    SymPolynomial::from_mpoly(&a.div_vandermonde()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn p1_is_m1() {
        let p = macdonald_p(&part("1"), 3).unwrap();
        assert_eq!(p, SymPolynomial::monomial_symmetric(&part("1"), 3).unwrap());
    }

    #[test]
    fn p2_in_two_variables() {
        let p = macdonald_p(&part("2"), 2).unwrap();
        let expected: QTRational = "(1+q)*(1-t)/(1-q*t)".parse().unwrap();
        assert_eq!(p.coeff(&part("1,1")), expected);
    }

    #[test]
    fn small_schur_polynomials() {
        let s = schur_bialternant(&part("2"), 2).unwrap();
        assert_eq!(s.coeff(&part("2")), QTRational::one());
        assert_eq!(s.coeff(&part("1,1")), QTRational::one());
        let s = schur_bialternant(&part("2,1"), 3).unwrap();
        assert_eq!(s.coeff(&part("1,1,1")), QTRational::from_int(2));
    }

    #[test]
    fn too_many_parts() {
        assert!(macdonald_p(&part("1,1,1"), 2).is_err());
    }
}
