use itertools::Itertools;

use super::{MPoly, Partition, SymPolynomial};
use crate::coeff::QTRational;
use crate::error::{QzError, Result};

/// `T_{u, x_i} f` for a symmetric `f`; the result is no longer symmetric.
pub fn shift(f: &SymPolynomial, i: usize, u: &QTRational) -> Result<MPoly> {
    if i == 0 || i > f.n() {
        return Err(QzError::IndexOutOfRange { index: i, bound: f.n() });
    }
    Ok(f.to_mpoly().shift(i, u))
}

/// Vandermonde product over every variable except `skip` (0-based).
fn vandermonde_without(n: usize, skip: usize) -> MPoly {
    let mut out = MPoly::one(n);
    for (a, b) in (0..n).filter(|&k| k != skip).tuple_combinations() {
        let mut f = MPoly::var(n, a + 1);
        f.add_scaled(&MPoly::var(n, b + 1), &QTRational::from_int(-1));
        out = out.mul(&f);
    }
    out
}

/// `D_1 = Σ_i Π_{j≠i} (t x_i − x_j)/(x_i − x_j) T_{q,x_i}`, summed over the
/// common denominator `Δ` and divided exactly.
pub fn macdonald_d1(f: &SymPolynomial) -> Result<SymPolynomial> {
    let n = f.n();
    let base = f.to_mpoly();
    let q = QTRational::q();
    let t = QTRational::t();
    let mut numer = MPoly::zero(n);
    for i in 0..n {
        let mut term = base.shift(i + 1, &q);
        for j in (0..n).filter(|&j| j != i) {
            let mut lin = MPoly::var(n, i + 1).scale(&t);
            lin.add_scaled(&MPoly::var(n, j + 1), &QTRational::from_int(-1));
            term = term.mul(&lin);
        }
        term = term.mul(&vandermonde_without(n, i));
        let sign = QTRational::from_int(if i % 2 == 0 { 1 } else { -1 });
        numer.add_scaled(&term, &sign);
    }
    SymPolynomial::from_mpoly(&numer.div_vandermonde()?)
}

/// `(−1)^{#\{i<j : e_i < e_j\}}`: the sign of the permutation taking the
/// decreasing arrangement to `e`.
fn arrangement_sign(e: &[u32]) -> i64 {
    let inv = e.iter().tuple_combinations().filter(|(a, b)| a < b).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The coefficient `D_r` of `X^{n−r}` in the generating operator
/// `Δ⁻¹ Σ_w ε(w) x^{wδ} Π_i (X + t^{(wδ)_i} T_{q,x_i})`.
pub fn macdonald_dr(f: &SymPolynomial, r: usize) -> Result<SymPolynomial> {
    let n = f.n();
    if r > n {
        return Err(QzError::IndexOutOfRange { index: r, bound: n });
    }
    let base = f.to_mpoly();
    let q = QTRational::q();
    let t = QTRational::t();
    let shifted: Vec<(Vec<usize>, MPoly)> = (0..n)
        .combinations(r)
        .map(|s| {
            let g = s.iter().fold(base.clone(), |g, &i| g.shift(i + 1, &q));
            (s, g)
        })
        .collect();
    let delta: Vec<u32> = (0..n as u32).rev().collect();
    let mut numer = MPoly::zero(n);
    for e in delta.iter().copied().permutations(n) {
        let sign = QTRational::from_int(arrangement_sign(&e));
        for (s, g) in &shifted {
            let tp: u32 = s.iter().map(|&i| e[i]).sum();
            numer.add_scaled(&g.mul_monomial(&e, &t.pow(tp as i32)), &sign);
        }
    }
    SymPolynomial::from_mpoly(&numer.div_vandermonde()?)
}

/// `Σ_i q^{λ_i} t^{n−i}`.
pub fn eigenvalue(lambda: &Partition, n: usize) -> QTRational {
    eigen_multiset(lambda, n)
        .iter()
        .fold(QTRational::zero(), |acc, x| &acc + x)
}

/// `e_r(q^{λ_i} t^{n−i})`, the eigenvalue of `D_r` on `P_λ`.
pub fn dr_eigenvalue(lambda: &Partition, n: usize, r: usize) -> QTRational {
    let xs = eigen_multiset(lambda, n);
    xs.iter()
        .combinations(r)
        .map(|c| c.into_iter().fold(QTRational::one(), |acc, x| &acc * x))
        .fold(QTRational::zero(), |acc, x| &acc + &x)
}

fn eigen_multiset(lambda: &Partition, n: usize) -> Vec<QTRational> {
    lambda
        .padded(n)
        .iter()
        .enumerate()
        .map(|(i, &l)| QTRational::monomial(1, l as i32, (n - 1 - i) as i32))
        .collect()
}
