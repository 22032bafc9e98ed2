use itertools::Itertools;

use super::sp::{full_sp_set, generating_set};
use super::{half, phi};
use crate::coeff::LaurentScalar;
use crate::error::{QzError, Result};
use crate::qmatrix::{quantum_minor, QPolynomial};
use crate::uq::{act, Side, UqElement, WeightVector};

/// Labels of the generating-set elements that fail to annihilate `p`.
pub fn invariance_failures(p: &QPolynomial, side: Side) -> Result<Vec<String>> {
    failures_among(p, side, generating_set(p.n())?)
}

fn failures_among(p: &QPolynomial, side: Side, set: Vec<(String, UqElement)>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (label, g) in set {
        if !act(side, &g, p)?.is_zero() {
            out.push(label);
        }
    }
    Ok(out)
}

/// True iff every `sp_e(j,j), sp_f(j,j), sp_e(i,i+1), sp_f(i,i+1)` kills `p`
/// on the given side.
pub fn invariance_kernel_check(p: &QPolynomial, side: Side) -> Result<bool> {
    for (_, g) in generating_set(p.n())? {
        if !act(side, &g, p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// As [`invariance_kernel_check`] but over every `sp_e(i,j)` and `sp_f(i,j)`.
pub fn full_invariance_check(p: &QPolynomial, side: Side) -> Result<bool> {
    Ok(failures_among(p, side, full_sp_set(p.n())?)?.is_empty())
}

fn check_r(r: usize, m: usize) -> Result<()> {
    if (1..=m).contains(&r) {
        Ok(())
    } else {
        Err(QzError::IndexOutOfRange { index: r, bound: m })
    }
}

/// `a_r = Σ_J q^{−2|J|} ξ^{1..2r}_{φ(J)}` over `r`-subsets `J ⊆ {1..N/2}`,
/// where `|J|` is the sum of the elements.
pub fn a_r(r: usize, n: usize) -> Result<QPolynomial> {
    let m = half(n)?;
    check_r(r, m)?;
    let rows: Vec<usize> = (1..=2 * r).collect();
    let mut out = QPolynomial::zero(n);
    for j in (1..=m).combinations(r) {
        let s: i32 = j.iter().map(|&a| a as i32).sum();
        out.add_scaled(&quantum_minor(n, &rows, &phi(&j))?, &LaurentScalar::q_pow(-2 * s));
    }
    Ok(out)
}

/// `Π_r a_r^{λ_{2r} − λ_{2r+1}}` for `λ = (μ_1, μ_1, μ_2, μ_2, …)`.
pub fn a_r_lambda(lambda: &[u32], n: usize) -> Result<QPolynomial> {
    let m = half(n)?;
    if lambda.len() > n {
        return Err(QzError::InvalidPartition(format!("{lambda:?} has more than {n} parts")));
    }
    let mut l = lambda.to_vec();
    l.resize(n + 1, 0);
    let paired = l[..n].chunks(2).all(|c| c[0] == c[1]);
    if !paired || l.windows(2).any(|w| w[0] < w[1]) {
        return Err(QzError::InvalidPartition(format!(
            "{lambda:?} is not a doubled partition"
        )));
    }
    let mut out = QPolynomial::one(n);
    for r in 1..=m {
        let mult = l[2 * r - 1] - l[2 * r];
        if mult > 0 {
            out = &out * &a_r(r, n)?.pow(mult);
        }
    }
    Ok(out)
}

/// `E_r = Σ_{I,J} q^{2(|I|−|J|)} ξ^{φ(I)}_{φ(J)}` over `r`-subsets of `{1..N/2}`.
pub fn e_r(r: usize, n: usize) -> Result<QPolynomial> {
    let m = half(n)?;
    check_r(r, m)?;
    let subsets: Vec<Vec<usize>> = (1..=m).combinations(r).collect();
    let mut out = QPolynomial::zero(n);
    for i in &subsets {
        for j in &subsets {
            let e = 2 * (i.iter().sum::<usize>() as i32 - j.iter().sum::<usize>() as i32);
            out.add_scaled(&quantum_minor(n, &phi(i), &phi(j))?, &LaurentScalar::q_pow(e));
        }
    }
    Ok(out)
}

/// The two flag quotients on which relative invariants live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosetSide {
    /// `(id ⊗ π_{B+}) Δ(p) = p ⊗ z^λ`: column weight `λ`, killed by left `e_k`.
    GModBPlus,
    /// `(π_{B−} ⊗ id) Δ(p) = z^λ ⊗ p`: row weight `λ`, killed by right `f_k`.
    BMinusModG,
}

/// Tests the relative-invariance condition through its weight and
/// highest-weight characterization.
pub fn relative_invariant_check(p: &QPolynomial, lambda: &WeightVector, side: CosetSide) -> Result<bool> {
    let n = p.n();
    if lambda.len() != n {
        return Err(QzError::SizeMismatch(lambda.len(), n));
    }
    let Some(target) = lambda.as_ints() else {
        return Ok(false);
    };
    if p.is_zero() {
        return Ok(true);
    }
    let Ok(w) = p.bi_weight() else {
        return Ok(false);
    };
    let (weight, act_side, op): (_, _, fn(usize) -> UqElement) = match side {
        CosetSide::GModBPlus => (&w.cols, Side::Left, UqElement::e),
        CosetSide::BMinusModG => (&w.rows, Side::Right, UqElement::f),
    };
    if weight.iter().zip(&target).any(|(&a, &b)| a as i32 != b) {
        return Ok(false);
    }
    for k in 1..n {
        if !act(act_side, &op(k), p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::quantum_det;
    use crate::symplectic::z_generator;

    #[test]
    fn z_generators_are_left_invariant() {
        for (i, j) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
            let z = z_generator(Side::Left, i, j, 4).unwrap();
            assert!(invariance_kernel_check(&z, Side::Left).unwrap());
            let zr = z_generator(Side::Right, i, j, 4).unwrap();
            assert!(invariance_kernel_check(&zr, Side::Right).unwrap());
        }
        let x = QPolynomial::generator(4, 1, 1).unwrap();
        assert!(!invariance_kernel_check(&x, Side::Left).unwrap());
        assert_eq!(invariance_failures(&x, Side::Left).unwrap(), ["sp_f(1,1)", "sp_f(1,2)"]);
    }

    #[test]
    fn small_invariants() {
        let det = quantum_det(2);
        assert_eq!(a_r(1, 2).unwrap(), det.scale(&LaurentScalar::q_pow(-2)));
        assert_eq!(e_r(1, 2).unwrap(), det);
        let a1 = a_r(1, 4).unwrap();
        assert!(invariance_kernel_check(&a1, Side::Left).unwrap());
        let e1 = e_r(1, 4).unwrap();
        assert!(invariance_kernel_check(&e1, Side::Left).unwrap());
        assert!(invariance_kernel_check(&e1, Side::Right).unwrap());
        assert_eq!(a_r_lambda(&[1, 1], 4).unwrap(), a1);
        assert!(a_r_lambda(&[2, 1], 4).is_err());
    }

    #[test]
    fn relative_invariants() {
        let det = quantum_det(4);
        let ones = WeightVector::from_ints(&[1, 1, 1, 1]);
        assert!(relative_invariant_check(&det, &ones, CosetSide::GModBPlus).unwrap());
        assert!(relative_invariant_check(&det, &ones, CosetSide::BMinusModG).unwrap());
        let xi = quantum_minor(4, &[1, 2], &[1, 2]).unwrap();
        let l2 = WeightVector::fundamental(4, 2);
        assert!(relative_invariant_check(&xi, &l2, CosetSide::BMinusModG).unwrap());
        let x21 = QPolynomial::generator(4, 2, 1).unwrap();
        assert!(!relative_invariant_check(&x21, &WeightVector::epsilon(4, 2), CosetSide::BMinusModG).unwrap());
    }
}
