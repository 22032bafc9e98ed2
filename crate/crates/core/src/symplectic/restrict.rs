use crate::cpoly::CommPoly;
use crate::qmatrix::QPolynomial;

/// Which triangle survives a Borel restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Borel {
    /// `x_ij ↦ 0` for `i > j`.
    Upper,
    /// `x_ij ↦ 0` for `i < j`.
    Lower,
}

/// `π_H(x_ij) = δ_ij t_i`: keeps monomials made of diagonal generators only.
pub fn restrict_h(p: &QPolynomial) -> CommPoly {
    let n = p.n();
    let mut out = CommPoly::zero(n);
    'terms: for (m, c) in p.terms() {
        let mut exps = vec![0u32; n];
        for g in m.iter() {
            if g.row() != g.col() {
                continue 'terms;
            }
            exps[g.row() - 1] += 1;
        }
        out.add_term(exps, c);
    }
    out
}

/// Image in the quantum Borel quotient. Monomials containing a generator
/// outside the triangle span an ideal, so dropping them leaves the normal
/// form of the image.
pub fn restrict_borel(p: &QPolynomial, side: Borel) -> QPolynomial {
    let keep = |r: usize, c: usize| match side {
        Borel::Upper => r <= c,
        Borel::Lower => r >= c,
    };
    let mut out = QPolynomial::zero(p.n());
    for (m, c) in p.terms() {
        if m.iter().all(|g| keep(g.row(), g.col())) {
            out.add_term(m.clone(), c);
        }
    }
    out
}

/// Rewrites a polynomial in `t_1..t_N` in `s_i = t_{2i−1} t_{2i}`, or `None`
/// if some monomial is not a product of the `s_i`.
pub fn to_s_variables(p: &CommPoly) -> Option<CommPoly> {
    let n = p.nvars();
    if !n.is_multiple_of(2) {
        return None;
    }
    let mut out = CommPoly::zero(n / 2);
    for (e, c) in p.terms() {
        let mut s = Vec::with_capacity(n / 2);
        for pair in e.chunks(2) {
            if pair[0] != pair[1] {
                return None;
            }
            s.push(pair[0]);
        }
        out.add_term(s, c);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::LaurentScalar;
    use crate::qmatrix::quantum_det;

    #[test]
    fn torus_images() {
        let t = |i| CommPoly::var(2, i);
        assert_eq!(restrict_h(&quantum_det(2)), &t(0) * &t(1));
        assert!(restrict_h(&QPolynomial::generator(2, 1, 2).unwrap()).is_zero());
        let s = to_s_variables(&restrict_h(&quantum_det(2))).unwrap();
        assert_eq!(s, CommPoly::var(1, 0));
        assert!(to_s_variables(&t(0)).is_none());
    }

    #[test]
    fn borel_images() {
        let d = quantum_det(2);
        let diag = QPolynomial::from_word(2, &[(1, 1), (2, 2)], LaurentScalar::one()).unwrap();
        assert_eq!(restrict_borel(&d, Borel::Upper), diag);
        assert_eq!(restrict_borel(&d, Borel::Lower), diag);
    }
}
