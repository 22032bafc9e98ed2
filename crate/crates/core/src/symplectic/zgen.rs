use super::half;
use crate::coeff::LaurentScalar;
use crate::error::Result;
use crate::qmatrix::QPolynomial;
use crate::uq::Side;

/// `z^L_{ij} = Σ_k q^{(i+j+1−4k)/2} (x_{i,2k−1} x_{j,2k} − q x_{i,2k} x_{j,2k−1})`
/// and its right counterpart with rows and columns exchanged and the twist
/// exponent negated. Valid for any `i, j`; for `i < j` each summand is the
/// quantum 2-minor on rows/columns `{i, j}` and `{2k−1, 2k}`.
pub fn z_generator(side: Side, i: usize, j: usize, n: usize) -> Result<QPolynomial> {
    let m = half(n)?;
    QPolynomial::check_index(n, i)?;
    QPolynomial::check_index(n, j)?;
    let mut out = QPolynomial::zero(n);
    for k in 1..=m {
        let e = (i + j + 1) as i32 - 4 * k as i32;
        let (a, b) = (2 * k - 1, 2 * k);
        let (twist, w1, w2) = match side {
            Side::Left => (e, [(i, a), (j, b)], [(i, b), (j, a)]),
            Side::Right => (-e, [(a, i), (b, j)], [(b, i), (a, j)]),
        };
        let c = LaurentScalar::v_pow(twist);
        out.add_scaled(&QPolynomial::from_word(n, &w1, c.clone())?, &LaurentScalar::one());
        out.add_scaled(
            &QPolynomial::from_word(n, &w2, -&(&c * &LaurentScalar::q_pow(1)))?,
            &LaurentScalar::one(),
        );
    }
    Ok(out)
}

/// All `z_{ij}`, indexed `[i-1][j-1]`.
pub fn z_table(side: Side, n: usize) -> Result<Vec<Vec<QPolynomial>>> {
    (1..=n)
        .map(|i| (1..=n).map(|j| z_generator(side, i, j, n)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::quantum_det;

    #[test]
    fn small_cases() {
        assert_eq!(z_generator(Side::Left, 1, 2, 2).unwrap(), quantum_det(2));
        assert_eq!(z_generator(Side::Right, 1, 2, 2).unwrap(), quantum_det(2));
        assert!(z_generator(Side::Left, 1, 1, 4).unwrap().is_zero());
        let z12 = z_generator(Side::Left, 1, 2, 4).unwrap();
        let z21 = z_generator(Side::Left, 2, 1, 4).unwrap();
        assert_eq!(z21, z12.scale(&-LaurentScalar::q_pow(1)));
    }
}
