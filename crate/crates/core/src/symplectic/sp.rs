use super::half;
use crate::coeff::LaurentScalar;
use crate::error::{QzError, Result};
use crate::uq::{composite_e, UqElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpKind {
    E,
    F,
    H,
}

/// The elements `sp_e(i,j)`, `sp_f(i,j)`, `sp_h(i,j)` of `U_q(sp)` as
/// combinations of composite root vectors.
///
/// `sp_h(i,i)` would need the Cartan element `E_{2i−1,2i−1} − E_{2i,2i}`,
/// which has no commutator expression; it is realized as `[e_{2i−1}, f_{2i−1}]`.
pub fn sp_element(n: usize, kind: SpKind, i: usize, j: usize) -> Result<UqElement> {
    let m = half(n)?;
    for idx in [i, j] {
        if !(1..=m).contains(&idx) {
            return Err(QzError::IndexOutOfRange { index: idx, bound: m });
        }
    }
    let twist = LaurentScalar::q_pow(2 * (i as i32 - j as i32));
    let pair = |a: (usize, usize), b: (usize, usize), sign: i64| -> Result<UqElement> {
        let first = composite_e(n, a.0, a.1)?;
        let second = composite_e(n, b.0, b.1)?;
        Ok(first.plus(&second.scaled(&twist * &LaurentScalar::from_int(sign))))
    };
    match kind {
        SpKind::E if i == j => composite_e(n, 2 * i - 1, 2 * i),
        SpKind::F if i == j => composite_e(n, 2 * i, 2 * i - 1),
        SpKind::E => pair((2 * i - 1, 2 * j), (2 * j - 1, 2 * i), 1),
        SpKind::F => pair((2 * i, 2 * j - 1), (2 * j, 2 * i - 1), 1),
        SpKind::H if i == j => Ok(UqElement::commutator(
            &UqElement::e(2 * i - 1),
            &UqElement::f(2 * i - 1),
        )),
        SpKind::H => pair((2 * i - 1, 2 * j - 1), (2 * j, 2 * i), -1),
    }
}

/// The generating set `sp_e(j,j), sp_f(j,j), sp_e(i,i+1), sp_f(i,i+1)`,
/// labelled for reports.
pub fn generating_set(n: usize) -> Result<Vec<(String, UqElement)>> {
    let m = half(n)?;
    let mut out = Vec::new();
    for j in 1..=m {
        out.push((format!("sp_e({j},{j})"), sp_element(n, SpKind::E, j, j)?));
        out.push((format!("sp_f({j},{j})"), sp_element(n, SpKind::F, j, j)?));
    }
    for i in 1..m {
        out.push((format!("sp_e({i},{})", i + 1), sp_element(n, SpKind::E, i, i + 1)?));
        out.push((format!("sp_f({i},{})", i + 1), sp_element(n, SpKind::F, i, i + 1)?));
    }
    Ok(out)
}

/// Every `sp_e(i,j)` and `sp_f(i,j)`.
pub fn full_sp_set(n: usize) -> Result<Vec<(String, UqElement)>> {
    let m = half(n)?;
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            out.push((format!("sp_e({i},{j})"), sp_element(n, SpKind::E, i, j)?));
            out.push((format!("sp_f({i},{j})"), sp_element(n, SpKind::F, i, j)?));
        }
    }
    Ok(out)
}
