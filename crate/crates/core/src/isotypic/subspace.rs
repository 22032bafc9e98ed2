use std::collections::BTreeMap;

use serde::Serialize;

use super::echelon::{RelationFinder, SparseVec};
use crate::coeff::{laurent_div_exact, laurent_gcd, LaurentScalar, RationalScalar};
use crate::qmatrix::{Monomial, QPolynomial};

type Row = BTreeMap<Monomial, RationalScalar>;

/// A subspace of `A_q(X)` in reduced row-echelon form over `ℚ(v)`.
///
/// Rows are keyed by their pivot (the smallest monomial in the row), the
/// pivot entry is 1 and no other row has a nonzero entry in a pivot column,
/// so two bases of the same subspace compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    n: usize,
    rows: BTreeMap<Monomial, Row>,
}

fn to_row(p: &QPolynomial) -> Row {
    p.terms()
        .map(|(m, c)| (m.clone(), RationalScalar::from(c.clone())))
        .collect()
}

impl SubspaceBasis {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_vectors<'a>(n: usize, vs: impl IntoIterator<Item = &'a QPolynomial>) -> Self {
        let mut s = Self::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.rows.keys()
    }

    /// Rows in pivot order, as `(monomial, coefficient)` lists.
    pub fn rows(&self) -> impl Iterator<Item = &BTreeMap<Monomial, RationalScalar>> {
        self.rows.values()
    }

    fn reduce(&self, mut v: Row) -> Row {
        let mut cursor: Option<Monomial> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(c) => v
                    .range::<Monomial, _>((std::ops::Bound::Excluded(c), std::ops::Bound::Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(key) = next else {
                return v;
            };
            let factor = v[&key].clone();
            for (m, c) in &self.rows[&key] {
                let d = &factor * c;
                match v.get_mut(m) {
                    Some(e) => {
                        *e = &*e - &d;
                        if e.is_zero() {
                            v.remove(m);
                        }
                    }
                    None => {
                        v.insert(m.clone(), -&d);
                    }
                }
            }
            cursor = Some(key);
        }
    }

    pub fn contains(&self, p: &QPolynomial) -> bool {
        self.reduce(to_row(p)).is_empty()
    }

    /// Adds `p` to the span; returns whether the rank grew.
    pub fn insert(&mut self, p: &QPolynomial) -> bool {
        assert_eq!(p.n(), self.n, "ambient size mismatch");
        let mut v = self.reduce(to_row(p));
        let Some((pivot, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv();
        for c in v.values_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.values_mut() {
            let Some(f) = row.get(&pivot).cloned() else {
                continue;
            };
            for (m, c) in &v {
                let d = &f * c;
                match row.get_mut(m) {
                    Some(e) => {
                        *e = &*e - &d;
                        if e.is_zero() {
                            row.remove(m);
                        }
                    }
                    None => {
                        row.insert(m.clone(), -&d);
                    }
                }
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    /// Row `i` (pivot order) with denominators cleared and content removed.
    pub fn row_polynomial(&self, i: usize) -> Option<QPolynomial> {
        let row = self.rows.values().nth(i)?;
        Some(clear_denominators(self.n, row))
    }

    /// Every row as a polynomial, see [`row_polynomial`](Self::row_polynomial).
    pub fn polynomials(&self) -> Vec<QPolynomial> {
        self.rows.values().map(|r| clear_denominators(self.n, r)).collect()
    }

    /// The intersection, computed from the relations between the two
    /// spanning sets.
    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        let a = self.polynomials();
        let b = other.polynomials();
        let mut finder: RelationFinder<Monomial> = RelationFinder::new();
        let mut out = SubspaceBasis::new(self.n);
        for p in a.iter().chain(&b) {
            let v: SparseVec<Monomial> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            if let Some(rel) = finder.push(v) {
                let mut w = QPolynomial::zero(self.n);
                for (&i, c) in rel.range(..a.len()) {
                    w.add_scaled(&a[i], c);
                }
                out.insert(&w);
            }
        }
        out
    }
}

/// Multiplies a rational row by the lcm of its denominators and removes the
/// content of the result.
pub(crate) fn clear_denominators(n: usize, row: &Row) -> QPolynomial {
    let mut l = LaurentScalar::one();
    for c in row.values() {
        let d = c.denom();
        let g = laurent_gcd(&l, d);
        l = laurent_div_exact(&(&l * d), &g).expect("gcd divides product");
    }
    let mut out = QPolynomial::zero(n);
    for (m, c) in row {
        let k = laurent_div_exact(&l, c.denom()).expect("lcm is a multiple");
        out.add_term(m.clone(), &(&k * c.numer()));
    }
    primitive(&out)
}

/// Divides out the gcd of all coefficients and the unit `±v^k` that makes
/// the first coefficient start at `v^0` with a positive lowest coefficient.
pub(crate) fn primitive(p: &QPolynomial) -> QPolynomial {
    let mut g: Option<LaurentScalar> = None;
    for (_, c) in p.terms() {
        let next = match &g {
            None => laurent_gcd(c, c),
            Some(g) => laurent_gcd(g, c),
        };
        let done = next.is_one();
        g = Some(next);
        if done {
            break;
        }
    }
    let Some(g) = g else {
        return p.clone();
    };
    let mut out = if g.is_one() {
        p.clone()
    } else {
        p.map_coeffs(|c| laurent_div_exact(c, &g).expect("content divides"))
    };
    let (_, first) = out.terms().next().expect("nonzero");
    let (e, c) = first.terms().next().expect("nonzero coefficient");
    let sign = if c.sign() == num_bigint::Sign::Minus { -1 } else { 1 };
    if e != 0 || sign < 0 {
        out = out.scale(&LaurentScalar::monomial(sign, -e));
    }
    out
}

/// JSON export: the polynomial format of each row plus a header.
#[derive(Serialize)]
pub struct SubspaceExport {
    #[serde(rename = "N")]
    pub n: usize,
    pub degree: Option<usize>,
    pub lambda: Option<Vec<u32>>,
    pub rank: usize,
    pub rows: Vec<QPolynomial>,
}

impl SubspaceBasis {
    pub fn export(&self, lambda: Option<Vec<u32>>) -> SubspaceExport {
        let rows = self.polynomials();
        SubspaceExport {
            n: self.n,
            degree: rows.first().and_then(|r| r.degree()),
            lambda,
            rank: rows.len(),
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, j: usize) -> QPolynomial {
        QPolynomial::generator(2, i, j).unwrap()
    }

    #[test]
    fn representation_independent() {
        let q = LaurentScalar::q_pow(1);
        let a = SubspaceBasis::from_vectors(2, &[x(1, 1), x(1, 2)]);
        let u = &x(1, 1) + &x(1, 2).scale(&q);
        let w = &x(1, 1) - &x(1, 2);
        let b = SubspaceBasis::from_vectors(2, &[u.clone(), w]);
        assert_eq!(a, b);
        assert!(a.contains(&u));
        assert!(!a.contains(&x(2, 1)));
        let mut c = a.clone();
        assert!(!c.insert(&u));
        assert_eq!(c.rank(), 2);
    }

    #[test]
    fn intersection_and_clearing() {
        let a = SubspaceBasis::from_vectors(2, &[x(1, 1), x(1, 2)]);
        let b = SubspaceBasis::from_vectors(2, &[&x(1, 1) + &x(2, 2), x(1, 2)]);
        let i = a.intersect(&b);
        assert_eq!(i.rank(), 1);
        assert!(i.contains(&x(1, 2)));
        let half = &x(1, 1).scale(&LaurentScalar::q_pow(1)) + &x(1, 2);
        let s = SubspaceBasis::from_vectors(2, std::slice::from_ref(&half));
        assert_eq!(s.polynomials(), vec![half.scale(&LaurentScalar::q_pow(-1))]);
    }
}
