//! The quantum matrix algebra `A_q(X)` on `N × N` generators `x_ij`.
//!
//! Elements are kept in PBW normal form: every monomial is a word sorted by
//! the row-major order on `(row, col)`.

mod json;
mod minors;
mod straighten;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use smallvec::SmallVec;

use crate::coeff::LaurentScalar;
use crate::error::{QzError, Result};

pub use minors::{inversions, quantum_det, quantum_minor};
pub use straighten::{clear_straighten_cache, insert_right, normal_form};

/// Largest supported matrix size (indices are packed into a byte).
pub const MAX_N: usize = 16;

/// A generator `x_{row,col}`; the derived order is row-major.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(u8);

impl Generator {
    /// 1-based indices. Panics if either index is outside `1..=MAX_N`.
    pub fn new(row: usize, col: usize) -> Self {
        assert!(
            (1..=MAX_N).contains(&row) && (1..=MAX_N).contains(&col),
            "generator index out of range"
        );
        Generator(((row - 1) * 16 + (col - 1)) as u8)
    }

    pub fn row(self) -> usize {
        (self.0 >> 4) as usize + 1
    }

    pub fn col(self) -> usize {
        (self.0 & 15) as usize + 1
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}", self.row(), self.col())
    }
}

/// A word in the generators. Stored words inside a [`QPolynomial`] are
/// always sorted.
pub type Monomial = SmallVec<[Generator; 8]>;

/// All normal monomials of degree `d` in `N × N` generators, in normal order.
/// Their number is `binomial(N² + d − 1, d)`.
pub fn normal_monomials(n: usize, d: usize) -> Vec<Monomial> {
    use itertools::Itertools;
    let gens: Vec<Generator> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| Generator::new(i, j)))
        .collect();
    gens.into_iter()
        .combinations_with_replacement(d)
        .map(Monomial::from_vec)
        .collect()
}

/// Row and column multidegrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiWeight {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl BiWeight {
    pub fn zero(n: usize) -> Self {
        Self {
            rows: vec![0; n],
            cols: vec![0; n],
        }
    }

    pub fn of_word(n: usize, word: &[Generator]) -> Self {
        let mut w = Self::zero(n);
        for g in word {
            w.rows[g.row() - 1] += 1;
            w.cols[g.col() - 1] += 1;
        }
        w
    }

    pub fn add(&self, other: &BiWeight) -> BiWeight {
        BiWeight {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a + b).collect(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.rows.iter().sum()
    }
}

/// An element of `A_q(X)` for a fixed matrix size `N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    n: u8,
    terms: BTreeMap<Monomial, LaurentScalar>,
}

impl QPolynomial {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "matrix size out of range");
        Self {
            n: n as u8,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.terms.insert(Monomial::new(), LaurentScalar::one());
        p
    }

    pub fn check_index(n: usize, i: usize) -> Result<()> {
        if (1..=n).contains(&i) {
            Ok(())
        } else {
            Err(QzError::IndexOutOfRange { index: i, bound: n })
        }
    }

    /// The generator `x_{ij}`.
    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::check_index(n, i)?;
        Self::check_index(n, j)?;
        let mut p = Self::zero(n);
        p.terms
            .insert(SmallVec::from_slice(&[Generator::new(i, j)]), LaurentScalar::one());
        Ok(p)
    }

    /// Normal form of `coeff · x_{w1} x_{w2} ⋯` for a word of index pairs.
    pub fn from_word(n: usize, word: &[(usize, usize)], coeff: LaurentScalar) -> Result<Self> {
        let mut gens: Monomial = SmallVec::with_capacity(word.len());
        for &(i, j) in word {
            Self::check_index(n, i)?;
            Self::check_index(n, j)?;
            gens.push(Generator::new(i, j));
        }
        let mut p = Self::zero(n);
        for (m, c) in normal_form(&gens) {
            p.add_term(m, &(&c * &coeff));
        }
        Ok(p)
    }

    /// Builds a polynomial from words that are already sorted. Used by code
    /// that constructs normal monomials directly (minors, restrictions).
    pub(crate) fn from_sorted_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, LaurentScalar)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            debug_assert!(m.windows(2).all(|w| w[0] <= w[1]));
            p.add_term(m, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in normal order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[Generator]) -> LaurentScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, other: &QPolynomial, c: &LaurentScalar) {
        assert_eq!(self.n, other.n, "ambient mismatch");
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> QPolynomial {
        let mut p = QPolynomial::zero(self.n());
        if c.is_zero() {
            return p;
        }
        p.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        p
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentScalar) -> LaurentScalar) -> QPolynomial {
        let mut p = QPolynomial::zero(self.n());
        for (m, c) in &self.terms {
            p.add_term(m.clone(), &f(c));
        }
        p
    }

    pub fn multiply(&self, other: &QPolynomial) -> Result<QPolynomial> {
        if self.n != other.n {
            return Err(QzError::AmbientMismatch(self.n, other.n));
        }
        let mut out = QPolynomial::zero(self.n());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (m, x) in straighten::multiply_words(a, b) {
                    out.add_term(m, &(&x * &c));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> QPolynomial {
        let mut out = QPolynomial::one(self.n());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// The common bi-weight of all terms. The zero polynomial has the zero
    /// bi-weight.
    pub fn bi_weight(&self) -> Result<BiWeight> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Ok(BiWeight::zero(self.n()));
        };
        let w = BiWeight::of_word(self.n(), first);
        for m in it {
            if BiWeight::of_word(self.n(), m) != w {
                return Err(QzError::Inhomogeneous);
            }
        }
        Ok(w)
    }

    /// Total degree, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Splits into bi-homogeneous components.
    pub fn bi_homogeneous_parts(&self) -> BTreeMap<BiWeight, QPolynomial> {
        let mut out: BTreeMap<BiWeight, QPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(BiWeight::of_word(self.n(), m))
                .or_insert_with(|| QPolynomial::zero(self.n()))
                .add_term(m.clone(), c);
        }
        out
    }

    /// The `q = 1` image: normal words correspond bijectively to commutative
    /// monomials, so the result is keyed by the same sorted words.
    pub fn at_q_one(&self) -> BTreeMap<Monomial, BigInt> {
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.at_one();
            if v != BigInt::from(0) {
                out.insert(m.clone(), v);
            }
        }
        out
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::one());
        out
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::from_int(-1));
        out
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        self.scale(&LaurentScalar::from_int(-1))
    }
}

/// Panics on ambient mismatch; use [`QPolynomial::multiply`] to get an error.
impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        self.multiply(rhs).expect("ambient mismatch")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let word: Vec<String> = m.iter().map(|g| format!("x{}{}", g.row(), g.col())).collect();
            let word = if word.is_empty() {
                "1".to_string()
            } else {
                word.join("*")
            };
            if c.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "({c})*{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial[N={}]({self})", self.n)
    }
}
