use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Partition;
use crate::coeff::QTRational;
use crate::error::{QzError, Result};

/// A polynomial in `x_1, …, x_n` over `ℚ(q, t)`, keyed by exponent vector.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, QTRational>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![0; n], QTRational::one())
    }

    pub fn monomial(n: usize, exps: Vec<u32>, c: QTRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(exps, &c);
        p
    }

    /// `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(n, e, QTRational::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &QTRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> QTRational {
        self.terms.get(exps).cloned().unwrap_or_else(QTRational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &QTRational) {
        debug_assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MPoly, c: &QTRational) {
        for (e, x) in &other.terms {
            self.add_term(e.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &QTRational) -> MPoly {
        let mut out = MPoly::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// Multiplies by `c · x^e`.
    pub fn mul_monomial(&self, e: &[u32], c: &QTRational) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (a, x) in &self.terms {
            let f: Vec<u32> = a.iter().zip(e).map(|(x, y)| x + y).collect();
            out.add_term(f, &(x * c));
        }
        out
    }

    /// `T_{u, x_i}`: substitutes `x_i ↦ u x_i` (1-based `i`).
    pub fn shift(&self, i: usize, u: &QTRational) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &(c * &u.pow(e[i - 1] as i32)));
        }
        out
    }

    /// Substitutes `q ↦ a`, `t ↦ b` in every coefficient.
    pub fn substitute(&self, a: &QTRational, b: &QTRational) -> Result<MPoly> {
        let mut out = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.substitute(a, b)?);
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            e.iter()
                .copied()
                .permutations(self.n)
                .all(|f| self.terms.get(&f) == Some(c))
        })
    }

    /// Exact division by `Δ = Π_{i<j} (x_i − x_j)`, by lexicographic long
    /// division.
    pub fn div_vandermonde(&self) -> Result<MPoly> {
        let n = self.n;
        let delta = vandermonde(n);
        let lead: Vec<u32> = (0..n as u32).rev().collect();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(n);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead).any(|(a, b)| a < b) {
                return Err(QzError::NonzeroRemainder);
            }
            let shift: Vec<u32> = e.iter().zip(&lead).map(|(a, b)| a - b).collect();
            quot.add_term(shift.clone(), &c);
            rem.add_scaled(&delta.mul_monomial(&shift, &c), &-&QTRational::one());
        }
        Ok(quot)
    }
}

/// `Π_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> MPoly {
    let mut out = MPoly::one(n);
    for (i, j) in (1..=n).tuple_combinations() {
        let mut f = MPoly::var(n, i);
        f.add_scaled(&MPoly::var(n, j), &QTRational::from_int(-1));
        out = out.mul(&f);
    }
    out
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().rev().map(|(e, c)| format!("({c})*x^{e:?}")).collect();
        write!(f, "MPoly[{}]", parts.join(" + "))
    }
}

/// A symmetric polynomial in `n` variables, in the basis of monomial
/// symmetric functions `m_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPolynomial {
    n: usize,
    coeffs: BTreeMap<Partition, QTRational>,
}

impl SymPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `m_λ`, or an error if `λ` has more than `n` parts.
    pub fn monomial_symmetric(lambda: &Partition, n: usize) -> Result<Self> {
        if lambda.len() > n {
            return Err(QzError::InvalidPartition(format!("{lambda} has more than {n} parts")));
        }
        let mut s = Self::zero(n);
        s.coeffs.insert(lambda.clone(), QTRational::one());
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> QTRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QTRational::zero)
    }

    /// Nonzero coefficients, largest partition (lexicographically) first.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &QTRational)> {
        self.coeffs.iter().rev()
    }

    pub fn set_coeff(&mut self, lambda: Partition, c: QTRational) {
        if c.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, c);
        }
    }

    pub fn to_mpoly(&self) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (lambda, c) in &self.coeffs {
            for e in lambda.padded(self.n).into_iter().permutations(self.n).unique() {
                out.add_term(e, c);
            }
        }
        out
    }

    /// Reads off the `m`-basis coefficients, checking symmetry.
    pub fn from_mpoly(p: &MPoly) -> Result<Self> {
        if !p.is_symmetric() {
            return Err(QzError::NotSymmetric);
        }
        let mut out = Self::zero(p.n());
        for (e, c) in p.terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.coeffs.insert(Partition::new(e.clone())?, c.clone());
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, a: &QTRational, b: &QTRational) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.coeffs {
            out.set_coeff(l.clone(), c.substitute(a, b)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QTRational) -> Self {
        let mut out = Self::zero(self.n);
        for (l, x) in &self.coeffs {
            out.set_coeff(l.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &SymPolynomial) -> Self {
        let mut out = self.clone();
        for (l, x) in &other.coeffs {
            out.set_coeff(l.clone(), &out.coeff(l) + x);
        }
        out
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs()
            .map(|(l, c)| {
                if c.is_one() {
                    format!("m{l}")
                } else {
                    format!("({c})*m{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPolynomial(n={}, {self})", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct RawValue {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct RawCoeff {
    lambda: Vec<u32>,
    value: RawValue,
}

#[derive(Serialize, Deserialize)]
struct RawSym {
    n: usize,
    basis: String,
    coeffs: Vec<RawCoeff>,
}

const BASIS: &str = "monomial-symmetric";

impl Serialize for SymPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSym {
            n: self.n,
            basis: BASIS.to_string(),
            coeffs: self
                .coeffs()
                .map(|(l, c)| RawCoeff {
                    lambda: l.parts().to_vec(),
                    value: RawValue {
                        num: c.numer_string(),
                        den: c.denom_string(),
                    },
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSym::deserialize(d)?;
        if raw.basis != BASIS {
            return Err(D::Error::custom(format!("unsupported basis {:?}", raw.basis)));
        }
        let mut out = SymPolynomial::zero(raw.n);
        for c in raw.coeffs {
            let lambda = Partition::new(c.lambda).map_err(D::Error::custom)?;
            if lambda.len() > raw.n {
                return Err(D::Error::custom(format!("{lambda} has more than {} parts", raw.n)));
            }
            let num: QTRational = c.value.num.parse().map_err(D::Error::custom)?;
            let den: QTRational = c.value.den.parse().map_err(D::Error::custom)?;
            out.set_coeff(lambda, num.checked_div(&den).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}
