//! The rational function field `ℚ(q, t)` used for Macdonald coefficients.
//!
//! Polynomials in `ℤ[q, t]` are stored as polynomials in `t` whose
//! coefficients are dense polynomials in `q`. Gcds are computed in
//! `ℤ[q][t]` by content/primitive-part splitting and a primitive
//! pseudo-remainder sequence.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentScalar;
use super::rational::RationalScalar;
use super::upoly::{self, UPoly};
use crate::error::QzError;

/// Polynomial in `ℤ[q, t]`: entry `k` is the coefficient of `t^k`.
type BiPoly = Vec<UPoly>;

fn bi_trim(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn bi_add(a: &[UPoly], b: &[UPoly]) -> BiPoly {
    let n = a.len().max(b.len());
    let mut out: BiPoly = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => upoly::add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => Vec::new(),
        })
        .collect();
    bi_trim(&mut out);
    out
}

fn bi_neg(a: &[UPoly]) -> BiPoly {
    a.iter().map(|c| upoly::neg(c)).collect()
}

fn bi_mul(a: &[UPoly], b: &[UPoly]) -> BiPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: BiPoly = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_empty() {
                out[i + j] = upoly::add(&out[i + j], &upoly::mul(x, y));
            }
        }
    }
    bi_trim(&mut out);
    out
}

fn bi_scale(a: &[UPoly], c: &[BigInt]) -> BiPoly {
    let mut out: BiPoly = a.iter().map(|x| upoly::mul(x, c)).collect();
    bi_trim(&mut out);
    out
}

/// Gcd of the `t`-coefficients, an element of `ℤ[q]` with positive leading
/// coefficient.
fn bi_content(a: &[UPoly]) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = upoly::gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bi_div_upoly(a: &[UPoly], c: &[BigInt]) -> BiPoly {
    a.iter()
        .map(|x| upoly::div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

/// Leading coefficient in `t`, then in `q`: the sign used for normalization.
fn bi_lead_sign_negative(a: &[UPoly]) -> bool {
    a.last().and_then(|c| c.last()).is_some_and(|c| c.is_negative())
}

fn bi_primitive(a: &[UPoly]) -> BiPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut p = bi_div_upoly(a, &bi_content(a));
    if bi_lead_sign_negative(&p) {
        p = bi_neg(&p);
    }
    p
}

fn bi_pseudo_rem(a: &[UPoly], b: &[UPoly]) -> BiPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r: BiPoly = a.to_vec();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = upoly::mul(c, &lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = upoly::sub(&r[i + shift], &upoly::mul(&lr, bc));
        }
        bi_trim(&mut r);
    }
    r
}

fn bi_gcd(a: &[UPoly], b: &[UPoly]) -> BiPoly {
    if a.is_empty() {
        return if bi_lead_sign_negative(b) {
            bi_neg(b)
        } else {
            b.to_vec()
        };
    }
    if b.is_empty() {
        return bi_gcd(b, a);
    }
    let c = upoly::gcd(&bi_content(a), &bi_content(b));
    let mut x = bi_primitive(a);
    let mut y = bi_primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // A nonzero t-free remainder: the primitive parts are coprime.
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = bi_pseudo_rem(&x, &y);
        x = y;
        y = bi_primitive(&r);
    }
    bi_scale(&bi_primitive(&x), &c)
}

fn bi_div_exact(a: &[UPoly], b: &[UPoly]) -> Option<BiPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r: BiPoly = a.to_vec();
    let mut quo: BiPoly = vec![Vec::new(); a.len() - db];
    while r.len() > db {
        let c = upoly::div_exact(r.last().unwrap(), lb)?;
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = upoly::sub(&r[i + shift], &upoly::mul(&c, bc));
        }
        quo[shift] = c;
        bi_trim(&mut r);
    }
    if r.is_empty() {
        bi_trim(&mut quo);
        Some(quo)
    } else {
        None
    }
}

fn bi_monomial(c: BigInt, qd: usize, td: usize) -> BiPoly {
    if c.is_zero() {
        return Vec::new();
    }
    let mut qpart = vec![BigInt::zero(); qd + 1];
    qpart[qd] = c;
    let mut out = vec![Vec::new(); td + 1];
    out[td] = qpart;
    out
}

/// An element of `ℚ(q, t)` in canonical reduced form.
///
/// Numerator and denominator are coprime in `ℤ[q, t]` and the denominator's
/// leading coefficient (highest power of `t`, then of `q`) is positive, so
/// derived equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: BiPoly,
    den: BiPoly,
}

impl QTRational {
    pub fn zero() -> Self {
        Self {
            num: Vec::new(),
            den: vec![vec![BigInt::one()]],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self {
            num: bi_monomial(c.into(), 0, 0),
            den: vec![vec![BigInt::one()]],
        }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c · q^a · t^b` with possibly negative exponents.
    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let num = bi_monomial(c.into(), a.max(0) as usize, b.max(0) as usize);
        let den = bi_monomial(BigInt::one(), (-a).max(0) as usize, (-b).max(0) as usize);
        Self::from_parts(num, den)
    }

    fn from_parts(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Self::zero();
        }
        let g = bi_gcd(&num, &den);
        let mut num = bi_div_exact(&num, &g).expect("gcd divides numerator");
        let mut den = bi_div_exact(&den, &g).expect("gcd divides denominator");
        if bi_lead_sign_negative(&den) {
            num = bi_neg(&num);
            den = bi_neg(&den);
        }
        Self { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QzError> {
        if rhs.is_zero() {
            return Err(QzError::DivisionByZero);
        }
        Ok(Self::from_parts(
            bi_mul(&self.num, &rhs.den),
            bi_mul(&self.den, &rhs.num),
        ))
    }

    pub fn inv(&self) -> Result<Self, QzError> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Terms of a polynomial as `(q-degree, t-degree, coefficient)` in the
    /// canonical print order: descending `q`-degree, then descending `t`.
    fn sorted_terms(p: &[UPoly]) -> Vec<(usize, usize, &BigInt)> {
        let mut out: Vec<(usize, usize, &BigInt)> = p
            .iter()
            .enumerate()
            .flat_map(|(td, c)| {
                c.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(move |(qd, x)| (qd, td, x))
            })
            .collect();
        out.sort_by_key(|x| std::cmp::Reverse((x.0, x.1)));
        out
    }

    /// Evaluates the rational function at `q = a`, `t = b` in another field.
    fn eval_with<F, T>(&self, a: &T, b: &T, from_int: F) -> (T, T)
    where
        F: Fn(&BigInt) -> T,
        T: Clone,
        for<'x> &'x T: Add<&'x T, Output = T> + Mul<&'x T, Output = T>,
    {
        let eval = |p: &[UPoly]| {
            // Horner in t with Horner in q inside.
            let mut acc: Option<T> = None;
            for c in p.iter().rev() {
                let mut inner: Option<T> = None;
                for x in c.iter().rev() {
                    let term = from_int(x);
                    inner = Some(match inner {
                        None => term,
                        Some(v) => &(&v * a) + &term,
                    });
                }
                let inner = inner.unwrap_or_else(|| from_int(&BigInt::zero()));
                acc = Some(match acc {
                    None => inner,
                    Some(v) => &(&v * b) + &inner,
                });
            }
            acc.unwrap_or_else(|| from_int(&BigInt::zero()))
        };
        (eval(&self.num), eval(&self.den))
    }

    /// Substitutes `q ↦ a`, `t ↦ b` for arbitrary elements of `ℚ(q, t)`.
    pub fn substitute(&self, a: &QTRational, b: &QTRational) -> Result<QTRational, QzError> {
        let (n, d) = self.eval_with(a, b, |c| QTRational::from_int(c.clone()));
        n.checked_div(&d)
    }

    /// Substitutes `q ↦ v^a`, `t ↦ v^b`, landing in `ℚ(v)`.
    pub fn to_v(&self, a: i32, b: i32) -> Result<RationalScalar, QzError> {
        let conv = |p: &[UPoly]| {
            LaurentScalar::from_terms(p.iter().enumerate().flat_map(|(td, c)| {
                c.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(move |(qd, x)| (a * qd as i32 + b * td as i32, x.clone()))
            }))
        };
        let den = conv(&self.den);
        if den.is_zero() {
            return Err(QzError::DivisionByZero);
        }
        Ok(RationalScalar::new(conv(&self.num), den))
    }

    pub fn numer_string(&self) -> String {
        poly_string(&self.num)
    }

    pub fn denom_string(&self) -> String {
        poly_string(&self.den)
    }
}

fn poly_string(p: &[UPoly]) -> String {
    let terms = QTRational::sorted_terms(p);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (qd, td, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || (qd == 0 && td == 0) {
            factors.push(abs.to_string());
        }
        for (name, d) in [("q", qd), ("t", td)] {
            match d {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{d}")),
            }
        }
        s.push_str(&factors.join("*"));
    }
    s
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denom_string();
        if den == "1" {
            write!(f, "{}", self.numer_string())
        } else {
            write!(f, "({})/({})", self.numer_string(), den)
        }
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QT({self})")
    }
}

impl Add for &QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        if self.den == rhs.den {
            return QTRational::from_parts(bi_add(&self.num, &rhs.num), self.den.clone());
        }
        QTRational::from_parts(
            bi_add(&bi_mul(&self.num, &rhs.den), &bi_mul(&rhs.num, &self.den)),
            bi_mul(&self.den, &rhs.den),
        )
    }
}

impl Sub for &QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        self + &(-rhs)
    }
}

impl Mul for &QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() || rhs.is_zero() {
            return QTRational::zero();
        }
        QTRational::from_parts(bi_mul(&self.num, &rhs.num), bi_mul(&self.den, &rhs.den))
    }
}

/// Panics on division by zero; use [`QTRational::checked_div`] otherwise.
impl Div for &QTRational {
    type Output = QTRational;
    fn div(self, rhs: &QTRational) -> QTRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational {
            num: bi_neg(&self.num),
            den: self.den.clone(),
        }
    }
}

impl PartialOrd for QTRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An arbitrary but fixed total order, so values can key ordered maps.
impl Ord for QTRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num, &self.den).cmp(&(&other.num, &other.den))
    }
}

impl From<i64> for QTRational {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

/// Parses expressions such as `q^2*t - 2*q + 1`, `(1-t)/(1-q*t)` or `q^-4`.
impl FromStr for QTRational {
    type Err = QzError;

    fn from_str(s: &str) -> Result<Self, QzError> {
        let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { toks, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

struct Parser {
    toks: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, what: &str) -> QzError {
        QzError::Parse(format!("{what} at offset {} in rational expression", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QTRational, QzError> {
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            -&self.term()?
        } else {
            self.term()?
        };
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QTRational, QzError> {
        let mut acc = self.power()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = if c == '*' { &acc * &f } else { acc.checked_div(&f)? };
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<QTRational, QzError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let k: i32 = self.integer()?.try_into().map_err(|_| self.err("exponent too large"))?;
        let k = if neg { -k } else { k };
        if k < 0 && base.is_zero() {
            return Err(QzError::DivisionByZero);
        }
        Ok(base.pow(k))
    }

    fn integer(&mut self) -> Result<BigInt, QzError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits: String = self.toks[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<QTRational, QzError> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(QTRational::q())
            }
            Some('t') => {
                self.pos += 1;
                Ok(QTRational::t())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(QTRational::from_int(self.integer()?)),
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTRational {
        s.parse().unwrap()
    }

    #[test]
    fn reduced_products() {
        let a = p("(1-t)/(1-q*t)");
        let b = p("(1-q*t)/(1-t)");
        assert!((&a * &b).is_one());
        assert!(p("q/q").is_one());
        assert!((&p("1-q*t") + &p("q*t-1")).is_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = QTRational::zero();
        assert!(matches!(
            QTRational::one().checked_div(&z),
            Err(QzError::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_string_round_trips() {
        let a = p("(q^2*t - 2*q + 1)*(t+q)/((t+q)*(3))");
        assert_eq!(a.to_string(), "(q^2*t - 2*q + 1)/(3)");
        assert_eq!(p(&a.to_string()), a);
        assert_eq!(p("-q^-2").to_string(), "(-1)/(q^2)");
    }

    #[test]
    fn bivariate_gcd_cancels_shared_factor() {
        // (q - t)(q t + 1) / (q - t)(q + 1)
        let n = p("(q-t)*(q*t+1)");
        let d = p("(q-t)*(q+1)");
        let r = n.checked_div(&d).unwrap();
        assert_eq!(r, p("(q*t+1)/(q+1)"));
        assert_eq!(r.denom_string(), "q + 1");
    }

    #[test]
    fn substitution_into_v() {
        let a = p("(1+q)*(1-t)/(1-q*t)");
        // q = v^2, t = v^2 gives (1 + v^2)(1 - v^2)/(1 - v^4) = 1
        assert!(a.to_v(2, 2).unwrap().is_one());
        let b = a.substitute(&p("q^-1"), &p("t^-1")).unwrap();
        assert_eq!(b, p("(1+q)*(1-t)/(1-q*t)"));
    }
}
