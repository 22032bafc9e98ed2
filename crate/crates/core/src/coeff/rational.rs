//! The fraction field `ℚ(v)` of [`LaurentScalar`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentScalar;
use super::upoly::{self, UPoly};

/// Splits a nonzero Laurent scalar as `v^shift · p(v)` with `p(0) ≠ 0`.
pub(crate) fn to_upoly(a: &LaurentScalar) -> (i32, UPoly) {
    let Some(lo) = a.min_exp() else {
        return (0, Vec::new());
    };
    let hi = a.max_exp().unwrap();
    let mut p = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in a.terms() {
        p[(e - lo) as usize] = c.clone();
    }
    (lo, p)
}

pub(crate) fn from_upoly(shift: i32, p: &[BigInt]) -> LaurentScalar {
    LaurentScalar::from_sorted_unchecked(
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (shift + i as i32, c.clone()))
            .collect(),
    )
}

/// Gcd in `ℤ[v, v⁻¹]`, normalized to lowest exponent 0 and positive leading
/// coefficient (units `±v^k` are ignored).
pub fn laurent_gcd(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    let (_, pa) = to_upoly(a);
    let (_, pb) = to_upoly(b);
    from_upoly(0, &upoly::gcd(&pa, &pb))
}

/// Exact quotient in `ℤ[v, v⁻¹]`; `None` if `b` does not divide `a`.
pub fn laurent_div_exact(a: &LaurentScalar, b: &LaurentScalar) -> Option<LaurentScalar> {
    assert!(!b.is_zero(), "division by zero");
    if a.is_zero() {
        return Some(LaurentScalar::zero());
    }
    let (sa, pa) = to_upoly(a);
    let (sb, pb) = to_upoly(b);
    upoly::div_exact(&pa, &pb).map(|q| from_upoly(sa - sb, &q))
}

/// An element of `ℚ(v)` in canonical reduced form: numerator and denominator
/// coprime in `ℤ[v]`, the denominator has nonzero constant term and positive
/// leading coefficient. Equal values therefore have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRational", into = "RawRational")]
pub struct RationalScalar {
    num: LaurentScalar,
    den: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl TryFrom<RawRational> for RationalScalar {
    type Error = String;
    fn try_from(r: RawRational) -> Result<Self, String> {
        if r.den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(RationalScalar::new(r.num, r.den))
    }
}

impl From<RationalScalar> for RawRational {
    fn from(r: RationalScalar) -> Self {
        RawRational { num: r.num, den: r.den }
    }
}

impl RationalScalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentScalar::zero(),
            den: LaurentScalar::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: LaurentScalar::one(),
            den: LaurentScalar::one(),
        }
    }

    /// Panics if `den` is zero.
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (sn, pn) = to_upoly(&num);
        let (sd, pd) = to_upoly(&den);
        let g = upoly::gcd(&pn, &pd);
        let mut pn = upoly::div_exact(&pn, &g).expect("gcd divides numerator");
        let mut pd = upoly::div_exact(&pd, &g).expect("gcd divides denominator");
        if pd.last().unwrap().is_negative() {
            pn = upoly::neg(&pn);
            pd = upoly::neg(&pd);
        }
        Self {
            num: from_upoly(sn - sd, &pn),
            den: from_upoly(0, &pd),
        }
    }

    pub fn numer(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denom(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the value as a Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `v ↦ v^k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    /// True when numerator and denominator only involve even powers of `v`.
    pub fn is_even(&self) -> bool {
        self.num.is_even() && self.den.is_even()
    }

    pub fn specialize(&self, v0: &num_rational::BigRational) -> Option<num_rational::BigRational> {
        let d = self.den.specialize(v0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.specialize(v0) / d)
        }
    }
}

impl From<LaurentScalar> for RationalScalar {
    fn from(num: LaurentScalar) -> Self {
        Self::new(num, LaurentScalar::one())
    }
}

impl From<i64> for RationalScalar {
    fn from(c: i64) -> Self {
        LaurentScalar::from_int(c).into()
    }
}

impl Add for &RationalScalar {
    type Output = RationalScalar;
    fn add(self, rhs: &RationalScalar) -> RationalScalar {
        if self.den == rhs.den {
            return RationalScalar::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalScalar::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalScalar {
    type Output = RationalScalar;
    fn sub(self, rhs: &RationalScalar) -> RationalScalar {
        self + &(-rhs)
    }
}

impl Mul for &RationalScalar {
    type Output = RationalScalar;
    fn mul(self, rhs: &RationalScalar) -> RationalScalar {
        RationalScalar::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalScalar {
    type Output = RationalScalar;
    fn div(self, rhs: &RationalScalar) -> RationalScalar {
        assert!(!rhs.is_zero(), "division by zero");
        RationalScalar::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({self})")
    }
}
