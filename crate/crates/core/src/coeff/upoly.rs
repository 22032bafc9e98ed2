//! Dense univariate polynomials over `ℤ`, stored low degree first.
//!
//! Only what the fraction fields need: content, pseudo-remainder, gcd and
//! exact division. Inputs and outputs are always trimmed (no trailing zeros).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type UPoly = Vec<BigInt>;

pub fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => BigInt::zero(),
        })
        .collect();
    trim(&mut out);
    out
}

pub fn neg(a: &[BigInt]) -> UPoly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    add(a, &neg(b))
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides every coefficient by `c`; panics in debug builds if inexact.
pub fn div_scalar(a: &[BigInt], c: &BigInt) -> UPoly {
    a.iter()
        .map(|x| {
            debug_assert!((x % c).is_zero());
            x / c
        })
        .collect()
}

/// Primitive part with positive leading coefficient.
pub fn primitive_part(a: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    div_scalar(a, &c)
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^{deg a - deg b + 1} a mod b`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    assert!(!b.is_empty(), "pseudo-division by zero polynomial");
    let mut r: UPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Gcd in `ℤ[x]`, normalized to positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return if b.last().is_some_and(|c| c.is_negative()) {
            neg(b)
        } else {
            b.to_vec()
        };
    }
    if b.is_empty() {
        return gcd(b, a);
    }
    let c = content(a).gcd(&content(b));
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    scale(&primitive_part(&x), &c)
}

/// Exact quotient `a / b` in `ℤ[x]`, or `None` when `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r: UPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let lr = r.last().unwrap();
        let (quo, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &quo * bc;
        }
        q[shift] = quo;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}
