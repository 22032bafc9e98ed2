//! Commutative polynomials with Laurent-scalar coefficients.
//!
//! Used for images of the torus restriction (variables `t_i` or `s_i`) and
//! for classical checks in commuting surrogate variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::LaurentScalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CommPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, LaurentScalar>,
}

impl CommPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: LaurentScalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], &c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, LaurentScalar::one())
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, &LaurentScalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms keyed by exponent vector, in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> LaurentScalar {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &LaurentScalar) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            p.add_term(e.clone(), &(x * c));
        }
        p
    }

    /// Permutes variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            p.add_term(f, c);
        }
        p
    }

    /// True when invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute(&perm) == *self
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Formats with the given variable prefix, e.g. `t1*t2 + (v^2)*t3*t4`.
    pub fn display_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mut factors: Vec<String> = Vec::new();
                for (i, &x) in e.iter().enumerate() {
                    match x {
                        0 => {}
                        1 => factors.push(format!("{var}{}", i + 1)),
                        _ => factors.push(format!("{var}{}^{x}", i + 1)),
                    }
                }
                let mono = factors.join("*");
                match (c.is_one(), mono.is_empty()) {
                    (true, true) => "1".to_string(),
                    (true, false) => mono,
                    (false, true) => format!("({c})"),
                    (false, false) => format!("({c})*{mono}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl Add for &CommPoly {
    type Output = CommPoly;
    fn add(self, rhs: &CommPoly) -> CommPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        self.scale(&LaurentScalar::from_int(-1))
    }
}

impl Sub for &CommPoly {
    type Output = CommPoly;
    fn sub(self, rhs: &CommPoly) -> CommPoly {
        self + &(-rhs)
    }
}

impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = CommPoly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_operations_and_symmetry() {
        let a = CommPoly::var(2, 0);
        let b = CommPoly::var(2, 1);
        let s = &(&a * &a) + &(&b * &b);
        assert!(s.is_symmetric());
        assert!(!(&s + &a).is_symmetric());
        let d = &(&a + &b).pow(2) - &s;
        assert_eq!(d, (&a * &b).scale(&LaurentScalar::from_int(2)));
        assert_eq!(d.to_string(), "(2)*t1*t2");
    }
}
