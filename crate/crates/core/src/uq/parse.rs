//! Text syntax for [`UqElement`].
//!
//! ```text
//! sum     := ['+'|'-'] product (('+'|'-') product)*
//! product := factor (['*'] factor)*
//! factor  := INT | 'v^' INT | 'q^' INT | 'q' | 'e' K | 'f' K
//!          | 'q[' INT,... ']' | ('qh' | 'q½') '[' INT,... ']'
//!          | 'E(' I ',' J ')' | ('spe' | 'spf' | 'sph') '(' I ',' J ')'
//!          | '(' sum ')'
//! ```
//!
//! Juxtaposition is composition: `e1 f1` is the product `e_1 f_1`. Weights in
//! `q[...]` are integer coordinates; `qh[...]` takes doubled coordinates.

use super::{composite_e, UqElement, WeightVector};
use crate::coeff::LaurentScalar;
use crate::error::{QzError, Result};
use crate::symplectic::{sp_element, SpKind};

/// Parses an expression for matrix size `n` (needed to build composites).
pub fn parse_uq(text: &str, n: usize) -> Result<UqElement> {
    let mut p = Parser {
        s: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        n,
    };
    if p.s.is_empty() {
        return Err(QzError::Parse("empty operator expression".into()));
    }
    let u = p.sum()?;
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(u)
}

struct Parser {
    s: Vec<char>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn err(&self, what: &str) -> QzError {
        QzError::Parse(format!("{what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn starts_with(&self, lit: &str) -> bool {
        let lit: Vec<char> = lit.chars().collect();
        self.s[self.pos..].starts_with(&lit)
    }

    fn sum(&mut self) -> Result<UqElement> {
        let mut parts = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let p = self.product()?;
            parts.push(if neg { p.scaled(LaurentScalar::from_int(-1)) } else { p });
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            UqElement::Sum(parts)
        })
    }

    fn product(&mut self) -> Result<UqElement> {
        let mut scalar = LaurentScalar::one();
        let mut ops: Vec<UqElement> = Vec::new();
        let mut any = false;
        loop {
            match self.peek() {
                None | Some('+' | '-' | ')') => break,
                Some('*') if any => {
                    self.pos += 1;
                }
                _ => {}
            }
            match self.factor()? {
                Factor::Scalar(c) => scalar *= &c,
                Factor::Op(u) => ops.push(u),
            }
            any = true;
        }
        if !any {
            return Err(self.err("expected a factor"));
        }
        let body = if ops.len() == 1 {
            ops.pop().unwrap()
        } else {
            UqElement::Compose(ops)
        };
        Ok(if scalar.is_one() { body } else { body.scaled(scalar) })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let v: i64 = self.s[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn small(&mut self) -> Result<i32> {
        let v = self.int()?;
        i32::try_from(v).map_err(|_| self.err("integer out of range"))
    }

    fn index(&mut self) -> Result<usize> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| self.err("expected a positive index"))
    }

    /// An exponent after `^`, optionally parenthesized.
    fn exponent(&mut self) -> Result<i32> {
        if self.eat('(') {
            let e = self.small()?;
            self.expect(')')?;
            Ok(e)
        } else {
            self.small()
        }
    }

    fn int_list(&mut self) -> Result<Vec<i32>> {
        self.expect('[')?;
        let mut out = vec![self.small()?];
        while self.eat(',') {
            out.push(self.small()?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect('(')?;
        let i = self.index()?;
        self.expect(',')?;
        let j = self.index()?;
        self.expect(')')?;
        Ok((i, j))
    }

    fn factor(&mut self) -> Result<Factor> {
        let Some(c) = self.peek() else {
            return Err(self.err("unexpected end of input"));
        };
        if c.is_ascii_digit() {
            return Ok(Factor::Scalar(LaurentScalar::from_int(self.int()?)));
        }
        for (lit, kind) in [("spe", SpKind::E), ("spf", SpKind::F), ("sph", SpKind::H)] {
            if self.starts_with(lit) {
                self.pos += lit.len();
                let (i, j) = self.pair()?;
                return Ok(Factor::Op(sp_element(self.n, kind, i, j)?));
            }
        }
        if self.starts_with("qh") || self.starts_with("q½") {
            self.pos += 2;
            let d = self.int_list()?;
            return Ok(Factor::Op(UqElement::q(WeightVector::from_doubled(d))));
        }
        self.pos += 1;
        match c {
            'v' => {
                self.expect('^')?;
                Ok(Factor::Scalar(LaurentScalar::v_pow(self.exponent()?)))
            }
            'q' if self.eat('^') => Ok(Factor::Scalar(LaurentScalar::q_pow(self.exponent()?))),
            'q' if self.peek() == Some('[') => {
                let w = self.int_list()?;
                Ok(Factor::Op(UqElement::q(WeightVector::from_ints(&w))))
            }
            'q' => Ok(Factor::Scalar(LaurentScalar::q_pow(1))),
            'e' => Ok(Factor::Op(UqElement::e(self.index()?))),
            'f' => Ok(Factor::Op(UqElement::f(self.index()?))),
            'E' => {
                let (i, j) = self.pair()?;
                Ok(Factor::Op(composite_e(self.n, i, j)?))
            }
            '(' => {
                let u = self.sum()?;
                self.expect(')')?;
                Ok(Factor::Op(u))
            }
            _ => {
                self.pos -= 1;
                Err(self.err(&format!("unexpected character '{c}'")))
            }
        }
    }
}

enum Factor {
    Scalar(LaurentScalar),
    Op(UqElement),
}
