//! Straightening of words into PBW normal form.
//!
//! The basic step appends one generator to a sorted word. If the last letter
//! `h` of the word exceeds the new letter `g`, the pair `h g` is rewritten by
//! one of the four relation families and the pieces are appended recursively.
//! Results are memoized per thread, keyed on `(sorted word, letter)`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::{Generator, Monomial};
use crate::coeff::LaurentScalar;

type Expansion = Rc<[(Monomial, LaurentScalar)]>;

thread_local! {
    static MEMO: RefCell<HashMap<(Monomial, Generator), Expansion>> = RefCell::new(HashMap::new());
}

/// Drops the memo table of the calling thread.
pub fn clear_straighten_cache() {
    MEMO.with(|m| m.borrow_mut().clear());
}

/// Rewrites `h g` (with `h > g`) as `c · g h + d · p1 p2`.
fn swap_rule(h: Generator, g: Generator) -> (LaurentScalar, Option<(LaurentScalar, Generator, Generator)>) {
    let (a, b, c, d) = (h.row(), h.col(), g.row(), g.col());
    debug_assert!(h > g);
    if a == c || b == d {
        (LaurentScalar::q_pow(-1), None)
    } else if b < d {
        (LaurentScalar::one(), None)
    } else {
        (
            LaurentScalar::one(),
            Some((
                -LaurentScalar::q_minus_q_inv(),
                Generator::new(c, b),
                Generator::new(a, d),
            )),
        )
    }
}

fn insert_rc(word: &[Generator], g: Generator) -> Expansion {
    if word.last().is_none_or(|&h| h <= g) {
        let mut m: Monomial = Monomial::from_slice(word);
        m.push(g);
        return Rc::from(vec![(m, LaurentScalar::one())]);
    }
    let key = (Monomial::from_slice(word), g);
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let (prefix, h) = (&word[..word.len() - 1], word[word.len() - 1]);
    let (c1, extra) = swap_rule(h, g);
    let mut acc: BTreeMap<Monomial, LaurentScalar> = BTreeMap::new();
    let mut push = |first: Generator, second: Generator, c: &LaurentScalar| {
        for (u, cu) in insert_rc(prefix, first).iter() {
            let cu = cu * c;
            for (m, cm) in insert_rc(u, second).iter() {
                let e = acc.entry(m.clone()).or_default();
                *e += &(&cu * cm);
            }
        }
    };
    push(g, h, &c1);
    if let Some((c2, p1, p2)) = extra {
        push(p1, p2, &c2);
    }
    let out: Expansion = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

/// Normal form of `word · g` for a sorted `word`.
pub fn insert_right(word: &[Generator], g: Generator) -> Vec<(Monomial, LaurentScalar)> {
    debug_assert!(word.windows(2).all(|w| w[0] <= w[1]));
    insert_rc(word, g).to_vec()
}

/// Normal form of the product of two sorted words.
pub(crate) fn multiply_words(a: &[Generator], b: &[Generator]) -> Vec<(Monomial, LaurentScalar)> {
    match (a.last(), b.first()) {
        (None, _) => return vec![(Monomial::from_slice(b), LaurentScalar::one())],
        (_, None) => return vec![(Monomial::from_slice(a), LaurentScalar::one())],
        (Some(x), Some(y)) if x <= y => {
            let mut m = Monomial::from_slice(a);
            m.extend_from_slice(b);
            return vec![(m, LaurentScalar::one())];
        }
        _ => {}
    }
    append_letters(Monomial::from_slice(a), b)
}

/// Normal form of `start · letters` for a sorted `start`.
fn append_letters(start: Monomial, letters: &[Generator]) -> Vec<(Monomial, LaurentScalar)> {
    let mut cur: BTreeMap<Monomial, LaurentScalar> = BTreeMap::new();
    cur.insert(start, LaurentScalar::one());
    for &g in letters {
        let mut next: BTreeMap<Monomial, LaurentScalar> = BTreeMap::new();
        for (u, cu) in &cur {
            for (m, cm) in insert_rc(u, g).iter() {
                *next.entry(m.clone()).or_default() += &(cu * cm);
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur.into_iter().collect()
}

/// Normal form of an arbitrary word, as `(sorted word, coefficient)` pairs
/// in normal order.
pub fn normal_form(word: &[Generator]) -> Vec<(Monomial, LaurentScalar)> {
    append_letters(Monomial::new(), word)
}
