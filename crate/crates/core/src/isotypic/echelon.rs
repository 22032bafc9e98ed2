//! Fraction-free detection of linear relations among sparse vectors over
//! `ℤ[v, v⁻¹]`.

use std::collections::BTreeMap;

use crate::coeff::{laurent_div_exact, laurent_gcd, LaurentScalar};

pub(crate) type SparseVec<K> = BTreeMap<K, LaurentScalar>;

/// `a·x − b·y`, dropping cancelled entries.
fn combine<K: Ord + Clone>(a: &LaurentScalar, x: &SparseVec<K>, b: &LaurentScalar, y: &SparseVec<K>) -> SparseVec<K> {
    let mut out = SparseVec::new();
    for (k, c) in x {
        out.insert(k.clone(), c * a);
    }
    for (k, c) in y {
        let d = -&(c * b);
        match out.get_mut(k) {
            Some(e) => {
                *e += &d;
                if e.is_zero() {
                    out.remove(k);
                }
            }
            None => {
                out.insert(k.clone(), d);
            }
        }
    }
    out
}

/// Gcd of every coefficient in both vectors (a non-unit only when it helps).
fn content<'a>(coeffs: impl Iterator<Item = &'a LaurentScalar>) -> LaurentScalar {
    let mut g: Option<LaurentScalar> = None;
    for c in coeffs {
        g = Some(match g {
            None => laurent_gcd(c, c),
            Some(g) => laurent_gcd(&g, c),
        });
        if g.as_ref().is_some_and(|g| g.is_one()) {
            break;
        }
    }
    g.unwrap_or_else(LaurentScalar::one)
}

fn divide_all<K: Ord>(v: &mut SparseVec<K>, g: &LaurentScalar) {
    for c in v.values_mut() {
        *c = laurent_div_exact(c, g).expect("content divides every coefficient");
    }
}

/// Incremental semi-echelon form. Each pushed vector is reduced against the
/// stored pivots while its combination in terms of the pushed inputs is
/// tracked; a vector that reduces to zero yields a relation.
pub(crate) struct RelationFinder<K: Ord + Clone> {
    pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)>,
    pushed: usize,
}

impl<K: Ord + Clone> RelationFinder<K> {
    pub(crate) fn new() -> Self {
        Self {
            pivots: BTreeMap::new(),
            pushed: 0,
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pushes the next vector; returns `Some(coefficients)` over the pushed
    /// indices (`0..`) when it is dependent on the earlier ones.
    pub(crate) fn push(&mut self, v: SparseVec<K>) -> Option<SparseVec<usize>> {
        let idx = self.pushed;
        self.pushed += 1;
        let mut img = v;
        let mut combo: SparseVec<usize> = BTreeMap::from([(idx, LaurentScalar::one())]);
        loop {
            let Some((key, c)) = img.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                let g = content(combo.values());
                divide_all(&mut combo, &g);
                return Some(combo);
            };
            let Some((row, row_combo)) = self.pivots.get(&key) else {
                let g = content(img.values().chain(combo.values()));
                if !g.is_one() {
                    divide_all(&mut img, &g);
                    divide_all(&mut combo, &g);
                }
                self.pivots.insert(key, (img, combo));
                return None;
            };
            let p = &row[&key];
            let g = laurent_gcd(p, &c);
            let (a, b) = (
                laurent_div_exact(p, &g).expect("gcd divides"),
                laurent_div_exact(&c, &g).expect("gcd divides"),
            );
            img = combine(&a, &img, &b, row);
            combo = combine(&a, &combo, &b, row_combo);
        }
    }
}
