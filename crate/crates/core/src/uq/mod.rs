//! Left and right actions of `U_q(gl_N)` on `A_q(X)`.
//!
//! The left action moves column indices and the right action moves row
//! indices. On products the coproduct `e_k ↦ e_k ⊗ q^{−α_k/2} + q^{α_k/2} ⊗ e_k`
//! (and likewise for `f_k`) gives a twisted Leibniz rule: factors to the left
//! of the acting position pick up `q^{α_k/2}`, factors to the right pick up
//! `q^{−α_k/2}`.

mod parse;

use std::fmt;

use crate::coeff::LaurentScalar;
use crate::error::{QzError, Result};
use crate::qmatrix::{normal_form, Generator, Monomial, QPolynomial};

pub use parse::parse_uq;

/// A weight `λ ∈ ½ℤ^N`, stored with every coordinate doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    doubled: Vec<i32>,
}

impl WeightVector {
    pub fn from_doubled(doubled: Vec<i32>) -> Self {
        Self { doubled }
    }

    pub fn from_ints(coords: &[i32]) -> Self {
        Self {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self { doubled: vec![0; n] }
    }

    /// `ε_i`, 1-based.
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.doubled[i - 1] = 2;
        w
    }

    /// `α_k = ε_k − ε_{k+1}`.
    pub fn alpha(n: usize, k: usize) -> Self {
        let mut w = Self::zero(n);
        w.doubled[k - 1] = 2;
        w.doubled[k] = -2;
        w
    }

    /// `Λ_k = ε_1 + ⋯ + ε_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        let mut w = Self::zero(n);
        for c in &mut w.doubled[..k] {
            *c = 2;
        }
        w
    }

    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn neg(&self) -> Self {
        Self {
            doubled: self.doubled.iter().map(|c| -c).collect(),
        }
    }

    /// Returns the integer coordinates if every coordinate is integral.
    pub fn as_ints(&self) -> Option<Vec<i32>> {
        self.doubled.iter().map(|c| (c % 2 == 0).then_some(c / 2)).collect()
    }

    /// `2⟨λ, μ⟩` for an integral `μ`: the `v`-exponent of `q^{⟨λ, μ⟩}`.
    pub fn v_exponent(&self, mu: &[u32]) -> i32 {
        self.doubled.iter().zip(mu).map(|(a, b)| a * *b as i32).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A generator of `U_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    E(usize),
    F(usize),
    Q(WeightVector),
}

/// A formal expression in `U_q`, evaluated only through its action.
///
/// `Compose(vec![a, b, c])` is the product `a b c`: on the left it acts as
/// `a.(b.(c.p))`, on the right as `((p.a).b).c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UqElement {
    Atom(Atom),
    Compose(Vec<UqElement>),
    Sum(Vec<UqElement>),
    Scale(LaurentScalar, Box<UqElement>),
}

impl UqElement {
    pub fn e(k: usize) -> Self {
        UqElement::Atom(Atom::E(k))
    }

    pub fn f(k: usize) -> Self {
        UqElement::Atom(Atom::F(k))
    }

    pub fn q(lambda: WeightVector) -> Self {
        UqElement::Atom(Atom::Q(lambda))
    }

    pub fn identity() -> Self {
        UqElement::Compose(Vec::new())
    }

    pub fn compose(parts: Vec<UqElement>) -> Self {
        UqElement::Compose(parts)
    }

    pub fn then(&self, other: &UqElement) -> Self {
        UqElement::Compose(vec![self.clone(), other.clone()])
    }

    pub fn plus(&self, other: &UqElement) -> Self {
        UqElement::Sum(vec![self.clone(), other.clone()])
    }

    pub fn minus(&self, other: &UqElement) -> Self {
        self.plus(&other.scaled(LaurentScalar::from_int(-1)))
    }

    pub fn scaled(&self, c: LaurentScalar) -> Self {
        UqElement::Scale(c, Box::new(self.clone()))
    }

    /// `a b − b a`.
    pub fn commutator(a: &UqElement, b: &UqElement) -> Self {
        a.then(b).minus(&b.then(a))
    }

    /// Validates generator indices and weight lengths against `N`.
    pub fn check(&self, n: usize) -> Result<()> {
        match self {
            UqElement::Atom(Atom::E(k)) | UqElement::Atom(Atom::F(k)) => {
                if (1..n).contains(k) {
                    Ok(())
                } else {
                    Err(QzError::IndexOutOfRange {
                        index: *k,
                        bound: n.saturating_sub(1),
                    })
                }
            }
            UqElement::Atom(Atom::Q(w)) => {
                if w.len() == n {
                    Ok(())
                } else {
                    Err(QzError::SizeMismatch(w.len(), n))
                }
            }
            UqElement::Compose(v) | UqElement::Sum(v) => v.iter().try_for_each(|u| u.check(n)),
            UqElement::Scale(_, u) => u.check(n),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::E(k) => write!(f, "e{k}"),
            Atom::F(k) => write!(f, "f{k}"),
            Atom::Q(w) => {
                let join = |v: &[i32]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
                match w.as_ints() {
                    Some(c) => write!(f, "q[{}]", join(&c)),
                    None => write!(f, "qh[{}]", join(w.doubled())),
                }
            }
        }
    }
}

/// Prints in the syntax accepted by [`parse_uq`].
impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UqElement::Atom(a) => write!(f, "{a}"),
            UqElement::Compose(v) if v.is_empty() => write!(f, "1"),
            UqElement::Compose(v) => {
                let parts: Vec<String> = v
                    .iter()
                    .map(|u| match u {
                        UqElement::Sum(_) | UqElement::Scale(..) => format!("({u})"),
                        _ => u.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
            UqElement::Sum(v) if v.is_empty() => write!(f, "0"),
            UqElement::Sum(v) => {
                let parts: Vec<String> = v.iter().map(|u| u.to_string()).collect();
                write!(f, "{}", parts.join(" + "))
            }
            UqElement::Scale(c, u) => write!(f, "({}) ({u})", laurent_syntax(c)),
        }
    }
}

/// A Laurent scalar in the parser's syntax, e.g. `v^4 - 2 + v^-4`.
fn laurent_syntax(c: &LaurentScalar) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, x)) in c.terms().rev().enumerate() {
        let neg = x < &num_bigint::BigInt::from(0);
        let abs = if neg { -x.clone() } else { x.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (e, abs == 1.into()) {
            (0, _) => out.push_str(&abs.to_string()),
            (_, true) => out.push_str(&format!("v^{e}")),
            (_, false) => out.push_str(&format!("{abs} v^{e}")),
        }
    }
    out
}

/// The index an atom reads on a generator: column on the left, row on the
/// right.
fn moving_index(side: Side, g: Generator) -> usize {
    match side {
        Side::Left => g.col(),
        Side::Right => g.row(),
    }
}

/// `v`-exponent of `q^{α_k/2}` acting on a single generator.
fn half_alpha_twist(side: Side, k: usize, g: Generator) -> i32 {
    let idx = moving_index(side, g);
    (idx == k) as i32 - (idx == k + 1) as i32
}

/// Image of one generator under `e_k` or `f_k`, if nonzero.
fn move_generator(side: Side, raise: bool, k: usize, g: Generator) -> Option<Generator> {
    let (i, j) = (g.row(), g.col());
    match (side, raise) {
        (Side::Left, true) => (j == k + 1).then(|| Generator::new(i, k)),
        (Side::Left, false) => (j == k).then(|| Generator::new(i, k + 1)),
        (Side::Right, true) => (i == k).then(|| Generator::new(k + 1, j)),
        (Side::Right, false) => (i == k + 1).then(|| Generator::new(k, j)),
    }
}

/// Action of `e_k` (`raise`) or `f_k` on one normal monomial.
pub(crate) fn act_ef_on_monomial(
    side: Side,
    raise: bool,
    k: usize,
    word: &[Generator],
    out: &mut QPolynomial,
    coeff: &LaurentScalar,
) {
    let twists: Vec<i32> = word.iter().map(|&g| half_alpha_twist(side, k, g)).collect();
    let total: i32 = twists.iter().sum();
    let mut before = 0;
    for (pos, &g) in word.iter().enumerate() {
        let after = total - before - twists[pos];
        if let Some(h) = move_generator(side, raise, k, g) {
            let mut w: Monomial = Monomial::from_slice(word);
            w[pos] = h;
            let c = coeff.shift(before - after);
            for (m, x) in normal_form(&w) {
                out.add_term(m, &(&x * &c));
            }
        }
        before += twists[pos];
    }
}

/// Action of a single generator of `U_q`.
pub fn act_generator(side: Side, atom: &Atom, p: &QPolynomial) -> Result<QPolynomial> {
    let u = UqElement::Atom(atom.clone());
    u.check(p.n())?;
    Ok(act_atom(side, atom, p))
}

fn act_atom(side: Side, atom: &Atom, p: &QPolynomial) -> QPolynomial {
    let n = p.n();
    let mut out = QPolynomial::zero(n);
    match atom {
        Atom::Q(w) => {
            for (m, c) in p.terms() {
                let mut deg = vec![0u32; n];
                for &g in m.iter() {
                    deg[moving_index(side, g) - 1] += 1;
                }
                out.add_term(m.clone(), &c.shift(w.v_exponent(&deg)));
            }
        }
        Atom::E(k) | Atom::F(k) => {
            let raise = matches!(atom, Atom::E(_));
            for (m, c) in p.terms() {
                act_ef_on_monomial(side, raise, *k, m, &mut out, c);
            }
        }
    }
    out
}

fn act_unchecked(side: Side, u: &UqElement, p: &QPolynomial) -> QPolynomial {
    match u {
        UqElement::Atom(a) => act_atom(side, a, p),
        UqElement::Compose(parts) => {
            let mut cur = p.clone();
            let order: Box<dyn Iterator<Item = &UqElement>> = match side {
                Side::Left => Box::new(parts.iter().rev()),
                Side::Right => Box::new(parts.iter()),
            };
            for part in order {
                if cur.is_zero() {
                    break;
                }
                cur = act_unchecked(side, part, &cur);
            }
            cur
        }
        UqElement::Sum(parts) => {
            let mut out = QPolynomial::zero(p.n());
            for part in parts {
                out.add_scaled(&act_unchecked(side, part, p), &LaurentScalar::one());
            }
            out
        }
        UqElement::Scale(c, inner) => act_unchecked(side, inner, p).scale(c),
    }
}

/// Evaluates the action of an arbitrary expression.
pub fn act(side: Side, u: &UqElement, p: &QPolynomial) -> Result<QPolynomial> {
    u.check(p.n())?;
    Ok(act_unchecked(side, u, p))
}

/// `E_{i,j}`: `e_i` for `j = i+1`, `f_j` for `i = j+1`, otherwise the
/// commutator `E_{i,k} E_{k,j} − E_{k,j} E_{i,k}` through `k = min(i,j)+1`.
pub fn composite_e(n: usize, i: usize, j: usize) -> Result<UqElement> {
    composite_e_via(n, i, j, None)
}

/// As [`composite_e`] with an explicit intermediate index at the top level.
pub fn composite_e_via(n: usize, i: usize, j: usize, k: Option<usize>) -> Result<UqElement> {
    QPolynomial::check_index(n, i)?;
    QPolynomial::check_index(n, j)?;
    if i == j {
        return Err(QzError::IndexOutOfRange { index: i, bound: n });
    }
    if j == i + 1 {
        return Ok(UqElement::e(i));
    }
    if i == j + 1 {
        return Ok(UqElement::f(j));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let k = k.unwrap_or(lo + 1);
    if k <= lo || k >= hi {
        return Err(QzError::IndexOutOfRange {
            index: k,
            bound: hi - 1,
        });
    }
    let a = composite_e_via(n, i, k, None)?;
    let b = composite_e_via(n, k, j, None)?;
    Ok(UqElement::commutator(&a, &b))
}
