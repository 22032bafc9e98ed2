//! Exact linear algebra on graded components of `A_q(X)`: operator kernels,
//! module closures and the extraction of q-zonal vectors.

mod echelon;
mod subspace;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use subspace::{SubspaceBasis, SubspaceExport};

use echelon::{RelationFinder, SparseVec};
use subspace::primitive;

use crate::coeff::{LaurentScalar, RationalScalar};
use crate::cpoly::CommPoly;
use crate::error::{QzError, Result};
use crate::qmatrix::{normal_monomials, quantum_minor, BiWeight, Monomial, QPolynomial};
use crate::symplectic::{generating_set, restrict_h, to_s_variables};
use crate::uq::{act, Side, UqElement};

/// Default bound on the dimension of a graded component.
pub const DEFAULT_CAP: u128 = 100_000;

/// The component-size cap: `QZ_CAP` if set to a positive integer, otherwise
/// [`DEFAULT_CAP`].
pub fn configured_cap() -> u128 {
    std::env::var("QZ_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_CAP)
}

/// `binomial(N² + d − 1, d)`, the number of normal monomials of degree `d`.
pub fn graded_dimension(n: usize, d: usize) -> u128 {
    let vars = (n * n) as u128;
    let mut acc: u128 = 1;
    for i in 0..d as u128 {
        acc = acc * (vars + i) / (i + 1);
    }
    acc
}

fn check_cap(n: usize, d: usize) -> Result<()> {
    let dim = graded_dimension(n, d);
    let cap = configured_cap();
    if dim > cap {
        return Err(QzError::ComponentTooLarge { dim, cap });
    }
    Ok(())
}

/// Which actions an operation involves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sides {
    Left,
    Right,
    Both,
}

impl Sides {
    fn list(self) -> &'static [Side] {
        match self {
            Sides::Left => &[Side::Left],
            Sides::Right => &[Side::Right],
            Sides::Both => &[Side::Left, Side::Right],
        }
    }
}

/// A set of normal monomials of fixed degree used as a basis.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    n: usize,
    degree: usize,
    basis: Vec<Monomial>,
}

fn paired(counts: &[u32]) -> bool {
    counts.chunks(2).all(|c| c.len() == 2 && c[0] == c[1])
}

impl GradedComponent {
    /// All normal monomials of degree `d`.
    pub fn new(n: usize, d: usize) -> Result<Self> {
        check_cap(n, d)?;
        Ok(Self {
            n,
            degree: d,
            basis: normal_monomials(n, d),
        })
    }

    /// The monomials of degree `d` whose column counts (for the left side)
    /// and row counts (for the right side) agree on each pair `2i−1, 2i`.
    ///
    /// Anything killed by `sp_e(i,i) = e_{2i−1}` and `sp_f(i,i) = f_{2i−1}`
    /// has weight zero for `ε_{2i−1} − ε_{2i}`, and every `sp_e`, `sp_f`
    /// preserves these weights, so invariant kernels live in this span.
    pub fn symplectic_weight_zero(n: usize, d: usize, sides: Sides) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(QzError::OddAmbient(n));
        }
        let mut c = Self::new(n, d)?;
        c.basis.retain(|m| {
            let w = BiWeight::of_word(n, m);
            sides.list().iter().all(|s| match s {
                Side::Left => paired(&w.cols),
                Side::Right => paired(&w.rows),
            })
        });
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }
}

/// Kernel vectors of `ops` restricted to the span of `span`, which must be
/// linearly independent. Results are primitive and independent.
fn kernel_of_span(ops: &[(Side, UqElement)], span: &[QPolynomial]) -> Result<Vec<QPolynomial>> {
    let mut finder: RelationFinder<(usize, Monomial)> = RelationFinder::new();
    let mut out = Vec::new();
    for u in span {
        let mut img: SparseVec<(usize, Monomial)> = SparseVec::new();
        for (k, (side, op)) in ops.iter().enumerate() {
            for (m, c) in act(*side, op, u)?.terms() {
                img.insert((k, m.clone()), c.clone());
            }
        }
        if let Some(rel) = finder.push(img) {
            let mut w = QPolynomial::zero(u.n());
            for (&j, c) in &rel {
                w.add_scaled(&span[j], c);
            }
            if !w.is_zero() {
                out.push(primitive(&w));
            }
        }
    }
    Ok(out)
}

fn group_by<F>(monomials: &[Monomial], key: F) -> Vec<Vec<Monomial>>
where
    F: Fn(&Monomial) -> Vec<u32>,
{
    let mut groups: BTreeMap<Vec<u32>, Vec<Monomial>> = BTreeMap::new();
    for m in monomials {
        groups.entry(key(m)).or_default().push(m.clone());
    }
    groups.into_values().collect()
}

fn monomial_polys(n: usize, ms: &[Monomial]) -> Vec<QPolynomial> {
    ms.iter()
        .map(|m| {
            let mut p = QPolynomial::zero(n);
            p.add_term(m.clone(), &LaurentScalar::one());
            p
        })
        .collect()
}

fn per_class(ops: &[(Side, UqElement)], n: usize, classes: Vec<Vec<Monomial>>) -> Result<Vec<QPolynomial>> {
    let parts: Vec<Result<Vec<QPolynomial>>> = classes
        .par_iter()
        .map(|ms| kernel_of_span(ops, &monomial_polys(n, ms)))
        .collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Independent spanning vectors of the joint kernel of `ops` on the
/// component.
///
/// Left operators only move column indices, so they preserve row weight and
/// the left kernel is computed one row-weight class at a time (dually for the
/// right). With both sides present the right operators are then imposed on
/// the left kernel.
pub fn operator_kernel_vectors(ops: &[(Side, UqElement)], component: &GradedComponent) -> Result<Vec<QPolynomial>> {
    let n = component.n;
    for (_, op) in ops {
        op.check(n)?;
    }
    let (left, right): (Vec<_>, Vec<_>) = ops.iter().cloned().partition(|(s, _)| *s == Side::Left);
    let rows_of = |m: &Monomial| BiWeight::of_word(n, m).rows;
    let cols_of = |m: &Monomial| BiWeight::of_word(n, m).cols;
    match (left.is_empty(), right.is_empty()) {
        (true, true) => Ok(monomial_polys(n, &component.basis)),
        (false, true) => per_class(&left, n, group_by(&component.basis, rows_of)),
        (true, false) => per_class(&right, n, group_by(&component.basis, cols_of)),
        (false, false) => {
            let stage = per_class(&left, n, group_by(&component.basis, rows_of))?;
            kernel_of_span(&right, &stage)
        }
    }
}

/// The joint kernel as a canonical subspace.
pub fn operator_kernel(ops: &[(Side, UqElement)], component: &GradedComponent) -> Result<SubspaceBasis> {
    let vs = operator_kernel_vectors(ops, component)?;
    Ok(SubspaceBasis::from_vectors(component.n, &vs))
}

/// The symplectic generating set on the requested sides.
pub fn sp_operators(n: usize, sides: Sides) -> Result<Vec<(Side, UqElement)>> {
    let set = generating_set(n)?;
    let mut out = Vec::new();
    for &side in sides.list() {
        out.extend(set.iter().map(|(_, g)| (side, g.clone())));
    }
    Ok(out)
}

/// Independent spanning vectors of the bi-invariants of degree `2m`.
pub fn bi_invariant_vectors(m: usize, n: usize) -> Result<Vec<QPolynomial>> {
    let c = GradedComponent::symplectic_weight_zero(n, 2 * m, Sides::Both)?;
    operator_kernel_vectors(&sp_operators(n, Sides::Both)?, &c)
}

/// The bi-invariants of degree `2m` as a canonical subspace.
pub fn bi_invariant_kernel(m: usize, n: usize) -> Result<SubspaceBasis> {
    Ok(SubspaceBasis::from_vectors(n, &bi_invariant_vectors(m, n)?))
}

/// `dim A_ZP,2m`.
pub fn graded_bi_invariant_dimension(m: usize, n: usize) -> Result<usize> {
    Ok(bi_invariant_vectors(m, n)?.len())
}

fn check_partition(lambda: &[u32], max_len: usize) -> Result<()> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(QzError::InvalidPartition(format!(
            "{lambda:?} is not weakly decreasing"
        )));
    }
    let len = lambda.iter().filter(|&&p| p > 0).count();
    if len > max_len {
        return Err(QzError::InvalidPartition(format!(
            "{lambda:?} has more than {max_len} parts"
        )));
    }
    Ok(())
}

/// `v_λ = (ξ^{1..s}_{1..s})^{m_s} ⋯ (ξ^1_1)^{m_1}` with `m_s = λ_s − λ_{s+1}`.
pub fn highest_weight_vector(lambda: &[u32], n: usize) -> Result<QPolynomial> {
    check_partition(lambda, n)?;
    let mut l = lambda.to_vec();
    l.resize(n + 1, 0);
    let mut out = QPolynomial::one(n);
    for s in (1..=n).rev() {
        let mult = l[s - 1] - l[s];
        if mult > 0 {
            let idx: Vec<usize> = (1..=s).collect();
            out = &out * &quantum_minor(n, &idx, &idx)?.pow(mult);
        }
    }
    Ok(out)
}

/// Independent vectors spanning the closure of `seed` under `e_k`, `f_k` on
/// the requested sides, found breadth first. Bi-homogeneous seeds give
/// bi-homogeneous vectors.
pub fn closure_vectors(seed: &QPolynomial, sides: Sides) -> Result<Vec<QPolynomial>> {
    let n = seed.n();
    if seed.is_zero() {
        return Ok(Vec::new());
    }
    let d = seed.degree().ok_or(QzError::Inhomogeneous)?;
    check_cap(n, d)?;
    let mut ops = Vec::new();
    for &side in sides.list() {
        for k in 1..n {
            ops.push((side, UqElement::e(k)));
            ops.push((side, UqElement::f(k)));
        }
    }
    let mut basis = SubspaceBasis::new(n);
    let mut found = Vec::new();
    let start = primitive(seed);
    basis.insert(&start);
    found.push(start);
    let mut next = 0;
    while next < found.len() {
        let cur = found[next].clone();
        next += 1;
        for (side, op) in &ops {
            let img = act(*side, op, &cur)?;
            if !img.is_zero() && basis.insert(&img) {
                found.push(primitive(&img));
            }
        }
    }
    Ok(found)
}

/// The closure of `seed` as a canonical subspace.
pub fn module_closure(seed: &QPolynomial, sides: Sides) -> Result<SubspaceBasis> {
    Ok(SubspaceBasis::from_vectors(seed.n(), &closure_vectors(seed, sides)?))
}

/// The q-zonal vector `Z_μ`: the two-sided invariant inside the isotypic
/// component generated by `v_μ̃`, `μ̃ = (μ_1, μ_1, μ_2, μ_2, …)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonalVector {
    pub mu: Vec<u32>,
    /// A primitive representative over `ℤ[v, v⁻¹]`.
    pub vector: QPolynomial,
    /// Coefficient of `s^μ` in the torus restriction of `vector`; the
    /// normalized zonal vector is `vector / leading`.
    pub leading: LaurentScalar,
    /// Torus restriction of `vector` in `s_1, …, s_{N/2}`.
    pub restriction: CommPoly,
}

impl ZonalVector {
    pub fn n(&self) -> usize {
        self.vector.n()
    }

    /// The normalized restriction, coefficient by exponent vector in `s`.
    pub fn normalized_restriction(&self) -> BTreeMap<Vec<u32>, RationalScalar> {
        self.restriction
            .terms()
            .map(|(e, c)| (e.clone(), RationalScalar::new(c.clone(), self.leading.clone())))
            .collect()
    }

    /// Coefficients in the monomial symmetric basis `m_ν(s)`, read off at the
    /// decreasing exponent vectors.
    pub fn monomial_coefficients(&self) -> BTreeMap<Vec<u32>, RationalScalar> {
        self.normalized_restriction()
            .into_iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(mut e, c)| {
                while e.last() == Some(&0) {
                    e.pop();
                }
                (e, c)
            })
            .collect()
    }

    pub fn restriction_is_symmetric(&self) -> bool {
        self.restriction.is_symmetric()
    }

    /// The normalized vector when `leading` is a unit, so that it stays over
    /// `ℤ[v, v⁻¹]`.
    pub fn normalized_vector(&self) -> Option<QPolynomial> {
        if !self.leading.is_unit() {
            return None;
        }
        let (e, c) = self.leading.terms().next().unwrap();
        let sign = LaurentScalar::from_int(if c > &0.into() { 1 } else { -1 });
        Some(self.vector.scale(&(&sign * &LaurentScalar::v_pow(-e))))
    }
}

/// Intersects the bi-invariants of degree `2|μ|` with the two-sided closure
/// of `v_μ̃` and normalizes by the coefficient of `s^μ`.
pub fn zonal_vector(mu: &[u32], n: usize) -> Result<ZonalVector> {
    let m = n / 2;
    if !n.is_multiple_of(2) {
        return Err(QzError::OddAmbient(n));
    }
    check_partition(mu, m)?;
    let mut mu: Vec<u32> = mu.iter().copied().filter(|&p| p > 0).collect();
    mu.shrink_to_fit();
    let mut exps = mu.clone();
    exps.resize(m, 0);
    if mu.is_empty() {
        return Ok(ZonalVector {
            mu,
            vector: QPolynomial::one(n),
            leading: LaurentScalar::one(),
            restriction: CommPoly::one(m),
        });
    }
    let degree = 2 * mu.iter().sum::<u32>() as usize;
    check_cap(n, degree)?;
    let doubled: Vec<u32> = mu.iter().flat_map(|&p| [p, p]).collect();
    let seed = highest_weight_vector(&doubled, n)?;
    let span: Vec<QPolynomial> = closure_vectors(&seed, Sides::Both)?
        .into_iter()
        .filter(|v| match v.bi_weight() {
            Ok(w) => paired(&w.rows) && paired(&w.cols),
            Err(_) => true,
        })
        .collect();
    let kernel = kernel_of_span(&sp_operators(n, Sides::Both)?, &span)?;
    if kernel.len() != 1 {
        return Err(QzError::NotOneDimensional(kernel.len()));
    }
    let vector = kernel.into_iter().next().unwrap();
    let restriction = to_s_variables(&restrict_h(&vector)).ok_or(QzError::NotInSVariables)?;
    let leading = restriction.coeff(&exps);
    if leading.is_zero() {
        return Err(QzError::MissingLeadingTerm(format!("s^{mu:?}")));
    }
    Ok(ZonalVector {
        mu,
        vector,
        leading,
        restriction,
    })
}
