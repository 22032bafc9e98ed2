use proptest::prelude::*;
use qz_core::coeff::LaurentScalar;
use qz_core::isotypic::{
    bi_invariant_kernel, graded_bi_invariant_dimension, highest_weight_vector, module_closure, zonal_vector, Sides,
    SubspaceBasis,
};
use qz_core::qmatrix::{normal_monomials, QPolynomial};
use qz_core::symplectic::{e_r, invariance_kernel_check};
use qz_core::uq::Side;

/// Partitions of `m` into at most `k` parts.
fn bounded_partitions(m: usize, k: usize) -> usize {
    fn go(m: usize, k: usize, max: usize) -> usize {
        if m == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        (1..=m.min(max)).map(|p| go(m - p, k - 1, p)).sum()
    }
    go(m, k, m)
}

#[test]
fn bi_invariant_dimensions_count_partitions() {
    for (n, max_m) in [(4, 3), (6, 2)] {
        for m in 1..=max_m {
            let dim = graded_bi_invariant_dimension(m, n).unwrap();
            assert_eq!(dim, bounded_partitions(m, n / 2), "N={n} m={m}");
        }
    }
}

#[test]
fn low_degree_kernels_are_spanned_by_e_products() {
    let e1 = e_r(1, 4).unwrap();
    let e2 = e_r(2, 4).unwrap();
    assert_eq!(
        bi_invariant_kernel(1, 4).unwrap(),
        SubspaceBasis::from_vectors(4, [&e1])
    );
    let e1sq = &e1 * &e1;
    assert_eq!(
        bi_invariant_kernel(2, 4).unwrap(),
        SubspaceBasis::from_vectors(4, [&e1sq, &e2])
    );
}

#[test]
fn closure_is_idempotent() {
    let seed = highest_weight_vector(&[1, 1], 4).unwrap();
    let closed = module_closure(&seed, Sides::Both).unwrap();
    for p in closed.polynomials().iter().take(5) {
        let again = module_closure(p, Sides::Both).unwrap();
        assert!(again.rank() <= closed.rank());
        assert!(again.polynomials().iter().all(|v| closed.contains(v)));
    }
}

#[test]
fn zonal_vectors_at_four() {
    for mu in [vec![1], vec![1, 1], vec![2], vec![2, 1]] {
        let z = zonal_vector(&mu, 4).unwrap();
        for side in [Side::Left, Side::Right] {
            assert!(invariance_kernel_check(&z.vector, side).unwrap(), "{mu:?} {side:?}");
        }
        let doubled: Vec<u32> = mu.iter().flat_map(|&p| [p, p]).collect();
        let closure = module_closure(&highest_weight_vector(&doubled, 4).unwrap(), Sides::Both).unwrap();
        assert!(closure.contains(&z.vector), "{mu:?}");
        assert!(z.restriction_is_symmetric(), "{mu:?}");
    }
}

fn small_vectors() -> impl Strategy<Value = Vec<Vec<(usize, i64)>>> {
    prop::collection::vec(prop::collection::vec((0usize..10, -2i64..=2), 1..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn echelon_form_depends_only_on_the_span(vs in small_vectors(), mix in -3i64..=3, pow in -2i32..=2) {
        let basis = normal_monomials(2, 2);
        let polys: Vec<QPolynomial> = vs
            .iter()
            .map(|v| {
                let mut p = QPolynomial::zero(2);
                for &(k, c) in v {
                    let w: Vec<(usize, usize)> = basis[k].iter().map(|g| (g.row(), g.col())).collect();
                    p.add_scaled(&QPolynomial::from_word(2, &w, LaurentScalar::one()).unwrap(), &LaurentScalar::from_int(c));
                }
                p
            })
            .collect();
        let a = SubspaceBasis::from_vectors(2, &polys);
        // Same span: reversed order, first vector rescaled, a multiple of
        // the first added to the last.
        let mut other: Vec<QPolynomial> = polys.iter().rev().cloned().collect();
        let c = &LaurentScalar::from_int(mix) * &LaurentScalar::q_pow(pow);
        let last = other.len() - 1;
        if last > 0 {
            let first = other[last].clone();
            other[0].add_scaled(&first, &c);
        }
        other[last] = other[last].scale(&LaurentScalar::q_pow(pow));
        let b = SubspaceBasis::from_vectors(2, &other);
        prop_assert_eq!(a, b);
    }
}
