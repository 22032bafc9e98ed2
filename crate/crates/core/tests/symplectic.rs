use qz_core::coeff::LaurentScalar;
use qz_core::cpoly::CommPoly;
use qz_core::isotypic::SubspaceBasis;
use qz_core::qmatrix::{quantum_det, QPolynomial};
use qz_core::symplectic::{
    a_r, a_r_lambda, classical_antisymmetric_det, classical_pfaffian, e_r, full_invariance_check,
    invariance_kernel_check, partial_pfaffian, quantum_pfaffian, quantum_pfaffian_by_matchings, verify_as_relations,
    z_generator,
};
use qz_core::uq::{act, Side, UqElement};

#[test]
fn z_generators_are_q_antisymmetric() {
    for side in [Side::Left, Side::Right] {
        for n in [4, 6] {
            for i in 1..=n {
                assert!(z_generator(side, i, i, n).unwrap().is_zero());
                // For i > j the relation reads z_ji = −q z_ij; both cannot hold.
                for j in i + 1..=n {
                    let zij = z_generator(side, i, j, n).unwrap();
                    let zji = z_generator(side, j, i, n).unwrap();
                    let s = &zij + &zji.scale(&LaurentScalar::q_pow(-1));
                    assert!(s.is_zero(), "{side:?} N={n} z{i}{j}");
                }
            }
        }
    }
}

#[test]
fn antisymmetric_relations_hold_on_both_sides() {
    for side in [Side::Left, Side::Right] {
        for n in [4, 6] {
            let checks = verify_as_relations(side, n).unwrap();
            let failing: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
            assert!(failing.is_empty(), "{side:?} N={n}: {failing:?}");
            for rel in ["AS1", "AS2", "AS3", "AS6", "AS7", "AS8", "AS9"] {
                assert!(checks.iter().any(|c| c.relation == rel), "{rel} missing at N={n}");
            }
        }
    }
}

#[test]
fn pfaffian_equals_determinant() {
    for n in [2, 4, 6] {
        let pf = quantum_pfaffian(n).unwrap();
        assert_eq!(pf, quantum_det(n), "N={n}");
        assert_eq!(quantum_pfaffian_by_matchings(n).unwrap(), pf);
    }
}

#[test]
fn pfaffian_is_extremal_on_the_right() {
    for n in [4, 6] {
        let pf = quantum_pfaffian(n).unwrap();
        for k in 1..n {
            assert!(act(Side::Right, &UqElement::e(k), &pf).unwrap().is_zero());
            assert!(act(Side::Right, &UqElement::f(k), &pf).unwrap().is_zero());
        }
    }
}

#[test]
fn partial_pfaffian_is_a_relative_invariant() {
    let pf = partial_pfaffian(2, 4).unwrap();
    for k in 1..4 {
        assert!(act(Side::Right, &UqElement::f(k), &pf).unwrap().is_zero(), "f{k}");
    }
    assert!(act(Side::Right, &UqElement::e(1), &pf).unwrap().is_zero());
}

#[test]
fn classical_pfaffian_sign_pattern() {
    let pf = classical_pfaffian(4).unwrap();
    // a_{ij} for i < j, numbered row by row: a12 a13 a14 a23 a24 a34.
    let var = |i: usize, j: usize| {
        let idx = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .position(|&p| p == (i, j))
            .unwrap();
        CommPoly::var(6, idx)
    };
    let expected = &(&(&var(1, 2) * &var(3, 4)) - &(&var(1, 3) * &var(2, 4))) + &(&var(1, 4) * &var(2, 3));
    assert_eq!(pf, expected);
    assert_eq!(pf.pow(2), classical_antisymmetric_det(4));
}

fn e_products(n: usize, max_degree: usize) -> Vec<(Vec<usize>, QPolynomial)> {
    let m = n / 2;
    let mut out = Vec::new();
    for total in 1..=max_degree / 2 {
        // multisets of r with Σ r = total
        let mut stack = vec![(Vec::<usize>::new(), 0usize)];
        while let Some((rs, s)) = stack.pop() {
            if s == total {
                let p = rs
                    .iter()
                    .fold(QPolynomial::one(n), |acc, &r| &acc * &e_r(r, n).unwrap());
                out.push((rs, p));
                continue;
            }
            let lo = rs.last().copied().unwrap_or(1);
            for r in lo..=m.min(total - s) {
                let mut next = rs.clone();
                next.push(r);
                stack.push((next, s + r));
            }
        }
    }
    out
}

#[test]
fn invariants_are_killed_by_the_generating_set() {
    for n in [4, 6] {
        for i in 1..=n {
            for j in i + 1..=n {
                assert!(invariance_kernel_check(&z_generator(Side::Left, i, j, n).unwrap(), Side::Left).unwrap());
                assert!(invariance_kernel_check(&z_generator(Side::Right, i, j, n).unwrap(), Side::Right).unwrap());
            }
        }
        for r in 1..=n / 2 {
            assert!(invariance_kernel_check(&a_r(r, n).unwrap(), Side::Left).unwrap());
        }
        for (rs, p) in e_products(n, 6) {
            for side in [Side::Left, Side::Right] {
                assert!(invariance_kernel_check(&p, side).unwrap(), "E{rs:?} {side:?} N={n}");
            }
        }
    }
    assert!(invariance_kernel_check(&a_r_lambda(&[2, 2, 1, 1], 4).unwrap(), Side::Left).unwrap());
}

#[test]
fn full_symplectic_set_at_four() {
    for side in [Side::Left, Side::Right] {
        for r in 1..=2 {
            assert!(full_invariance_check(&e_r(r, 4).unwrap(), side).unwrap());
        }
    }
    for i in 1..=4 {
        for j in i + 1..=4 {
            assert!(full_invariance_check(&z_generator(Side::Left, i, j, 4).unwrap(), Side::Left).unwrap());
        }
    }
}

#[test]
fn e_products_are_linearly_independent() {
    for total in 1..=3 {
        let polys: Vec<QPolynomial> = e_products(4, 2 * total)
            .into_iter()
            .filter(|(rs, _)| rs.iter().sum::<usize>() == total)
            .map(|(_, p)| p)
            .collect();
        let span = SubspaceBasis::from_vectors(4, &polys);
        assert_eq!(span.rank(), polys.len(), "degree {}", 2 * total);
    }
}
