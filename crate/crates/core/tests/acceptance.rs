//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use qz_core::coeff::{q_factorial, q_int, LaurentScalar, QTRational, RationalScalar};
use qz_core::cpoly::CommPoly;
use qz_core::isotypic::{bi_invariant_kernel, graded_bi_invariant_dimension, zonal_vector, SubspaceBasis};
use qz_core::macdonald::{
    ck_scalar, compare_zonal, d1_columns, dr_eigenvalue, eigenvalue, macdonald_d1, macdonald_dr, macdonald_p,
    schur_bialternant, standard_conventions, Partition,
};
use qz_core::qmatrix::{normal_monomials, quantum_det, QPolynomial};
use qz_core::symplectic::{
    a_r, classical_antisymmetric_det, classical_pfaffian, e_r, full_invariance_check, invariance_kernel_check,
    partial_pfaffian, quantum_pfaffian, verify_as_relations, z_generator,
};
use qz_core::uq::{act, Side, UqElement};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn monomial_poly(n: usize, m: &[qz_core::qmatrix::Generator]) -> QPolynomial {
    let w: Vec<(usize, usize)> = m.iter().map(|g| (g.row(), g.col())).collect();
    QPolynomial::from_word(n, &w, LaurentScalar::one()).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    let mut triples = 0;
    for n in 2..=3usize {
        for d in 0..=4usize {
            let count = normal_monomials(n, d).len() as u64;
            let free = binomial((n * n + d - 1) as u64, d as u64);
            ensure(count == free, || {
                format!("N={n} d={d}: {count} normal monomials, expected {free}")
            })?;
        }
        let gens: Vec<QPolynomial> = normal_monomials(n, 1).iter().map(|m| monomial_poly(n, m)).collect();
        let quads: Vec<QPolynomial> = normal_monomials(n, 2).iter().map(|m| monomial_poly(n, m)).collect();
        for a in &gens {
            for b in &gens {
                let ab = a * b;
                let expected = a.bi_weight().unwrap().add(&b.bi_weight().unwrap());
                ensure(ab.bi_weight().map_err(err)? == expected, || {
                    format!("bi-weight of {a} * {b}")
                })?;
                for c in &quads {
                    ensure(&ab * c == a * &(b * c), || format!("({a} {b}) {c} at N={n}"))?;
                    triples += 1;
                }
            }
        }
        let det = quantum_det(n);
        for g in &gens {
            ensure(&det * g == g * &det, || {
                format!("det_q does not commute with {g} at N={n}")
            })?;
        }
    }
    Ok(format!(
        "{triples} associativity triples, PBW counts and centrality at N=2,3"
    ))
}

fn criterion_2() -> Outcome {
    let mut total = 0;
    for side in [Side::Left, Side::Right] {
        for n in [4, 6] {
            let checks = verify_as_relations(side, n).map_err(err)?;
            if let Some(bad) = checks.iter().find(|c| !c.pass) {
                return Err(format!(
                    "{side:?} N={n}: {} {:?} leaves {} terms",
                    bad.relation, bad.indices, bad.residual_terms
                ));
            }
            total += checks.len();
        }
    }
    Ok(format!("{total} relation instances reduce to 0"))
}

fn criterion_3() -> Outcome {
    let mut timing = Vec::new();
    for n in [2, 4, 6, 8] {
        let start = Instant::now();
        let pf = quantum_pfaffian(n).map_err(err)?;
        ensure(pf == quantum_det(n), || format!("Pf_q != det_q at N={n}"))?;
        timing.push(format!("N={n} {:.2}s", start.elapsed().as_secs_f64()));
    }
    let var = |i: usize, j: usize| {
        let idx = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .position(|&p| p == (i, j))
            .unwrap();
        CommPoly::var(6, idx)
    };
    let expected = &(&(&var(1, 2) * &var(3, 4)) - &(&var(1, 3) * &var(2, 4))) + &(&var(1, 4) * &var(2, 3));
    let pf = classical_pfaffian(4).map_err(err)?;
    ensure(pf == expected, || format!("classical Pfaffian {pf}"))?;
    ensure(pf.pow(2) == classical_antisymmetric_det(4), || {
        "Pf^2 != det at q=1".into()
    })?;
    Ok(format!(
        "Pf_q = det_q ({}); classical sign pattern ok",
        timing.join(", ")
    ))
}

/// All products `E_{r_1} ⋯ E_{r_k}` of degree at most `max_degree`.
fn e_products(n: usize, max_degree: usize) -> Result<Vec<(Vec<usize>, QPolynomial)>, String> {
    let m = n / 2;
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<usize>::new(), 0usize)];
    while let Some((rs, s)) = stack.pop() {
        if !rs.is_empty() {
            let mut p = QPolynomial::one(n);
            for &r in &rs {
                p = &p * &e_r(r, n).map_err(err)?;
            }
            out.push((rs.clone(), p));
        }
        let lo = rs.last().copied().unwrap_or(1);
        for r in lo..=m {
            if 2 * (s + r) <= max_degree {
                let mut next = rs.clone();
                next.push(r);
                stack.push((next, s + r));
            }
        }
    }
    Ok(out)
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for n in [4, 6] {
        let full = n == 4;
        let check = |p: &QPolynomial, side: Side, what: &str| -> Result<(), String> {
            ensure(invariance_kernel_check(p, side).map_err(err)?, || {
                format!("{what} {side:?} N={n}")
            })?;
            if full {
                ensure(full_invariance_check(p, side).map_err(err)?, || {
                    format!("{what} {side:?} full set")
                })?;
            }
            Ok(())
        };
        for (i, j) in (1..=n).tuple_combinations() {
            check(
                &z_generator(Side::Left, i, j, n).map_err(err)?,
                Side::Left,
                &format!("zL{i}{j}"),
            )?;
            check(
                &z_generator(Side::Right, i, j, n).map_err(err)?,
                Side::Right,
                &format!("zR{i}{j}"),
            )?;
            checked += 2;
        }
        for r in 1..=n / 2 {
            check(&a_r(r, n).map_err(err)?, Side::Left, &format!("a{r}"))?;
            checked += 1;
        }
        for (rs, p) in e_products(n, 6)? {
            for side in [Side::Left, Side::Right] {
                check(&p, side, &format!("E{rs:?}"))?;
                checked += 1;
            }
        }
    }
    let pf = partial_pfaffian(2, 4).map_err(err)?;
    for k in 1..4 {
        ensure(act(Side::Right, &UqElement::f(k), &pf).map_err(err)?.is_zero(), || {
            format!("Pf_I . f{k} != 0")
        })?;
    }
    ensure(act(Side::Right, &UqElement::e(1), &pf).map_err(err)?.is_zero(), || {
        "Pf_I . e1 != 0".into()
    })?;
    Ok(format!("{checked} invariance checks; partial Pfaffian annihilated"))
}

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

fn criterion_5() -> Outcome {
    let mut dims = Vec::new();
    for (n, max_m) in [(4, 3), (6, 2)] {
        for m in 1..=max_m {
            let dim = graded_bi_invariant_dimension(m, n).map_err(err)?;
            let expected = bounded_partitions(m, n / 2);
            ensure(dim == expected, || {
                format!("N={n} m={m}: dim {dim}, expected {expected}")
            })?;
            dims.push(format!("N={n},m={m}:{dim}"));
        }
    }
    let e1 = e_r(1, 4).map_err(err)?;
    let e2 = e_r(2, 4).map_err(err)?;
    ensure(
        bi_invariant_kernel(1, 4).map_err(err)? == SubspaceBasis::from_vectors(4, [&e1]),
        || "degree-2 kernel is not span{E1}".into(),
    )?;
    let e1sq = &e1 * &e1;
    ensure(
        bi_invariant_kernel(2, 4).map_err(err)? == SubspaceBasis::from_vectors(4, [&e1sq, &e2]),
        || "degree-4 kernel is not span{E1^2, E2}".into(),
    )?;
    Ok(dims.join(" "))
}

fn criterion_6() -> Outcome {
    for mu in [vec![1], vec![1, 1], vec![2], vec![2, 1]] {
        let z = zonal_vector(&mu, 4).map_err(|e| format!("{mu:?}: {e}"))?;
        ensure(z.restriction_is_symmetric(), || {
            format!("{mu:?}: restriction not symmetric")
        })?;
    }
    Ok("one-dimensional with symmetric restriction for (1), (1,1), (2), (2,1)".into())
}

fn criterion_7() -> Outcome {
    let q = QTRational::q();
    let inv = (QTRational::monomial(1, -1, 0), QTRational::monomial(1, 0, -1));
    let mut count = 0;
    for n in 1..=3 {
        for d in 0..=4 {
            for (mu, col) in d1_columns(d, n).map_err(err)? {
                for (nu, _) in col.coeffs() {
                    ensure(mu.dominates(nu), || format!("D1 m{mu} reaches m{nu}"))?;
                }
            }
            for lambda in Partition::all_of_size(d, n) {
                let p = macdonald_p(&lambda, n).map_err(err)?;
                let ev = eigenvalue(&lambda, n);
                ensure(macdonald_d1(&p).map_err(err)? == p.scale(&ev), || {
                    format!("D1 P{lambda} n={n}")
                })?;
                for r in 0..=n {
                    let got = macdonald_dr(&p, r).map_err(err)?;
                    ensure(got == p.scale(&dr_eigenvalue(&lambda, n, r)), || {
                        format!("D{r} P{lambda} n={n}")
                    })?;
                }
                let schur = schur_bialternant(&lambda, n).map_err(err)?;
                ensure(p.substitute(&q, &q).map_err(err)? == schur, || {
                    format!("P{lambda}(q,q) n={n}")
                })?;
                ensure(p.substitute(&inv.0, &inv.1).map_err(err)? == p, || {
                    format!("P{lambda} under inversion")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} polynomials P_λ, |λ| ≤ 4, n ≤ 3"))
}

fn criterion_8() -> Outcome {
    let mut lines = Vec::new();
    for mu in ["2", "2,1"] {
        let report = compare_zonal(&mu.parse().unwrap(), 4, &standard_conventions()).map_err(err)?;
        ensure(report.coefficients_in_q_squared, || {
            format!("({mu}): coefficients not in q^2")
        })?;
        for r in &report.conventions {
            if r.proportional {
                ensure(r.constant.as_deref() == Some("1"), || {
                    format!("({mu}) {}: constant {:?}", r.convention.label, r.constant)
                })?;
            }
        }
        report.require_match().map_err(|e| format!("({mu}): {e}"))?;
        lines.push(format!("mu=({mu}) matches {}", report.matching.join(" ")));
    }
    Ok(lines.join("; "))
}

fn q(k: i32) -> LaurentScalar {
    LaurentScalar::q_pow(k)
}

/// `q^{4|λ| + C(2n,2) + 2(2n−1) − 1} [2]² [2n−2]! Σ_i q^{−2λ_i + 4(i−n)}`.
fn c1_display(lambda: &Partition, n: usize) -> LaurentScalar {
    let ni = n as i32;
    let parts = lambda.padded(n);
    let sum = (1..=n).fold(LaurentScalar::zero(), |acc, i| {
        &acc + &q(-2 * parts[i - 1] as i32 + 4 * (i as i32 - ni))
    });
    let exp = 4 * lambda.size() as i32 + (2 * ni) * (2 * ni - 1) / 2 + 2 * (2 * ni - 1) - 1;
    &(&(&q(exp) * &q_int(2).pow(2)) * &q_factorial(2 * n as u32 - 2)) * &sum
}

fn criterion_9a() -> Outcome {
    let mut mismatches = Vec::new();
    for n in 1..=3usize {
        let mut ratios = Vec::new();
        for size in 0..=3 {
            for lambda in Partition::all_of_size(size, n) {
                let got = ck_scalar(1, &lambda.doubled(), 2 * n).map_err(err)?;
                let want = c1_display(&lambda, n);
                if got != want {
                    ratios.push(RationalScalar::new(got, want));
                }
            }
        }
        if let Some(first) = ratios.first() {
            let uniform = ratios.iter().all(|r| r == first);
            mismatches.push(format!(
                "n'={n}: ck_scalar(1)/display = {first}{}",
                if uniform { " for every λ" } else { " (varies with λ)" }
            ));
        }
    }
    if mismatches.is_empty() {
        Ok("c_1 display reproduced for n' ≤ 3".into())
    } else {
        Err(mismatches.join("; "))
    }
}

fn length(p: &[usize]) -> usize {
    p.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

fn criterion_9b() -> Outcome {
    for n in 1..=5usize {
        let mut counts: BTreeMap<i32, i64> = BTreeMap::new();
        for p in (0..n).permutations(n) {
            *counts.entry(2 * length(&p) as i32).or_default() += 1;
        }
        let brute = LaurentScalar::from_terms(counts.into_iter().map(|(e, c)| (2 * e, BigInt::from(c))));
        let closed = &q((n * (n - 1) / 2) as i32) * &q_factorial(n as u32);
        ensure(brute == closed, || format!("Σ q^(2l) over S_{n}"))?;
        for k in 1..n {
            let mut seen = std::collections::BTreeSet::new();
            // τ: increasing on the first k positions and on the rest.
            let taus = (0..n)
                .permutations(n)
                .filter(|t| t[..k].windows(2).all(|w| w[0] < w[1]) && t[k..].windows(2).all(|w| w[0] < w[1]));
            for tau in taus {
                for s1 in (0..k).permutations(k) {
                    for s2 in (k..n).permutations(n - k) {
                        let sigma: Vec<usize> = s1.iter().chain(&s2).copied().collect();
                        let prod: Vec<usize> = sigma.iter().map(|&i| tau[i]).collect();
                        ensure(length(&prod) == length(&tau) + length(&s1) + length(&s2), || {
                            format!("l(τσ1σ2) additivity fails at n={n}, k={k}, τ={tau:?}")
                        })?;
                        seen.insert(prod);
                    }
                }
            }
            ensure(seen.len() == (1..=n).product::<usize>(), || {
                format!("coset factorization n={n} k={k}")
            })?;
        }
    }
    Ok("length additivity and Σ q^(2l(σ)) = q^C(n,2) [n]! for n ≤ 5".into())
}

/// `ck_scalar(2k, λ̃, 4) / (q^{4|λ|} e_k(q^{−2λ_i − 4(2−i)}))` for `λ` with at most two parts.
fn eigenvalue_ratio(k: usize, lambda: &Partition) -> Result<RationalScalar, String> {
    let parts = lambda.padded(2);
    let xs: Vec<LaurentScalar> = (1..=2)
        .map(|i| q(-2 * parts[i - 1] as i32 - 4 * (2 - i as i32)))
        .collect();
    let ek = xs
        .iter()
        .combinations(k)
        .map(|c| c.into_iter().fold(LaurentScalar::one(), |a, x| &a * x))
        .fold(LaurentScalar::zero(), |a, x| &a + &x);
    let c = ck_scalar(2 * k, &lambda.doubled(), 4).map_err(err)?;
    Ok(RationalScalar::new(c, &q(4 * lambda.size() as i32) * &ek))
}

fn criterion_9c() -> Outcome {
    let lambdas: Vec<Partition> = (0..=3).flat_map(|d| Partition::all_of_size(d, 2)).collect();
    let mut problems = Vec::new();
    for k in 1..=2 {
        let ratios: Vec<(Partition, RationalScalar)> = lambdas
            .iter()
            .map(|l| Ok((l.clone(), eigenvalue_ratio(k, l)?)))
            .collect::<Result<_, String>>()?;
        let first = &ratios[0];
        if let Some((l, r)) = ratios.iter().find(|(_, r)| r != &first.1) {
            problems.push(format!("k={k}: ratio {} at λ={}, {r} at λ={l}", first.1, first.0));
        }
    }
    if problems.is_empty() {
        Ok("ratio independent of λ for k = 1, 2".into())
    } else {
        Err(problems.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1", "quantum matrix kernel", criterion_1),
        ("2", "antisymmetric relation suite", criterion_2),
        ("3", "Pfaffian identity", criterion_3),
        ("4", "symplectic invariance", criterion_4),
        ("5", "bi-invariant dimensions", criterion_5),
        ("6", "zonal extraction", criterion_6),
        ("7", "Macdonald suite", criterion_7),
        ("8", "zonal vs Macdonald conventions", criterion_8),
        ("9a", "central scalar vs c_1 display", criterion_9a),
        ("9b", "permutation identities", criterion_9b),
        ("9c", "central scalar vs D_k eigenvalue ratio", criterion_9c),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:<3} PASS  {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                println!("criterion {id:<3} FAIL  {name} [{secs:.1}s]: {detail}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {}", failed.join(", "));
        std::process::exit(1);
    }
}
