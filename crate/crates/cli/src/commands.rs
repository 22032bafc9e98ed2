use std::io::Read;

use qz_core::coeff::QTRational;
use qz_core::isotypic::{graded_bi_invariant_dimension, zonal_vector};
use qz_core::macdonald::{compare_zonal, macdonald_p, standard_conventions, Partition};
use qz_core::qmatrix::{quantum_det, QPolynomial, MAX_N};
use qz_core::symplectic::{a_r, e_r, invariance_kernel_check, quantum_pfaffian, verify_as_relations, z_generator};
use qz_core::uq::{act as act_on, parse_uq, Side};
use qz_core::QzError;
use serde_json::{json, Value};

use crate::report::{Check, Report};
use crate::{SideArg, Suite};

type Outcome = Result<Report, String>;

fn err(e: QzError) -> String {
    e.to_string()
}

fn check_size(n: usize) -> Result<(), String> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(format!("N must lie in 1..={MAX_N}, got {n}"))
    }
}

fn check_even(n: usize) -> Result<(), String> {
    check_size(n)?;
    if n.is_multiple_of(2) {
        Ok(())
    } else {
        Err(format!("N must be even, got {n}"))
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

pub fn detq(n: usize) -> Outcome {
    check_size(n)?;
    let det = quantum_det(n);
    let mut r = Report::new("detq", json!({ "N": n }));
    r.line(format!("det_q ({} terms) = {det}", det.num_terms()));
    r.result = Some(to_json(&det));
    Ok(r)
}

pub fn pfaffian(n: usize, verify: bool) -> Outcome {
    check_even(n)?;
    let pf = quantum_pfaffian(n).map_err(err)?;
    let mut r = Report::new("pfaffian", json!({ "N": n, "verify": verify }));
    if verify {
        let diff = &pf - &quantum_det(n);
        r.check(Check::residual("Pf_q - det_q", diff.num_terms()));
    }
    r.line(format!("Pf_q ({} terms) = {pf}", pf.num_terms()));
    r.result = Some(to_json(&pf));
    Ok(r)
}

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

fn relations_suite(r: &mut Report, n: usize) -> Result<(), String> {
    for (side, tag) in [(Side::Left, "L"), (Side::Right, "R")] {
        for c in verify_as_relations(side, n).map_err(err)? {
            let idx: Vec<String> = c.indices.iter().map(|i| i.to_string()).collect();
            r.check(Check::residual(
                format!("z{tag} {} ({})", c.relation, idx.join(",")),
                c.residual_terms,
            ));
        }
    }
    Ok(())
}

/// Every `E_{r_1} ⋯ E_{r_k}` with `r_1 ≤ ⋯ ≤ r_k` and degree at most `deg`.
fn e_products(n: usize, deg: usize) -> Result<Vec<(Vec<usize>, QPolynomial)>, String> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<usize>::new(), QPolynomial::one(n), 0usize)];
    while let Some((rs, p, d)) = stack.pop() {
        let lo = rs.last().copied().unwrap_or(1);
        for k in lo..=n / 2 {
            if d + 2 * k > deg {
                break;
            }
            let mut next = rs.clone();
            next.push(k);
            let q = &p * &e_r(k, n).map_err(err)?;
            out.push((next.clone(), q.clone()));
            stack.push((next, q, d + 2 * k));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn invariance_suite(r: &mut Report, n: usize, deg: usize) -> Result<(), String> {
    let mut run = |name: String, p: &QPolynomial, side: Side| -> Result<(), String> {
        r.check(Check::new(name, invariance_kernel_check(p, side).map_err(err)?));
        Ok(())
    };
    if deg >= 2 {
        for i in 1..=n {
            for j in i + 1..=n {
                run(
                    format!("zL({i},{j}) left"),
                    &z_generator(Side::Left, i, j, n).map_err(err)?,
                    Side::Left,
                )?;
                run(
                    format!("zR({i},{j}) right"),
                    &z_generator(Side::Right, i, j, n).map_err(err)?,
                    Side::Right,
                )?;
            }
        }
    }
    for k in (1..=n / 2).filter(|k| 2 * k <= deg) {
        run(format!("a_{k} left"), &a_r(k, n).map_err(err)?, Side::Left)?;
    }
    for (rs, p) in e_products(n, deg)? {
        let label: Vec<String> = rs.iter().map(|k| format!("E{k}")).collect();
        for (side, s) in [(Side::Left, "left"), (Side::Right, "right")] {
            run(format!("{} {s}", label.join("*")), &p, side)?;
        }
    }
    Ok(())
}

fn dimensions_suite(r: &mut Report, n: usize, deg: usize) -> Result<Vec<usize>, String> {
    let mut dims = Vec::new();
    for m in 1..=deg / 2 {
        let dim = graded_bi_invariant_dimension(m, n).map_err(err)?;
        let expected = bounded_partitions(m, n / 2);
        r.check(
            Check::new(format!("dim A_ZP,{} (m={m})", 2 * m), dim == expected)
                .with_detail(format!("{dim} (partition count {expected})")),
        );
        dims.push(dim);
    }
    Ok(dims)
}

pub fn verify(suite: Suite, n: usize, deg: usize) -> Outcome {
    check_even(n)?;
    let name = match suite {
        Suite::Relations => "relations",
        Suite::Invariance => "invariance",
        Suite::Dimensions => "dimensions",
        Suite::All => "all",
    };
    let mut r = Report::new("verify", json!({ "suite": name, "N": n, "deg": deg }));
    if matches!(suite, Suite::Relations | Suite::All) {
        relations_suite(&mut r, n)?;
    }
    if matches!(suite, Suite::Invariance | Suite::All) {
        invariance_suite(&mut r, n, deg)?;
    }
    if matches!(suite, Suite::Dimensions | Suite::All) {
        let dims = dimensions_suite(&mut r, n, deg)?;
        r.line(format!("bi-invariant dimensions by m: {dims:?}"));
        r.result = Some(json!({ "dimensions": dims }));
    }
    let passed = r.checks.iter().filter(|c| c.pass).count();
    r.line(format!("{passed}/{} checks pass", r.checks.len()));
    Ok(r)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(err)
}

pub fn zonal(mu: &str, n: usize, compare: bool) -> Outcome {
    check_even(n)?;
    let mu = parse_partition(mu)?;
    let mut r = Report::new("zonal", json!({ "mu": mu.parts(), "N": n, "compare": compare }));
    let z = match zonal_vector(mu.parts(), n) {
        Ok(z) => z,
        Err(e @ (QzError::NotOneDimensional(_) | QzError::NotInSVariables | QzError::MissingLeadingTerm(_))) => {
            r.check(Check::new("one-dimensional intersection", false).with_detail(e.to_string()));
            return Ok(r);
        }
        Err(e) => return Err(err(e)),
    };
    r.check(Check::new("one-dimensional intersection", true));
    r.check(Check::new("restriction symmetric", z.restriction_is_symmetric()));
    let coeffs: Vec<Value> = z
        .monomial_coefficients()
        .iter()
        .rev()
        .map(|(l, c)| json!({ "lambda": l, "value": c.to_string() }))
        .collect();
    let normalized = z.normalized_vector();
    r.line(match &normalized {
        Some(v) => format!("Z = {v}"),
        None => format!("Z = ({})^-1 * ({})", z.leading, z.vector),
    });
    r.line(if z.leading.is_one() {
        format!("restriction = {}", z.restriction.display_with("s"))
    } else {
        format!(
            "restriction = ({})^-1 * ({})",
            z.leading,
            z.restriction.display_with("s")
        )
    });
    for c in &coeffs {
        r.line(format!(
            "  m{} : {}",
            c["lambda"],
            c["value"].as_str().unwrap_or_default()
        ));
    }
    let mut result = json!({
        "vector": to_json(normalized.as_ref().unwrap_or(&z.vector)),
        "leading": if normalized.is_some() { Value::Null } else { to_json(&z.leading) },
        "restriction": z.restriction.display_with("s"),
        "restriction_leading": to_json(&z.leading),
        "monomial_coefficients": coeffs,
    });
    if compare {
        let cmp = compare_zonal(&mu, n, &standard_conventions()).map_err(err)?;
        for c in &cmp.conventions {
            let detail = match (c.matches, c.proportional) {
                (true, _) => "equal".to_string(),
                (false, true) => format!("proportional with constant {}", c.constant.as_deref().unwrap_or("?")),
                (false, false) => format!("differs at {:?}", c.mismatches),
            };
            r.line(format!("convention {}: {detail}", c.convention.label));
        }
        r.check(
            Check::new("some convention matches", !cmp.matching.is_empty()).with_detail(if cmp.matching.is_empty() {
                "none".to_string()
            } else {
                cmp.matching.join(" ")
            }),
        );
        result["comparison"] = to_json(&cmp);
    }
    r.result = Some(result);
    Ok(r)
}

fn parse_qt(s: &str) -> Result<QTRational, String> {
    s.parse::<QTRational>().map_err(|e| format!("cannot parse {s:?}: {e}"))
}

pub fn macdonald(lambda: &str, n: usize, q: Option<&str>, t: Option<&str>) -> Outcome {
    let lambda = parse_partition(lambda)?;
    if n == 0 || lambda.len() > n {
        return Err(format!("λ = {lambda} needs at most n parts, n = {n}"));
    }
    let qv = q.map(parse_qt).transpose()?;
    let tv = t.map(parse_qt).transpose()?;
    let mut r = Report::new("macdonald", json!({ "lambda": lambda.parts(), "n": n, "q": q, "t": t }));
    let mut p = macdonald_p(&lambda, n).map_err(err)?;
    if qv.is_some() || tv.is_some() {
        let a = qv.unwrap_or_else(QTRational::q);
        let b = tv.unwrap_or_else(QTRational::t);
        p = p.substitute(&a, &b).map_err(err)?;
    }
    r.line(format!("P{lambda} = {p}"));
    r.result = Some(to_json(&p));
    Ok(r)
}

pub fn act(side: SideArg, expr: &str, input: &str) -> Outcome {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?
    };
    let p: QPolynomial = serde_json::from_str(&text).map_err(|e| format!("invalid polynomial JSON: {e}"))?;
    let u = parse_uq(expr, p.n()).map_err(err)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let side_name = if side == Side::Left { "left" } else { "right" };
    let out = act_on(side, &u, &p).map_err(err)?;
    let mut r = Report::new("act", json!({ "side": side_name, "expr": expr, "N": p.n() }));
    r.line(format!("{out}"));
    r.result = Some(to_json(&out));
    Ok(r)
}
