use serde::Serialize;

use super::solve::macdonald_p;
use super::Partition;
use crate::coeff::{QTRational, RationalScalar};
use crate::error::{QzError, Result};
use crate::isotypic::zonal_vector;

/// A specialization `q ↦ v^{q_exp}`, `t ↦ v^{t_exp}` of the Macdonald
/// parameters into the base field `ℚ(v)` (where `q = v²`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Convention {
    pub label: String,
    pub q_exp: i32,
    pub t_exp: i32,
}

impl Convention {
    pub fn new(label: &str, q_exp: i32, t_exp: i32) -> Self {
        Self {
            label: label.to_string(),
            q_exp,
            t_exp,
        }
    }
}

/// `(q², q⁴)`, `(q², q⁻⁴)` and `(q⁻², q⁻⁴)`.
pub fn standard_conventions() -> Vec<Convention> {
    vec![
        Convention::new("(q^2,q^4)", 4, 8),
        Convention::new("(q^2,q^-4)", 4, -8),
        Convention::new("(q^-2,q^-4)", -4, -8),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientEntry {
    pub lambda: Vec<u32>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConventionResult {
    #[serde(flatten)]
    pub convention: Convention,
    /// Whether the zonal restriction equals `P_μ` under this convention.
    pub matches: bool,
    /// Whether it is at least a scalar multiple.
    pub proportional: bool,
    pub constant: Option<String>,
    /// `m`-basis labels where the two sides disagree after scaling.
    pub mismatches: Vec<Vec<u32>>,
    pub macdonald: Vec<CoefficientEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZonalComparison {
    pub mu: Vec<u32>,
    #[serde(rename = "N")]
    pub n: usize,
    /// Normalized restriction of the zonal vector in the `m(s)` basis.
    pub zonal: Vec<CoefficientEntry>,
    /// All zonal coefficients are rational functions of `q²`.
    pub coefficients_in_q_squared: bool,
    pub conventions: Vec<ConventionResult>,
    pub matching: Vec<String>,
}

impl ZonalComparison {
    pub fn require_match(&self) -> Result<()> {
        if self.matching.is_empty() {
            Err(QzError::NoConventionMatches)
        } else {
            Ok(())
        }
    }
}

fn in_q_squared(c: &RationalScalar) -> bool {
    [c.numer(), c.denom()]
        .iter()
        .all(|p| p.terms().all(|(e, _)| e % 4 == 0))
}

/// Compares the restricted q-zonal vector `Z_μ` (ambient size `n`) with the
/// Macdonald polynomial `P_μ` in `n/2` variables under each convention.
pub fn compare_zonal(mu: &Partition, n: usize, conventions: &[Convention]) -> Result<ZonalComparison> {
    let zonal = zonal_vector(mu.parts(), n)?;
    let coeffs = zonal.monomial_coefficients();
    let m = n / 2;
    let p = macdonald_p(mu, m)?;
    let lambdas: Vec<Partition> = Partition::all_of_size(mu.size(), m);
    let zonal_at = |l: &Partition| coeffs.get(l.parts()).cloned().unwrap_or_else(RationalScalar::zero);

    let mut results = Vec::new();
    for conv in conventions {
        let pv: Vec<RationalScalar> = lambdas
            .iter()
            .map(|l| p.coeff(l).to_v(conv.q_exp, conv.t_exp))
            .collect::<Result<_>>()?;
        let lead = pv[lambdas.iter().position(|l| l == mu).expect("μ is in its own basis")].clone();
        let constant = &zonal_at(mu) / &lead;
        let mismatches: Vec<Vec<u32>> = lambdas
            .iter()
            .zip(&pv)
            .filter(|(l, c)| zonal_at(l) != &constant * c)
            .map(|(l, _)| l.parts().to_vec())
            .collect();
        let proportional = mismatches.is_empty();
        results.push(ConventionResult {
            convention: conv.clone(),
            matches: proportional && constant.is_one(),
            proportional,
            constant: Some(constant.to_string()),
            mismatches,
            macdonald: lambdas
                .iter()
                .zip(&pv)
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| CoefficientEntry {
                    lambda: l.parts().to_vec(),
                    value: c.to_string(),
                })
                .collect(),
        });
    }
    Ok(ZonalComparison {
        mu: mu.parts().to_vec(),
        n,
        zonal: lambdas
            .iter()
            .map(|l| (l, zonal_at(l)))
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| CoefficientEntry {
                lambda: l.parts().to_vec(),
                value: c.to_string(),
            })
            .collect(),
        coefficients_in_q_squared: coeffs.values().all(in_q_squared),
        matching: results
            .iter()
            .filter(|r| r.matches)
            .map(|r| r.convention.label.clone())
            .collect(),
        conventions: results,
    })
}

/// Embeds a `ℚ(q, t)` value under a convention, for display and tests.
pub fn specialize(c: &QTRational, conv: &Convention) -> Result<RationalScalar> {
    c.to_v(conv.q_exp, conv.t_exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_zonal_matches_every_convention() {
        let r = compare_zonal(&"1".parse().unwrap(), 4, &standard_conventions()).unwrap();
        assert_eq!(r.matching.len(), 3);
        assert!(r.coefficients_in_q_squared);
        assert!(r.require_match().is_ok());
    }

    #[test]
    fn specialization_of_t() {
        let conv = &standard_conventions()[1];
        let c = specialize(&QTRational::t(), conv).unwrap();
        assert_eq!(c, RationalScalar::from(crate::coeff::LaurentScalar::v_pow(-8)));
    }
}
