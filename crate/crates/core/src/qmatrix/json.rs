//! JSON form: `{"N": 2, "terms": [{"word": [[1,1],[2,2]], "coeff": {"0":"1"}}]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{QPolynomial, MAX_N};
use crate::coeff::LaurentScalar;

#[derive(Serialize, Deserialize)]
struct RawTerm {
    word: Vec<(usize, usize)>,
    coeff: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<RawTerm>,
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawPoly {
            n: self.n(),
            terms: self
                .terms()
                .map(|(m, c)| RawTerm {
                    word: m.iter().map(|g| (g.row(), g.col())).collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Words need not be sorted on input; they are brought to normal form.
impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPoly::deserialize(d)?;
        if !(1..=MAX_N).contains(&raw.n) {
            return Err(D::Error::custom(format!("N must lie in 1..={MAX_N}")));
        }
        let mut p = QPolynomial::zero(raw.n);
        for t in raw.terms {
            let term = QPolynomial::from_word(raw.n, &t.word, t.coeff).map_err(D::Error::custom)?;
            p = &p + &term;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::super::quantum_det;
    use super::*;

    #[test]
    fn det_round_trip_matches_documented_shape() {
        let d = quantum_det(2);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(
            s,
            r#"{"N":2,"terms":[{"word":[[1,1],[2,2]],"coeff":{"0":"1"}},{"word":[[1,2],[2,1]],"coeff":{"2":"-1"}}]}"#
        );
        let back: QPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn unsorted_input_is_normalized() {
        let p: QPolynomial =
            serde_json::from_str(r#"{"N":2,"terms":[{"word":[[1,2],[1,1]],"coeff":{"0":"1"}}]}"#).unwrap();
        let expected = QPolynomial::from_word(2, &[(1, 1), (1, 2)], LaurentScalar::q_pow(-1)).unwrap();
        assert_eq!(p, expected);
        assert!(
            serde_json::from_str::<QPolynomial>(r#"{"N":2,"terms":[{"word":[[3,1]],"coeff":{"0":"1"}}]}"#).is_err()
        );
    }
}
