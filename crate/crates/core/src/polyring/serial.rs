//! JSON interchange format for polynomials:
//! `{"nvars": N, "terms": [{"exp": [e1, ..., eN], "coef": <scalar>}]}` with
//! terms in descending lexicographic order of `exp`. Constant coefficients are
//! written as `"p/q"` strings, κ-dependent ones as `{"num": [...], "den": [...]}`.

use serde_json::{json, Value};

use super::{MultiIndex, Polynomial};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Scalar};

impl Polynomial {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .rev()
            .map(|(a, c)| json!({ "exp": a.exps(), "coef": coef_json(c) }))
            .collect();
        json!({ "nvars": self.nvars(), "terms": terms })
    }

    /// Compact single-line serialization.
    pub fn serialize(&self) -> String {
        self.to_json().to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: byte_offset(text, e.line(), e.column()),
            msg: e.to_string(),
        })?;
        Self::from_json_located(&v, Some(text))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        Self::from_json_located(v, None)
    }

    fn from_json_located(v: &Value, text: Option<&str>) -> Result<Self> {
        let top = |msg: &str| Error::Parse {
            pos: 0,
            msg: msg.to_string(),
        };
        let nvars = v
            .get("nvars")
            .and_then(Value::as_u64)
            .ok_or_else(|| top("missing or invalid \"nvars\""))? as usize;
        if nvars == 0 {
            return Err(top("\"nvars\" must be positive"));
        }
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| top("missing \"terms\" list"))?;
        let mut p = Polynomial::zero(nvars);
        for (k, t) in terms.iter().enumerate() {
            let at = |msg: String| Error::Parse {
                pos: text.map_or(k, |s| nth_term_offset(s, k)),
                msg: format!("term {k}: {msg}"),
            };
            let exps = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| at("missing \"exp\" list".into()))?;
            if exps.len() != nvars {
                return Err(at(format!(
                    "exponent length {} != nvars {nvars}",
                    exps.len()
                )));
            }
            let exps = exps
                .iter()
                .map(|e| {
                    e.as_u64()
                        .filter(|&e| e <= u16::MAX as u64)
                        .map(|e| e as u16)
                        .ok_or_else(|| at(format!("bad exponent {e}")))
                })
                .collect::<Result<Vec<u16>>>()?;
            let coef = t.get("coef").ok_or_else(|| at("missing \"coef\"".into()))?;
            let c = parse_coef(coef).map_err(|e| at(e.to_string()))?;
            p.add_term(MultiIndex::new(&exps), &c);
        }
        Ok(p)
    }
}

pub(crate) fn coef_json(c: &Scalar) -> Value {
    match c.as_rational() {
        Some(r) => Value::String(format_rational(&r)),
        None => c.to_json(),
    }
}

pub(crate) fn parse_coef(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(Scalar::from_rational(&parse_rational(s)?)),
        Value::Number(n) => Ok(Scalar::from_rational(&parse_rational(&n.to_string())?)),
        Value::Object(_) => Scalar::from_json(v),
        other => Err(Error::Parse {
            pos: 0,
            msg: format!("coefficient must be a \"p/q\" string or scalar object, found {other}"),
        }),
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (n, l) in text.split_inclusive('\n').enumerate() {
        if n + 1 == line {
            return offset + column.saturating_sub(1);
        }
        offset += l.len();
    }
    offset
}

fn nth_term_offset(text: &str, k: usize) -> usize {
    text.match_indices("\"exp\"").nth(k).map_or(0, |(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num_traits::One;

    #[test]
    fn zero_polynomial_format() {
        assert_eq!(Polynomial::zero(3).serialize(), r#"{"nvars":3,"terms":[]}"#);
    }

    #[test]
    fn terms_sorted_descending() {
        let p = &Polynomial::monomial(&[0, 2], Scalar::one())
            + &Polynomial::monomial(&[1, 1], Scalar::ratio(-1, 2));
        assert_eq!(
            p.serialize(),
            r#"{"nvars":2,"terms":[{"exp":[1,1],"coef":"-1/2"},{"exp":[0,2],"coef":"1/1"}]}"#
        );
    }

    #[test]
    fn zero_coefficients_dropped() {
        let p = Polynomial::parse(
            r#"{"nvars":2,"terms":[{"exp":[1,0],"coef":"0/5"},{"exp":[0,1],"coef":"3"}]}"#,
        )
        .unwrap();
        assert_eq!(p, Polynomial::monomial(&[0, 1], Scalar::from_int(3)));
    }

    #[test]
    fn generic_coefficient_round_trip() {
        let k = Scalar::kappa();
        let c = &k / &(&k + &Scalar::one());
        let p = Polynomial::monomial(&[2, 0, 1], c);
        assert_eq!(Polynomial::parse(&p.serialize()).unwrap(), p);
        let ones = vec![Rational::one(); 3];
        assert_eq!(p.evaluate(&ones).unwrap(), &k / &(&k + &Scalar::one()));
    }

    #[test]
    fn malformed_input_reports_position() {
        match Polynomial::parse(r#"{"nvars":2,"terms":[{"exp":[1,0],"coef":"1/1"},]}"#) {
            Err(Error::Parse { pos, .. }) => assert!(pos > 40, "pos = {pos}"),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = r#"{"nvars":2,"terms":[{"exp":[1,0],"coef":"1"},{"exp":[1],"coef":"1"}]}"#;
        match Polynomial::parse(text) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, text.rfind("\"exp\"").unwrap());
                assert!(msg.contains("term 1"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
