//! Arrangement input: JSON files and built-in families.
//!
//! ```json
//! {"ell": 3, "forms": [[1, -1, 0], [0, 1, -1], [1, 0, -1]], "name": "braid", "exponents": [0, 1, 2]}
//! ```
//!
//! Coefficients are JSON integers or strings `"a"` / `"a/b"`. Floats are
//! rejected.

use num_bigint::BigInt;
use rbar_core::{Arrangement, ExponentsProfile, Rational};
use serde_json::Value;

use crate::error::CliError;

/// A validated arrangement with its optional metadata.
#[derive(Clone, Debug)]
pub struct ArrangementSpec {
    pub name: Option<String>,
    pub arrangement: Arrangement,
    pub exponents: Option<ExponentsProfile>,
}

pub const FAMILIES: &[(&str, &str)] = &[
    ("braid", "hyperplanes x_i = x_j for 1 ≤ i < j ≤ ell; exponents 0, 1, …, ell-1"),
    ("boolean", "coordinate hyperplanes x_i = 0"),
];

pub fn family(name: &str, ell: usize) -> Result<ArrangementSpec, CliError> {
    if !FAMILIES.iter().any(|(n, _)| *n == name) {
        return Err(CliError::UnknownFamily(name.to_string()));
    }
    if ell < 1 {
        return Err(CliError::InvalidEll { family: name.to_string() });
    }
    let (arrangement, exponents) = match name {
        "braid" => (Arrangement::braid(ell), Some(ExponentsProfile::braid(ell))),
        _ => (Arrangement::boolean(ell), None),
    };
    Ok(ArrangementSpec {
        name: Some(format!("{name}-{ell}")),
        arrangement,
        exponents,
    })
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(n, d))
}

fn entry(value: &Value, form: usize, entry: usize) -> Result<Rational, CliError> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(CliError::FloatEntry { form, entry })
            }
        }
        Value::String(s) => parse_rational(s).ok_or_else(|| CliError::BadRational {
            form,
            entry,
            text: s.clone(),
        }),
        other => Err(CliError::BadRational {
            form,
            entry,
            text: other.to_string(),
        }),
    }
}

fn nonneg_int(value: &Value, what: &str) -> Result<u64, CliError> {
    value
        .as_u64()
        .ok_or_else(|| CliError::Malformed(format!("{what} must be a nonnegative integer, got {value}")))
}

pub fn parse_spec(text: &str) -> Result<ArrangementSpec, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("invalid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| CliError::Malformed("top level must be an object".into()))?;
    if let Some(key) = obj.keys().find(|k| !matches!(k.as_str(), "ell" | "forms" | "name" | "exponents")) {
        return Err(CliError::Malformed(format!("unknown key {key:?}")));
    }
    let ell = nonneg_int(obj.get("ell").ok_or_else(|| CliError::Malformed("missing \"ell\"".into()))?, "\"ell\"")? as usize;
    let forms = obj
        .get("forms")
        .ok_or_else(|| CliError::Malformed("missing \"forms\"".into()))?
        .as_array()
        .ok_or_else(|| CliError::Malformed("\"forms\" must be an array".into()))?;

    let mut raw = Vec::with_capacity(forms.len());
    for (i, f) in forms.iter().enumerate() {
        let coeffs = f
            .as_array()
            .ok_or_else(|| CliError::Malformed(format!("form {} must be an array", i + 1)))?;
        let row = coeffs
            .iter()
            .enumerate()
            .map(|(j, v)| entry(v, i + 1, j + 1))
            .collect::<Result<Vec<_>, _>>()?;
        raw.push(row);
    }
    let arrangement = Arrangement::new(ell, raw)?;

    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return Err(CliError::Malformed(format!("\"name\" must be a string, got {other}"))),
    };
    let exponents = match obj.get("exponents") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => {
            let exps = items
                .iter()
                .map(|v| nonneg_int(v, "exponent"))
                .collect::<Result<Vec<_>, _>>()?;
            Some(check_exponents(exps, ell)?)
        }
        Some(other) => return Err(CliError::Malformed(format!("\"exponents\" must be an array, got {other}"))),
    };
    Ok(ArrangementSpec {
        name,
        arrangement,
        exponents,
    })
}

pub fn check_exponents(exps: Vec<u64>, ell: usize) -> Result<ExponentsProfile, CliError> {
    if exps.len() != ell {
        return Err(CliError::ExponentsLength {
            expected: ell,
            found: exps.len(),
        });
    }
    Ok(ExponentsProfile(exps))
}

/// Parses `"d1,d2,..."`.
pub fn parse_exponents_flag(text: &str, ell: usize) -> Result<ExponentsProfile, CliError> {
    let exps = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| CliError::Malformed(format!("--exponents: {s:?} is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_exponents(exps, ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_file() {
        let spec = parse_spec(r#"{"ell":3,"forms":[[1,-1,0],[0,1,-1],[1,0,-1]]}"#).unwrap();
        assert_eq!(spec.arrangement.len(), 3);
        assert_eq!(spec.arrangement.ell(), 3);
        assert!(spec.exponents.is_none());
    }

    #[test]
    fn single_hyperplane() {
        let spec = parse_spec(r#"{"ell":1,"forms":[[1]]}"#).unwrap();
        assert_eq!(spec.arrangement.len(), 1);
    }

    #[test]
    fn proportional_pair_names_one_based_forms() {
        let err = parse_spec(r#"{"ell":2,"forms":[[1,0],["1/2",0]]}"#).unwrap_err();
        assert_eq!(err.code(), "proportional-pair");
        assert_eq!(err.to_string(), "forms 1 and 2 are proportional");
    }

    #[test]
    fn rejections() {
        let code = |s: &str| parse_spec(s).unwrap_err().code();
        assert_eq!(code(r#"{"ell":2,"forms":[[1.5,0]]}"#), "float-entry");
        assert_eq!(code(r#"{"ell":2,"forms":[[0,0]]}"#), "zero-form");
        assert_eq!(code(r#"{"ell":2,"forms":[[1,0,0]]}"#), "wrong-length");
        assert_eq!(code(r#"{"ell":2,"forms":[["1/0",1]]}"#), "bad-rational");
        assert_eq!(code(r#"{"ell":2,"forms":[[1,0]],"exponents":[1]}"#), "exponents-length");
        assert_eq!(code(r#"{"ell":2}"#), "malformed-input");
        assert_eq!(code(r#"{"ell":2,"forms":[],"extra":1}"#), "malformed-input");
        assert_eq!(code("not json"), "malformed-input");
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3/6"), Some(Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("7"), Some(Rational::from_integer(7.into())));
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn families() {
        assert_eq!(family("braid", 3).unwrap().arrangement.len(), 3);
        assert_eq!(family("braid", 2).unwrap().arrangement.len(), 1);
        let b = family("boolean", 2).unwrap();
        assert_eq!(b.arrangement.forms()[0].to_string(), "x1");
        assert_eq!(b.arrangement.forms()[1].to_string(), "x2");
        assert_eq!(family("braid", 4).unwrap().exponents.unwrap().0, vec![0, 1, 2, 3]);
        assert_eq!(family("type-b", 3).unwrap_err().code(), "unknown-family");
        assert_eq!(family("braid", 0).unwrap_err().code(), "invalid-ell");
    }

    #[test]
    fn exponent_flag() {
        assert_eq!(parse_exponents_flag("0, 1,2", 3).unwrap().0, vec![0, 1, 2]);
        assert_eq!(parse_exponents_flag("0,1", 3).unwrap_err().code(), "exponents-length");
    }
}
