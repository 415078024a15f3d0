//! Problem documents: JSON with exact rational literals.
//!
//! ```json
//! {
//!   "n": 2,
//!   "objectives": [
//!     { "a": [1, 0], "alpha": 0, "b": [0, 0], "beta": 1 },
//!     { "a": [0, "1/2"], "alpha": "0.25", "b": [0, 0], "beta": 1 }
//!   ],
//!   "constraints": { "C": [[-1, 0]], "d": [0] }
//! }
//! ```
//!
//! Numbers may be JSON numbers or strings holding an integer, a decimal or
//! `p/q`. JSON numbers are read from their source text, so `0.1` is exactly
//! 1/10.

use std::fmt;

use lfvop_core::{parse_rational, LinearFractionalObjective, PolyhedralSet, Problem, Rational};
use serde::de::{self, Deserializer};
use serde::Deserialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    /// Syntax or schema error at a 1-based source position.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed document whose arrays disagree with `n` or each other.
    Shape {
        path: String,
        expected: usize,
        found: usize,
    },
    Problem(lfvop_core::Error),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse {
                line,
                column,
                message,
            } => write!(f, "line {line}, column {column}: {message}"),
            DocumentError::Shape {
                path,
                expected,
                found,
            } => {
                write!(f, "{path}: expected {expected} entries, found {found}")
            }
            DocumentError::Problem(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message.
        let message = match message.rfind(" at line ") {
            Some(cut) => message[..cut].to_string(),
            None => message,
        };
        DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

/// A number read without going through floating point.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Exact(Rational);

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = match Value::deserialize(deserializer)? {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s,
            other => {
                return Err(de::Error::custom(format!(
                    "expected a number, found {}",
                    kind(&other)
                )))
            }
        };
        parse_rational(&text)
            .map(Exact)
            .map_err(|e| de::Error::custom(format!("invalid number {text:?}: {e}")))
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    n: usize,
    objectives: Vec<RawObjective>,
    constraints: RawConstraints,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObjective {
    a: Vec<Exact>,
    alpha: Exact,
    b: Vec<Exact>,
    beta: Exact,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstraints {
    #[serde(rename = "C")]
    c: Vec<Vec<Exact>>,
    d: Vec<Exact>,
}

fn unwrap(v: Vec<Exact>) -> Vec<Rational> {
    v.into_iter().map(|e| e.0).collect()
}

fn shape(path: String, expected: usize, found: usize) -> Result<(), DocumentError> {
    if expected == found {
        Ok(())
    } else {
        Err(DocumentError::Shape {
            path,
            expected,
            found,
        })
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text)?;
    let n = raw.n;
    let mut objectives = Vec::with_capacity(raw.objectives.len());
    for (i, o) in raw.objectives.into_iter().enumerate() {
        shape(format!("objectives[{i}].a"), n, o.a.len())?;
        shape(format!("objectives[{i}].b"), n, o.b.len())?;
        let obj = LinearFractionalObjective::new(unwrap(o.a), o.alpha.0, unwrap(o.b), o.beta.0)
            .map_err(DocumentError::Problem)?;
        objectives.push(obj);
    }
    for (k, row) in raw.constraints.c.iter().enumerate() {
        shape(format!("constraints.C[{k}]"), n, row.len())?;
    }
    shape(
        "constraints.d".to_string(),
        raw.constraints.c.len(),
        raw.constraints.d.len(),
    )?;
    let rows = raw.constraints.c.into_iter().map(unwrap).collect();
    let set =
        PolyhedralSet::new(n, rows, unwrap(raw.constraints.d)).map_err(DocumentError::Problem)?;
    Problem::new(objectives, set).map_err(DocumentError::Problem)
}

/// Parses a comma-separated list such as `0,1/2,-0.25`.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| parse_rational(item.trim()).map_err(|e| format!("{:?}: {e}", item.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lfvop_core::rational::{int, ratio};

    const EXAMPLE: &str = r#"{
  "n": 2,
  "objectives": [
    { "a": [1, 0], "alpha": 0, "b": [0, 0], "beta": 1 },
    { "a": [0, 1], "alpha": 0, "b": [0, 0], "beta": 1 }
  ],
  "constraints": { "C": [[-1, 0]], "d": [0] }
}"#;

    #[test]
    fn parses_example() {
        let p = parse_problem(EXAMPLE).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.num_objectives(), 2);
        assert_eq!(p.feasible_set().rows(), &[vec![int(-1), int(0)]]);
    }

    #[test]
    fn numbers_are_exact() {
        let text = r#"{"n":1,"objectives":[{"a":[0.1],"alpha":"1/3","b":["2.5e-1"],"beta":1e2}],
                       "constraints":{"C":[],"d":[]}}"#;
        let p = parse_problem(text).unwrap();
        let f = &p.objectives()[0];
        assert_eq!(f.a, vec![ratio(1, 10)]);
        assert_eq!(f.alpha, ratio(1, 3));
        assert_eq!(f.b, vec![ratio(1, 4)]);
        assert_eq!(f.beta, int(100));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_problem("{\n  \"n\": 2,\n  \"objectives\": [,]\n}").unwrap_err();
        assert!(
            matches!(err, DocumentError::Parse { line: 3, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn bad_rational_carries_position() {
        let text = "{\"n\":1,\n\"objectives\":[{\"a\":[\"1/0\"],\"alpha\":0,\"b\":[0],\"beta\":1}],\"constraints\":{\"C\":[],\"d\":[]}}";
        match parse_problem(text).unwrap_err() {
            DocumentError::Parse { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("1/0"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_and_missing_fields() {
        let extra = r#"{"n":1,"objectives":[],"constraints":{"C":[],"d":[]},"x":1}"#;
        assert!(matches!(
            parse_problem(extra),
            Err(DocumentError::Parse { .. })
        ));
        let missing =
            r#"{"n":1,"objectives":[{"a":[1],"alpha":0,"b":[0]}],"constraints":{"C":[],"d":[]}}"#;
        assert!(matches!(
            parse_problem(missing),
            Err(DocumentError::Parse { .. })
        ));
    }

    #[test]
    fn shape_errors_name_the_field() {
        let text = r#"{"n":2,"objectives":[{"a":[1],"alpha":0,"b":[0,0],"beta":1}],"constraints":{"C":[],"d":[]}}"#;
        assert_eq!(
            parse_problem(text).unwrap_err(),
            DocumentError::Shape {
                path: "objectives[0].a".into(),
                expected: 2,
                found: 1
            }
        );
        let text = r#"{"n":1,"objectives":[{"a":[1],"alpha":0,"b":[0],"beta":1}],"constraints":{"C":[[1]],"d":[]}}"#;
        assert!(matches!(
            parse_problem(text),
            Err(DocumentError::Shape { .. })
        ));
    }

    #[test]
    fn no_objectives_is_rejected() {
        let text = r#"{"n":1,"objectives":[],"constraints":{"C":[],"d":[]}}"#;
        assert_eq!(
            parse_problem(text).unwrap_err(),
            DocumentError::Problem(lfvop_core::Error::NoObjectives)
        );
    }

    #[test]
    fn vectors() {
        assert_eq!(
            parse_vector("0, 1/2,-0.25").unwrap(),
            vec![int(0), ratio(1, 2), ratio(-1, 4)]
        );
        assert!(parse_vector("1,,2").is_err());
        assert!(parse_vector("").unwrap().is_empty());
    }
}
