//! JSON documents: polynomial files, basis specs, and the serialized forms
//! of bases, polynomials and Bezout matrices.
//!
//! A polynomial document looks like
//!
//! ```json
//! {"basis": {"kind": "hermite", "nodes": ["-1", "3", "4"], "confluencies": [2, 2, 1]},
//!  "coeffs": ["6", "-11", "26", "53", "126"]}
//! ```
//!
//! Monomial and Bernstein bases carry `"degree"`; Lagrange and Hermite bases
//! carry only their nodes (and confluencies), which fix the degree. Scalars
//! are strings `"p"` or `"p/q"`.

use std::path::Path;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::bezout::BezoutMatrix;
use crate::error::Error;
use crate::exactlinalg::{Rational, Scalar};
use crate::poly_bases::{Basis, BasisKind, Poly};

/// Problems with an input document, as opposed to domain errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("cannot read {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error("schema violation at {path}: {detail}")]
    SchemaViolation { path: String, detail: String },
    #[error("bad rational at {path}: {value:?}")]
    BadRational { path: String, value: String },
}

impl DocError {
    pub fn code(&self) -> &'static str {
        match self {
            DocError::Io { .. } => "Io",
            DocError::MalformedJson(_) => "MalformedJson",
            DocError::SchemaViolation { .. } => "SchemaViolation",
            DocError::BadRational { .. } => "BadRational",
        }
    }
}

fn schema(path: &str, detail: impl Into<String>) -> DocError {
    DocError::SchemaViolation {
        path: path.to_string(),
        detail: detail.into(),
    }
}

fn rational_at(v: &Value, path: &str) -> Result<Rational, DocError> {
    let s = v
        .as_str()
        .ok_or_else(|| schema(path, "expected a rational string"))?;
    s.parse().map_err(|e| match e {
        Error::DivisionByZero => schema(path, "zero denominator"),
        _ => DocError::BadRational {
            path: path.to_string(),
            value: s.to_string(),
        },
    })
}

fn rational_list(v: Option<&Value>, path: &str) -> Result<Vec<Rational>, DocError> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| schema(path, "expected an array of rational strings"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| rational_at(x, &format!("{path}[{i}]")))
        .collect()
}

fn expect_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<(), DocError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(&format!("{path}.{k}"), "unexpected field")),
        None => Ok(()),
    }
}

fn basis_error(e: Error, path: &str) -> DocError {
    match e {
        Error::RepeatedNodes => schema(&format!("{path}.nodes"), "repeated nodes"),
        other => schema(path, other.to_string()),
    }
}

/// Parses a basis object.
pub fn basis_from_value(v: &Value, path: &str) -> Result<Basis<Rational>, DocError> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema(path, "expected a basis object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| schema(&format!("{path}.kind"), "expected a string"))?;
    match kind {
        "monomial" | "bernstein" => {
            expect_keys(obj, &["kind", "degree"], path)?;
            let degree = obj.get("degree").and_then(Value::as_u64).ok_or_else(|| {
                schema(&format!("{path}.degree"), "expected a non-negative integer")
            })? as usize;
            Ok(if kind == "monomial" {
                Basis::monomial(degree)
            } else {
                Basis::bernstein(degree)
            })
        }
        "lagrange" => {
            expect_keys(obj, &["kind", "nodes"], path)?;
            let nodes = rational_list(obj.get("nodes"), &format!("{path}.nodes"))?;
            Basis::lagrange(nodes).map_err(|e| basis_error(e, path))
        }
        "hermite" => {
            expect_keys(obj, &["kind", "nodes", "confluencies"], path)?;
            let nodes = rational_list(obj.get("nodes"), &format!("{path}.nodes"))?;
            let cpath = format!("{path}.confluencies");
            let conf = obj
                .get("confluencies")
                .and_then(Value::as_array)
                .ok_or_else(|| schema(&cpath, "expected an array of positive integers"))?
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    c.as_u64()
                        .filter(|&c| c > 0)
                        .map(|c| c as usize)
                        .ok_or_else(|| {
                            schema(&format!("{cpath}[{i}]"), "expected a positive integer")
                        })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Basis::hermite(nodes, conf).map_err(|e| basis_error(e, path))
        }
        other => Err(schema(
            &format!("{path}.kind"),
            format!("unknown basis kind {other:?}"),
        )),
    }
}

pub fn poly_from_value(v: &Value) -> Result<Poly<Rational>, DocError> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema("$", "expected a polynomial object"))?;
    expect_keys(obj, &["basis", "coeffs"], "$")?;
    let basis = basis_from_value(
        obj.get("basis")
            .ok_or_else(|| schema("$.basis", "missing"))?,
        "$.basis",
    )?;
    let coeffs = rational_list(obj.get("coeffs"), "$.coeffs")?;
    if coeffs.len() != basis.size() {
        return Err(schema(
            "$.coeffs",
            format!(
                "expected {} coefficients, found {}",
                basis.size(),
                coeffs.len()
            ),
        ));
    }
    Poly::new(basis, coeffs).map_err(|e| schema("$", e.to_string()))
}

pub fn parse_poly_str(text: &str) -> Result<Poly<Rational>, DocError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| DocError::MalformedJson(e.to_string()))?;
    poly_from_value(&v)
}

pub fn parse_poly_file(path: impl AsRef<Path>) -> Result<Poly<Rational>, DocError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DocError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_poly_str(&text)
}

/// Bezout/conversion target as given on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum BasisSpec {
    Native,
    /// Kind only; the degree is filled in from context.
    Shorthand(BasisKind),
    Explicit(Basis<Rational>),
}

impl BasisSpec {
    /// Accepts `native`, `monomial`, `bernstein`, or a JSON basis object.
    pub fn parse(text: &str) -> Result<Self, DocError> {
        match text.trim() {
            "native" => Ok(BasisSpec::Native),
            "monomial" => Ok(BasisSpec::Shorthand(BasisKind::Monomial)),
            "bernstein" => Ok(BasisSpec::Shorthand(BasisKind::Bernstein)),
            other => {
                let v: Value = serde_json::from_str(other)
                    .map_err(|e| DocError::MalformedJson(e.to_string()))?;
                basis_from_value(&v, "basis").map(BasisSpec::Explicit)
            }
        }
    }
}

pub fn parse_roots(text: &str) -> Result<Vec<(Rational, usize)>, DocError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| DocError::MalformedJson(e.to_string()))?;
    let arr = v
        .as_array()
        .ok_or_else(|| schema("roots", "expected an array of {root, multiplicity}"))?;
    arr.iter()
        .enumerate()
        .map(|(i, item)| {
            let path = format!("roots[{i}]");
            let obj = item
                .as_object()
                .ok_or_else(|| schema(&path, "expected an object"))?;
            expect_keys(obj, &["root", "multiplicity"], &path)?;
            let root = rational_at(
                obj.get("root").unwrap_or(&Value::Null),
                &format!("{path}.root"),
            )?;
            let mult = obj
                .get("multiplicity")
                .and_then(Value::as_u64)
                .filter(|&m| m > 0)
                .ok_or_else(|| {
                    schema(
                        &format!("{path}.multiplicity"),
                        "expected a positive integer",
                    )
                })?;
            Ok((root, mult as usize))
        })
        .collect()
}

struct Strings<'a, S>(&'a [S]);

impl<S: Scalar> Serialize for Strings<'_, S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

impl<S: Scalar> Serialize for Basis<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", self.kind().name())?;
        match self.kind() {
            BasisKind::Monomial | BasisKind::Bernstein => {
                map.serialize_entry("degree", &self.degree())?;
            }
            BasisKind::Lagrange => {
                map.serialize_entry("nodes", &Strings(self.nodes()))?;
            }
            BasisKind::Hermite => {
                map.serialize_entry("nodes", &Strings(self.nodes()))?;
                map.serialize_entry("confluencies", self.confluencies())?;
            }
        }
        map.end()
    }
}

impl<S: Scalar> Serialize for Poly<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("basis", self.basis())?;
        map.serialize_entry("coeffs", &Strings(self.coeffs()))?;
        map.end()
    }
}

impl<S: Scalar> Serialize for BezoutMatrix<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("basis", self.basis())?;
        map.serialize_entry("n", &self.n())?;
        map.serialize_entry("matrix", self.matrix())?;
        map.end()
    }
}
