//! Structured-text matrix documents (JSON syntax).
//!
//! Scalar encodings:
//! * complex: `["re", "im"]`, two decimal strings (shortest round-trip form);
//! * rational: `"p/q"` with optional sign, or `"p"` for integers.
//!
//! On input, JSON numbers are also accepted where a decimal string is
//! expected, and a lone number or string is read as a real complex value.
//! Printing is canonical, so `parse(print(doc)) == doc`.

use std::fmt;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::lattice::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixDocument {
    Circulant {
        first_row: Vec<Complex64>,
    },
    /// `mu` holds `μ_2, ..., μ_n` (`μ_1 = 1` is implicit).
    MuCirculant {
        first_row: Vec<Complex64>,
        mu: Vec<Complex64>,
    },
    SkewCirculant {
        first_row: Vec<Complex64>,
    },
    Dense {
        entries: Vec<Vec<Complex64>>,
    },
    RationalCirculant {
        first_row: Vec<Rational>,
    },
    /// Exact eigenvalues `λ_1, ..., λ_n` (input of spectrum reconstruction).
    RationalSpectrum {
        values: Vec<Rational>,
    },
    /// Table `F(e_i, e_j)` of a candidate two-cocycle.
    Cocycle {
        table: Vec<Vec<Complex64>>,
    },
}

pub const KINDS: [&str; 7] = [
    "circulant",
    "mu_circulant",
    "skew_circulant",
    "dense",
    "rational_circulant",
    "rational_spectrum",
    "cocycle",
];

impl MatrixDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Circulant { .. } => "circulant",
            Self::MuCirculant { .. } => "mu_circulant",
            Self::SkewCirculant { .. } => "skew_circulant",
            Self::Dense { .. } => "dense",
            Self::RationalCirculant { .. } => "rational_circulant",
            Self::RationalSpectrum { .. } => "rational_spectrum",
            Self::Cocycle { .. } => "cocycle",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Self::Circulant { first_row } | Self::MuCirculant { first_row, .. } | Self::SkewCirculant { first_row } => {
                first_row.len()
            }
            Self::Dense { entries } => entries.len(),
            Self::RationalCirculant { first_row } => first_row.len(),
            Self::RationalSpectrum { values } => values.len(),
            Self::Cocycle { table } => table.len(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("kind".into(), json!(self.kind()));
        map.insert("n".into(), json!(self.n()));
        match self {
            Self::Circulant { first_row } | Self::SkewCirculant { first_row } => {
                map.insert("first_row".into(), complex_list(first_row));
            }
            Self::MuCirculant { first_row, mu } => {
                map.insert("first_row".into(), complex_list(first_row));
                map.insert("mu".into(), complex_list(mu));
            }
            Self::Dense { entries } => {
                map.insert("entries".into(), complex_grid(entries));
            }
            Self::RationalCirculant { first_row } => {
                map.insert("first_row".into(), rational_list(first_row));
            }
            Self::RationalSpectrum { values } => {
                map.insert("values".into(), rational_list(values));
            }
            Self::Cocycle { table } => {
                map.insert("table".into(), complex_grid(table));
            }
        }
        Value::Object(map)
    }

    pub fn print(&self) -> String {
        to_pretty(&self.to_value())
    }

    pub fn from_value(value: &Value) -> Result<Self, DocumentError> {
        let obj = value
            .as_object()
            .ok_or_else(|| DocumentError::new("document", "expected a JSON object"))?;
        let kind = obj
            .get("kind")
            .ok_or_else(|| DocumentError::new("kind", "missing"))?
            .as_str()
            .ok_or_else(|| DocumentError::new("kind", "expected a string"))?;
        let allowed: &[&str] = match kind {
            "circulant" | "skew_circulant" | "rational_circulant" => &["first_row"],
            "mu_circulant" => &["first_row", "mu"],
            "dense" => &["entries"],
            "rational_spectrum" => &["values"],
            "cocycle" => &["table"],
            other => {
                return Err(DocumentError::new(
                    "kind",
                    format!("unknown kind {other:?} (expected one of {})", KINDS.join(", ")),
                ))
            }
        };
        for key in obj.keys() {
            if key != "kind" && key != "n" && !allowed.contains(&key.as_str()) {
                return Err(DocumentError::new(key, format!("not allowed for kind {kind}")));
            }
        }
        let n = parse_order(obj.get("n").ok_or_else(|| DocumentError::new("n", "missing"))?)?;
        let field = |name: &str| obj.get(name).ok_or_else(|| DocumentError::new(name, "missing"));

        let doc = match kind {
            "circulant" => Self::Circulant {
                first_row: parse_complex_list(field("first_row")?, "first_row", n)?,
            },
            "skew_circulant" => Self::SkewCirculant {
                first_row: parse_complex_list(field("first_row")?, "first_row", n)?,
            },
            "mu_circulant" => {
                let mu = parse_complex_list(field("mu")?, "mu", n - 1)?;
                if let Some(i) = mu.iter().position(|m| *m == Complex64::new(0.0, 0.0)) {
                    return Err(DocumentError::new(format!("mu[{i}]"), "weights must be nonzero"));
                }
                Self::MuCirculant {
                    first_row: parse_complex_list(field("first_row")?, "first_row", n)?,
                    mu,
                }
            }
            "dense" => Self::Dense {
                entries: parse_complex_grid(field("entries")?, "entries", n)?,
            },
            "rational_circulant" => Self::RationalCirculant {
                first_row: parse_rational_list(field("first_row")?, "first_row", n)?,
            },
            "rational_spectrum" => Self::RationalSpectrum {
                values: parse_rational_list(field("values")?, "values", n)?,
            },
            "cocycle" => Self::Cocycle {
                table: parse_complex_grid(field("table")?, "table", n)?,
            },
            _ => unreachable!("kind checked above"),
        };
        Ok(doc)
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| DocumentError::new("document", format!("invalid JSON: {e}")))?;
        Self::from_value(&value)
    }
}

/// Reads every document in `text`: a single object, a JSON array of objects,
/// or several concatenated objects.
pub fn parse_documents(text: &str) -> Result<Vec<MatrixDocument>, DocumentError> {
    let mut docs = Vec::new();
    for (k, value) in serde_json::Deserializer::from_str(text)
        .into_iter::<Value>()
        .enumerate()
    {
        let value = value.map_err(|e| DocumentError::new("document", format!("invalid JSON: {e}")))?;
        let items = match value {
            Value::Array(items) => items,
            other => vec![other],
        };
        let single = k == 0 && items.len() == 1;
        for item in &items {
            let doc = MatrixDocument::from_value(item).map_err(|e| if single { e } else { e.within(docs.len()) })?;
            docs.push(doc);
        }
    }
    if docs.is_empty() {
        return Err(DocumentError::new("document", "no document found"));
    }
    Ok(docs)
}

/// One-line diagnostic naming the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError {
    pub field: String,
    pub message: String,
}

impl DocumentError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            field: field.into(),
            message: message.into(),
        }
    }

    fn within(self, index: usize) -> Self {
        Self {
            field: format!("documents[{index}].{}", self.field),
            message: self.message,
        }
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "field `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for DocumentError {}

/// Indented JSON that keeps lists of scalars (including `[re, im]` pairs)
/// on a single line.
pub fn to_pretty(value: &Value) -> String {
    let mut out = String::new();
    write_pretty(value, 0, &mut out);
    out
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(|v| match v {
            Value::Array(inner) => inner.iter().all(|x| !x.is_array() && !x.is_object()),
            Value::Object(_) => false,
            _ => true,
        }),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_pretty(value: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Array(items) if !items.is_empty() && !is_flat(value) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_pretty(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_pretty(item, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Shortest decimal text that parses back to the same `f64`.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn complex_value(z: Complex64) -> Value {
    json!([format_real(z.re), format_real(z.im)])
}

pub fn complex_list(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().copied().map(complex_value).collect())
}

pub fn complex_grid(rows: &[Vec<Complex64>]) -> Value {
    Value::Array(rows.iter().map(|r| complex_list(r)).collect())
}

pub fn rational_value(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_list(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational_value).collect())
}

/// Zeroes real and imaginary parts below `tol`, for display of results
/// whose exact values are real or integral.
pub fn chop(z: Complex64, tol: f64) -> Complex64 {
    let c = |x: f64| if x.abs() <= tol { 0.0 } else { x };
    Complex64::new(c(z.re), c(z.im))
}

fn parse_order(v: &Value) -> Result<usize, DocumentError> {
    let n = match v {
        Value::Number(x) => x.as_u64(),
        Value::String(s) => s.trim().parse::<u64>().ok(),
        _ => None,
    }
    .ok_or_else(|| DocumentError::new("n", "expected a positive integer"))?;
    if n == 0 {
        return Err(DocumentError::new("n", "order must be at least 1"));
    }
    usize::try_from(n).map_err(|_| DocumentError::new("n", "order too large"))
}

fn parse_real(v: &Value, field: &str) -> Result<f64, DocumentError> {
    let x = match v {
        Value::String(s) => s.trim().parse::<f64>().ok(),
        Value::Number(x) => x.as_f64(),
        _ => None,
    }
    .ok_or_else(|| DocumentError::new(field, "expected a decimal string"))?;
    if !x.is_finite() {
        return Err(DocumentError::new(field, "value must be finite"));
    }
    Ok(x)
}

pub fn parse_complex(v: &Value, field: &str) -> Result<Complex64, DocumentError> {
    match v {
        Value::Array(parts) if parts.len() == 2 => Ok(Complex64::new(
            parse_real(&parts[0], &format!("{field}.re"))?,
            parse_real(&parts[1], &format!("{field}.im"))?,
        )),
        Value::Array(_) => Err(DocumentError::new(field, "expected [re, im]")),
        other => Ok(Complex64::new(parse_real(other, field)?, 0.0)),
    }
}

fn expect_list<'a>(v: &'a Value, field: &str, len: usize) -> Result<&'a [Value], DocumentError> {
    let items = v
        .as_array()
        .ok_or_else(|| DocumentError::new(field, "expected a list"))?;
    if items.len() != len {
        return Err(DocumentError::new(
            field,
            format!("expected {len} entries (from n), found {}", items.len()),
        ));
    }
    Ok(items)
}

fn parse_complex_list(v: &Value, field: &str, len: usize) -> Result<Vec<Complex64>, DocumentError> {
    expect_list(v, field, len)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_complex(x, &format!("{field}[{i}]")))
        .collect()
}

fn parse_complex_grid(v: &Value, field: &str, n: usize) -> Result<Vec<Vec<Complex64>>, DocumentError> {
    expect_list(v, field, n)?
        .iter()
        .enumerate()
        .map(|(i, row)| parse_complex_list(row, &format!("{field}[{i}]"), n))
        .collect()
}

pub fn parse_rational_value(v: &Value, field: &str) -> Result<Rational, DocumentError> {
    let parsed = match v {
        Value::String(s) => parse_rational(s),
        Value::Number(x) if x.is_i64() || x.is_u64() => parse_rational(&x.to_string()),
        _ => None,
    };
    parsed.ok_or_else(|| DocumentError::new(field, "expected a rational string \"p/q\" or integer"))
}

fn parse_rational_list(v: &Value, field: &str, len: usize) -> Result<Vec<Rational>, DocumentError> {
    expect_list(v, field, len)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_rational_value(x, &format!("{field}[{i}]")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_round_trip() {
        let doc = MatrixDocument::Circulant {
            first_row: vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.1, -2.5e-20),
                Complex64::new(-3e20, 7.0),
            ],
        };
        assert_eq!(MatrixDocument::parse(&doc.print()).unwrap(), doc);
    }

    #[test]
    fn lenient_scalars() {
        let doc = MatrixDocument::parse(r#"{"kind":"circulant","n":3,"first_row":[1, "2", ["3","0"]]}"#).unwrap();
        assert_eq!(
            doc,
            MatrixDocument::Circulant {
                first_row: vec![1.0.into(), 2.0.into(), 3.0.into()]
            }
        );
        let doc =
            MatrixDocument::parse(r#"{"kind":"rational_circulant","n":3,"first_row":["-1/3", 2, "4/6"]}"#).unwrap();
        assert_eq!(doc.print().matches("2/3").count(), 1);
    }

    #[test]
    fn diagnostics_name_fields() {
        let err = |s: &str| MatrixDocument::parse(s).unwrap_err().field;
        assert_eq!(err(r#"{"n":2,"first_row":[1,2]}"#), "kind");
        assert_eq!(err(r#"{"kind":"hankel","n":2}"#), "kind");
        assert_eq!(err(r#"{"kind":"circulant","first_row":[1,2]}"#), "n");
        assert_eq!(err(r#"{"kind":"circulant","n":3,"first_row":[1,2]}"#), "first_row");
        assert_eq!(err(r#"{"kind":"circulant","n":2,"first_row":[1,"x"]}"#), "first_row[1]");
        assert_eq!(err(r#"{"kind":"circulant","n":2,"first_row":[1,2],"mu":["1"]}"#), "mu");
        assert_eq!(err(r#"{"kind":"mu_circulant","n":2,"first_row":[1,2]}"#), "mu");
        assert_eq!(
            err(r#"{"kind":"mu_circulant","n":2,"first_row":[1,2],"mu":[0]}"#),
            "mu[0]"
        );
        assert_eq!(err(r#"{"kind":"dense","n":2,"entries":[[1,2],[3]]}"#), "entries[1]");
        assert_eq!(
            err(r#"{"kind":"rational_circulant","n":1,"first_row":["1/0"]}"#),
            "first_row[0]"
        );
        assert_eq!(err(r#"{"kind":"circulant","n":0,"first_row":[]}"#), "n");
        assert_eq!(err("not json"), "document");
    }

    #[test]
    fn document_streams() {
        let one = r#"{"kind":"circulant","n":1,"first_row":[1]}"#;
        assert_eq!(parse_documents(one).unwrap().len(), 1);
        assert_eq!(parse_documents(&format!("[{one},{one}]")).unwrap().len(), 2);
        assert_eq!(parse_documents(&format!("{one}\n{one}\n{one}")).unwrap().len(), 3);
        let bad = format!("[{one}, {{\"kind\":\"circulant\",\"n\":1}}]");
        assert_eq!(parse_documents(&bad).unwrap_err().field, "documents[1].first_row");
        assert!(parse_documents("  ").is_err());
    }

    #[test]
    fn chopping() {
        assert_eq!(chop(Complex64::new(3.0, 1e-17), 1e-12), Complex64::new(3.0, 0.0));
    }
}
