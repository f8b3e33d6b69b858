//! JSON input formats: matrices, quivers, bound quiver algebras and modules.
//!
//! Rationals are written as strings `"p/q"` (or `"p"`); JSON numbers are
//! accepted too and converted exactly from their decimal form.

use std::collections::BTreeMap;
use std::sync::Arc;

use fproot_core::algebra::{BoundAlgebra, Relation};
use fproot_core::exactlin::{Rat, RatMatrix};
use fproot_core::quiver::Quiver;
use fproot_core::repmod::Representation;
use fproot_core::spectral::{ExtEntry, ExtendedMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Parse `"p/q"`, `"p"` or a decimal such as `"0.25"` or `"1e-3"`.
pub fn parse_rational(text: &str) -> Result<Rat, String> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let bad = |_| format!("`{text}` is not a rational number");
        let p: Rat = parse_decimal(p.trim()).ok_or(()).map_err(bad)?;
        let q: Rat = parse_decimal(q.trim()).ok_or(()).map_err(bad)?;
        if q.is_zero() {
            return Err(format!("`{text}` has a zero denominator"));
        }
        return Ok(p / q);
    }
    parse_decimal(t).ok_or_else(|| format!("`{text}` is not a rational number"))
}

fn parse_decimal(t: &str) -> Option<Rat> {
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let whole: BigInt = format!("{int}{frac}").parse().ok()?;
    let ten = Rat::from_integer(10.into());
    let mut value = Rat::from_integer(whole);
    let shift = exp - frac.len() as i32;
    for _ in 0..shift.unsigned_abs() {
        value = if shift > 0 { value * &ten } else { value / &ten };
    }
    Some(if neg { -value } else { value })
}

/// A rational given as a JSON string or number.
pub fn rational_value(v: &Value) -> Result<Rat, String> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(format!("expected a rational, found `{other}`")),
    }
}

/// Matrix file: array of equal-length rows; entries are rationals or the
/// strings `"inf"` / `"-inf"`.
pub fn parse_matrix(text: &str) -> Result<ExtendedMatrix, CliError> {
    let rows: Vec<Vec<Value>> =
        serde_json::from_str(text).map_err(|e| parse_err(format!("matrix file: {e}")))?;
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(parse_err(format!("matrix row {i} has {} entries, expected {n}", row.len())));
        }
        for (j, v) in row.iter().enumerate() {
            let entry = match v {
                Value::String(s) if s.trim() == "inf" || s.trim() == "+inf" => ExtEntry::PosInf,
                Value::String(s) if s.trim() == "-inf" => ExtEntry::NegInf,
                _ => ExtEntry::Finite(rational_value(v).map_err(|e| parse_err(format!("entry ({i}, {j}): {e}")))?),
            };
            entries.push(entry);
        }
    }
    ExtendedMatrix::new(n, entries).map_err(|e| parse_err(e.to_string()))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub label: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

impl QuiverSpec {
    pub fn build(&self) -> Result<Quiver, CliError> {
        let mut q = Quiver::new(self.vertices.iter().cloned()).map_err(|e| parse_err(e.to_string()))?;
        for a in &self.arrows {
            q.add_arrow(&a.label, &a.from, &a.to).map_err(|e| parse_err(format!("arrow `{}`: {e}", a.label)))?;
        }
        Ok(q)
    }
}

pub fn parse_quiver(text: &str) -> Result<Quiver, CliError> {
    let spec: QuiverSpec = serde_json::from_str(text).map_err(|e| parse_err(format!("quiver file: {e}")))?;
    spec.build()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    #[serde(default = "one_value")]
    pub coeff: Value,
    /// Arrow labels in composition order: the rightmost is applied first.
    pub path: Vec<String>,
}

fn one_value() -> Value {
    Value::String("1".into())
}

/// Algebra file: either `{"quiver": {...}, "relations": [...]}` or the
/// quiver fields inline next to `"relations"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub quiver: Option<QuiverSpec>,
    #[serde(default)]
    pub vertices: Option<Vec<String>>,
    #[serde(default)]
    pub arrows: Option<Vec<ArrowSpec>>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<BoundAlgebra, CliError> {
        let q = match (&self.quiver, &self.vertices) {
            (Some(q), None) if self.arrows.is_none() => q.build()?,
            (None, Some(v)) => QuiverSpec { vertices: v.clone(), arrows: self.arrows.clone().unwrap_or_default() }.build()?,
            _ => return Err(parse_err("algebra file needs exactly one of `quiver` or inline `vertices`/`arrows`")),
        };
        let mut relations = Vec::with_capacity(self.relations.len());
        for (k, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::with_capacity(rel.len());
            for t in rel {
                let c = rational_value(&t.coeff).map_err(|e| parse_err(format!("relation {k}: {e}")))?;
                let labels: Vec<&str> = t.path.iter().map(String::as_str).collect();
                terms.push((c, labels));
            }
            let borrowed: Vec<(Rat, &[&str])> = terms.iter().map(|(c, l)| (c.clone(), l.as_slice())).collect();
            relations.push(Relation::from_labels(&q, &borrowed).map_err(|e| parse_err(format!("relation {k}: {e}")))?);
        }
        BoundAlgebra::new(q, relations).map_err(|e| parse_err(e.to_string()))
    }
}

pub fn parse_algebra(text: &str) -> Result<BoundAlgebra, CliError> {
    let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| parse_err(format!("algebra file: {e}")))?;
    spec.build()
}

/// Module file: dimensions per vertex name (missing vertices are zero) and a
/// `dim(target) x dim(source)` matrix per arrow label (missing arrows act
/// by zero).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dimvec: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<Value>>>,
}

impl ModuleSpec {
    pub fn build(&self, alg: &Arc<BoundAlgebra>) -> Result<Representation, CliError> {
        let q = alg.quiver();
        let mut dims = vec![0usize; q.vertex_count()];
        for (name, &d) in &self.dimvec {
            let v = q.vertex_index(name).ok_or_else(|| parse_err(format!("module: unknown vertex `{name}`")))?;
            dims[v] = d;
        }
        for label in self.maps.keys() {
            if q.arrow_index(label).is_none() {
                return Err(parse_err(format!("module: unknown arrow `{label}`")));
            }
        }
        let mut maps = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let (rows, cols) = (dims[a.target], dims[a.source]);
            let m = match self.maps.get(&a.label) {
                None => RatMatrix::zeros(rows, cols),
                Some(entries) => {
                    let shape_ok = entries.len() == rows && entries.iter().all(|r| r.len() == cols);
                    if !shape_ok {
                        return Err(parse_err(format!(
                            "module: map `{}` must be {rows}x{cols} (dim of `{}` by dim of `{}`)",
                            a.label,
                            q.vertex_name(a.target),
                            q.vertex_name(a.source)
                        )));
                    }
                    let mut parsed = Vec::with_capacity(rows);
                    for (i, row) in entries.iter().enumerate() {
                        let r = row
                            .iter()
                            .enumerate()
                            .map(|(j, v)| {
                                rational_value(v).map_err(|e| parse_err(format!("module: map `{}` entry ({i}, {j}): {e}", a.label)))
                            })
                            .collect::<Result<Vec<Rat>, CliError>>()?;
                        parsed.push(r);
                    }
                    RatMatrix::from_rows(parsed, cols).map_err(|e| parse_err(e.to_string()))?
                }
            };
            maps.push(m);
        }
        Representation::new(alg.clone(), dims, maps).map_err(|e| parse_err(format!("module: {e}")))
    }
}

pub fn parse_module(text: &str, alg: &Arc<BoundAlgebra>) -> Result<Representation, CliError> {
    let spec: ModuleSpec = serde_json::from_str(text).map_err(|e| parse_err(format!("module file: {e}")))?;
    spec.build(alg)
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering, one edge per arrow.
pub fn quiver_to_dot(q: &Quiver, name: &str) -> String {
    let mut out = format!("digraph {} {{\n", dot_id(name));
    for v in q.vertices() {
        out.push_str(&format!("  {};\n", dot_id(v)));
    }
    for a in q.arrows() {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            dot_id(q.vertex_name(a.source)),
            dot_id(q.vertex_name(a.target)),
            dot_id(&a.label)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fproot_core::exactlin::ratio;

    #[test]
    fn rationals_in_every_spelling() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), ratio(-4, 1));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("1.5e2").unwrap(), ratio(150, 1));
        assert_eq!(parse_rational("2E-1").unwrap(), ratio(1, 5));
        for bad in ["", "x", "1/0", "1/2/3", "--1", "1.2.3", "e5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn matrix_errors_name_the_entry() {
        let e = parse_matrix(r#"[["1", "x/2"], ["0", "1"]]"#).unwrap_err().to_string();
        assert!(e.contains("(0, 1)") && e.contains("x/2"), "{e}");
        assert!(parse_matrix(r#"[["1", "2"]]"#).is_err());
        assert_eq!(parse_matrix("[]").unwrap().n(), 0);
    }

    #[test]
    fn algebra_accepts_both_layouts() {
        let inline = r#"{"vertices": ["1"], "arrows": [{"label": "x", "from": "1", "to": "1"}],
                         "relations": [[{"path": ["x", "x"]}]]}"#;
        let nested = r#"{"quiver": {"vertices": ["1"], "arrows": [{"label": "x", "from": "1", "to": "1"}]},
                         "relations": [[{"coeff": 1, "path": ["x", "x"]}]]}"#;
        assert_eq!(parse_algebra(inline).unwrap().dim(), 2);
        assert_eq!(parse_algebra(nested).unwrap().dim(), 2);
        assert!(parse_algebra(r#"{"vertices": ["1"], "quiver": {"vertices": ["1"]}}"#).is_err());
    }

    #[test]
    fn dot_escapes_quotes() {
        let q = parse_quiver(r#"{"vertices": ["a\"b"], "arrows": []}"#).unwrap();
        assert!(quiver_to_dot(&q, "q").contains(r#""a\"b""#));
    }
}
