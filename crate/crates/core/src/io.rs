//! JSON documents for algebras, linear maps and check reports.
//!
//! Rationals are strings (`"3"`, `"-1/2"`), indices are zero-based, and map
//! matrices are lists of rows with `alpha[r][c]` the coefficient of `e_r` in
//! `alpha(e_c)` (the `"column"` convention).

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::identities::{CheckReport, Classification, Verdict, Violation};
use crate::linear::{LinearMap, MultilinearMap, Rational, Vector};
use crate::structures::{AkivisAlgebra, BiHomAkivisAlgebra, BiHomAlgebra, Structure, MAX_DIM};

pub const CONVENTION: &str = "column";
pub const LINEAR_MAP_KIND: &str = "linear-map";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("invariant violated ({location}): {source}")]
    Invariant { location: String, source: Error },
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema { path: path.into(), message: message.into() }
}

fn invariant(location: &str) -> impl FnOnce(Error) -> IoError + '_ {
    move |source| IoError::Invariant { location: location.to_string(), source }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kind: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    convention: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mu: Option<Vec<RawBinary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bracket: Option<Vec<RawBinary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    triple: Option<Vec<RawTernary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBinary {
    i: usize,
    j: usize,
    coeffs: IndexMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTernary {
    i: usize,
    j: usize,
    k: usize,
    coeffs: IndexMap<String, String>,
}

/// A parsed document: an algebraic structure or a bare linear map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Structure(Structure),
    Map(LinearMap),
}

fn parse_raw(text: &str) -> Result<RawDocument, IoError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_data() {
            schema(if path.is_empty() { "document".to_string() } else { path }, inner.to_string())
        } else {
            IoError::Syntax { line: inner.line(), column: inner.column(), message: inner.to_string() }
        }
    })?;
    de.end().map_err(|e| IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })?;
    Ok(raw)
}

fn parse_rational(path: &str, s: &str) -> Result<Rational, IoError> {
    s.parse().map_err(|e: Error| schema(path, e.to_string()))
}

fn parse_matrix(name: &str, rows: &[Vec<String>], dim: usize) -> Result<LinearMap, IoError> {
    if rows.len() != dim {
        return Err(schema(name, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(schema(format!("{name}[{r}]"), format!("expected {dim} entries, found {}", row.len())));
        }
        let values = row
            .iter()
            .enumerate()
            .map(|(c, s)| parse_rational(&format!("{name}[{r}][{c}]"), s))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(values);
    }
    LinearMap::from_rows(parsed).map_err(invariant(name))
}

fn check_index(path: String, index: usize, dim: usize) -> Result<(), IoError> {
    if index >= dim {
        return Err(schema(path, format!("index {index} out of range for dimension {dim}")));
    }
    Ok(())
}

fn parse_coeffs(
    path: &str,
    coeffs: &IndexMap<String, String>,
    dim: usize,
) -> Result<Vec<(usize, Rational)>, IoError> {
    let mut out = Vec::with_capacity(coeffs.len());
    for (key, value) in coeffs {
        let p = format!("{path}.coeffs.{key}");
        let index: usize = key.parse().map_err(|_| schema(&p, "output index must be a nonnegative integer"))?;
        check_index(p.clone(), index, dim)?;
        out.push((index, parse_rational(&p, value)?));
    }
    Ok(out)
}

fn parse_binary(name: &str, entries: &[RawBinary], dim: usize) -> Result<MultilinearMap, IoError> {
    let mut flat = Vec::new();
    for (n, e) in entries.iter().enumerate() {
        let path = format!("{name}[{n}]");
        check_index(format!("{path}.i"), e.i, dim)?;
        check_index(format!("{path}.j"), e.j, dim)?;
        for (out, c) in parse_coeffs(&path, &e.coeffs, dim)? {
            flat.push((vec![e.i, e.j], out, c));
        }
    }
    MultilinearMap::from_entries(dim, 2, flat).map_err(invariant(name))
}

fn parse_ternary(name: &str, entries: &[RawTernary], dim: usize) -> Result<MultilinearMap, IoError> {
    let mut flat = Vec::new();
    for (n, e) in entries.iter().enumerate() {
        let path = format!("{name}[{n}]");
        check_index(format!("{path}.i"), e.i, dim)?;
        check_index(format!("{path}.j"), e.j, dim)?;
        check_index(format!("{path}.k"), e.k, dim)?;
        for (out, c) in parse_coeffs(&path, &e.coeffs, dim)? {
            flat.push((vec![e.i, e.j, e.k], out, c));
        }
    }
    MultilinearMap::from_entries(dim, 3, flat).map_err(invariant(name))
}

fn require<'a, T>(field: &'a Option<T>, name: &str, kind: &str) -> Result<&'a T, IoError> {
    field.as_ref().ok_or_else(|| schema(name, format!("missing field for kind {kind:?}")))
}

fn forbid<T>(field: &Option<T>, name: &str, kind: &str) -> Result<(), IoError> {
    match field {
        Some(_) => Err(schema(name, format!("field not allowed for kind {kind:?}"))),
        None => Ok(()),
    }
}

/// Parses any document kind, enforcing the schema and structural invariants.
pub fn parse_document(text: &str) -> Result<Document, IoError> {
    let raw = parse_raw(text)?;
    let kind = raw.kind.as_str();
    let dim = raw.dim;
    if dim == 0 {
        return Err(schema("dim", "dimension must be positive"));
    }
    if dim > MAX_DIM {
        return Err(schema("dim", format!("dimension {dim} exceeds the supported maximum {MAX_DIM}")));
    }
    if let Some(c) = &raw.convention {
        if c != CONVENTION {
            return Err(schema("convention", format!("expected {CONVENTION:?}, found {c:?}")));
        }
    }
    if let Some(labels) = &raw.basis {
        if labels.len() != dim {
            return Err(schema("basis", format!("expected {dim} labels, found {}", labels.len())));
        }
    }
    match kind {
        "bihom-algebra" => {
            forbid(&raw.bracket, "bracket", kind)?;
            forbid(&raw.triple, "triple", kind)?;
            forbid(&raw.matrix, "matrix", kind)?;
            let mu = parse_binary("mu", require(&raw.mu, "mu", kind)?, dim)?;
            let alpha = parse_matrix("alpha", require(&raw.alpha, "alpha", kind)?, dim)?;
            let beta = parse_matrix("beta", require(&raw.beta, "beta", kind)?, dim)?;
            let a = BiHomAlgebra::new(mu, alpha, beta).map_err(invariant("alpha, beta"))?;
            Ok(Document::Structure(Structure::BiHom(a)))
        }
        "akivis-algebra" => {
            forbid(&raw.mu, "mu", kind)?;
            forbid(&raw.alpha, "alpha", kind)?;
            forbid(&raw.beta, "beta", kind)?;
            forbid(&raw.matrix, "matrix", kind)?;
            let bracket = parse_binary("bracket", require(&raw.bracket, "bracket", kind)?, dim)?;
            let triple = parse_ternary("triple", require(&raw.triple, "triple", kind)?, dim)?;
            let k = AkivisAlgebra::new(bracket, triple).map_err(invariant("bracket, triple"))?;
            Ok(Document::Structure(Structure::Akivis(k)))
        }
        "bihom-akivis-algebra" => {
            forbid(&raw.mu, "mu", kind)?;
            forbid(&raw.matrix, "matrix", kind)?;
            let bracket = parse_binary("bracket", require(&raw.bracket, "bracket", kind)?, dim)?;
            let triple = parse_ternary("triple", require(&raw.triple, "triple", kind)?, dim)?;
            let alpha = parse_matrix("alpha", require(&raw.alpha, "alpha", kind)?, dim)?;
            let beta = parse_matrix("beta", require(&raw.beta, "beta", kind)?, dim)?;
            let k = BiHomAkivisAlgebra::new(bracket, triple, alpha, beta).map_err(invariant("bracket, alpha, beta"))?;
            Ok(Document::Structure(Structure::BiHomAkivis(k)))
        }
        LINEAR_MAP_KIND => {
            for (field, name) in [(&raw.mu, "mu"), (&raw.bracket, "bracket")] {
                forbid(field, name, kind)?;
            }
            forbid(&raw.triple, "triple", kind)?;
            forbid(&raw.alpha, "alpha", kind)?;
            forbid(&raw.beta, "beta", kind)?;
            let m = parse_matrix("matrix", require(&raw.matrix, "matrix", kind)?, dim)?;
            Ok(Document::Map(m))
        }
        other => Err(schema("kind", format!("unknown kind {other:?}"))),
    }
}

/// Parses a structure document.
pub fn parse_algebra(text: &str) -> Result<Structure, IoError> {
    match parse_document(text)? {
        Document::Structure(s) => Ok(s),
        Document::Map(_) => Err(schema("kind", "expected an algebra, found a linear map")),
    }
}

/// Parses a `linear-map` document.
pub fn parse_linear_map(text: &str) -> Result<LinearMap, IoError> {
    match parse_document(text)? {
        Document::Map(m) => Ok(m),
        Document::Structure(_) => Err(schema("kind", format!("expected {LINEAR_MAP_KIND:?}"))),
    }
}

fn raw_matrix(m: &LinearMap) -> Vec<Vec<String>> {
    m.rows().map(|row| row.iter().map(|c| c.to_string()).collect()).collect()
}

fn raw_coeffs(values: &[(usize, Rational)]) -> IndexMap<String, String> {
    values.iter().map(|(o, c)| (o.to_string(), c.to_string())).collect()
}

fn raw_binary(m: &MultilinearMap) -> Vec<RawBinary> {
    let dim = m.dim();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let values = m.on_basis(&[i, j]);
            if !values.is_empty() {
                out.push(RawBinary { i, j, coeffs: raw_coeffs(values) });
            }
        }
    }
    out
}

fn raw_ternary(m: &MultilinearMap) -> Vec<RawTernary> {
    let dim = m.dim();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let values = m.on_basis(&[i, j, k]);
                if !values.is_empty() {
                    out.push(RawTernary { i, j, k, coeffs: raw_coeffs(values) });
                }
            }
        }
    }
    out
}

fn empty_raw(kind: &str, dim: usize) -> RawDocument {
    RawDocument {
        kind: kind.to_string(),
        dim,
        basis: None,
        convention: Some(CONVENTION.to_string()),
        mu: None,
        bracket: None,
        triple: None,
        alpha: None,
        beta: None,
        matrix: None,
    }
}

fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Canonical JSON for a structure: entries sorted by input tuple, outputs in
/// increasing order, rationals in lowest terms.
pub fn serialize_algebra(structure: &Structure) -> String {
    let mut raw = empty_raw(structure.kind(), structure.dim());
    match structure {
        Structure::BiHom(a) => {
            raw.mu = Some(raw_binary(a.mu()));
            raw.alpha = Some(raw_matrix(a.alpha()));
            raw.beta = Some(raw_matrix(a.beta()));
        }
        Structure::Akivis(k) => {
            raw.bracket = Some(raw_binary(k.bracket()));
            raw.triple = Some(raw_ternary(k.triple()));
        }
        Structure::BiHomAkivis(k) => {
            raw.bracket = Some(raw_binary(k.bracket()));
            raw.triple = Some(raw_ternary(k.triple()));
            raw.alpha = Some(raw_matrix(k.alpha()));
            raw.beta = Some(raw_matrix(k.beta()));
        }
    }
    to_text(&raw)
}

pub fn serialize_linear_map(m: &LinearMap) -> String {
    let mut raw = empty_raw(LINEAR_MAP_KIND, m.dim());
    raw.matrix = Some(raw_matrix(m));
    to_text(&raw)
}

pub fn serialize_document(doc: &Document) -> String {
    match doc {
        Document::Structure(s) => serialize_algebra(s),
        Document::Map(m) => serialize_linear_map(m),
    }
}

#[derive(Serialize)]
struct ReportEntry<'a> {
    id: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    code: Option<&'a str>,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<&'a str>,
}

fn coords(v: &Vector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}

impl<'a> From<&'a CheckReport> for ReportEntry<'a> {
    fn from(r: &'a CheckReport) -> Self {
        let na = r.verdict == Verdict::NotApplicable;
        ReportEntry {
            id: &r.id,
            code: r.code.as_deref(),
            verdict: r.verdict.as_str(),
            witness: r.witness.as_deref(),
            residual: r.residual.as_ref().map(coords),
            reason: if na { Some(r.notes.join("; ")) } else { None },
            notes: if na { Vec::new() } else { r.notes.iter().map(String::as_str).collect() },
        }
    }
}

#[derive(Serialize)]
struct ViolationEntry<'a> {
    rule: &'a str,
    description: &'a str,
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    kind: &'a str,
    dim: usize,
    regular: bool,
    multiplicative: bool,
    flags: IndexMap<&'static str, bool>,
    reports: Vec<ReportEntry<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<Vec<ViolationEntry<'a>>>,
}

/// JSON report for a classification, optionally with audit violations.
/// Field and entry order is fixed, so equal inputs give identical text.
pub fn serialize_report(c: &Classification, violations: Option<&[Violation]>) -> String {
    let doc = ReportDocument {
        kind: &c.kind,
        dim: c.dim,
        regular: c.regular,
        multiplicative: c.multiplicative,
        flags: c.flags.entries().into_iter().collect(),
        reports: c.reports.iter().map(ReportEntry::from).collect(),
        violations: violations
            .map(|vs| vs.iter().map(|v| ViolationEntry { rule: v.rule, description: &v.description }).collect()),
    };
    to_text(&doc)
}

/// Plain-text rendering of the same information as [`serialize_report`].
pub fn render_report_text(c: &Classification, violations: Option<&[Violation]>) -> String {
    let mut out = format!(
        "{} (dim {}), regular: {}, multiplicative: {}\n",
        c.kind,
        c.dim,
        yes_no(c.regular),
        yes_no(c.multiplicative)
    );
    for r in &c.reports {
        let code = r.code.as_deref().unwrap_or("-");
        let mut line = format!("{code:<5} {:<26} {}", r.id, r.verdict);
        if let (Some(w), Some(v)) = (&r.witness, &r.residual) {
            line.push_str(&format!("  witness {w:?} residual {v}"));
        }
        if r.verdict == Verdict::NotApplicable && !r.notes.is_empty() {
            line.push_str(&format!("  ({})", r.notes.join("; ")));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let set: Vec<&str> = c.flags.entries().iter().filter(|(_, v)| *v).map(|(k, _)| *k).collect();
    out.push_str(&format!("properties: {}\n", if set.is_empty() { "none".to_string() } else { set.join(", ") }));
    if let Some(vs) = violations {
        if vs.is_empty() {
            out.push_str("violations: none\n");
        } else {
            out.push_str(&format!("violations: {}\n", vs.len()));
            for v in vs {
                out.push_str(&format!("  {}: {}\n", v.rule, v.description));
            }
        }
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn empty_document_is_syntax_error() {
        assert!(matches!(parse_algebra(""), Err(IoError::Syntax { .. })));
        assert!(matches!(parse_algebra("{\"kind\": "), Err(IoError::Syntax { .. })));
    }

    #[test]
    fn trailing_garbage_is_syntax_error() {
        let text = serialize_linear_map(&LinearMap::identity(2)) + "]";
        assert!(matches!(parse_linear_map(&text), Err(IoError::Syntax { .. })));
    }

    #[test]
    fn unknown_field_is_schema_error() {
        let text = r#"{"kind": "linear-map", "dim": 1, "matrix": [["1"]], "extra": 1}"#;
        assert!(matches!(parse_linear_map(text), Err(IoError::Schema { .. })));
    }

    #[test]
    fn missing_field_is_schema_error() {
        let text = r#"{"kind": "bihom-algebra", "dim": 1, "mu": [], "alpha": [["1"]]}"#;
        match parse_algebra(text) {
            Err(IoError::Schema { path, .. }) => assert_eq!(path, "beta"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_rational_reports_path() {
        let text = r#"{"kind": "linear-map", "dim": 2, "matrix": [["1", "0"], ["x", "1"]]}"#;
        match parse_linear_map(text) {
            Err(IoError::Schema { path, .. }) => assert_eq!(path, "matrix[1][0]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn out_of_range_output_index() {
        let text = r#"{"kind": "bihom-algebra", "dim": 1, "mu": [{"i": 0, "j": 0, "coeffs": {"1": "1"}}],
            "alpha": [["1"]], "beta": [["1"]]}"#;
        match parse_algebra(text) {
            Err(IoError::Schema { path, .. }) => assert_eq!(path, "mu[0].coeffs.1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_commuting_maps_are_invariant_errors() {
        let text = r#"{"kind": "bihom-algebra", "dim": 2, "mu": [],
            "alpha": [["0", "1"], ["1", "0"]], "beta": [["1", "0"], ["0", "2"]]}"#;
        match parse_algebra(text) {
            Err(IoError::Invariant { location, source }) => {
                assert!(location.contains("alpha") && location.contains("beta"));
                assert!(matches!(source, Error::NonCommuting(_, _)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_canonical_rationals_are_normalized() {
        let text = r#"{"kind": "linear-map", "dim": 1, "matrix": [["4/-8"]]}"#;
        let m = parse_linear_map(text).unwrap();
        assert_eq!(m.get(0, 0), &Rational::frac(-1, 2));
    }

    #[test]
    fn ex1_round_trips() {
        let s = Structure::BiHom(catalog::make_ex1(&Rational::int(1)).unwrap());
        let text = serialize_algebra(&s);
        assert_eq!(parse_algebra(&text).unwrap(), s);
        assert_eq!(serialize_algebra(&parse_algebra(&text).unwrap()), text);
        assert!(text.contains("\"convention\": \"column\""));
    }

    #[test]
    fn basis_labels_are_accepted() {
        let text = r#"{"kind": "linear-map", "dim": 2, "basis": ["a", "b"], "matrix": [["1", "0"], ["0", "1"]]}"#;
        assert!(parse_linear_map(text).unwrap().is_identity());
        let bad = r#"{"kind": "linear-map", "dim": 2, "basis": ["a"], "matrix": [["1", "0"], ["0", "1"]]}"#;
        assert!(matches!(parse_linear_map(bad), Err(IoError::Schema { .. })));
    }
}
