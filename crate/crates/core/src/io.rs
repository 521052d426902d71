//! JSON formats for groups, representations, edge sets, matrices and the
//! exported results. Rationals are written as `[num, den]` pairs.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::dirac::Spectrum;
use crate::finset::{EdgeCalculus, FinsetError};
use crate::group::{BuildOptions, GroupError, GroupTable, Representation, DEFAULT_ORDER_BOUND};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};
use crate::riemannian::AffineModuli;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Finset(#[from] FinsetError),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    permutation_generators: Option<Vec<Vec<usize>>>,
    degree: Option<usize>,
    generator_names: Option<Vec<String>>,
    multiplication_table: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
    order_bound: Option<usize>,
}

/// Reads `{"permutation_generators": [...], "degree": n}` (optionally with
/// `"generator_names"`) or `{"multiplication_table": [[...]]}` (optionally
/// with `"labels"`).
pub fn parse_group(text: &str) -> Result<GroupTable, IoError> {
    let file: GroupFile = serde_json::from_str(text)?;
    let bound = file.order_bound.unwrap_or(DEFAULT_ORDER_BOUND);
    match (file.permutation_generators, file.multiplication_table) {
        (Some(gens), None) => {
            let degree = file
                .degree
                .or_else(|| gens.first().map(Vec::len))
                .ok_or_else(|| IoError::Format("\"degree\" is required without generators".into()))?;
            if let Some(names) = &file.generator_names {
                if names.len() != gens.len() {
                    return Err(IoError::Format(format!(
                        "{} generator names for {} generators",
                        names.len(),
                        gens.len()
                    )));
                }
            }
            let options = BuildOptions {
                order_bound: bound,
                generator_names: file.generator_names,
            };
            Ok(GroupTable::from_permutations(degree, &gens, &options)?)
        }
        (None, Some(table)) => Ok(GroupTable::from_table(&table, file.labels, bound)?),
        _ => Err(IoError::Format(
            "expected exactly one of \"permutation_generators\" or \"multiplication_table\"".into(),
        )),
    }
}

/// Reads a matrix given as rows of integers, `[num, den]` pairs or `"n/d"`
/// strings.
pub fn parse_matrix(v: &Value) -> Result<Matrix, IoError> {
    let rows = v
        .as_array()
        .ok_or_else(|| IoError::Format("matrix must be an array of rows".into()))?;
    let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let entries = row
            .as_array()
            .filter(|r| r.len() == cols)
            .ok_or_else(|| IoError::Format("matrix rows must be arrays of equal length".into()))?;
        let parsed: Option<Vec<Rational>> = entries.iter().map(rational::from_json).collect();
        out.push(parsed.ok_or_else(|| IoError::Format(format!("bad matrix entry in {row}")))?);
    }
    Ok(Matrix::from_rows(out, cols))
}

/// Matrices keyed by element label, as in `{"u": [[...]], "v": [[...]]}`.
pub fn parse_labelled_matrices(
    group: &GroupTable,
    v: &Value,
) -> Result<Vec<(usize, Matrix)>, IoError> {
    let map = v
        .as_object()
        .ok_or_else(|| IoError::Format("expected an object keyed by element labels".into()))?;
    map.iter()
        .map(|(label, m)| Ok((group.element(label)?, parse_matrix(m)?)))
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    dim: usize,
    generators: Value,
}

/// Reads `{"dim": d, "generators": {"<label>": matrix}}`.
pub fn parse_representation(group: Arc<GroupTable>, text: &str) -> Result<Representation, IoError> {
    let file: RepFile = serde_json::from_str(text)?;
    let gens = parse_labelled_matrices(&group, &file.generators)?;
    Ok(Representation::new(group, file.dim, &gens)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    points: usize,
    edges: Vec<(usize, usize)>,
}

/// Reads `{"points": n, "edges": [[x, y], ...]}`.
pub fn parse_edge_set(text: &str) -> Result<EdgeCalculus, IoError> {
    let file: EdgeFile = serde_json::from_str(text)?;
    Ok(EdgeCalculus::new(file.points, &file.edges)?)
}

/// Reads `{"gammas": {"<label>": matrix}}` and returns the matrices in the
/// order of `members`.
pub fn parse_gammas(group: &GroupTable, members: &[usize], text: &str) -> Result<Vec<Matrix>, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let gammas = v
        .get("gammas")
        .ok_or_else(|| IoError::Format("missing \"gammas\"".into()))?;
    let parsed: BTreeMap<usize, Matrix> = parse_labelled_matrices(group, gammas)?.into_iter().collect();
    members
        .iter()
        .map(|m| {
            parsed
                .get(m)
                .cloned()
                .ok_or_else(|| IoError::Format(format!("no gamma matrix for {}", group.label(*m))))
        })
        .collect()
}

pub fn rationals_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(rational::to_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| rationals_json(m.row(r))).collect())
}

/// `{"basis": labels, "coefficients": [[num, den], ...]}`.
pub fn tensor_json(labels: &[String], coefficients: &[Rational]) -> Value {
    json!({ "basis": labels, "coefficients": rationals_json(coefficients) })
}

/// A moduli space with its unknowns labelled by `labels`: the dimension, a
/// base point and spanning directions, each as a labelled tensor.
pub fn moduli_json(moduli: &AffineModuli, labels: &[String]) -> Value {
    let mut obj = Map::new();
    obj.insert("ambient_dim".into(), json!(moduli.ambient_dim()));
    obj.insert("dimension".into(), json!(moduli.dimension()));
    obj.insert(
        "base".into(),
        moduli.base().map_or(Value::Null, |b| tensor_json(labels, b)),
    );
    obj.insert(
        "directions".into(),
        Value::Array(moduli.basis().iter().map(|d| tensor_json(labels, d)).collect()),
    );
    Value::Object(obj)
}

/// `{"char_poly": [...], "roots": [{"value": "...", "multiplicity": k}]}`
/// with integer coefficients in descending degree.
pub fn spectrum_json(s: &Spectrum) -> Value {
    let coeffs: Vec<Value> = s
        .integer_coeffs
        .iter()
        .rev()
        .map(|c| Value::String(c.to_string()))
        .collect();
    let roots: Vec<Value> = s
        .roots
        .iter()
        .map(|r| json!({ "value": s.format_root(r), "multiplicity": r.multiplicity }))
        .collect();
    json!({ "char_poly": coeffs, "roots": roots })
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn permutation_group_file() {
        let g = parse_group(
            r#"{"permutation_generators": [[1,0,2],[0,2,1]], "degree": 3, "generator_names": ["u","v"]}"#,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(5), "uvu");
    }

    #[test]
    fn table_group_file() {
        let g = parse_group(r#"{"multiplication_table": [[1,0],[0,1]], "labels": ["g","e"]}"#).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.label(0), "e");
        assert!(parse_group(r#"{"degree": 3}"#).is_err());
        assert!(parse_group(r#"{"multiplication_table": [[0,1],[0,1]]}"#).is_err());
    }

    #[test]
    fn matrices_accept_mixed_entries() {
        let m = parse_matrix(&json!([[1, [1, 2]], ["-3/4", 0]])).unwrap();
        assert_eq!(m[(0, 1)], ratio(1, 2));
        assert_eq!(m[(1, 0)], ratio(-3, 4));
        assert_eq!(matrix_json(&m), json!([[[1, 1], [1, 2]], [[-3, 4], [0, 1]]]));
        assert!(parse_matrix(&json!([[1, 2], [3]])).is_err());
    }

    #[test]
    fn representation_and_edges() {
        let g = Arc::new(parse_group(r#"{"permutation_generators": [[1,0]], "degree": 2}"#).unwrap());
        let label = g.label(1).to_string();
        let text = format!(r#"{{"dim": 1, "generators": {{"{label}": [[-1]]}}}}"#);
        let rho = parse_representation(g, &text).unwrap();
        assert_eq!(rho.matrix(1)[(0, 0)], int(-1));
        let e = parse_edge_set(r#"{"points": 2, "edges": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(e.edges().len(), 2);
        assert!(parse_edge_set(r#"{"points": 2, "edges": [[0,0]]}"#).is_err());
    }
}
