//! JSON interchange for forms, decompositions, ideals, algebras and tensors.
//!
//! Every document carries `"schema": 1` and a `"kind"` tag. Rationals are strings `p` or `p/q`.
//! `serde_json` keeps object keys sorted, so output is deterministic.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::{FiniteAlgebra, Tensor};
use crate::borderdec::{BorderDecomposition, Summand};
use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::linalg::{format_scalar, parse_scalar, Scalar, UniPoly};
use crate::poly::{parse_dual, Form, VariableSet};

pub const SCHEMA: u64 = 1;

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("`{key}` must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    field(v, key)?.as_array().ok_or_else(|| bad(format!("`{key}` must be an array")))
}

fn scalar_of(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_integer(BigInt::from(n.as_i64().expect("checked")))),
        _ => Err(bad(format!("expected a rational, got {v}"))),
    }
}

fn index_of(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("expected an index, got {v}")))
}

fn variables_of(v: &Value) -> Result<VariableSet> {
    serde_json::from_value(field(v, "variables")?.clone()).map_err(|e| bad(format!("bad variables: {e}")))
}

/// Parses a document and checks the schema and kind.
pub fn parse_document(text: &str, kind: &str) -> Result<Value> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    check_header(&v, kind)?;
    Ok(v)
}

fn check_header(v: &Value, kind: &str) -> Result<()> {
    if field(v, "schema")?.as_u64() != Some(SCHEMA) {
        return Err(bad(format!("unsupported schema {}", v["schema"])));
    }
    match field(v, "kind")?.as_str() {
        Some(k) if k == kind => Ok(()),
        other => Err(bad(format!("expected kind `{kind}`, found {other:?}"))),
    }
}

/// Kind tag of a document without further checks.
pub fn document_kind(text: &str) -> Result<String> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    field(&v, "kind")?.as_str().map(str::to_string).ok_or_else(|| bad("`kind` must be a string"))
}

pub fn form_to_json(f: &Form) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "form",
        "variables": f.vars(),
        "degree": f.degree(),
        "text": f.to_string(),
    })
}

pub fn form_from_json(v: &Value) -> Result<Form> {
    check_header(v, "form")?;
    let text = field(v, "text")?.as_str().ok_or_else(|| bad("`text` must be a string"))?;
    Form::parse_with(text, &variables_of(v)?)
}

pub fn decomposition_to_json(dec: &BorderDecomposition, vars: &VariableSet) -> Value {
    let summands: Vec<Value> = dec
        .summands
        .iter()
        .map(|s| {
            json!({
                "weight": format_scalar(&s.weight),
                "coeffs": s.coeffs.iter().map(|c| c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "kind": "border_decomposition",
        "variables": vars,
        "nvars": dec.nvars,
        "degree": dec.degree,
        "shift": dec.shift,
        "summands": summands,
        "display": dec.describe(vars),
    })
}

pub fn decomposition_from_json(v: &Value) -> Result<BorderDecomposition> {
    check_header(v, "border_decomposition")?;
    let nvars = as_usize(v, "nvars")?;
    let degree = as_usize(v, "degree")? as u32;
    let shift = as_usize(v, "shift")? as u32;
    let mut summands = Vec::new();
    for s in as_array(v, "summands")? {
        let weight = scalar_of(field(s, "weight")?)?;
        let coeffs = as_array(s, "coeffs")?
            .iter()
            .map(|c| {
                let cs = c.as_array().ok_or_else(|| bad("coefficient series must be arrays"))?;
                let ints = cs
                    .iter()
                    .map(|x| match x {
                        Value::String(t) => t.parse::<BigInt>().map_err(|_| bad(format!("not an integer: {t}"))),
                        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().expect("checked"))),
                        _ => Err(bad(format!("not an integer: {x}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(UniPoly::from_coeffs(ints))
            })
            .collect::<Result<Vec<_>>>()?;
        summands.push(Summand { weight, coeffs });
    }
    BorderDecomposition::new(nvars, degree, shift, summands)
}

pub fn ideal_to_json(ideal: &GradedIdeal, vars: &VariableSet) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "ideal",
        "variables": vars,
        "nvars": ideal.nvars(),
        "generators": ideal.generators().iter().map(|g| g.display_with(vars)).collect::<Vec<_>>(),
    })
}

pub fn ideal_from_json(v: &Value) -> Result<GradedIdeal> {
    check_header(v, "ideal")?;
    let vars = variables_of(v)?;
    let nvars = as_usize(v, "nvars")?;
    if nvars != vars.count() {
        return Err(bad("`nvars` disagrees with `variables`"));
    }
    let gens = as_array(v, "generators")?
        .iter()
        .map(|g| parse_dual(g.as_str().ok_or_else(|| bad("generators must be strings"))?, &vars))
        .collect::<Result<Vec<_>>>()?;
    GradedIdeal::new(nvars, gens)
}

/// Nonzero constants `c^k_ij` listed as `[i, j, k, "c"]` with `i ≤ j`.
pub fn algebra_to_json(a: &FiniteAlgebra) -> Value {
    let constants: Vec<Value> = a.constants().into_iter().map(|(i, j, k, c)| json!([i, j, k, format_scalar(&c)])).collect();
    json!({
        "schema": SCHEMA,
        "kind": "algebra",
        "dimension": a.dim(),
        "labels": a.labels(),
        "constants": constants,
    })
}

pub fn algebra_from_json(v: &Value) -> Result<FiniteAlgebra> {
    check_header(v, "algebra")?;
    let dim = as_usize(v, "dimension")?;
    let labels: Vec<String> = match v.get("labels") {
        Some(l) => serde_json::from_value(l.clone()).map_err(|e| bad(format!("bad labels: {e}")))?,
        None => (0..dim).map(|i| if i == 0 { "1".to_string() } else { format!("a{i}") }).collect(),
    };
    if labels.len() != dim {
        return Err(bad(format!("{} labels for dimension {dim}", labels.len())));
    }
    let mut constants = Vec::new();
    for c in as_array(v, "constants")? {
        let parts = c.as_array().filter(|p| p.len() == 4).ok_or_else(|| bad("constants are [i, j, k, c]"))?;
        let (i, j, k) = (index_of(&parts[0])?, index_of(&parts[1])?, index_of(&parts[2])?);
        if i > j {
            return Err(bad(format!("constant ({i}, {j}, {k}) must have i <= j")));
        }
        constants.push((i, j, k, scalar_of(&parts[3])?));
    }
    FiniteAlgebra::from_constants(labels, &constants)
}

/// Nonzero entries listed as `[i_1, …, i_d, "c"]`.
pub fn tensor_to_json(t: &Tensor) -> Value {
    let entries: Vec<Value> = t
        .indices()
        .filter_map(|idx| {
            let c = t.get(&idx);
            (!num_traits::Zero::is_zero(c)).then(|| {
                let mut row: Vec<Value> = idx.iter().map(|&i| json!(i)).collect();
                row.push(json!(format_scalar(c)));
                Value::Array(row)
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "kind": "tensor",
        "ways": t.ways(),
        "dimension": t.dim(),
        "entries": entries,
    })
}

pub fn tensor_from_json(v: &Value) -> Result<Tensor> {
    check_header(v, "tensor")?;
    let ways = as_usize(v, "ways")?;
    let dim = as_usize(v, "dimension")?;
    let mut t = Tensor::zeros(ways, dim);
    for e in as_array(v, "entries")? {
        let parts = e.as_array().filter(|p| p.len() == ways + 1).ok_or_else(|| bad(format!("entries need {ways} indices and a value")))?;
        let idx = parts[..ways].iter().map(index_of).collect::<Result<Vec<_>>>()?;
        if idx.iter().any(|&i| i >= dim) {
            return Err(bad(format!("index {idx:?} out of range")));
        }
        t.set(&idx, scalar_of(&parts[ways])?);
    }
    Ok(t)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
