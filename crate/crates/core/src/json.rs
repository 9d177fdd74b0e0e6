//! JSON forms of matrices, polynomials, frontiers and reports.
//!
//! Vector and matrix entries are JSON numbers when they fit in `i64` and
//! decimal strings otherwise; determinants, group orders and polynomial
//! coefficients are always strings. Readers accept either form anywhere.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::arith_enum::{ArithStructure, EnumReport};
use crate::classify::ZClassification;
use crate::error::{Error, Result};
use crate::exactmat::IntMatrix;
use crate::frontier::{Frontier, IntVec};
use crate::graphs::{ConjectureReport, GraphSpec};
use crate::poly_enum::{LiftReport, PolyEnumReport, ReducibleReport};
use crate::polyring::{Monomial, Parsed, SqFreePoly};
use crate::solutions::SolutionSet;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

pub fn int_str(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn read_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| bad(format!("not an integer: {n}"))),
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("not an integer: {s:?}"))),
        other => Err(bad(format!("expected integer, got {other}"))),
    }
}

pub fn read_vec(v: &Value) -> Result<IntVec> {
    v.as_array().ok_or_else(|| bad("expected array"))?.iter().map(read_int).collect()
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    json!({ "n": m.n(), "rows": m.rows().map(vec).collect::<Vec<_>>() })
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let rows = field(v, "rows")?.as_array().ok_or_else(|| bad("`rows` must be an array"))?;
    let rows = rows.iter().map(read_vec).collect::<Result<Vec<_>>>()?;
    if let Some(n) = v.get("n") {
        let n = n.as_u64().ok_or_else(|| bad("`n` must be a positive integer"))? as usize;
        if n != rows.len() {
            return Err(Error::DimensionMismatch { expected: n, got: rows.len() });
        }
    }
    IntMatrix::from_rows(rows)
}

pub fn poly_to_json(vars: &[String], p: &SqFreePoly) -> Value {
    let terms: Vec<Value> =
        p.terms().map(|(m, c)| json!({ "m": m.vars().collect::<Vec<_>>(), "c": int_str(c) })).collect();
    json!({ "vars": vars, "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<Parsed<SqFreePoly>> {
    let vars: Vec<String> = field(v, "vars")?
        .as_array()
        .ok_or_else(|| bad("`vars` must be an array"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("variable names must be strings")))
        .collect::<Result<_>>()?;
    let terms = field(v, "terms")?.as_array().ok_or_else(|| bad("`terms` must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let idx: Vec<usize> = field(t, "m")?
            .as_array()
            .ok_or_else(|| bad("`m` must be an array"))?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| bad("monomial indices must be integers")))
            .collect::<Result<_>>()?;
        if let Some(&i) = idx.iter().find(|&&i| i >= vars.len()) {
            return Err(Error::IndexOutOfRange { index: i, size: vars.len() });
        }
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != idx.len() {
            return Err(Error::NotSquareFree(vars[idx[0]].clone()));
        }
        out.push((Monomial::from_vars(&idx), read_int(field(t, "c")?)?));
    }
    Ok(Parsed { poly: SqFreePoly::from_terms(vars.len(), out)?, vars })
}

pub fn frontier_to_json(f: &Frontier) -> Value {
    Value::Array(f.iter().map(|d| vec(d)).collect())
}

pub fn frontier_from_json(dim: usize, v: &Value) -> Result<Frontier> {
    let vs = v.as_array().ok_or_else(|| bad("frontier must be an array"))?.iter().map(read_vec).collect::<Result<Vec<_>>>()?;
    Frontier::from_vectors(dim, vs)
}

pub fn structure_to_json(s: &ArithStructure) -> Value {
    json!({ "d": vec(&s.d), "r": vec(s.r.as_slice()), "k": int_str(&s.k) })
}

pub fn enum_report_to_json(r: &EnumReport) -> Value {
    json!({
        "frontier": frontier_to_json(&r.frontier),
        "structures": r.structures().iter().map(structure_to_json).collect::<Vec<_>>(),
        "outcome": r.outcome.name(),
    })
}

/// Decoded form of [`enum_report_to_json`]: `(frontier, [(d, r, k)], outcome)`.
pub type EnumReportData = (Frontier, Vec<(IntVec, IntVec, BigInt)>, String);

pub fn enum_report_from_json(dim: usize, v: &Value) -> Result<EnumReportData> {
    let frontier = frontier_from_json(dim, field(v, "frontier")?)?;
    let structures = field(v, "structures")?
        .as_array()
        .ok_or_else(|| bad("`structures` must be an array"))?
        .iter()
        .map(|s| Ok((read_vec(field(s, "d")?)?, read_vec(field(s, "r")?)?, read_int(field(s, "k")?)?)))
        .collect::<Result<Vec<_>>>()?;
    let outcome = field(v, "outcome")?.as_str().ok_or_else(|| bad("`outcome` must be a string"))?.to_string();
    Ok((frontier, structures, outcome))
}

fn reducible_to_json(vars: &[String], r: &ReducibleReport) -> Value {
    let factors: Vec<Value> = r
        .factors
        .iter()
        .map(|f| {
            let names: Vec<String> = f.vars.iter().map(|&i| vars[i].clone()).collect();
            json!({
                "vars": f.vars,
                "poly": f.poly.display_with(Some(&names)),
                "frontier": frontier_to_json(&f.frontier),
                "zeros": f.zeros.iter().map(|d| vec(d)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "infinite": r.infinite,
        "rule": "one factor takes one of its zeros; every other factor takes any point of its own D>=0",
        "factors": factors,
        "witnesses": r.witnesses.iter().map(|d| vec(d)).collect::<Vec<_>>(),
    })
}

pub fn poly_report_to_json(vars: &[String], r: &PolyEnumReport) -> Value {
    let mut obj = Map::new();
    obj.insert("vars".into(), json!(vars));
    obj.insert("frontier".into(), frontier_to_json(&r.frontier));
    obj.insert(
        "structures".into(),
        Value::Array(r.structures.iter().map(|s| json!({ "d": vec(&s.d), "k": int_str(&s.k) })).collect()),
    );
    let outcome = if r.reducible.is_some() { "infinite" } else { "finite" };
    obj.insert("outcome".into(), json!(outcome));
    if let Some(red) = &r.reducible {
        obj.insert("reducible".into(), reducible_to_json(vars, red));
    }
    Value::Object(obj)
}

pub fn lift_report_to_json(vars: &[String], r: &LiftReport) -> Value {
    json!({
        "vars": vars,
        "surrogate": r.surrogate.to_string(),
        "copies": r.copies,
        "frontier": frontier_to_json(&r.frontier),
        "structures": r.structures.iter().map(|d| vec(d)).collect::<Vec<_>>(),
    })
}

pub fn classification_to_json(c: &ZClassification) -> Value {
    json!({
        "is_z": c.is_z,
        "det": int_str(&c.det),
        "all_minors_nonneg": c.all_minors_nonneg,
        "all_minors_pos": c.all_minors_pos,
        "proper_pos_det_nonneg": c.proper_pos_det_nonneg,
        "proper_nonneg": c.proper_nonneg,
        "proper_pos": c.proper_pos,
        "class": c.label(),
    })
}

pub fn classification_from_json(v: &Value) -> Result<ZClassification> {
    let flag = |k: &str| field(v, k)?.as_bool().ok_or_else(|| bad(format!("`{k}` must be a boolean")));
    Ok(ZClassification {
        is_z: flag("is_z")?,
        det: read_int(field(v, "det")?)?,
        all_minors_nonneg: flag("all_minors_nonneg")?,
        all_minors_pos: flag("all_minors_pos")?,
        proper_pos_det_nonneg: flag("proper_pos_det_nonneg")?,
        proper_nonneg: flag("proper_nonneg")?,
        proper_pos: flag("proper_pos")?,
    })
}

pub fn solutions_to_json(s: &SolutionSet) -> Value {
    let mut obj = Map::new();
    obj.insert("solutions".into(), Value::Array(s.solutions.iter().map(|d| vec(d)).collect()));
    if let Some(k) = &s.kernels {
        obj.insert("kernels".into(), Value::Array(k.iter().map(|r| vec(r.as_slice())).collect()));
    }
    obj.insert("complete".into(), json!(s.complete));
    obj.insert("region".into(), json!(s.region));
    Value::Object(obj)
}

pub fn graph_to_json(g: &GraphSpec) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(g.n));
    obj.insert("directed".into(), json!(g.directed));
    obj.insert("edges".into(), json!(g.edges));
    if let Some(w) = &g.weights {
        obj.insert("weights".into(), vec(w));
    }
    Value::Object(obj)
}

pub fn conjecture_to_json(r: &ConjectureReport) -> Value {
    json!({
        "n": r.n,
        "rows": r.rows.iter().map(|row| json!({
            "code": row.code,
            "name": row.name,
            "edges": row.graph.edges,
            "count": row.count,
            "max_entry": int(&row.max_entry),
        })).collect::<Vec<_>>(),
        "path_is_min": r.path_is_min,
        "complete_is_max": r.complete_is_max,
    })
}
