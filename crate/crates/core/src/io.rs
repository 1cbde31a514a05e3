//! JSON formats for matroids, set systems, bipartite graphs and monomials.
//!
//! Matroid specs are objects tagged by `type`:
//!
//! ```json
//! {"type":"bases","ground":["1","2","3"],"bases":[["1","2"],["1","3"]]}
//! {"type":"uniform","k":2,"ground":["a","b","c"]}
//! {"type":"graphic","vertices":["u","v"],"edges":[["u","v","1"]]}
//! {"type":"hyperplane","ground":[1,2,3],"support":[1,2]}
//! {"type":"dual","of":{...}}
//! {"type":"sum","of":[{...},{...}]}
//! {"type":"relabel","of":{...},"map":{"1":"x"}}
//! ```
//!
//! Labels may be written as strings or integers. `ground` may also be a
//! number `n`, meaning the labels `1..=n`.

use std::collections::HashMap;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::chow::SimplicialMonomial;
use crate::error::Error;
use crate::ground::{GroundSet, Subset};
use crate::matroid::Matroid;
use crate::rado::{BipartiteGraph, SetSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    JsonSyntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown matroid type `{0}`")]
    UnknownType(String),
    #[error("malformed spec: {0}")]
    Malformed(String),
    #[error("validation failed: {0}")]
    ValidationFailed(#[from] Error),
}

pub type SpecResult<T> = std::result::Result<T, SpecError>;

fn malformed<T>(msg: impl Into<String>) -> SpecResult<T> {
    Err(SpecError::Malformed(msg.into()))
}

pub fn parse_json(text: &str) -> SpecResult<Value> {
    serde_json::from_str(text).map_err(|e| SpecError::JsonSyntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn label(v: &Value) -> SpecResult<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => malformed(format!("expected a label, found {other}")),
    }
}

fn labels(v: &Value) -> SpecResult<Vec<String>> {
    match v {
        Value::Array(items) => items.iter().map(label).collect(),
        other => malformed(format!("expected a list of labels, found {other}")),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> SpecResult<&'a Value> {
    obj.get(key)
        .ok_or_else(|| SpecError::Malformed(format!("missing field `{key}`")))
}

fn ground(v: &Value) -> SpecResult<GroundSet> {
    match v {
        Value::Number(n) => {
            let n = n
                .as_u64()
                .ok_or_else(|| SpecError::Malformed("ground size must be a count".into()))?;
            Ok(GroundSet::numbered(n as usize)?)
        }
        _ => Ok(GroundSet::new(labels(v)?)?),
    }
}

fn as_object(v: &Value) -> SpecResult<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| SpecError::Malformed(format!("expected an object, found {v}")))
}

pub fn parse_matroid(text: &str) -> SpecResult<Matroid> {
    matroid_from_value(&parse_json(text)?)
}

pub fn matroid_from_value(v: &Value) -> SpecResult<Matroid> {
    let obj = as_object(v)?;
    let kind = field(obj, "type")?
        .as_str()
        .ok_or_else(|| SpecError::Malformed("`type` must be a string".into()))?;
    match kind {
        "bases" => {
            let g = ground(field(obj, "ground")?)?;
            let Value::Array(items) = field(obj, "bases")? else {
                return malformed("`bases` must be a list of label lists");
            };
            let bases = items
                .iter()
                .map(|b| Ok(g.subset(labels(b)?)?))
                .collect::<SpecResult<Vec<_>>>()?;
            Ok(Matroid::from_bases(g, bases)?)
        }
        "uniform" => {
            let k = field(obj, "k")?
                .as_u64()
                .ok_or_else(|| SpecError::Malformed("`k` must be a non-negative integer".into()))?;
            Ok(Matroid::uniform(
                k as usize,
                ground(field(obj, "ground")?)?,
            )?)
        }
        "graphic" => {
            let vertices = labels(field(obj, "vertices")?)?;
            let Value::Array(items) = field(obj, "edges")? else {
                return malformed("`edges` must be a list of [u, v, label] triples");
            };
            let edges = items
                .iter()
                .map(|e| match labels(e)?.as_slice() {
                    [u, v, l] => Ok((u.clone(), v.clone(), l.clone())),
                    _ => malformed("each edge must be a [u, v, label] triple"),
                })
                .collect::<SpecResult<Vec<_>>>()?;
            Ok(Matroid::graphic(&vertices, &edges)?)
        }
        "hyperplane" => {
            let g = ground(field(obj, "ground")?)?;
            let support = g.subset(labels(field(obj, "support")?)?)?;
            Ok(Matroid::hyperplane(g, support)?)
        }
        "dual" => Ok(matroid_from_value(field(obj, "of")?)?.dual()),
        "sum" => {
            let Value::Array(items) = field(obj, "of")? else {
                return malformed("`of` must be a list of matroid specs");
            };
            let mut parts = items.iter().map(matroid_from_value);
            let Some(first) = parts.next() else {
                return malformed("a sum needs at least one summand");
            };
            parts.try_fold(first?, |acc, m| Ok(acc.direct_sum(&m?)?))
        }
        "relabel" => {
            let inner = matroid_from_value(field(obj, "of")?)?;
            let map = as_object(field(obj, "map")?)?
                .iter()
                .map(|(k, v)| Ok((k.clone(), label(v)?)))
                .collect::<SpecResult<HashMap<_, _>>>()?;
            Ok(inner.relabel(&map)?)
        }
        other => Err(SpecError::UnknownType(other.to_string())),
    }
}

fn json_labels(labels: &[String]) -> String {
    serde_json::to_string(labels).expect("string lists serialize")
}

/// Canonical `bases` form, one line, no trailing newline.
pub fn render_matroid(m: &Matroid) -> String {
    let bases: Vec<String> = m
        .bases()
        .iter()
        .map(|&b| json_labels(&m.ground().labels_of(b)))
        .collect();
    format!(
        "{{\"type\":\"bases\",\"ground\":{},\"bases\":[{}]}}",
        json_labels(m.ground().labels()),
        bases.join(",")
    )
}

pub fn matroid_to_value(m: &Matroid) -> Value {
    parse_json(&render_matroid(m)).expect("rendered matroids are valid JSON")
}

/// Parses a set system over `ground`. Accepts `{"members": [...]}` (with an
/// optional `ground` that must match) or a bare list of member lists.
pub fn parse_system(text: &str, ground: &GroundSet) -> SpecResult<SetSystem> {
    system_from_value(&parse_json(text)?, ground)
}

pub fn system_from_value(v: &Value, g: &GroundSet) -> SpecResult<SetSystem> {
    let members = match v {
        Value::Array(_) => v,
        Value::Object(obj) => {
            if let Some(gv) = obj.get("ground") {
                if ground(gv)?.labels() != g.labels() {
                    return Err(Error::GroundSetMismatch.into());
                }
            }
            field(obj, "members")?
        }
        other => return malformed(format!("expected a set system, found {other}")),
    };
    let Value::Array(items) = members else {
        return malformed("`members` must be a list of label lists");
    };
    let sets = items
        .iter()
        .map(|m| Ok(g.subset(labels(m)?)?))
        .collect::<SpecResult<Vec<_>>>()?;
    Ok(SetSystem::new(g.clone(), sets)?)
}

/// Parses `{"ground": ..., "members": [...]}`, taking the ground set from
/// the spec itself.
pub fn parse_standalone_system(text: &str) -> SpecResult<SetSystem> {
    let v = parse_json(text)?;
    let g = ground(field(as_object(&v)?, "ground")?)?;
    system_from_value(&v, &g)
}

/// Parses a list of labels as a subset of `g`.
pub fn parse_subset(text: &str, g: &GroundSet) -> SpecResult<Subset> {
    Ok(g.subset(labels(&parse_json(text)?)?)?)
}

pub fn render_system(s: &SetSystem) -> String {
    let members: Vec<String> = s
        .members()
        .iter()
        .map(|&m| json_labels(&s.ground().labels_of(m)))
        .collect();
    format!(
        "{{\"ground\":{},\"members\":[{}]}}",
        json_labels(s.ground().labels()),
        members.join(",")
    )
}

/// Parses `{"left": [...], "right": [...], "edges": [[l, r], ...]}`.
pub fn parse_graph(text: &str) -> SpecResult<BipartiteGraph> {
    let v = parse_json(text)?;
    let obj = as_object(&v)?;
    let left = labels(field(obj, "left")?)?;
    let right = labels(field(obj, "right")?)?;
    let Value::Array(items) = field(obj, "edges")? else {
        return malformed("`edges` must be a list of [left, right] pairs");
    };
    let edges = items
        .iter()
        .map(|e| match labels(e)?.as_slice() {
            [l, r] => Ok((l.clone(), r.clone())),
            _ => malformed("each edge must be a [left, right] pair"),
        })
        .collect::<SpecResult<Vec<_>>>()?;
    Ok(BipartiteGraph::new(left, right, &edges)?)
}

/// Parses `[{"flat": [...], "power": a}, ...]` into a monomial valid for `m`.
pub fn parse_monomial(text: &str, m: &Matroid) -> SpecResult<SimplicialMonomial> {
    let v = parse_json(text)?;
    let Value::Array(items) = v else {
        return malformed("a monomial is a list of {\"flat\", \"power\"} objects");
    };
    let mut flats = Vec::with_capacity(items.len());
    let mut powers = Vec::with_capacity(items.len());
    for item in &items {
        let obj = as_object(item)?;
        flats.push(m.ground().subset(labels(field(obj, "flat")?)?)?);
        let a = field(obj, "power")?
            .as_u64()
            .ok_or_else(|| SpecError::Malformed("`power` must be a positive integer".into()))?;
        powers.push(a as usize);
    }
    Ok(SimplicialMonomial::new(m, flats, powers)?)
}
