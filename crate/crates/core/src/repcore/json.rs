//! JSON interchange for representations:
//! `{"quiver": <id or inline>, "dims": [..], "maps": {"<arrow-id>": [[..]]}}`.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::{Morphism, Quiver, Representation};
use crate::error::{Error, Result};
use crate::exactla::{FieldPrime, Matrix};

/// Registered quivers are referenced by id; anonymous ones are inlined.
pub fn rep_to_json(rep: &Representation) -> Value {
    let quiver = if rep.quiver.name.is_empty() {
        serde_json::to_value(rep.quiver.as_ref()).expect("quiver serializes")
    } else {
        Value::String(rep.quiver.name.clone())
    };
    let mut maps = Map::new();
    for (a, m) in rep.quiver.arrows.iter().zip(&rep.maps) {
        let rows: Vec<Value> = (0..m.rows()).map(|r| json!(m.row(r))).collect();
        maps.insert(a.id.clone(), Value::Array(rows));
    }
    json!({
        "quiver": quiver,
        "dims": rep.dims,
        "maps": maps,
    })
}

/// Parses the interchange format; `resolve` maps quiver ids to quivers.
pub fn rep_from_json(
    value: &Value,
    field: FieldPrime,
    resolve: &dyn Fn(&str) -> Option<Arc<Quiver>>,
) -> Result<Representation> {
    let bad = |what: &str| Error::Parse(format!("representation JSON: {what}"));
    let quiver = match value.get("quiver") {
        Some(Value::String(id)) => resolve(id).ok_or_else(|| bad(&format!("unknown quiver {id}")))?,
        Some(inline @ Value::Object(_)) => {
            let q: Quiver =
                serde_json::from_value(inline.clone()).map_err(|e| bad(&e.to_string()))?;
            Arc::new(Quiver::new(q.name, q.vertex_count, q.arrows, q.relations)?)
        }
        _ => return Err(bad("missing quiver")),
    };
    let dims: Vec<usize> = serde_json::from_value(value.get("dims").cloned().ok_or_else(|| bad("missing dims"))?)
        .map_err(|e| bad(&e.to_string()))?;
    if dims.len() != quiver.vertex_count {
        return Err(bad("dims length differs from the vertex count"));
    }
    let maps_obj = value
        .get("maps")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing maps"))?;
    let mut maps = Vec::with_capacity(quiver.arrows.len());
    for a in &quiver.arrows {
        let (rows, cols) = (dims[a.target], dims[a.source]);
        let entries: Vec<Vec<i64>> = match maps_obj.get(&a.id) {
            Some(v) => serde_json::from_value(v.clone()).map_err(|e| bad(&e.to_string()))?,
            None => return Err(bad(&format!("missing map for arrow {}", a.id))),
        };
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(bad(&format!("map for arrow {} has the wrong shape", a.id)));
        }
        maps.push(Matrix::from_rows(field, rows, cols, &entries));
    }
    if maps_obj.len() != quiver.arrows.len() {
        return Err(bad("maps name unknown arrows"));
    }
    Representation::new(quiver, field, dims, maps)
}

/// `{"source": <rep>, "target": <rep>, "components": [[[..]], ..]}`, one
/// matrix per vertex.
pub fn morphism_to_json(m: &Morphism) -> Value {
    let components: Vec<Value> = m
        .components()
        .iter()
        .map(|c| Value::Array((0..c.rows()).map(|r| json!(c.row(r))).collect()))
        .collect();
    json!({
        "source": rep_to_json(m.source()),
        "target": rep_to_json(m.target()),
        "components": components,
    })
}

pub fn morphism_from_json(
    value: &Value,
    field: FieldPrime,
    resolve: &dyn Fn(&str) -> Option<Arc<Quiver>>,
) -> Result<Morphism> {
    let bad = |what: &str| Error::Parse(format!("morphism JSON: {what}"));
    let part = |key: &str| value.get(key).ok_or_else(|| bad(&format!("missing {key}")));
    let source = Arc::new(rep_from_json(part("source")?, field, resolve)?);
    let target = Arc::new(rep_from_json(part("target")?, field, resolve)?);
    let raw: Vec<Vec<Vec<i64>>> =
        serde_json::from_value(part("components")?.clone()).map_err(|e| bad(&e.to_string()))?;
    if raw.len() != source.dims.len() {
        return Err(bad("one component per vertex is required"));
    }
    let mut components = Vec::with_capacity(raw.len());
    for (v, entries) in raw.iter().enumerate() {
        let (rows, cols) = (target.dims[v], source.dims[v]);
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(bad(&format!("component {v} has the wrong shape")));
        }
        components.push(Matrix::from_rows(field, rows, cols, entries));
    }
    Morphism::new(source, target, components)
}
