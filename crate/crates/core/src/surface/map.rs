use std::collections::BTreeMap;

use thiserror::Error;

use super::{ElementKind, Surface};

/// Vertex, edge and face assignments from one surface to another.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimplicialMap {
    pub vertices: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
    pub faces: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("map is not defined on source {kind} {id:?}")]
pub struct MapNotTotal {
    pub kind: ElementKind,
    pub id: String,
}

/// Whether `map` sends every incidence of `src` to an incidence of `dst`.
/// Images outside `dst` count as failures.
pub fn verify_simplicial_map(
    src: &Surface,
    dst: &Surface,
    map: &SimplicialMap,
) -> Result<bool, MapNotTotal> {
    let missing = |kind, id: &str| MapNotTotal {
        kind,
        id: id.to_string(),
    };
    for v in src.vertices() {
        if !map.vertices.contains_key(v) {
            return Err(missing(ElementKind::Vertex, v));
        }
    }
    for (e, _) in src.edges() {
        if !map.edges.contains_key(e) {
            return Err(missing(ElementKind::Edge, e));
        }
    }
    for f in src.face_ids() {
        if !map.faces.contains_key(f) {
            return Err(missing(ElementKind::Face, f));
        }
    }

    for (e, ends) in src.edges() {
        let Some(target) = dst.edge_vertices(&map.edges[e]) else {
            return Ok(false);
        };
        if !ends.iter().all(|v| target.contains(&map.vertices[v])) {
            return Ok(false);
        }
    }
    for (f, sides) in src.faces() {
        let image = &map.faces[f];
        let (Some(target_edges), Some(target_vertices)) =
            (dst.face_edges(image), dst.face_vertices(image))
        else {
            return Ok(false);
        };
        for e in sides {
            if !target_edges.contains(&map.edges[e]) {
                return Ok(false);
            }
        }
        for v in src.face_vertices(f).expect("face exists") {
            if !target_vertices.contains(map.vertices[v].as_str()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
