//! Simplicial surfaces as pure incidence structures.
//!
//! A surface is not a simplicial complex: two edges may join the same pair
//! of vertices and two faces may have the same vertex triple. Faces are
//! therefore stored as edge triples, and their vertex sets are derived.

mod builtin;
mod io;
mod map;
mod validate;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

pub use builtin::{builtin, BUILTIN_NAMES};
pub use io::{parse_surface, serialize_surface};
pub use map::{verify_simplicial_map, SimplicialMap};
pub use validate::{umbrella, validate, Umbrella, UmbrellaDefect, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate {kind} identifier {id:?}")]
    DuplicateIdentifier { kind: ElementKind, id: String },
    #[error("{kind} {id:?} references unknown {missing_kind} {missing:?}")]
    DanglingReference {
        kind: ElementKind,
        id: String,
        missing_kind: ElementKind,
        missing: String,
    },
    #[error("surface violates {} condition(s), first: {}", .0.len(), .0[0])]
    Invalid(Vec<Violation>),
    #[error("surface is not closed: edge {edge:?} has {faces} incident face(s)")]
    NotClosed { edge: String, faces: usize },
    #[error("unknown builtin surface {0:?}")]
    UnknownBuiltin(String),
}

impl SurfaceError {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            SurfaceError::Syntax { .. } => "syntax",
            SurfaceError::DuplicateIdentifier { .. } => "duplicate-identifier",
            SurfaceError::DanglingReference { .. } => "dangling-reference",
            SurfaceError::Invalid(_) => "invalid-surface",
            SurfaceError::NotClosed { .. } => "not-closed",
            SurfaceError::UnknownBuiltin(_) => "unknown-builtin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Vertex,
    Edge,
    Face,
}

impl std::fmt::Display for ElementKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ElementKind::Vertex => "vertex",
            ElementKind::Edge => "edge",
            ElementKind::Face => "face",
        })
    }
}

/// Vertices, edges as vertex pairs, and faces as edge triples.
///
/// Construction guarantees unique identifiers and that every reference
/// resolves; the remaining surface axioms are checked by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surface {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, [String; 2]>,
    faces: BTreeMap<String, [String; 3]>,
    edge_faces: BTreeMap<String, Vec<String>>,
    vertex_edges: BTreeMap<String, Vec<String>>,
}

impl Surface {
    pub fn from_parts<V, E, F>(vertices: V, edges: E, faces: F) -> Result<Surface, SurfaceError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, [String; 2])>,
        F: IntoIterator<Item = (String, [String; 3])>,
    {
        let mut vertex_set = BTreeSet::new();
        for v in vertices {
            let v = v.into();
            if !vertex_set.insert(v.clone()) {
                return Err(SurfaceError::DuplicateIdentifier {
                    kind: ElementKind::Vertex,
                    id: v,
                });
            }
        }

        let mut edge_map = BTreeMap::new();
        for (id, ends) in edges {
            for v in &ends {
                if !vertex_set.contains(v) {
                    return Err(SurfaceError::DanglingReference {
                        kind: ElementKind::Edge,
                        id,
                        missing_kind: ElementKind::Vertex,
                        missing: v.clone(),
                    });
                }
            }
            if edge_map.contains_key(&id) {
                return Err(SurfaceError::DuplicateIdentifier {
                    kind: ElementKind::Edge,
                    id,
                });
            }
            edge_map.insert(id, ends);
        }

        let mut face_map = BTreeMap::new();
        for (id, sides) in faces {
            for e in &sides {
                if !edge_map.contains_key(e) {
                    return Err(SurfaceError::DanglingReference {
                        kind: ElementKind::Face,
                        id,
                        missing_kind: ElementKind::Edge,
                        missing: e.clone(),
                    });
                }
            }
            if face_map.contains_key(&id) {
                return Err(SurfaceError::DuplicateIdentifier {
                    kind: ElementKind::Face,
                    id,
                });
            }
            face_map.insert(id, sides);
        }

        let mut edge_faces: BTreeMap<String, Vec<String>> =
            edge_map.keys().map(|e| (e.clone(), Vec::new())).collect();
        for (f, sides) in &face_map {
            let distinct: BTreeSet<&String> = sides.iter().collect();
            for e in distinct {
                edge_faces.get_mut(e).expect("checked above").push(f.clone());
            }
        }
        let mut vertex_edges: BTreeMap<String, Vec<String>> =
            vertex_set.iter().map(|v| (v.clone(), Vec::new())).collect();
        for (e, ends) in &edge_map {
            let distinct: BTreeSet<&String> = ends.iter().collect();
            for v in distinct {
                vertex_edges.get_mut(v).expect("checked above").push(e.clone());
            }
        }

        Ok(Surface {
            vertices: vertex_set,
            edges: edge_map,
            faces: face_map,
            edge_faces,
            vertex_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Vertex identifiers in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &[String; 2])> + '_ {
        self.edges.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn faces(&self) -> impl Iterator<Item = (&str, &[String; 3])> + '_ {
        self.faces.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn face_ids(&self) -> impl Iterator<Item = &str> + '_ {
        self.faces.keys().map(String::as_str)
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn edge_vertices(&self, e: &str) -> Option<&[String; 2]> {
        self.edges.get(e)
    }

    pub fn face_edges(&self, f: &str) -> Option<&[String; 3]> {
        self.faces.get(f)
    }

    /// Vertices of a face, derived from its edges.
    pub fn face_vertices(&self, f: &str) -> Option<BTreeSet<&str>> {
        let sides = self.faces.get(f)?;
        Some(
            sides
                .iter()
                .flat_map(|e| self.edges[e].iter().map(String::as_str))
                .collect(),
        )
    }

    /// Faces containing `e`, in lexicographic order.
    pub fn faces_of_edge(&self, e: &str) -> &[String] {
        self.edge_faces.get(e).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Edges containing `v`, in lexicographic order.
    pub fn edges_of_vertex(&self, v: &str) -> &[String] {
        self.vertex_edges.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_valid(&self) -> bool {
        validate(self).is_empty()
    }

    /// Every edge lies in exactly two faces. Fails on invalid surfaces.
    pub fn is_closed(&self) -> Result<bool, SurfaceError> {
        let violations = validate(self);
        if !violations.is_empty() {
            return Err(SurfaceError::Invalid(violations));
        }
        Ok(self.edge_faces.values().all(|fs| fs.len() == 2))
    }

    fn first_boundary_edge(&self) -> Option<(&str, usize)> {
        self.edge_faces
            .iter()
            .find(|(_, fs)| fs.len() != 2)
            .map(|(e, fs)| (e.as_str(), fs.len()))
    }

    /// Validity plus closedness, as a single gate for downstream operations.
    pub fn require_closed(&self) -> Result<(), SurfaceError> {
        let violations = validate(self);
        if !violations.is_empty() {
            return Err(SurfaceError::Invalid(violations));
        }
        match self.first_boundary_edge() {
            Some((edge, faces)) => Err(SurfaceError::NotClosed {
                edge: edge.to_string(),
                faces,
            }),
            None => Ok(()),
        }
    }

    /// Connected components as sets of vertex identifiers, ordered by their
    /// smallest vertex.
    pub fn vertex_components(&self) -> Vec<BTreeSet<String>> {
        let ids: Vec<&String> = self.vertices.iter().collect();
        let index: BTreeMap<&String, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for [a, b] in self.edges.values() {
            let (ra, rb) = (find(&mut parent, index[a]), find(&mut parent, index[b]));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
        for (i, v) in ids.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().insert((*v).clone());
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_components().len() == 1
    }

    /// Faces as nodes, one link per surface edge. Only defined for closed surfaces.
    pub fn face_adjacency(&self) -> Result<FaceGraph, SurfaceError> {
        self.require_closed()?;
        let faces: Vec<String> = self.faces.keys().cloned().collect();
        let index: BTreeMap<&str, usize> =
            faces.iter().enumerate().map(|(i, f)| (f.as_str(), i)).collect();
        let links = self
            .edge_faces
            .iter()
            .map(|(e, fs)| {
                let (a, b) = (index[fs[0].as_str()], index[fs[1].as_str()]);
                FaceLink {
                    a: a.min(b),
                    b: a.max(b),
                    edge: e.clone(),
                }
            })
            .collect();
        Ok(FaceGraph { faces, links })
    }
}

/// One surface edge seen as a link between its two faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLink {
    pub a: usize,
    pub b: usize,
    pub edge: String,
}

/// Face adjacency multigraph of a closed surface. Node `i` is `faces[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceGraph {
    pub faces: Vec<String>,
    pub links: Vec<FaceLink>,
}

impl FaceGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.links
            .iter()
            .map(|l| usize::from(l.a == node) + usize::from(l.b == node))
            .sum()
    }

    /// Whether some surface edge joins faces `f` and `g`.
    pub fn adjacent(&self, f: &str, g: &str) -> bool {
        self.links.iter().any(|l| {
            let (x, y) = (&self.faces[l.a], &self.faces[l.b]);
            (x == f && y == g) || (x == g && y == f)
        })
    }

    /// `adjacency()[i]` lists the neighbours of node `i`, once per shared edge.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.faces.len()];
        for l in &self.links {
            adj[l.a].push(l.b);
            adj[l.b].push(l.a);
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_counts() {
        let torus = builtin("torus8").unwrap();
        assert_eq!(
            (torus.vertex_count(), torus.edge_count(), torus.face_count()),
            (4, 12, 8)
        );
        assert_eq!(torus.faces_of_edge("a"), ["2", "7"]);
        let tri = builtin("triangle").unwrap();
        assert_eq!((tri.vertex_count(), tri.edge_count(), tri.face_count()), (3, 3, 1));
        let tet = builtin("tetrahedron").unwrap();
        assert_eq!((tet.vertex_count(), tet.edge_count(), tet.face_count()), (4, 6, 4));
        assert_eq!(tet.is_closed(), Ok(true));
        let oct = builtin("octahedron").unwrap();
        assert_eq!((oct.vertex_count(), oct.edge_count(), oct.face_count()), (6, 12, 8));
        assert!(matches!(builtin("cube"), Err(SurfaceError::UnknownBuiltin(_))));
    }

    #[test]
    fn closedness() {
        assert_eq!(builtin("octahedron").unwrap().is_closed(), Ok(true));
        assert_eq!(builtin("torus8").unwrap().is_closed(), Ok(true));
        assert_eq!(builtin("triangle").unwrap().is_closed(), Ok(false));
    }

    #[test]
    fn closed_surfaces_satisfy_double_counting() {
        for name in ["tetrahedron", "octahedron", "torus8"] {
            let s = builtin(name).unwrap();
            assert_eq!(2 * s.edge_count(), 3 * s.face_count(), "{name}");
            assert_eq!(s.face_count() % 2, 0, "{name}");
        }
    }

    #[test]
    fn face_adjacency_graphs() {
        let oct = builtin("octahedron").unwrap().face_adjacency().unwrap();
        assert_eq!(oct.faces.len(), 8);
        assert_eq!(oct.links.len(), 12);
        assert!((0..8).all(|i| oct.degree(i) == 3));

        let torus = builtin("torus8").unwrap().face_adjacency().unwrap();
        assert!(torus.adjacent("1", "4"));
        let via_c = torus.links.iter().find(|l| l.edge == "c").unwrap();
        assert_eq!((torus.faces[via_c.a].as_str(), torus.faces[via_c.b].as_str()), ("1", "4"));

        assert!(matches!(
            builtin("triangle").unwrap().face_adjacency(),
            Err(SurfaceError::NotClosed { .. })
        ));
    }

    #[test]
    fn derived_face_vertices() {
        let torus = builtin("torus8").unwrap();
        let vs: Vec<&str> = torus.face_vertices("1").unwrap().into_iter().collect();
        assert_eq!(vs, ["A", "C", "D"]);
    }

    #[test]
    fn connectivity() {
        assert!(builtin("torus8").unwrap().is_connected());
        let text = r#"{
            "vertices": ["1","2","3","4","5","6"],
            "edges": {"a":["1","2"],"b":["2","3"],"c":["1","3"],
                      "d":["4","5"],"e":["5","6"],"f":["4","6"]},
            "faces": {"x":["a","b","c"],"y":["d","e","f"]}
        }"#;
        let two = parse_surface(text).unwrap();
        assert!(two.is_valid());
        assert_eq!(two.vertex_components().len(), 2);
    }
}
