//! Checks of the seven surface axioms, reported as data.
//!
//! Condition numbers: 2 two distinct vertices per edge, 3 faces are
//! triangles of three distinct edges, 4 at most two faces per edge,
//! 5 umbrella around every vertex, 6 no isolated vertex, 7 every edge in a
//! face. Condition 1 (finite sets, transitive incidence) holds by
//! construction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::Surface;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub condition: u8,
    pub element: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} at {:?}: {}", self.condition, self.element, self.detail)
    }
}

/// The alternating edge–face sequence around one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Umbrella {
    pub edges: Vec<String>,
    pub faces: Vec<String>,
    /// The sequence ends with a face adjacent to the first edge.
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UmbrellaDefect {
    UnknownVertex,
    /// A face around the vertex does not contain exactly two of its edges.
    FaceCorners { face: String, corners: usize },
    /// An edge around the vertex lies in more than two faces.
    Branching { edge: String, faces: usize },
    /// The fan falls apart into several sequences.
    Split(Vec<Umbrella>),
}

impl fmt::Display for UmbrellaDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UmbrellaDefect::UnknownVertex => f.write_str("unknown vertex"),
            UmbrellaDefect::FaceCorners { face, corners } => {
                write!(f, "face {face:?} contains {corners} edge(s) at this vertex, expected 2")
            }
            UmbrellaDefect::Branching { edge, faces } => {
                write!(f, "edge {edge:?} has {faces} faces around this vertex")
            }
            UmbrellaDefect::Split(parts) => {
                write!(f, "fan splits into {} parts:", parts.len())?;
                for p in parts {
                    write!(f, " [{}]", describe(p))?;
                }
                Ok(())
            }
        }
    }
}

fn describe(u: &Umbrella) -> String {
    let mut items = Vec::new();
    for (i, e) in u.edges.iter().enumerate() {
        items.push(format!("e:{e}"));
        if let Some(f) = u.faces.get(i) {
            items.push(format!("f:{f}"));
        }
    }
    if u.closed {
        items.push("(closed)".into());
    }
    items.join(" ")
}

/// The umbrella at `v`, walked from its lexicographically first end.
pub fn umbrella(s: &Surface, v: &str) -> Result<Umbrella, UmbrellaDefect> {
    if !s.has_vertex(v) {
        return Err(UmbrellaDefect::UnknownVertex);
    }
    let edges = s.edges_of_vertex(v);
    let edge_set: BTreeSet<&str> = edges.iter().map(String::as_str).collect();

    // faces around v, each linking its two edges at v
    let mut links: BTreeMap<&str, [&str; 2]> = BTreeMap::new();
    for e in edges {
        for f in s.faces_of_edge(e) {
            if links.contains_key(f.as_str()) {
                continue;
            }
            let at_v: BTreeSet<&str> = s.face_edges(f).expect("face exists")
                .iter()
                .map(String::as_str)
                .filter(|x| edge_set.contains(x))
                .collect();
            if at_v.len() != 2 {
                return Err(UmbrellaDefect::FaceCorners {
                    face: f.clone(),
                    corners: at_v.len(),
                });
            }
            let mut it = at_v.into_iter();
            links.insert(f.as_str(), [it.next().unwrap(), it.next().unwrap()]);
        }
    }

    let mut incident: BTreeMap<&str, Vec<&str>> = edge_set.iter().map(|&e| (e, Vec::new())).collect();
    for (&f, pair) in &links {
        for e in pair {
            incident.get_mut(e).unwrap().push(f);
        }
    }
    if let Some((e, fs)) = incident.iter().find(|(_, fs)| fs.len() > 2) {
        return Err(UmbrellaDefect::Branching {
            edge: e.to_string(),
            faces: fs.len(),
        });
    }

    let mut used_faces: BTreeSet<&str> = BTreeSet::new();
    let mut used_edges: BTreeSet<&str> = BTreeSet::new();
    let mut parts = Vec::new();
    // path ends first so that open fans are walked end to end
    let starts: Vec<&str> = incident
        .iter()
        .filter(|(_, fs)| fs.len() < 2)
        .chain(incident.iter().filter(|(_, fs)| fs.len() == 2))
        .map(|(e, _)| *e)
        .collect();
    for start in starts {
        if used_edges.contains(start) {
            continue;
        }
        let mut part = Umbrella {
            edges: vec![start.to_string()],
            faces: Vec::new(),
            closed: false,
        };
        used_edges.insert(start);
        let mut current = start;
        loop {
            let next_face = incident[current].iter().find(|f| !used_faces.contains(*f));
            let Some(&f) = next_face else { break };
            used_faces.insert(f);
            part.faces.push(f.to_string());
            let [a, b] = links[f];
            let other = if a == current { b } else { a };
            if used_edges.contains(other) {
                part.closed = other == start;
                break;
            }
            used_edges.insert(other);
            part.edges.push(other.to_string());
            current = other;
        }
        parts.push(part);
    }

    if parts.len() == 1 {
        Ok(parts.pop().unwrap())
    } else {
        Err(UmbrellaDefect::Split(parts))
    }
}

/// Every violated condition, sorted by condition number then element.
pub fn validate(s: &Surface) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |condition: u8, element: &str, detail: String| {
        out.push(Violation {
            condition,
            element: element.to_string(),
            detail,
        })
    };

    for (e, [a, b]) in s.edges() {
        if a == b {
            push(2, e, format!("both endpoints are {a:?}"));
        }
    }

    for (f, sides) in s.faces() {
        if let Some(detail) = face_shape_defect(s, sides) {
            push(3, f, detail);
        }
    }

    for (e, _) in s.edges() {
        let n = s.faces_of_edge(e).len();
        if n > 2 {
            push(4, e, format!("{n} incident faces"));
        }
        if n == 0 {
            push(7, e, "no incident face".into());
        }
    }

    for v in s.vertices() {
        if s.edges_of_vertex(v).is_empty() {
            push(6, v, "no incident edge".into());
            continue;
        }
        if let Err(defect) = umbrella(s, v) {
            push(5, v, defect.to_string());
        }
    }

    out.sort();
    out
}

fn face_shape_defect(s: &Surface, sides: &[String; 3]) -> Option<String> {
    let distinct: BTreeSet<&String> = sides.iter().collect();
    if distinct.len() != 3 {
        return Some("repeats an edge".into());
    }
    let ends: Vec<BTreeSet<&String>> = sides
        .iter()
        .map(|e| s.edge_vertices(e).expect("edge exists").iter().collect())
        .collect();
    if ends.iter().any(|vs| vs.len() != 2) {
        return Some("contains a degenerate edge".into());
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let shared = ends[i].intersection(&ends[j]).count();
            if shared != 1 {
                return Some(format!(
                    "edges {:?} and {:?} share {shared} vertices",
                    sides[i], sides[j]
                ));
            }
        }
    }
    let all: BTreeSet<&String> = ends.iter().flatten().copied().collect();
    if all.len() != 3 {
        return Some(format!("spans {} vertices", all.len()));
    }
    None
}
