//! Vertex-3-colourings, induced edge colourings, colour involutions,
//! orientations and parity classes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::labels::FaceIndex;
use crate::perm::Permutation;
use crate::surface::{builtin, SimplicialMap, Surface, SurfaceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Colour(u8);

impl Colour {
    pub const ALL: [Colour; 3] = [Colour(1), Colour(2), Colour(3)];

    pub fn new(value: u8) -> Option<Colour> {
        (1..=3).contains(&value).then_some(Colour(value))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    fn index(self) -> usize {
        usize::from(self.0 - 1)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("no colour assigned to {0:?}")]
    Uncoloured(String),
    #[error("edge {0:?} joins two vertices of the same colour")]
    ImproperVertexColouring(String),
    #[error("face {0:?} repeats an edge colour")]
    ImproperEdgeColouring(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Colours of vertices; adjacent vertices differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexColouring(BTreeMap<String, Colour>);

impl VertexColouring {
    pub fn new(colours: BTreeMap<String, Colour>) -> Self {
        VertexColouring(colours)
    }

    pub fn get(&self, v: &str) -> Option<Colour> {
        self.0.get(v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Colour)> + '_ {
        self.0.iter().map(|(v, c)| (v.as_str(), *c))
    }

    /// Vertices of each colour, indexed by colour − 1.
    pub fn classes(&self) -> [BTreeSet<String>; 3] {
        let mut out: [BTreeSet<String>; 3] = Default::default();
        for (v, c) in &self.0 {
            out[c.index()].insert(v.clone());
        }
        out
    }

    /// The colour classes as an unordered family, sorted.
    pub fn class_partition(&self) -> BTreeSet<BTreeSet<String>> {
        self.classes().into_iter().filter(|c| !c.is_empty()).collect()
    }

    pub fn is_proper_on(&self, s: &Surface) -> Result<(), ColouringError> {
        for v in s.vertices() {
            if self.get(v).is_none() {
                return Err(ColouringError::Uncoloured(v.to_string()));
            }
        }
        for (e, [a, b]) in s.edges() {
            if self.0[a] == self.0[b] {
                return Err(ColouringError::ImproperVertexColouring(e.to_string()));
            }
        }
        Ok(())
    }
}

/// Colours of edges; the three edges of every face differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeColouring(BTreeMap<String, Colour>);

impl EdgeColouring {
    pub fn new(colours: BTreeMap<String, Colour>) -> Self {
        EdgeColouring(colours)
    }

    pub fn get(&self, e: &str) -> Option<Colour> {
        self.0.get(e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Colour)> + '_ {
        self.0.iter().map(|(e, c)| (e.as_str(), *c))
    }

    pub fn classes(&self) -> [BTreeSet<String>; 3] {
        let mut out: [BTreeSet<String>; 3] = Default::default();
        for (e, c) in &self.0 {
            out[c.index()].insert(e.clone());
        }
        out
    }
}

/// The face swap across the edges of one colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourInvolution {
    pub colour: Colour,
    partner: BTreeMap<String, String>,
}

impl ColourInvolution {
    pub fn apply(&self, face: &str) -> Option<&str> {
        self.partner.get(face).map(String::as_str)
    }

    /// Orbits as `(f, g)` with `f < g`, sorted.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.partner
            .iter()
            .filter(|(f, g)| f < g)
            .map(|(f, g)| (f.clone(), g.clone()))
            .collect()
    }

    pub fn faces(&self) -> impl Iterator<Item = &str> + '_ {
        self.partner.keys().map(String::as_str)
    }

    pub fn to_permutation(&self, index: &FaceIndex) -> Permutation {
        let images: Vec<usize> = (1..=index.len())
            .map(|p| {
                let partner = &self.partner[index.id(p)];
                index.point(partner).expect("involution acts on the indexed faces")
            })
            .collect();
        Permutation::from_images(&images).expect("involutions are bijective")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        })
    }
}

/// A sign per face: `+1` for the vertex colour cycle (1,2,3), `−1` for (1,3,2).
/// Faces sharing an edge have opposite signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Orientation(BTreeMap<String, Sign>);

impl Orientation {
    pub fn sign(&self, face: &str) -> Option<Sign> {
        self.0.get(face).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Sign)> + '_ {
        self.0.iter().map(|(f, s)| (f.as_str(), *s))
    }

    pub fn positive_faces(&self) -> BTreeSet<String> {
        self.0
            .iter()
            .filter(|(_, s)| **s == Sign::Positive)
            .map(|(f, _)| f.clone())
            .collect()
    }

    pub fn flipped(&self) -> Orientation {
        Orientation(self.0.iter().map(|(f, s)| (f.clone(), s.flip())).collect())
    }
}

/// A closed walk of odd length through faces, each step across one shared
/// edge or one involution orbit. The last face steps back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OddCycle(pub Vec<String>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientability {
    Orientable(Orientation),
    NonOrientable(OddCycle),
}

impl Orientability {
    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            Orientability::Orientable(o) => Some(o),
            Orientability::NonOrientable(_) => None,
        }
    }
}

/// The two classes of a parity split. In every orbit, the lexicographically
/// first face is in `even`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityClasses {
    pub even: BTreeSet<String>,
    pub odd: BTreeSet<String>,
}

/// One representative per orbit under colour permutations: the colouring
/// whose colour vector over sorted vertices is lexicographically smallest.
/// Representatives are returned in increasing order of that vector.
pub fn find_vertex_colourings(s: &Surface) -> Vec<VertexColouring> {
    let vertices: Vec<&str> = s.vertices().collect();
    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut neighbours: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertices.len()];
    for (_, [a, b]) in s.edges() {
        let (i, j) = (index[a.as_str()], index[b.as_str()]);
        if i == j {
            return Vec::new();
        }
        neighbours[i].insert(j);
        neighbours[j].insert(i);
    }

    let order = search_order(&neighbours);
    let mut colours = vec![0u8; vertices.len()];
    let mut found = BTreeSet::new();
    extend_colouring(&order, 0, &neighbours, &mut colours, &mut found);

    found
        .into_iter()
        .map(|vector: Vec<u8>| {
            VertexColouring(
                vertices
                    .iter()
                    .zip(vector)
                    .map(|(v, c)| (v.to_string(), Colour(c)))
                    .collect(),
            )
        })
        .collect()
}

// Greedy order: next is the unplaced vertex with the most placed neighbours,
// ties to the smallest identifier.
fn search_order(neighbours: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = neighbours.len();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(v)))
            .expect("vertices remain");
        placed[next] = true;
        order.push(next);
        for &w in &neighbours[next] {
            links[w] += 1;
        }
    }
    order
}

fn extend_colouring(
    order: &[usize],
    depth: usize,
    neighbours: &[BTreeSet<usize>],
    colours: &mut [u8],
    found: &mut BTreeSet<Vec<u8>>,
) {
    let Some(&v) = order.get(depth) else {
        found.insert(canonical_relabel(colours));
        return;
    };
    // the first vertex's colour is free up to permutation
    let choices: &[u8] = if depth == 0 { &[1] } else { &[1, 2, 3] };
    for &c in choices {
        if neighbours[v].iter().any(|&w| colours[w] == c) {
            continue;
        }
        colours[v] = c;
        extend_colouring(order, depth + 1, neighbours, colours, found);
        colours[v] = 0;
    }
}

/// Renames colours by first occurrence, which yields the lexicographically
/// smallest vector among the six colour permutations.
fn canonical_relabel(colours: &[u8]) -> Vec<u8> {
    let mut rename = [0u8; 4];
    let mut next = 1;
    colours
        .iter()
        .map(|&c| {
            if rename[c as usize] == 0 {
                rename[c as usize] = next;
                next += 1;
            }
            rename[c as usize]
        })
        .collect()
}

/// `c_E(e) = c_V(v₁) + c_V(v₂) − 2`: {1,2} ↦ 1, {1,3} ↦ 2, {2,3} ↦ 3.
pub fn induced_edge_colouring(
    s: &Surface,
    cv: &VertexColouring,
) -> Result<EdgeColouring, ColouringError> {
    cv.is_proper_on(s)?;
    Ok(EdgeColouring(
        s.edges()
            .map(|(e, [a, b])| {
                let sum = cv.0[a].0 + cv.0[b].0;
                (e.to_string(), Colour(sum - 2))
            })
            .collect(),
    ))
}

/// The three colour involutions, in colour order. Requires a closed surface.
pub fn colour_involutions(
    s: &Surface,
    ce: &EdgeColouring,
) -> Result<[ColourInvolution; 3], ColouringError> {
    s.require_closed()?;
    for (e, _) in s.edges() {
        if ce.get(e).is_none() {
            return Err(ColouringError::Uncoloured(e.to_string()));
        }
    }
    for (f, sides) in s.faces() {
        let seen: BTreeSet<Colour> = sides.iter().map(|e| ce.0[e]).collect();
        if seen.len() != 3 {
            return Err(ColouringError::ImproperEdgeColouring(f.to_string()));
        }
    }
    let mut partners: [BTreeMap<String, String>; 3] = Default::default();
    for (e, c) in ce.iter() {
        let fs = s.faces_of_edge(e);
        let map = &mut partners[c.index()];
        map.insert(fs[0].clone(), fs[1].clone());
        map.insert(fs[1].clone(), fs[0].clone());
    }
    let [p1, p2, p3] = partners;
    Ok([
        ColourInvolution { colour: Colour(1), partner: p1 },
        ColourInvolution { colour: Colour(2), partner: p2 },
        ColourInvolution { colour: Colour(3), partner: p3 },
    ])
}

/// Two-colours the face adjacency graph of a closed surface, or returns an
/// odd cycle. The first face of every component is positive.
pub fn find_orientation(s: &Surface) -> Result<Orientability, SurfaceError> {
    let graph = s.face_adjacency()?;
    Ok(match two_colour(&graph.adjacency()) {
        Ok(sides) => Orientability::Orientable(Orientation(
            graph
                .faces
                .iter()
                .zip(sides)
                .map(|(f, odd)| (f.clone(), if odd { Sign::Negative } else { Sign::Positive }))
                .collect(),
        )),
        Err(cycle) => Orientability::NonOrientable(OddCycle(
            cycle.into_iter().map(|i| graph.faces[i].clone()).collect(),
        )),
    })
}

/// Splits the faces into two classes so that every involution swaps them,
/// separately on each orbit of the group the involutions generate.
pub fn parity_classes<'a, I>(invs: &[ColourInvolution], faces: I) -> Result<ParityClasses, OddCycle>
where
    I: IntoIterator<Item = &'a str>,
{
    let index = FaceIndex::new(faces);
    let mut adjacency = vec![Vec::new(); index.len()];
    for inv in invs {
        for (f, g) in inv.pairs() {
            let (Some(a), Some(b)) = (index.point(&f), index.point(&g)) else {
                continue;
            };
            adjacency[a - 1].push(b - 1);
            adjacency[b - 1].push(a - 1);
        }
    }
    match two_colour(&adjacency) {
        Ok(sides) => {
            let mut classes = ParityClasses {
                even: BTreeSet::new(),
                odd: BTreeSet::new(),
            };
            for (i, odd) in sides.into_iter().enumerate() {
                let id = index.id(i + 1).to_string();
                if odd {
                    classes.odd.insert(id);
                } else {
                    classes.even.insert(id);
                }
            }
            Ok(classes)
        }
        Err(cycle) => Err(OddCycle(
            cycle.into_iter().map(|i| index.id(i + 1).to_string()).collect(),
        )),
    }
}

/// Breadth-first 2-colouring; `true` marks the second class. On failure,
/// returns the nodes of an odd closed walk.
fn two_colour(adjacency: &[Vec<usize>]) -> Result<Vec<bool>, Vec<usize>> {
    let n = adjacency.len();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &v in &adjacency[u] {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        parent[v] = Some(u);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return Err(odd_cycle(&parent, u, v)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(|s| s.unwrap()).collect())
}

fn odd_cycle(parent: &[Option<usize>], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while let Some(p) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    let on_pv: BTreeSet<usize> = pv.iter().copied().collect();
    let lca_pos_u = pu.iter().position(|x| on_pv.contains(x)).expect("same tree");
    let lca = pu[lca_pos_u];
    let lca_pos_v = pv.iter().position(|&x| x == lca).unwrap();
    // u → lca, then lca → v; the link v–u closes the walk
    let mut cycle: Vec<usize> = pu[..=lca_pos_u].to_vec();
    cycle.extend(pv[..lca_pos_v].iter().rev());
    cycle
}

/// The simplicial map to the triangle fixture that a colouring describes.
pub fn colouring_as_map_to_triangle(
    s: &Surface,
    cv: &VertexColouring,
) -> Result<SimplicialMap, ColouringError> {
    cv.is_proper_on(s)?;
    let triangle = builtin("triangle").expect("builtin exists");
    let face = triangle.face_ids().next().expect("one face").to_string();
    let mut map = SimplicialMap::default();
    for (v, c) in cv.iter() {
        if s.has_vertex(v) {
            map.vertices.insert(v.to_string(), c.to_string());
        }
    }
    for (e, [a, b]) in s.edges() {
        let (x, y) = (cv.0[a].min(cv.0[b]), cv.0[a].max(cv.0[b]));
        map.edges.insert(e.to_string(), format!("{x}{y}"));
    }
    for f in s.face_ids() {
        map.faces.insert(f.to_string(), face.clone());
    }
    Ok(map)
}
