//! Random closed surfaces and permutations for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm::{CyclicOrder, Permutation};
use crate::surface::{validate, Surface};

/// A uniformly random fix-point-free involution on `1..=n`. `n` must be even.
pub fn random_involution<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    assert!(n.is_multiple_of(2), "fix-point-free involutions need an even ground set");
    let mut points: Vec<usize> = (1..=n).collect();
    points.shuffle(rng);
    let cycles: Vec<Vec<usize>> = points.chunks(2).map(|c| c.to_vec()).collect();
    Permutation::from_cycles(&cycles, n).expect("disjoint pairs")
}

/// A uniformly random `n`-cycle.
pub fn random_cyclic_order<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CyclicOrder {
    let mut rest: Vec<usize> = (2..=n).collect();
    rest.shuffle(rng);
    let mut cycle = vec![1];
    cycle.extend(rest);
    CyclicOrder::new(Permutation::from_cycles(&[cycle], n).expect("one cycle")).expect("full cycle")
}

fn ids(prefix: &str, n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            x = std::mem::replace(&mut self.0[x], r);
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Builds a surface from triangles with corners `3f`, `3f+1`, `3f+2`, the
/// given side gluings and corner identifications. Returns `None` unless the
/// result passes validation.
fn assemble(faces: usize, gluings: &[[(usize, usize); 2]], uf: &mut UnionFind) -> Option<Surface> {
    let corners = 3 * faces;
    let mut roots: Vec<usize> = (0..corners).map(|c| uf.find(c)).collect();
    let mut distinct = roots.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for r in roots.iter_mut() {
        *r = distinct.binary_search(r).unwrap();
    }
    let vertex_ids = ids("v", distinct.len());
    let edge_ids = ids("e", gluings.len());
    let face_ids = ids("f", faces);

    let mut face_edges = vec![Vec::with_capacity(3); faces];
    let mut edges = Vec::with_capacity(gluings.len());
    for (e, [(f, s), (g, _)]) in gluings.iter().enumerate() {
        let a = roots[3 * f + s];
        let b = roots[3 * f + (s + 1) % 3];
        if a == b {
            return None;
        }
        edges.push((edge_ids[e].clone(), [vertex_ids[a].clone(), vertex_ids[b].clone()]));
        face_edges[*f].push(e);
        face_edges[*g].push(e);
    }
    let faces = face_edges.into_iter().enumerate().map(|(f, es)| {
        (
            face_ids[f].clone(),
            [es[0], es[1], es[2]].map(|e| edge_ids[e].clone()),
        )
    });
    let s = Surface::from_parts(vertex_ids.clone(), edges, faces).ok()?;
    validate(&s).is_empty().then_some(s)
}

/// A closed surface glued from `faces` triangles whose corners carry the
/// colours 1, 2, 3: each colour `c` pairs the faces by a random
/// fix-point-free involution and glues them along the side opposite corner
/// `c`. The result is vertex-3-colourable by construction but need not be
/// connected or orientable.
pub fn coloured_gluing<R: Rng + ?Sized>(rng: &mut R, faces: usize) -> Option<Surface> {
    assert!(faces >= 2 && faces.is_multiple_of(2), "need a positive even face count");
    let mut uf = UnionFind::new(3 * faces);
    let mut gluings = Vec::with_capacity(3 * faces / 2);
    for opposite in 0..3 {
        // side s joins corners s and s+1, so side (opposite+1)%3 misses corner `opposite`
        let side = (opposite + 1) % 3;
        let rho = random_involution(rng, faces);
        for pair in rho.cycles() {
            let (f, g) = (pair[0] - 1, pair[1] - 1);
            for corner in [side, (side + 1) % 3] {
                uf.union(3 * f + corner, 3 * g + corner);
            }
            gluings.push([(f, side), (g, side)]);
        }
    }
    assemble(faces, &gluings, &mut uf)
}

/// A closed surface from a uniformly random pairing of the `3·faces` sides
/// with random gluing directions, or `None` when the gluing is not a
/// simplicial surface.
pub fn random_gluing<R: Rng + ?Sized>(rng: &mut R, faces: usize) -> Option<Surface> {
    assert!(faces >= 2 && faces.is_multiple_of(2), "need a positive even face count");
    let mut sides: Vec<(usize, usize)> = (0..faces).flat_map(|f| (0..3).map(move |s| (f, s))).collect();
    sides.shuffle(rng);
    let mut uf = UnionFind::new(3 * faces);
    let mut gluings = Vec::with_capacity(sides.len() / 2);
    for pair in sides.chunks(2) {
        let ((f, s), (g, t)) = (pair[0], pair[1]);
        let (f0, f1) = (3 * f + s, 3 * f + (s + 1) % 3);
        let (g0, g1) = (3 * g + t, 3 * g + (t + 1) % 3);
        if rng.gen() {
            uf.union(f0, g0);
            uf.union(f1, g1);
        } else {
            uf.union(f0, g1);
            uf.union(f1, g0);
        }
        gluings.push([(f, s), (g, t)]);
    }
    assemble(faces, &gluings, &mut uf)
}
