//! Brute-force oracles written against plain vectors, sharing no code with
//! the library beyond the surface accessors.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use foldcheck_core::Surface;

/// Every arrangement of `items`, in lexicographic order if `items` is sorted.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// All perfect matchings of `items`.
pub fn matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for i in 1..items.len() {
        let mut rest = items[1..].to_vec();
        let partner = rest.remove(i - 1);
        for mut m in matchings(&rest) {
            m.insert(0, (first, partner));
            out.push(m);
        }
    }
    out
}

/// Images (1-based) of a full cycle listed as a sequence.
pub fn cycle_images(seq: &[usize]) -> Vec<usize> {
    let mut img = vec![0; seq.len()];
    for (i, &x) in seq.iter().enumerate() {
        img[x - 1] = seq[(i + 1) % seq.len()];
    }
    img
}

/// Images (1-based) of the involution swapping each pair.
pub fn matching_images(pairs: &[(usize, usize)], n: usize) -> Vec<usize> {
    let mut img = vec![0; n];
    for &(a, b) in pairs {
        img[a - 1] = b;
        img[b - 1] = a;
    }
    img
}

/// Number of cycles of `x ↦ outer(inner(x))`.
pub fn product_cycle_count(outer: &[usize], inner: &[usize]) -> usize {
    let n = outer.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 1..=n {
        if seen[s - 1] {
            continue;
        }
        count += 1;
        let mut x = s;
        while !seen[x - 1] {
            seen[x - 1] = true;
            x = outer[inner[x - 1] - 1];
        }
    }
    count
}

/// Orbits of `x ↦ outer(inner(x))` as sorted sets.
pub fn product_orbits(outer: &[usize], inner: &[usize]) -> BTreeSet<BTreeSet<usize>> {
    let n = outer.len();
    let mut seen = vec![false; n];
    let mut out = BTreeSet::new();
    for s in 1..=n {
        if seen[s - 1] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut x = s;
        while !seen[x - 1] {
            seen[x - 1] = true;
            orbit.insert(x);
            x = outer[inner[x - 1] - 1];
        }
        out.insert(orbit);
    }
    out
}

/// Whether two pairs interleave as positions `a < c < b < d` in some labelling.
pub fn interleave(p: (usize, usize), q: (usize, usize)) -> bool {
    let (a, b) = (p.0.min(p.1), p.0.max(p.1));
    let (c, d) = (q.0.min(q.1), q.0.max(q.1));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Pairs whose positions in `seq` interleave.
pub fn crossing_count(seq: &[usize], pairs: &[(usize, usize)]) -> usize {
    let mut pos = vec![0; seq.len() + 1];
    for (i, &x) in seq.iter().enumerate() {
        pos[x] = i;
    }
    let spans: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    let mut count = 0;
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            if interleave(spans[i], spans[j]) {
                count += 1;
            }
        }
    }
    count
}

/// Class partitions of all proper 3-colourings, by trying all 3^|V| maps.
pub fn brute_force_colour_partitions(s: &Surface) -> BTreeSet<BTreeSet<BTreeSet<String>>> {
    let vs: Vec<&str> = s.vertices().collect();
    let edges: Vec<(usize, usize)> = s
        .edges()
        .map(|(_, [a, b])| {
            (
                vs.iter().position(|v| v == a).unwrap(),
                vs.iter().position(|v| v == b).unwrap(),
            )
        })
        .collect();
    let mut out = BTreeSet::new();
    let total = 3usize.pow(vs.len() as u32);
    for code in 0..total {
        let mut c = vec![0; vs.len()];
        let mut x = code;
        for slot in c.iter_mut() {
            *slot = x % 3;
            x /= 3;
        }
        if edges.iter().any(|&(a, b)| c[a] == c[b]) {
            continue;
        }
        let mut classes = vec![BTreeSet::new(); 3];
        for (i, v) in vs.iter().enumerate() {
            classes[c[i]].insert(v.to_string());
        }
        out.insert(classes.into_iter().filter(|k| !k.is_empty()).collect());
    }
    out
}

/// Whether some ±1 face signing makes every pair of edge-adjacent faces opposite.
pub fn brute_force_orientable(s: &Surface) -> bool {
    let faces: Vec<&str> = s.face_ids().collect();
    let links: Vec<(usize, usize)> = s
        .edges()
        .map(|(e, _)| {
            let fs = s.faces_of_edge(e);
            (
                faces.iter().position(|f| *f == fs[0]).unwrap(),
                faces.iter().position(|f| *f == fs[1]).unwrap(),
            )
        })
        .collect();
    (0u64..1 << faces.len()).any(|signs| {
        links
            .iter()
            .all(|&(a, b)| (signs >> a) & 1 != (signs >> b) & 1)
    })
}

/// Head-fixed folding orders by the definitional quadruple check, over
/// every colour class partition. Orders are face-id sequences.
pub fn brute_force_foldings(s: &Surface) -> BTreeMap<BTreeSet<BTreeSet<String>>, Vec<Vec<String>>> {
    let faces: Vec<String> = s.face_ids().map(str::to_string).collect();
    let mut out = BTreeMap::new();
    for partition in brute_force_colour_partitions(s) {
        let colour_of = |v: &str| {
            partition
                .iter()
                .position(|class| class.contains(v))
                .unwrap()
        };
        // face pairs per edge, grouped by the unordered pair of vertex classes
        let mut groups: BTreeMap<(usize, usize), Vec<(String, String)>> = BTreeMap::new();
        for (e, [a, b]) in s.edges() {
            let (x, y) = (colour_of(a), colour_of(b));
            let fs = s.faces_of_edge(e);
            groups
                .entry((x.min(y), x.max(y)))
                .or_default()
                .push((fs[0].clone(), fs[1].clone()));
        }
        let mut found = Vec::new();
        for tail in permutations(&faces[1..]) {
            let mut order = vec![faces[0].clone()];
            order.extend(tail);
            let pos: BTreeMap<&str, usize> =
                order.iter().enumerate().map(|(i, f)| (f.as_str(), i)).collect();
            let ok = groups.values().all(|pairs| {
                let spans: Vec<(usize, usize)> =
                    pairs.iter().map(|(f, g)| (pos[f.as_str()], pos[g.as_str()])).collect();
                (0..spans.len())
                    .all(|i| (i + 1..spans.len()).all(|j| !interleave(spans[i], spans[j])))
            });
            if ok {
                found.push(order);
            }
        }
        out.insert(partition, found);
    }
    out
}

/// Two faces glued along all three edges.
pub const DOUBLE_TRIANGLE: &str = r#"{
  "edges": {"a": ["A", "B"], "b": ["B", "C"], "c": ["A", "C"]},
  "faces": {"x": ["a", "b", "c"], "y": ["a", "b", "c"]},
  "vertices": ["A", "B", "C"]
}"#;
