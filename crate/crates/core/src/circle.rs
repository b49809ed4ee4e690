//! Circle representations: points of a cyclic order placed around the unit
//! circle and a pair partition drawn as chords.
//!
//! Every predicate works on integer angular indices. Point `σᵏ(1)` sits at
//! index `k`, i.e. at angle `2πk/2n` counterclockwise from the positive axis.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{CyclicOrder, PairPartition, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircleError {
    #[error("circle representations need an even number of points, got {0}")]
    OddGroundSet(usize),
    #[error("chords live on {chords} points but the order has {order}")]
    SizeMismatch { order: usize, chords: usize },
    #[error("chords {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("{0:?} is not a chord")]
    UnknownChord((usize, usize)),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRepresentation {
    sigma: CyclicOrder,
    chords: PairPartition,
    // index_of[x - 1] is the angular index of point x; point_at is its inverse
    index_of: Vec<usize>,
    point_at: Vec<usize>,
    labels: Vec<String>,
}

impl CircleRepresentation {
    pub fn new(sigma: &CyclicOrder, chords: &PairPartition) -> Result<Self, CircleError> {
        let size = sigma.degree();
        if !size.is_multiple_of(2) {
            return Err(CircleError::OddGroundSet(size));
        }
        if chords.degree() != size {
            return Err(CircleError::SizeMismatch {
                order: size,
                chords: chords.degree(),
            });
        }
        let point_at = sigma.induced_linear(1)?.as_slice().to_vec();
        let mut index_of = vec![0; size];
        for (k, &x) in point_at.iter().enumerate() {
            index_of[x - 1] = k;
        }
        Ok(CircleRepresentation {
            sigma: sigma.clone(),
            chords: chords.clone(),
            index_of,
            point_at,
            labels: (1..=size).map(|x| x.to_string()).collect(),
        })
    }

    /// Display names for points `1..=m`, used only when rendering.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.ground_size(), "one label per point");
        self.labels = labels;
        self
    }

    pub fn ground_size(&self) -> usize {
        self.index_of.len()
    }

    pub fn sigma(&self) -> &CyclicOrder {
        &self.sigma
    }

    pub fn chords(&self) -> &PairPartition {
        &self.chords
    }

    pub fn index(&self, x: usize) -> usize {
        self.index_of[x - 1]
    }

    pub fn point_at(&self, k: usize) -> usize {
        self.point_at[k]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x - 1]
    }

    fn chord_span(&self, (a, b): (usize, usize)) -> (usize, usize) {
        let (i, j) = (self.index(a), self.index(b));
        (i.min(j), i.max(j))
    }

    /// Chord pairs that intersect: exactly one endpoint of the second lies
    /// strictly inside the index interval of the first.
    pub fn crossing_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let chords = self.chords.pairs();
        let mut out = Vec::new();
        for (i, &p) in chords.iter().enumerate() {
            let (lo, hi) = self.chord_span(p);
            for &q in &chords[i + 1..] {
                let (c, d) = (self.index(q.0), self.index(q.1));
                let inside = |k: usize| lo < k && k < hi;
                if inside(c) != inside(d) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn is_intersection_free(&self) -> bool {
        self.crossing_pairs().is_empty()
    }

    /// Parity of the index difference of the chord's endpoints.
    pub fn chord_parity(&self, chord: (usize, usize)) -> Result<Parity, CircleError> {
        let (a, b) = chord;
        if !self.chords.contains(a, b) {
            return Err(CircleError::UnknownChord(chord));
        }
        Ok(self.distance_parity(a, b))
    }

    /// Parity of the angular distance between two points.
    pub fn distance_parity(&self, a: usize, b: usize) -> Parity {
        if self.index(a).abs_diff(self.index(b)).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Render as a standalone SVG document.
    pub fn to_svg(&self, components: Option<&ComponentReport>) -> String {
        render_svg(self, components)
    }
}

/// Bounded regions of an intersection-free representation, each given by the
/// origins of the arcs on its boundary in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub components: Vec<Vec<usize>>,
}

impl ComponentReport {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Walks the boundary of each bounded region: from origin `a`, the arc to
/// `σ(a)`, then the chord to `ρσ(a)`, which is the next origin.
pub fn bounded_components(
    sigma: &CyclicOrder,
    rho: &Permutation,
) -> Result<ComponentReport, CircleError> {
    let chords = PairPartition::from_involution(rho)?;
    let cr = CircleRepresentation::new(sigma, &chords)?;
    if let Some(&(p, q)) = cr.crossing_pairs().first() {
        return Err(CircleError::Crossing(p, q));
    }
    let size = sigma.degree();
    let mut seen = vec![false; size];
    let mut components = Vec::new();
    for start in 1..=size {
        if seen[start - 1] {
            continue;
        }
        let mut boundary = Vec::new();
        let mut a = start;
        while !seen[a - 1] {
            seen[a - 1] = true;
            boundary.push(a);
            a = rho.apply(sigma.next(a));
        }
        components.push(boundary);
    }
    Ok(ComponentReport { components })
}

const VIEW: f64 = 512.0;
const CENTRE: f64 = 256.0;
const RADIUS: f64 = 200.0;
const LABEL_RADIUS: f64 = 226.0;

fn coord(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Unit circle scaled into a 512×512 viewport. Points are labelled, chords
/// are straight lines, and components (if given) are shaded underneath.
/// Crossing chords are drawn as they are.
pub fn render_svg(cr: &CircleRepresentation, components: Option<&ComponentReport>) -> String {
    let size = cr.ground_size();
    let position = |x: usize, radius: f64| {
        let angle = std::f64::consts::TAU * cr.index(x) as f64 / size as f64;
        (CENTRE + radius * angle.cos(), CENTRE - radius * angle.sin())
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{v}\" height=\"{v}\" viewBox=\"0 0 {v} {v}\">",
        v = VIEW as u32
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    if let Some(report) = components {
        out.push_str("<g id=\"components\" fill=\"#ffe680\" fill-opacity=\"0.6\" stroke=\"none\">\n");
        for (k, boundary) in report.components.iter().enumerate() {
            let mut d = String::new();
            for (t, &a) in boundary.iter().enumerate() {
                let (ax, ay) = position(a, RADIUS);
                let (bx, by) = position(cr.sigma().next(a), RADIUS);
                let cmd = if t == 0 { 'M' } else { 'L' };
                // counterclockwise on screen is sweep flag 0
                let _ = write!(
                    d,
                    "{cmd} {} {} A {r} {r} 0 0 0 {} {} ",
                    coord(ax),
                    coord(ay),
                    coord(bx),
                    coord(by),
                    r = coord(RADIUS)
                );
            }
            d.push('Z');
            let _ = writeln!(out, "<path id=\"component-{k}\" d=\"{d}\"/>");
        }
        out.push_str("</g>\n");
    }

    let _ = writeln!(
        out,
        "<circle id=\"circle\" cx=\"{c}\" cy=\"{c}\" r=\"{r}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
        c = coord(CENTRE),
        r = coord(RADIUS)
    );

    out.push_str("<g id=\"chords\" stroke=\"#1f4e9c\" stroke-width=\"2\">\n");
    for (k, (a, b)) in cr.chords().pairs().into_iter().enumerate() {
        let (x1, y1) = position(a, RADIUS);
        let (x2, y2) = position(b, RADIUS);
        let _ = writeln!(
            out,
            "<line id=\"chord-{k}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            coord(x1),
            coord(y1),
            coord(x2),
            coord(y2)
        );
    }
    out.push_str("</g>\n");

    out.push_str("<g id=\"points\">\n");
    for k in 0..size {
        let x = cr.point_at(k);
        let (px, py) = position(x, RADIUS);
        let (lx, ly) = position(x, LABEL_RADIUS);
        let _ = writeln!(
            out,
            "<circle id=\"point-{k}\" cx=\"{}\" cy=\"{}\" r=\"4.0000\" fill=\"black\"/>",
            coord(px),
            coord(py)
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            coord(lx),
            coord(ly),
            xml_escape(cr.label(x))
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
