//! Permutations on `1..=m`, cyclic and linear orders, and pair partitions.
//!
//! Composition is right-to-left: `p.compose(&q)` maps `x` to `p(q(x))`, so
//! the product written `ρσ` is `rho.compose(&sigma)` and applies `σ` first.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images do not form a bijection on 1..={0}")]
    NotBijective(usize),
    #[error("ground sets differ: {left} points vs {right} points")]
    GroundMismatch { left: usize, right: usize },
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cycle notation: {0}")]
    Parse(String),
    #[error("permutation is not a single cycle through all {0} points")]
    NotFullCycle(usize),
    #[error("permutation is not a fix-point-free involution")]
    NotFixedPointFreeInvolution,
    #[error("ground set has odd size {0}")]
    OddGroundSet(usize),
    #[error("{0} is not a fixed point of the product")]
    NotFixedPoint(usize),
    #[error("reduct needs at least four points, got {0}")]
    ReductTooSmall(usize),
    #[error("not a pair partition of 1..={degree}: {reason}")]
    InvalidPartition { degree: usize, reason: String },
    #[error("linear order is not an arrangement of 1..={0}")]
    InvalidLinearOrder(usize),
}

/// A bijection on the points `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] is the image of point i + 1, stored zero-based
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from one-based images: `images[i]` is the image of `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut zero_based = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree || seen[img - 1] {
                return Err(PermError::NotBijective(degree));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation from disjoint cycles on `1..=degree`. Points not
    /// mentioned are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(PermError::Parse(format!("point {p} appears twice")));
                }
                seen[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1,4,3)(2,5)"` on `1..=degree`.
    /// Whitespace is ignored; `""` and `"()"` denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        Self::from_cycles(&parse_cycle_list(text)?, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// One-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::GroundMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// Disjoint cycles including fixed points, each starting at its minimum,
    /// sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &img)| i == img)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| img != i && self.images[img] == i)
    }

    /// Cycle notation with each point rendered by `label`. Fixed points are omitted;
    /// the identity renders as `()`.
    pub fn to_cycle_string_with<F: Fn(usize) -> String>(&self, label: F) -> String {
        let mut out = String::new();
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            out.push('(');
            let parts: Vec<String> = cycle.into_iter().map(&label).collect();
            out.push_str(&parts.join(","));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string_with(|p| p.to_string()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses cycle notation, taking the degree to be the largest point mentioned.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cycles = parse_cycle_list(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        Self::from_cycles(&cycles, degree)
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Parse(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Parse("unterminated cycle".into()))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let cycle = inner
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .ok()
                        .filter(|&p| p > 0)
                        .ok_or_else(|| PermError::Parse(format!("bad point {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

/// A single cycle through every point of the ground set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclicOrder(Permutation);

impl CyclicOrder {
    pub fn new(perm: Permutation) -> Result<Self, PermError> {
        let degree = perm.degree();
        if degree == 0 || perm.cycle_count() != 1 {
            return Err(PermError::NotFullCycle(degree));
        }
        Ok(CyclicOrder(perm))
    }

    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        Self::new(Permutation::parse_cycles(text, degree)?)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    #[inline]
    pub fn next(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    /// Cuts the cycle at `base`: `[base, σ(base), σ²(base), …]`.
    pub fn induced_linear(&self, base: usize) -> Result<LinearOrder, PermError> {
        let degree = self.degree();
        if base == 0 || base > degree {
            return Err(PermError::PointOutOfRange { point: base, degree });
        }
        let mut seq = Vec::with_capacity(degree);
        let mut x = base;
        for _ in 0..degree {
            seq.push(x);
            x = self.next(x);
        }
        Ok(LinearOrder(seq))
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 1 {
            return f.write_str("(1)");
        }
        self.0.fmt(f)
    }
}

/// An arrangement of `1..=m`, smallest first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearOrder(Vec<usize>);

impl LinearOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self, PermError> {
        let degree = seq.len();
        let mut seen = vec![false; degree];
        for &x in &seq {
            if x == 0 || x > degree || seen[x - 1] {
                return Err(PermError::InvalidLinearOrder(degree));
            }
            seen[x - 1] = true;
        }
        Ok(LinearOrder(seq))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The last element is followed by the first.
    pub fn induced_cyclic(&self) -> CyclicOrder {
        let degree = self.0.len();
        let mut images = vec![0; degree];
        for (i, &x) in self.0.iter().enumerate() {
            images[x - 1] = self.0[(i + 1) % degree] - 1;
        }
        CyclicOrder(Permutation { images })
    }

    /// `positions()[x - 1]` is the rank of `x` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (rank, &x) in self.0.iter().enumerate() {
            pos[x - 1] = rank;
        }
        pos
    }
}

/// A partition of `1..=m` into two-element blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairPartition {
    // partner[x - 1] is the other element of x's block, one-based
    partner: Vec<usize>,
}

impl PairPartition {
    pub fn new(pairs: &[(usize, usize)], degree: usize) -> Result<Self, PermError> {
        let invalid = |reason: String| PermError::InvalidPartition { degree, reason };
        let mut partner = vec![0; degree];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x == 0 || x > degree {
                    return Err(invalid(format!("element {x} out of range")));
                }
                if partner[x - 1] != 0 {
                    return Err(invalid(format!("element {x} in two pairs")));
                }
            }
            if a == b {
                return Err(invalid(format!("pair {{{a},{a}}} is degenerate")));
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        if let Some(missing) = partner.iter().position(|&p| p == 0) {
            return Err(invalid(format!("element {} not covered", missing + 1)));
        }
        Ok(PairPartition { partner })
    }

    /// The orbits of a fix-point-free involution.
    pub fn from_involution(rho: &Permutation) -> Result<Self, PermError> {
        if !rho.is_fixed_point_free_involution() {
            return Err(PermError::NotFixedPointFreeInvolution);
        }
        Ok(PairPartition {
            partner: rho.images(),
        })
    }

    pub fn degree(&self) -> usize {
        self.partner.len()
    }

    #[inline]
    pub fn partner(&self, x: usize) -> usize {
        self.partner[x - 1]
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.degree())
            .filter(|&a| a < self.partner(a))
            .map(|a| (a, self.partner(a)))
            .collect()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.degree() && self.partner(a) == b
    }

    pub fn to_involution(&self) -> Permutation {
        Permutation {
            images: self.partner.iter().map(|&p| p - 1).collect(),
        }
    }
}

/// Stack-nesting check: scanning left to right, each closing element must
/// match the most recently opened pair.
pub fn is_intersection_free_linear(p: &PairPartition, l: &LinearOrder) -> bool {
    assert_eq!(p.degree(), l.len(), "partition and order on different ground sets");
    let pos = l.positions();
    let mut stack: Vec<usize> = Vec::new();
    for &x in l.as_slice() {
        let y = p.partner(x);
        if pos[y - 1] > pos[x - 1] {
            stack.push(x);
        } else if stack.pop() != Some(y) {
            return false;
        }
    }
    true
}

/// Pairwise check: no pairs `{a, b}`, `{c, d}` with `a < c < b < d`.
pub fn is_intersection_free_linear_by_pairs(p: &PairPartition, l: &LinearOrder) -> bool {
    assert_eq!(p.degree(), l.len(), "partition and order on different ground sets");
    let pos = l.positions();
    let spans: Vec<(usize, usize)> = p
        .pairs()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (pos[a - 1], pos[b - 1]);
            (x.min(y), x.max(y))
        })
        .collect();
    for (i, &(a, b)) in spans.iter().enumerate() {
        for &(c, d) in &spans[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}

/// Direct quantifier check: there is no `m` and `1 ≤ i < j < k < |M|` with
/// `{m, σʲ(m)}` and `{σⁱ(m), σᵏ(m)}` both blocks of `p`.
pub fn is_intersection_free_cyclic(p: &PairPartition, c: &CyclicOrder) -> bool {
    let size = c.degree();
    assert_eq!(p.degree(), size, "partition and order on different ground sets");
    let mut orbit = vec![0; size];
    for m in 1..=size {
        // orbit[t] = σᵗ(m)
        let mut x = m;
        for slot in orbit.iter_mut() {
            *slot = x;
            x = c.next(x);
        }
        for j in 2..size {
            if !p.contains(m, orbit[j]) {
                continue;
            }
            for i in 1..j {
                for k in j + 1..size {
                    if p.contains(orbit[i], orbit[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Cyclic check through a cut at point 1 followed by the stack check.
pub fn is_intersection_free_cyclic_by_cut(p: &PairPartition, c: &CyclicOrder) -> bool {
    let cut = c.induced_linear(1).expect("cyclic orders are nonempty");
    is_intersection_free_linear(p, &cut)
}

/// Whether `ρσ` has exactly `n + 1` cycles on `2n` points.
pub fn cycle_count_criterion(sigma: &CyclicOrder, rho: &Permutation) -> Result<bool, PermError> {
    let degree = sigma.degree();
    if !degree.is_multiple_of(2) {
        return Err(PermError::OddGroundSet(degree));
    }
    if rho.degree() != degree {
        return Err(PermError::GroundMismatch {
            left: rho.degree(),
            right: degree,
        });
    }
    if !rho.is_fixed_point_free_involution() {
        return Err(PermError::NotFixedPointFreeInvolution);
    }
    let product = rho.compose(sigma.as_permutation())?;
    Ok(product.cycle_count() == degree / 2 + 1)
}

/// A cyclic order and involution with one adjacent pair removed.
///
/// The reduced ground set is relabelled to `1..=m-2`; `kept[i]` is the
/// original label of new point `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduct {
    pub kept: Vec<usize>,
    pub sigma: CyclicOrder,
    pub rho: Permutation,
}

impl Reduct {
    pub fn original_label(&self, point: usize) -> usize {
        self.kept[point - 1]
    }

    pub fn sigma_in_original_labels(&self) -> String {
        self.sigma
            .as_permutation()
            .to_cycle_string_with(|p| self.original_label(p).to_string())
    }

    pub fn rho_in_original_labels(&self) -> String {
        self.rho
            .to_cycle_string_with(|p| self.original_label(p).to_string())
    }
}

/// Removes the fixed point `f` of `ρσ` together with `σ(f)`: the removed pair is
/// skipped over by `σ`, and `ρ` is restricted.
pub fn reduct(sigma: &CyclicOrder, rho: &Permutation, f: usize) -> Result<Reduct, PermError> {
    let degree = sigma.degree();
    if rho.degree() != degree {
        return Err(PermError::GroundMismatch {
            left: rho.degree(),
            right: degree,
        });
    }
    if !rho.is_fixed_point_free_involution() {
        return Err(PermError::NotFixedPointFreeInvolution);
    }
    if degree <= 2 {
        return Err(PermError::ReductTooSmall(degree));
    }
    if f == 0 || f > degree {
        return Err(PermError::PointOutOfRange { point: f, degree });
    }
    let g = sigma.next(f);
    if rho.apply(g) != f {
        return Err(PermError::NotFixedPoint(f));
    }
    let kept: Vec<usize> = (1..=degree).filter(|&k| k != f && k != g).collect();
    let mut new_label = vec![0; degree + 1];
    for (i, &k) in kept.iter().enumerate() {
        new_label[k] = i + 1;
    }
    let sigma_images: Vec<usize> = kept
        .iter()
        .map(|&k| {
            let s = sigma.next(k);
            let target = if s == f { sigma.next(sigma.next(s)) } else { s };
            new_label[target]
        })
        .collect();
    let rho_images: Vec<usize> = kept.iter().map(|&k| new_label[rho.apply(k)]).collect();
    Ok(Reduct {
        sigma: CyclicOrder::new(Permutation::from_images(&sigma_images)?)?,
        rho: Permutation::from_images(&rho_images)?,
        kept,
    })
}
