//! Deciding triangle-foldability and checking folding orders.
//!
//! A folding order is a linear order on the faces in which, for each edge
//! colour, the face pairs across edges of that colour are properly nested.
//! The search fixes the smallest face first and grows the order one face at
//! a time, keeping one nesting stack per colour.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::colouring::{
    colour_involutions, find_orientation, find_vertex_colourings, induced_edge_colouring,
    parity_classes, ColourInvolution, ColouringError, OddCycle, Orientability, VertexColouring,
};
use crate::labels::FaceIndex;
use crate::perm::{
    cycle_count_criterion, is_intersection_free_linear, CyclicOrder, LinearOrder, PairPartition,
    Permutation,
};
use crate::surface::{Surface, SurfaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("surface has {0} connected components; folding needs a connected surface")]
    Disconnected(usize),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error("order is not an arrangement of the faces: {0}")]
    InvalidOrder(String),
    #[error("folding checks disagree: {0}")]
    OracleDisagreement(OracleReport),
}

impl FoldError {
    pub fn kind(&self) -> &'static str {
        match self {
            FoldError::Surface(e) => e.kind(),
            FoldError::Disconnected(_) => "disconnected",
            FoldError::Colouring(ColouringError::Surface(e)) => e.kind(),
            FoldError::Colouring(_) => "improper-colouring",
            FoldError::InvalidOrder(_) => "invalid-order",
            FoldError::OracleDisagreement(_) => "internal-inconsistency",
        }
    }
}

/// Outcome of the three independent folding checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    /// No two same-coloured edges with faces `f₁ < g₁ < f₂ < g₂`.
    pub definition: bool,
    /// Every colour partition passes the linear nesting check.
    pub linear_if: bool,
    /// Every colour involution times the induced cyclic order has `|F|/2 + 1` cycles.
    pub cycle_count: bool,
}

impl OracleReport {
    pub fn all(&self) -> bool {
        self.definition && self.linear_if && self.cycle_count
    }

    fn agree(&self) -> bool {
        self.definition == self.linear_if && self.linear_if == self.cycle_count
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "definition={} linear_if={} cycle_count={}",
            self.definition, self.linear_if, self.cycle_count
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnfoldReason {
    NoVertexColouring,
    NotOrientable,
    ParityFailure,
    ExhaustedSearch,
}

impl UnfoldReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnfoldReason::NoVertexColouring => "no-vertex-colouring",
            UnfoldReason::NotOrientable => "not-orientable",
            UnfoldReason::ParityFailure => "parity-failure",
            UnfoldReason::ExhaustedSearch => "exhausted-search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefutationWitness {
    None,
    OddCycle(OddCycle),
    /// Node counts of the complete search, one per colouring representative.
    Search { nodes_per_colouring: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Folding {
    pub colouring: VertexColouring,
    pub order: Vec<String>,
    pub cyclic: CyclicOrder,
    pub oracles: OracleReport,
    pub search_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub reason: UnfoldReason,
    pub witness: RefutationWitness,
    pub search_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoldVerdict {
    Foldable(Folding),
    Unfoldable(Refutation),
}

impl FoldVerdict {
    pub fn is_foldable(&self) -> bool {
        matches!(self, FoldVerdict::Foldable(_))
    }

    pub fn folding(&self) -> Option<&Folding> {
        match self {
            FoldVerdict::Foldable(f) => Some(f),
            FoldVerdict::Unfoldable(_) => None,
        }
    }

    pub fn reason(&self) -> Option<UnfoldReason> {
        match self {
            FoldVerdict::Foldable(_) => None,
            FoldVerdict::Unfoldable(r) => Some(r.reason),
        }
    }

    /// The verdict document, keys sorted.
    pub fn to_json(&self) -> Value {
        match self {
            FoldVerdict::Foldable(f) => json!({
                "outcome": "foldable",
                "colouring": f.colouring,
                "witness": f.order,
                "oracles": f.oracles,
            }),
            FoldVerdict::Unfoldable(r) => {
                let witness = match &r.witness {
                    RefutationWitness::None => json!({}),
                    RefutationWitness::OddCycle(c) => json!({ "odd_cycle": c }),
                    RefutationWitness::Search { nodes_per_colouring } => json!({
                        "colourings_searched": nodes_per_colouring.len(),
                        "nodes_per_colouring": nodes_per_colouring,
                    }),
                };
                json!({
                    "outcome": "unfoldable",
                    "reason": r.reason.as_str(),
                    "witness": witness,
                    "search_nodes": r.search_nodes,
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Reject a prefix as soon as some colour's nesting stack is violated.
    #[default]
    Pruned,
    /// Generate every head-fixed order and test complete orders only.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldOptions {
    /// Run the orientation and parity rejections before searching.
    pub necessary_checks: bool,
    pub mode: SearchMode,
}

impl Default for FoldOptions {
    fn default() -> Self {
        FoldOptions {
            necessary_checks: true,
            mode: SearchMode::Pruned,
        }
    }
}

/// Colour involutions of one colouring as permutations on face points.
struct FoldProblem {
    index: FaceIndex,
    involutions: [Permutation; 3],
    // partners[c][i]: zero-based partner of zero-based face i across colour c
    partners: [Vec<usize>; 3],
}

impl FoldProblem {
    fn new(s: &Surface, cv: &VertexColouring) -> Result<FoldProblem, FoldError> {
        let ce = induced_edge_colouring(s, cv)?;
        let invs = colour_involutions(s, &ce)?;
        Ok(Self::from_involutions(FaceIndex::new(s.face_ids()), &invs))
    }

    fn from_involutions(index: FaceIndex, invs: &[ColourInvolution; 3]) -> FoldProblem {
        let involutions = [0, 1, 2].map(|c| invs[c].to_permutation(&index));
        let partners = [0, 1, 2].map(|c| {
            involutions[c]
                .images()
                .into_iter()
                .map(|p| p - 1)
                .collect::<Vec<_>>()
        });
        FoldProblem {
            index,
            involutions,
            partners,
        }
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    fn names(&self, order: &[usize]) -> Vec<String> {
        order.iter().map(|&i| self.index.id(i + 1).to_string()).collect()
    }
}

struct Search<'a> {
    problem: &'a FoldProblem,
    placed: Vec<bool>,
    order: Vec<usize>,
    stacks: [Vec<usize>; 3],
    nodes: u64,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(problem: &'a FoldProblem, limit: usize) -> Self {
        let n = problem.len();
        Search {
            problem,
            placed: vec![false; n],
            order: Vec::with_capacity(n),
            stacks: Default::default(),
            nodes: 0,
            limit,
            found: Vec::new(),
        }
    }

    /// Appends `f` unless it would close a pair that is not innermost.
    fn try_place(&mut self, f: usize) -> bool {
        for c in 0..3 {
            let p = self.problem.partners[c][f];
            if self.placed[p] && self.stacks[c].last() != Some(&p) {
                return false;
            }
        }
        self.place_unchecked(f);
        true
    }

    fn place_unchecked(&mut self, f: usize) {
        for c in 0..3 {
            let p = self.problem.partners[c][f];
            if self.placed[p] {
                self.stacks[c].pop();
            } else {
                self.stacks[c].push(f);
            }
        }
        self.placed[f] = true;
        self.order.push(f);
        self.nodes += 1;
    }

    fn unplace(&mut self, f: usize) {
        self.order.pop();
        self.placed[f] = false;
        for c in 0..3 {
            let p = self.problem.partners[c][f];
            if self.placed[p] {
                self.stacks[c].push(p);
            } else {
                self.stacks[c].pop();
            }
        }
    }

    fn done(&self) -> bool {
        self.found.len() >= self.limit
    }

    fn run(&mut self, mode: SearchMode) {
        if self.problem.len() == 0 || self.limit == 0 {
            return;
        }
        self.place_unchecked(0);
        match mode {
            SearchMode::Pruned => self.extend_pruned(),
            SearchMode::Exhaustive => self.extend_exhaustive(),
        }
    }

    fn extend_pruned(&mut self) {
        if self.order.len() == self.problem.len() {
            self.found.push(self.order.clone());
            return;
        }
        for f in 0..self.problem.len() {
            if self.placed[f] || !self.try_place(f) {
                continue;
            }
            self.extend_pruned();
            self.unplace(f);
            if self.done() {
                return;
            }
        }
    }

    fn extend_exhaustive(&mut self) {
        if self.order.len() == self.problem.len() {
            if self.stacks.iter().all(|s| s.is_empty()) && self.complete_order_nests() {
                self.found.push(self.order.clone());
            }
            return;
        }
        for f in 0..self.problem.len() {
            if self.placed[f] {
                continue;
            }
            self.place_unchecked(f);
            self.extend_exhaustive();
            self.unplace(f);
            if self.done() {
                return;
            }
        }
    }

    fn complete_order_nests(&self) -> bool {
        let linear = LinearOrder::new(self.order.iter().map(|&i| i + 1).collect())
            .expect("complete order");
        self.problem.involutions.iter().all(|rho| {
            let p = PairPartition::from_involution(rho).expect("colour involution");
            is_intersection_free_linear(&p, &linear)
        })
    }
}

fn check_connected(s: &Surface) -> Result<(), FoldError> {
    let components = s.vertex_components().len();
    if components != 1 {
        return Err(FoldError::Disconnected(components));
    }
    Ok(())
}

pub fn find_folding(s: &Surface) -> Result<FoldVerdict, FoldError> {
    find_folding_with(s, &FoldOptions::default())
}

/// Decides foldability. Per colouring representative: build the colour
/// involutions, optionally reject by orientation and parity, then search for
/// a head-fixed nesting order. A witness is re-verified before it is returned.
pub fn find_folding_with(s: &Surface, options: &FoldOptions) -> Result<FoldVerdict, FoldError> {
    s.require_closed()?;
    check_connected(s)?;

    let colourings = find_vertex_colourings(s);
    if colourings.is_empty() {
        return Ok(FoldVerdict::Unfoldable(Refutation {
            reason: UnfoldReason::NoVertexColouring,
            witness: RefutationWitness::None,
            search_nodes: 0,
        }));
    }

    if options.necessary_checks {
        if let Orientability::NonOrientable(cycle) = find_orientation(s)? {
            return Ok(FoldVerdict::Unfoldable(Refutation {
                reason: UnfoldReason::NotOrientable,
                witness: RefutationWitness::OddCycle(cycle),
                search_nodes: 0,
            }));
        }
    }

    let mut nodes_per_colouring = Vec::new();
    let mut parity_failure = None;
    for cv in &colourings {
        let ce = induced_edge_colouring(s, cv)?;
        let invs = colour_involutions(s, &ce)?;
        if options.necessary_checks {
            if let Err(cycle) = parity_classes(&invs, s.face_ids()) {
                parity_failure.get_or_insert(cycle);
                continue;
            }
        }
        let problem = FoldProblem::from_involutions(FaceIndex::new(s.face_ids()), &invs);
        let mut search = Search::new(&problem, 1);
        search.run(options.mode);
        if let Some(order) = search.found.pop() {
            let order = problem.names(&order);
            let oracles = verify_folding(s, cv, &order)?;
            if !oracles.all() {
                return Err(FoldError::OracleDisagreement(oracles));
            }
            let searched: u64 = nodes_per_colouring.iter().sum();
            let linear = LinearOrder::new(
                order
                    .iter()
                    .map(|f| problem.index.point(f).expect("face"))
                    .collect(),
            )
            .expect("complete order");
            return Ok(FoldVerdict::Foldable(Folding {
                colouring: cv.clone(),
                cyclic: linear.induced_cyclic(),
                order,
                oracles,
                search_nodes: searched + search.nodes,
            }));
        }
        nodes_per_colouring.push(search.nodes);
    }

    let search_nodes = nodes_per_colouring.iter().sum();
    Ok(FoldVerdict::Unfoldable(if nodes_per_colouring.is_empty() {
        Refutation {
            reason: UnfoldReason::ParityFailure,
            witness: RefutationWitness::OddCycle(parity_failure.expect("every colouring was rejected")),
            search_nodes,
        }
    } else {
        Refutation {
            reason: UnfoldReason::ExhaustedSearch,
            witness: RefutationWitness::Search { nodes_per_colouring },
            search_nodes,
        }
    }))
}

/// Folding orders for `cv` with the smallest face first, in lexicographic
/// order of face points, at most `limit` of them.
pub fn enumerate_foldings(
    s: &Surface,
    cv: &VertexColouring,
    limit: usize,
) -> Result<Vec<Vec<String>>, FoldError> {
    enumerate_foldings_with(s, cv, limit, SearchMode::Pruned)
}

pub fn enumerate_foldings_with(
    s: &Surface,
    cv: &VertexColouring,
    limit: usize,
    mode: SearchMode,
) -> Result<Vec<Vec<String>>, FoldError> {
    s.require_closed()?;
    check_connected(s)?;
    let problem = FoldProblem::new(s, cv)?;
    let mut search = Search::new(&problem, limit);
    search.run(mode);
    Ok(search.found.iter().map(|o| problem.names(o)).collect())
}

/// Runs the three folding checks on `order`. They must agree; disagreement
/// is reported as an error.
pub fn verify_folding(
    s: &Surface,
    cv: &VertexColouring,
    order: &[String],
) -> Result<OracleReport, FoldError> {
    s.require_closed()?;
    let index = FaceIndex::new(s.face_ids());
    if order.len() != index.len() {
        return Err(FoldError::InvalidOrder(format!(
            "{} entries for {} faces",
            order.len(),
            index.len()
        )));
    }
    let mut points = Vec::with_capacity(order.len());
    for f in order {
        let p = index
            .point(f)
            .ok_or_else(|| FoldError::InvalidOrder(format!("unknown face {f:?}")))?;
        points.push(p);
    }
    let linear = LinearOrder::new(points)
        .map_err(|_| FoldError::InvalidOrder("a face appears twice".into()))?;

    let ce = induced_edge_colouring(s, cv)?;
    let invs = colour_involutions(s, &ce)?;

    let rank = linear.positions();
    let span = |(f, g): &(String, String)| {
        let (a, b) = (rank[index.point(f).unwrap() - 1], rank[index.point(g).unwrap() - 1]);
        (a.min(b), a.max(b))
    };
    let definition = invs.iter().all(|inv| {
        let spans: Vec<(usize, usize)> = inv.pairs().iter().map(span).collect();
        spans.iter().enumerate().all(|(i, &(a, b))| {
            spans[i + 1..]
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
        })
    });

    let perms: Vec<Permutation> = invs.iter().map(|inv| inv.to_permutation(&index)).collect();
    let linear_if = perms.iter().all(|rho| {
        let p = PairPartition::from_involution(rho).expect("colour involution");
        is_intersection_free_linear(&p, &linear)
    });

    let cyclic = linear.induced_cyclic();
    let mut cycle_count = true;
    for rho in &perms {
        cycle_count &= cycle_count_criterion(&cyclic, rho).expect("even face count, involution");
    }

    let report = OracleReport {
        definition,
        linear_if,
        cycle_count,
    };
    if !report.agree() {
        return Err(FoldError::OracleDisagreement(report));
    }
    Ok(report)
}

/// The same cyclic order cut at `base`.
pub fn rotate_order(order: &[String], base: &str) -> Option<Vec<String>> {
    let at = order.iter().position(|f| f == base)?;
    Some(order[at..].iter().chain(&order[..at]).cloned().collect())
}
