//! Combinatorial folding of closed simplicial surfaces onto a single triangle.
//!
//! The pipeline runs from an incidence structure ([`Surface`]) through a
//! vertex-3-colouring and its three colour involutions to a folding order,
//! i.e. a cyclic order of the faces whose product with every colour
//! involution has `|F|/2 + 1` cycles.

pub mod circle;
pub mod colouring;
pub mod fold;
pub mod generate;
pub mod labels;
pub mod perm;
pub mod surface;

pub use circle::{bounded_components, render_svg, CircleRepresentation, ComponentReport, Parity};
pub use colouring::{
    colour_involutions, colouring_as_map_to_triangle, find_orientation, find_vertex_colourings,
    induced_edge_colouring, parity_classes, Colour, ColourInvolution, EdgeColouring, OddCycle,
    Orientability, Orientation, ParityClasses, Sign, VertexColouring,
};
pub use fold::{
    enumerate_foldings, find_folding, find_folding_with, verify_folding, FoldError, FoldOptions,
    FoldVerdict, OracleReport, SearchMode, UnfoldReason,
};
pub use labels::FaceIndex;
pub use perm::{CyclicOrder, LinearOrder, PairPartition, Permutation};
pub use surface::{
    builtin, parse_surface, serialize_surface, validate, verify_simplicial_map, SimplicialMap,
    Surface, SurfaceError, Violation,
};
