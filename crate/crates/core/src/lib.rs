//! Solvers for the closed geodetic game.
//!
//! Two players alternately select a vertex that is not yet in the geodetic
//! closure of the selected set; whoever selects last wins. This crate computes
//! Sprague–Grundy values by exhaustive memoized search ([`GameSolver`]), by
//! closed forms for the families where they are known ([`closed_forms`]), and by
//! decomposition along articulation points for trees, block graphs and cacti
//! ([`decomposition`]).

pub mod closed_forms;
pub mod decomposition;
pub mod family;
pub mod game;
pub mod generators;
pub mod geodesic;
pub mod graph;
pub mod product;
pub mod structure;
mod vertex_set;

pub use family::{recognize_family, GraphClassTag};
pub use game::{GameError, GameSolver, GrundyValue, Outcome, PlayoutPolicy, Position};
pub use geodesic::{all_pairs_distances, closure, interval, DistanceMatrix, Geodesics, IntervalTable};
pub use graph::{parse_graph, Graph, GraphError};
pub use product::cartesian_product;
pub use structure::{block_cut_tree, connected_components, simplicial_vertices, BlockCutTree};
pub use vertex_set::{VertexSet, MAX_VERTICES};
