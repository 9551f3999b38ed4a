//! Polynomial solvers for trees, block graphs and cacti.
//!
//! Positions are rewritten into disjoint sums of [`ComponentPosition`]s by
//! cutting at articulation points, and each irreducible piece is evaluated by
//! a mex over its moves. Every piece is a convex subgraph of the input, so the
//! interval table of the whole graph serves all of them.

mod auto;
mod cactus;
mod component;
mod engine;
mod tree;

use thiserror::Error;

use crate::closed_forms::ClosedFormError;
use crate::family::{is_block_graph, is_cactus};
use crate::game::{GameError, GrundyValue};
use crate::graph::{Graph, GraphError};

pub use auto::{solve_auto, solve_auto_with, solve_with, AutoSolution, SolverKind};
pub use cactus::{classify_cactus_position, CactusTypeTag};
pub use component::{split_at_selected_articulation, BoundaryKind, ComponentPosition, PositionSum};
pub use engine::{DecompositionConfig, Decomposer};
pub use tree::{solve_tree, TreeTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a block graph")]
    NotABlockGraph,
    #[error("graph is not a cactus")]
    NotACactus,
    #[error("{0} selected vertices; at most two expected")]
    TooManySelected(usize),
    #[error("component still splits at an articulation point")]
    NotReduced,
    #[error("vertex {0} is not an articulation point")]
    NotArticulation(usize),
    #[error("vertex {0} is not a legal move")]
    IllegalMove(usize),
    #[error("vertex {0} is not in the graph")]
    InvalidVertex(usize),
    #[error("no closed form for this graph")]
    NoClosedForm,
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

pub fn solve_block_graph(g: &Graph) -> Result<GrundyValue, SolveError> {
    if !is_block_graph(g) {
        return Err(SolveError::NotABlockGraph);
    }
    Ok(Decomposer::new(g.clone()).grundy_selected(crate::VertexSet::EMPTY))
}

pub fn solve_cactus(g: &Graph) -> Result<GrundyValue, SolveError> {
    if !is_cactus(g) {
        return Err(SolveError::NotACactus);
    }
    Ok(Decomposer::new(g.clone()).grundy_selected(crate::VertexSet::EMPTY))
}
