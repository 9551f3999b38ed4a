//! The closed geodetic game: positions, exhaustive evaluation and play policies.

mod position;
mod solver;
pub(crate) mod value;

use thiserror::Error;

pub use position::Position;
pub use solver::{
    random_playout, AnalysisReport, GameSolver, OptionValue, PlayoutPolicy, SearchConfig, DEFAULT_BUDGET,
};
pub use value::{mex, nim_sum, GrundyValue, Outcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("vertex {vertex} is not in the graph (n = {n})")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("vertex {vertex} is already selected or covered")]
    IllegalMove { vertex: usize },
    #[error("search budget of {budget} states exceeded")]
    BudgetExceeded { budget: u64 },
}
