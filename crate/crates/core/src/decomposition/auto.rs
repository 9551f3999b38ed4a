use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{closed_form_lookup, Evaluation};
use crate::family::{is_block_graph, is_cactus, recognize_family, GraphClassTag};
use crate::game::{GameSolver, SearchConfig};
use crate::geodesic::Geodesics;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::{solve_block_graph, solve_cactus, solve_tree, SolveError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    ClosedForm,
    Tree,
    BlockGraph,
    Cactus,
    Brute,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::ClosedForm => "closed-form",
            SolverKind::Tree => "tree",
            SolverKind::BlockGraph => "block-graph",
            SolverKind::Cactus => "cactus",
            SolverKind::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutoSolution {
    pub evaluation: Evaluation,
    pub solver: SolverKind,
}

pub fn solve_auto(g: &Graph) -> Result<AutoSolution, SolveError> {
    solve_auto_with(g, SearchConfig::default())
}

/// Closed form first, then the most specific decomposition solver, then exhaustive search.
pub fn solve_auto_with(g: &Graph, config: SearchConfig) -> Result<AutoSolution, SolveError> {
    let solver = if g.vertex_count() == 0 {
        SolverKind::Brute
    } else if !g.is_connected() {
        if is_block_graph(g) {
            SolverKind::BlockGraph
        } else if is_cactus(g) {
            SolverKind::Cactus
        } else {
            SolverKind::Brute
        }
    } else {
        match recognize_family(g)? {
            GraphClassTag::Tree => SolverKind::Tree,
            GraphClassTag::BlockGraph => SolverKind::BlockGraph,
            GraphClassTag::Cactus => SolverKind::Cactus,
            GraphClassTag::General => SolverKind::Brute,
            _ => SolverKind::ClosedForm,
        }
    };
    let evaluation = solve_with(g, solver, config)?;
    Ok(AutoSolution { evaluation, solver })
}

/// Runs one specific solver on the empty position.
pub fn solve_with(g: &Graph, solver: SolverKind, config: SearchConfig) -> Result<Evaluation, SolveError> {
    let value = match solver {
        SolverKind::ClosedForm => {
            let tag = recognize_family(g)?;
            return closed_form_lookup(g, &tag)?.ok_or(SolveError::NoClosedForm);
        }
        SolverKind::Tree => solve_tree(g, VertexSet::EMPTY)?,
        SolverKind::BlockGraph => solve_block_graph(g)?,
        SolverKind::Cactus => solve_cactus(g)?,
        SolverKind::Brute => {
            let solver = GameSolver::with_config(Arc::new(Geodesics::new(g.clone())), config);
            solver.grundy(VertexSet::EMPTY)?
        }
    };
    Ok(Evaluation::Grundy(value))
}
