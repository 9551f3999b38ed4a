use serde::{Deserialize, Serialize};

use crate::geodesic::Geodesics;
use crate::structure::{block_cut_tree_within, edge_count_within, is_cycle_within};

use super::component::ComponentPosition;
use super::SolveError;

/// Shape of a cactus component with at most two selected vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CactusTypeTag {
    /// One selected vertex lying on a cycle.
    TypeI,
    /// One selected vertex that is a leaf, or a selected pendant.
    TypeII,
    /// Two selected vertices on a common cycle.
    TypeIII,
    TreeBase,
    CycleBase,
    /// No legal move remains.
    Empty,
}

pub fn classify_cactus_position(geo: &Geodesics, c: &ComponentPosition) -> Result<CactusTypeTag, SolveError> {
    let g = geo.graph();
    let part = c.vertices;
    let bct = block_cut_tree_within(g, part);
    if !bct.blocks.iter().all(|&b| b.len() <= 2 || is_cycle_within(g, b)) {
        return Err(SolveError::NotACactus);
    }
    let sources = c.sources();
    if sources.len() > 2 {
        return Err(SolveError::TooManySelected(sources.len()));
    }
    if c.legal_moves(geo).is_empty() {
        return Ok(CactusTypeTag::Empty);
    }
    if g.is_connected_within(part) && edge_count_within(g, part) + 1 == part.len() {
        return Ok(CactusTypeTag::TreeBase);
    }
    if is_cycle_within(g, part) {
        return Ok(CactusTypeTag::CycleBase);
    }
    let on_cycle = |v: usize| bct.blocks.iter().any(|&b| b.len() > 2 && b.contains(v));
    match (sources.to_vec().as_slice(), c.pendant) {
        ([], _) => Err(SolveError::NotReduced),
        ([_], Some(_)) => Ok(CactusTypeTag::TypeII),
        ([s], None) if (g.neighbors(*s) & part).len() == 1 => Ok(CactusTypeTag::TypeII),
        ([s], None) if on_cycle(*s) => Ok(CactusTypeTag::TypeI),
        ([u, v], _) if bct.blocks.iter().any(|&b| b.len() > 2 && b.contains(*u) && b.contains(*v)) => {
            Ok(CactusTypeTag::TypeIII)
        }
        _ => Err(SolveError::NotReduced),
    }
}
