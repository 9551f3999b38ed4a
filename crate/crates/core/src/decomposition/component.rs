use serde::{Deserialize, Serialize};

use crate::geodesic::Geodesics;
use crate::structure::components_within;
use crate::vertex_set::VertexSet;

use super::SolveError;

/// A convex piece of the original graph together with its local game state.
///
/// `vertices` is always a union of blocks of the original graph glued along
/// articulation points, so geodesics between its vertices never leave it and
/// the interval table of the whole graph can be used unchanged.
///
/// `pendant` is a virtual selected leaf hanging off that vertex. It stands in
/// for selected vertices elsewhere in the graph whose shortest paths into the
/// piece all pass through the pendant vertex. `blocked` holds vertices already
/// covered by play outside the piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentPosition {
    pub vertices: VertexSet,
    pub selected: VertexSet,
    pub pendant: Option<usize>,
    pub blocked: VertexSet,
}

/// How the rest of the game touches a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BoundaryKind {
    /// Nothing selected yet.
    Free,
    SelectedVertex { vertex: usize },
    PendantSelected { vertex: usize },
    TwoSelected { u: usize, v: usize, covered: VertexSet },
    Many { selected: VertexSet },
}

impl ComponentPosition {
    pub fn new(vertices: VertexSet, selected: VertexSet) -> Self {
        ComponentPosition { vertices, selected, pendant: None, blocked: VertexSet::EMPTY }
    }

    pub fn with_pendant(vertices: VertexSet, pendant: usize) -> Self {
        ComponentPosition { vertices, selected: VertexSet::EMPTY, pendant: Some(pendant), blocked: VertexSet::EMPTY }
    }

    /// Selected vertices plus the pendant vertex.
    pub fn sources(&self) -> VertexSet {
        match self.pendant {
            Some(p) => self.selected.with(p),
            None => self.selected,
        }
    }

    /// Vertices that can no longer be selected.
    pub fn closure(&self, geo: &Geodesics) -> VertexSet {
        if self.selected.is_empty() {
            self.blocked
        } else {
            geo.closure(self.sources()) | self.blocked
        }
    }

    pub fn covered(&self, geo: &Geodesics) -> VertexSet {
        self.closure(geo) - self.selected
    }

    pub fn legal_moves(&self, geo: &Geodesics) -> VertexSet {
        self.vertices - self.closure(geo)
    }

    /// Count of vertices that are neither selected nor covered.
    pub fn open_count(&self, geo: &Geodesics) -> usize {
        self.legal_moves(geo).len()
    }

    pub fn apply_move(&self, geo: &Geodesics, v: usize) -> Result<ComponentPosition, SolveError> {
        if !self.legal_moves(geo).contains(v) {
            return Err(SolveError::IllegalMove(v));
        }
        Ok(ComponentPosition { selected: self.selected.with(v), ..*self })
    }

    pub fn boundary_kind(&self, geo: &Geodesics) -> BoundaryKind {
        let sel = self.selected;
        match (self.pendant, sel.len()) {
            (None, 0) => BoundaryKind::Free,
            (Some(p), 0) => BoundaryKind::PendantSelected { vertex: p },
            (None, 1) => BoundaryKind::SelectedVertex { vertex: sel.first().unwrap_or_default() },
            (None, 2) => {
                let v = sel.to_vec();
                BoundaryKind::TwoSelected { u: v[0], v: v[1], covered: self.covered(geo) & self.vertices }
            }
            _ => BoundaryKind::Many { selected: self.sources() },
        }
    }
}

/// A disjoint sum of components; its value is the nim-sum of theirs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionSum {
    pub parts: Vec<ComponentPosition>,
}

impl PositionSum {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ComponentPosition> {
        self.parts.iter()
    }

    pub fn open_count(&self, geo: &Geodesics) -> usize {
        self.parts.iter().map(|p| p.open_count(geo)).sum()
    }
}

impl FromIterator<ComponentPosition> for PositionSum {
    fn from_iter<I: IntoIterator<Item = ComponentPosition>>(iter: I) -> Self {
        PositionSum { parts: iter.into_iter().collect() }
    }
}

/// Splits the component of `u` at `u` into one piece per side, each with `u` selected.
pub fn split_at_selected_articulation(g: &crate::Graph, u: usize) -> Result<PositionSum, SolveError> {
    let n = g.vertex_count();
    if u >= n {
        return Err(SolveError::NotArticulation(u));
    }
    let component = g.reachable_within(u, g.vertices());
    let sides = components_within(g, component.without(u));
    if sides.len() < 2 {
        return Err(SolveError::NotArticulation(u));
    }
    let single = VertexSet::singleton(u);
    Ok(sides.into_iter().map(|side| ComponentPosition::new(side.with(u), single)).collect())
}
