use crate::game::GameError;
use crate::geodesic::Geodesics;
use crate::vertex_set::VertexSet;

/// A game position: a graph together with the selected set `S`.
///
/// The closure of `S` is always recomputed from the interval table, never stored.
#[derive(Clone, Copy, Debug)]
pub struct Position<'g> {
    geo: &'g Geodesics,
    selected: VertexSet,
}

impl<'g> Position<'g> {
    /// Starting position with nothing selected.
    pub fn new(geo: &'g Geodesics) -> Self {
        Position { geo, selected: VertexSet::EMPTY }
    }

    pub fn with_selected(geo: &'g Geodesics, selected: VertexSet) -> Result<Self, GameError> {
        let n = geo.graph().vertex_count();
        if let Some(v) = (selected - VertexSet::full(n)).first() {
            return Err(GameError::InvalidVertex { vertex: v, n });
        }
        Ok(Position { geo, selected })
    }

    #[inline]
    pub fn geodesics(&self) -> &'g Geodesics {
        self.geo
    }

    #[inline]
    pub fn selected(&self) -> VertexSet {
        self.selected
    }

    pub fn closure(&self) -> VertexSet {
        self.geo.closure(self.selected)
    }

    /// Vertices in the closure that are not themselves selected.
    pub fn covered(&self) -> VertexSet {
        self.closure() - self.selected
    }

    pub fn legal_moves(&self) -> VertexSet {
        self.geo.graph().vertices() - self.closure()
    }

    pub fn is_terminal(&self) -> bool {
        self.legal_moves().is_empty()
    }

    pub fn apply_move(&self, v: usize) -> Result<Position<'g>, GameError> {
        let n = self.geo.graph().vertex_count();
        if v >= n {
            return Err(GameError::InvalidVertex { vertex: v, n });
        }
        if !self.legal_moves().contains(v) {
            return Err(GameError::IllegalMove { vertex: v });
        }
        Ok(Position { geo: self.geo, selected: self.selected.with(v) })
    }
}
