use std::sync::Arc;

use dashmap::DashMap;

use crate::game::value::MexSet;
use crate::game::GrundyValue;
use crate::geodesic::Geodesics;
use crate::graph::Graph;
use crate::structure::{articulation_points_within, components_within, is_clique, is_cycle_within, simplicial_within};
use crate::vertex_set::VertexSet;

use super::component::{ComponentPosition, PositionSum};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecompositionConfig {
    /// Skip a legal move when an earlier legal move is its twin inside the component.
    pub collapse_equivalent_moves: bool,
}

/// Grundy values of component positions, computed by splitting at
/// articulation points and recursing on the irreducible pieces.
pub struct Decomposer {
    geo: Arc<Geodesics>,
    config: DecompositionConfig,
    memo: DashMap<ComponentPosition, u32>,
}

impl Decomposer {
    pub fn new(graph: Graph) -> Self {
        Self::with_config(Arc::new(Geodesics::new(graph)), DecompositionConfig::default())
    }

    pub fn with_config(geo: Arc<Geodesics>, config: DecompositionConfig) -> Self {
        Decomposer { geo, config, memo: DashMap::new() }
    }

    pub fn geodesics(&self) -> &Arc<Geodesics> {
        &self.geo
    }

    pub fn graph(&self) -> &Graph {
        self.geo.graph()
    }

    /// Number of irreducible components evaluated so far.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// One component per connected component of the graph.
    pub fn initial_sum(&self, selected: VertexSet) -> PositionSum {
        components_within(self.graph(), self.graph().vertices())
            .into_iter()
            .map(|c| ComponentPosition::new(c, selected & c))
            .collect()
    }

    pub fn grundy_selected(&self, selected: VertexSet) -> GrundyValue {
        self.grundy_sum(&self.initial_sum(selected))
    }

    pub fn grundy_sum(&self, sum: &PositionSum) -> GrundyValue {
        sum.iter().fold(GrundyValue::ZERO, |acc, p| acc ^ self.grundy(p))
    }

    pub fn grundy(&self, pos: &ComponentPosition) -> GrundyValue {
        let mut parts = Vec::new();
        self.reduce_into(*pos, &mut parts);
        parts.iter().fold(GrundyValue::ZERO, |acc, p| acc ^ GrundyValue(self.irreducible(p)))
    }

    /// Rewrites a position into a sum of irreducible components with at least one legal move each.
    pub fn reduce(&self, pos: ComponentPosition) -> PositionSum {
        let mut parts = Vec::new();
        self.reduce_into(pos, &mut parts);
        PositionSum { parts }
    }

    fn normalize(&self, mut pos: ComponentPosition) -> Option<ComponentPosition> {
        let g = self.graph();
        if let Some(p) = pos.pendant {
            if !pos.selected.is_empty() || pos.blocked.contains(p) {
                pos.selected.insert(p);
                pos.pendant = None;
            }
        }
        pos.blocked = (pos.blocked & pos.vertices) - pos.selected;
        if !pos.selected.is_empty() {
            pos.blocked -= self.geo.closure(pos.selected);
        }
        if pos.legal_moves(&self.geo).is_empty() {
            return None;
        }
        let idle = pos.blocked & simplicial_within(g, pos.vertices);
        if !idle.is_empty() {
            pos.vertices -= idle;
            pos.blocked -= idle;
        }
        Some(pos)
    }

    fn reduce_into(&self, pos: ComponentPosition, out: &mut Vec<ComponentPosition>) {
        let Some(pos) = self.normalize(pos) else { return };
        let g = self.graph();
        let arts = articulation_points_within(g, pos.vertices);
        if arts.is_empty() {
            out.push(pos);
            return;
        }
        let geo = &*self.geo;
        let closure = pos.closure(geo);
        let sources = pos.sources();

        // A selected or doubly-reached articulation point separates independent games.
        for a in arts.iter().filter(|&a| closure.contains(a)) {
            let sides = sides_at(g, pos.vertices, a);
            let active = sides.iter().filter(|s| s.without(a).intersects(sources)).count();
            if pos.selected.contains(a) || active >= 2 {
                for side in sides {
                    let child = ComponentPosition {
                        vertices: side,
                        selected: (pos.selected & side).with(a),
                        pendant: None,
                        blocked: pos.blocked & side,
                    };
                    self.reduce_into(child, out);
                }
                return;
            }
        }

        // An articulation point that shields the source-free sides from the rest.
        if pos.selected.is_empty() {
            out.push(pos);
            return;
        }
        let legal = pos.vertices - closure;
        for a in arts.iter().filter(|&a| !pos.selected.contains(a)) {
            if !sources.iter().all(|s| (geo.interval(a, s) - closure).is_subset(VertexSet::singleton(a))) {
                continue;
            }
            let sides = sides_at(g, pos.vertices, a);
            let mut active = sides.iter().filter(|s| s.without(a).intersects(sources));
            let (Some(&gj), None) = (active.next(), active.next()) else { continue };
            let candidates = ((sources | legal) & gj).without(a);
            if !closure.contains(a) && passes_through(geo, candidates, a) {
                continue;
            }
            let src = sources & gj;
            let shielded = (legal & gj).without(a).iter().all(|x| {
                let reach = geo.closure(src.with(x)) | pos.blocked;
                (geo.interval(a, x) - reach).is_subset(VertexSet::singleton(a))
            });
            if !shielded {
                continue;
            }
            let rest = (pos.vertices - gj).with(a);
            let inner = ComponentPosition {
                vertices: gj,
                selected: pos.selected & gj,
                pendant: None,
                blocked: (pos.blocked & gj).with(a),
            };
            let outer = if closure.contains(a) {
                ComponentPosition::new(rest, VertexSet::singleton(a))
            } else {
                ComponentPosition::with_pendant(rest, a)
            };
            let outer = ComponentPosition { blocked: (pos.blocked & rest).without(a), ..outer };
            self.reduce_into(inner, out);
            self.reduce_into(outer, out);
            return;
        }
        out.push(pos);
    }

    fn irreducible(&self, pos: &ComponentPosition) -> u32 {
        if let Some(v) = self.memo.get(pos) {
            return *v;
        }
        let value = self.base_case(pos).unwrap_or_else(|| self.expand(pos));
        self.memo.insert(*pos, value);
        value
    }

    fn expand(&self, pos: &ComponentPosition) -> u32 {
        let geo = &*self.geo;
        let legal = pos.legal_moves(geo);
        let mut seen = MexSet::default();
        let mut tried = VertexSet::EMPTY;
        for v in legal.iter() {
            if self.config.collapse_equivalent_moves && self.has_twin(pos, tried, v) {
                continue;
            }
            tried.insert(v);
            let next = ComponentPosition { selected: pos.selected.with(v), ..*pos };
            seen.insert(self.grundy(&next).get());
        }
        seen.mex()
    }

    fn has_twin(&self, pos: &ComponentPosition, tried: VertexSet, v: usize) -> bool {
        if pos.pendant == Some(v) {
            return false;
        }
        let g = self.graph();
        let open = g.neighbors(v) & pos.vertices;
        let closed = open.with(v);
        tried.iter().filter(|&w| pos.pendant != Some(w)).any(|w| {
            let other = g.neighbors(w) & pos.vertices;
            other == open || other.with(w) == closed
        })
    }

    fn base_case(&self, pos: &ComponentPosition) -> Option<u32> {
        let g = self.graph();
        let legal = pos.legal_moves(&self.geo).len() as u32;
        if is_clique(g, pos.vertices) {
            return Some(match pos.pendant {
                None => legal % 2,
                Some(_) if legal == 1 => 1,
                Some(_) => 2,
            });
        }
        if pos.pendant.is_none() && pos.blocked.is_empty() && is_cycle_within(g, pos.vertices) {
            let n = pos.vertices.len();
            let sel = pos.selected.to_vec();
            let value = match sel.as_slice() {
                [] => n % 2,
                [_] if n.is_multiple_of(2) => n / 2,
                [_] => 0,
                [u, v] => n.div_ceil(2) - self.geo.distances().get(*u, *v) as usize,
                _ => return None,
            };
            return Some(value as u32);
        }
        None
    }
}

/// Components of `vertices - a`, each with `a` added back.
fn sides_at(g: &Graph, vertices: VertexSet, a: usize) -> Vec<VertexSet> {
    components_within(g, vertices.without(a)).into_iter().map(|s| s.with(a)).collect()
}

/// Whether `a` is interior to a geodesic between two members of `set`.
fn passes_through(geo: &Geodesics, set: VertexSet, a: usize) -> bool {
    let members = set.to_vec();
    members
        .iter()
        .enumerate()
        .any(|(i, &x)| members[i + 1..].iter().any(|&y| geo.interval(x, y).contains(a)))
}
