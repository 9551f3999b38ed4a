use crate::family::is_tree;
use crate::game::value::MexSet;
use crate::game::GrundyValue;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::SolveError;

/// Values of hanging subtrees, indexed by directed edge.
///
/// `branch(p, c)` is the value of the subtree that contains `c` once the edge
/// `p-c` is removed, played with a selected leaf attached at `c`.
pub struct TreeTable<'g> {
    g: &'g Graph,
    branch: Vec<Option<u32>>,
}

impl<'g> TreeTable<'g> {
    pub fn new(g: &'g Graph) -> Result<Self, SolveError> {
        if !is_tree(g) {
            return Err(SolveError::NotATree);
        }
        let n = g.vertex_count();
        Ok(TreeTable { g, branch: vec![None; n * n] })
    }

    pub fn branch(&mut self, p: usize, c: usize) -> GrundyValue {
        GrundyValue(self.value(p, c))
    }

    fn value(&mut self, p: usize, c: usize) -> u32 {
        let idx = p * self.g.vertex_count() + c;
        if let Some(v) = self.branch[idx] {
            return v;
        }
        let mut seen = MexSet::default();
        // Depth-first walk of the hanging subtree carrying the nim-sum of everything off the covered path.
        let top = self.children_sum(p, c);
        let mut stack = vec![(p, c, top)];
        while let Some((parent, v, off_path)) = stack.pop() {
            seen.insert(off_path);
            for w in (self.g.neighbors(v).without(parent)).iter() {
                let next = off_path ^ self.value(v, w) ^ self.children_sum(v, w);
                stack.push((v, w, next));
            }
        }
        let v = seen.mex();
        self.branch[idx] = Some(v);
        v
    }

    fn children_sum(&mut self, parent: usize, v: usize) -> u32 {
        let kids = self.g.neighbors(v).without(parent);
        kids.iter().fold(0, |acc, w| acc ^ self.value(v, w))
    }

    /// Value with `s` selected: the nim-sum of the branches around `s`.
    pub fn rooted_at(&mut self, s: usize) -> GrundyValue {
        let nbrs = self.g.neighbors(s);
        GrundyValue(nbrs.iter().fold(0, |acc, w| acc ^ self.value(s, w)))
    }

    /// Value of the tree with nothing selected.
    pub fn empty_position(&mut self) -> GrundyValue {
        let mut seen = MexSet::default();
        for u in self.g.vertices().iter() {
            seen.insert(self.rooted_at(u).get());
        }
        GrundyValue(seen.mex())
    }
}

/// Grundy value of a tree with at most one selected vertex.
pub fn solve_tree(t: &Graph, selected: VertexSet) -> Result<GrundyValue, SolveError> {
    let mut table = TreeTable::new(t)?;
    let n = t.vertex_count();
    if let Some(v) = (selected - VertexSet::full(n)).first() {
        return Err(SolveError::InvalidVertex(v));
    }
    match selected.len() {
        0 => Ok(table.empty_position()),
        1 => Ok(table.rooted_at(selected.first().unwrap_or_default())),
        count => Err(SolveError::TooManySelected(count)),
    }
}
