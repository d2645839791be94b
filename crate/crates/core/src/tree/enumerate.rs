//! Exhaustive enumeration of spanning trees by include/exclude backtracking
//! over the canonical edge order.

use crate::error::{Error, Result};
use crate::forest::RollbackUnionFind;
use crate::hypercube::{CubeEdge, Hypercube};

use super::{EdgeSet, SpanningTree};

/// How much work the caller is willing to pay for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scale {
    /// `n <= 3`.
    #[default]
    Desk,
    /// Also permits `n = 4` (42,467,328 trees).
    Expensive,
}

/// Calls `visit` on every spanning tree of `Q_n` exactly once, in increasing
/// edge-set order.
pub fn for_each_spanning_tree<F>(n: usize, scale: Scale, mut visit: F) -> Result<()>
where
    F: FnMut(&SpanningTree),
{
    let cube = Hypercube::new(n)?;
    match (n, scale) {
        (1..=3, _) | (4, Scale::Expensive) => {}
        _ => return Err(Error::EnumerationRefused(n)),
    }
    let edges: Vec<CubeEdge> = cube.edges().collect();
    let mut search = Backtrack {
        cube,
        edges: &edges,
        uf: RollbackUnionFind::new(cube.vertex_count()),
        chosen: EdgeSet::new(),
        need: cube.vertex_count() - 1,
        visit: &mut visit,
    };
    search.descend(edges.len(), 0);
    Ok(())
}

/// All spanning trees of `Q_n` for `n <= 3`, in increasing edge-set order.
pub fn enumerate_spanning_trees(n: usize) -> Result<Vec<SpanningTree>> {
    let mut trees = Vec::new();
    for_each_spanning_tree(n, Scale::Desk, |t| trees.push(t.clone()))?;
    Ok(trees)
}

struct Backtrack<'a, F> {
    cube: Hypercube,
    edges: &'a [CubeEdge],
    uf: RollbackUnionFind,
    chosen: EdgeSet,
    need: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&SpanningTree)> Backtrack<'_, F> {
    /// Decides edges `remaining - 1` down to `0`; higher indices first and
    /// exclusion before inclusion, which yields increasing order.
    fn descend(&mut self, remaining: usize, count: usize) {
        if count == self.need {
            let tree = SpanningTree::from_edge_set_unchecked(self.cube, self.chosen);
            (self.visit)(&tree);
            return;
        }
        if count + remaining < self.need {
            return;
        }
        let idx = remaining - 1;
        self.descend(idx, count);
        let e = self.edges[idx];
        if self.uf.union(e.lower.0, e.upper().0) {
            self.chosen.insert(idx);
            self.descend(idx, count + 1);
            self.chosen.remove(idx);
            self.uf.rollback();
        }
    }
}
