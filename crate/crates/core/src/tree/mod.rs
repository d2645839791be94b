//! Spanning trees of `Q_n`: validation, rooting at the empty set, edge
//! orientations and the two tree weights.

mod codec;
mod count;
mod enumerate;
mod sample;

pub use codec::{decode, encode, Payload, TreeRecord};
pub use count::{formula_count, kirchhoff_count, signed_section_product, KIRCHHOFF_MAX_DIM};
pub use enumerate::{enumerate_spanning_trees, for_each_spanning_tree, Scale};
pub use sample::{random_spanning_tree, SeededSource, TreeSampler, SAMPLER_ID};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::forest::{find_cycle, UnionFind};
use crate::hypercube::{bit, CubeEdge, Hypercube, Vertex};

const WORDS: usize = 16;

/// A set of edges of one cube, stored as a bitmask over canonical edge indices.
///
/// Ordered as the big integer `sum 2^index`, so for `n <= 3` the order
/// coincides with the numeric order of [`EdgeSet::low_word`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet([u64; WORDS]);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, k: usize) {
        self.0[k / 64] |= 1 << (k % 64);
    }

    pub fn remove(&mut self, k: usize) {
        self.0[k / 64] &= !(1 << (k % 64));
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// The first 64 bits; the whole set when the cube has at most 64 edges.
    pub fn low_word(&self) -> u64 {
        self.0[0]
    }

    pub fn from_low_word(mask: u64) -> Self {
        let mut s = Self::default();
        s.0[0] = mask;
        s
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Edge counts per direction, `(k_1, ..., k_n)`.
pub type Signature = Vec<usize>;

/// Exponents of the direction monomial (`q`) and decoupled degree monomial (`x`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeWeight {
    pub q_exp: Vec<u32>,
    pub x_exp: Vec<i32>,
}

/// A spanning tree of `Q_n`. Always valid once constructed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    cube: Hypercube,
    edges: EdgeSet,
}

impl PartialOrd for SpanningTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SpanningTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cube
            .dim()
            .cmp(&other.cube.dim())
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl fmt::Debug for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpanningTree(n={}; ", self.cube.dim())?;
        for (k, e) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Checks that `edges` forms a spanning tree of `cube`.
pub fn validate_edge_set(cube: Hypercube, edges: &EdgeSet) -> Result<()> {
    let list: Vec<CubeEdge> = edges.iter().map(|k| cube.index_edge_unchecked(k)).collect();
    let mut uf = UnionFind::new(cube.vertex_count());
    for e in &list {
        if !uf.union(e.lower.0, e.upper().0) {
            let cycle = find_cycle(cube.vertex_count(), &list).expect("union-find saw a cycle");
            return Err(Error::Cycle { cycle });
        }
    }
    if uf.components() > 1 {
        return Err(Error::Disconnected {
            components: uf.components(),
        });
    }
    Ok(())
}

impl SpanningTree {
    /// Validates an edge list; duplicates are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = CubeEdge>,
    {
        let cube = Hypercube::new(n)?;
        let mut set = EdgeSet::new();
        for e in edges {
            set.insert(cube.edge_index(e)?);
        }
        Self::from_edge_set(cube, set)
    }

    pub fn from_edge_set(cube: Hypercube, edges: EdgeSet) -> Result<Self> {
        if edges.iter().any(|k| k >= cube.edge_count()) {
            let index = edges.iter().last().unwrap_or_default();
            return Err(Error::InvalidEdgeIndex {
                index,
                n: cube.dim(),
            });
        }
        validate_edge_set(cube, &edges)?;
        Ok(SpanningTree { cube, edges })
    }

    /// Caller guarantees validity.
    pub(crate) fn from_edge_set_unchecked(cube: Hypercube, edges: EdgeSet) -> Self {
        debug_assert!(validate_edge_set(cube, &edges).is_ok());
        SpanningTree { cube, edges }
    }

    pub fn cube(&self) -> Hypercube {
        self.cube
    }

    pub fn n(&self) -> usize {
        self.cube.dim()
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = CubeEdge> + '_ {
        self.edges.iter().map(|k| self.cube.index_edge_unchecked(k))
    }

    pub fn edges_in_direction(&self, dir: usize) -> impl Iterator<Item = CubeEdge> + '_ {
        self.edges().filter(move |e| e.dir == dir)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Whether `e` is a tree edge. Edges of other cubes are never members.
    pub fn contains(&self, e: CubeEdge) -> bool {
        self.cube.check_edge(e).is_ok() && self.edges.contains(self.cube.edge_index_unchecked(e))
    }

    /// The edge set with `remove` replaced by `add`.
    pub(crate) fn exchanged(&self, remove: CubeEdge, add: CubeEdge) -> EdgeSet {
        let mut set = self.edges;
        set.remove(self.cube.edge_index_unchecked(remove));
        set.insert(self.cube.edge_index_unchecked(add));
        set
    }

    pub fn signature(&self) -> Signature {
        let mut counts = vec![0; self.n()];
        for e in self.edges() {
            counts[e.dir - 1] += 1;
        }
        counts
    }

    /// Sum over edges of the endpoint cardinalities.
    pub fn cardinality_sum(&self) -> u32 {
        self.edges().map(CubeEdge::cardinality_sum).sum()
    }

    pub fn rooted(&self) -> RootedTree {
        RootedTree::new(self)
    }

    pub fn orientation(&self) -> Orientation {
        let rooted = self.rooted();
        Orientation {
            signs: self.edges().map(|e| (e, rooted.mu(e))).collect(),
        }
    }

    /// `k_i`: number of tree edges in each direction.
    pub fn direction_monomial(&self) -> Vec<u32> {
        self.signature().into_iter().map(|k| k as u32).collect()
    }

    /// Exponents of `prod_{(S,R) in T} x_S x_R / x_[n]`.
    pub fn dd_monomial_edgewise(&self) -> Vec<i32> {
        let n = self.n();
        let mut x = vec![0i32; n];
        for e in self.edges() {
            for j in 1..=n {
                if j == e.dir {
                    continue;
                }
                x[j - 1] += if e.lower.contains(j) { 1 } else { -1 };
            }
        }
        x
    }

    /// Exponents of `x_1 ... x_n prod_e x_{dir e}^{mu(e)}`.
    pub fn dd_monomial_oriented(&self) -> Vec<i32> {
        let rooted = self.rooted();
        let mut x = vec![1i32; self.n()];
        for e in self.edges() {
            x[e.dir - 1] += rooted.mu(e) as i32;
        }
        x
    }

    pub fn weight(&self) -> TreeWeight {
        TreeWeight {
            q_exp: self.direction_monomial(),
            x_exp: self.dd_monomial_oriented(),
        }
    }

    /// All edges oriented downward (every `mu = -1`).
    pub fn is_upright(&self) -> bool {
        let rooted = self.rooted();
        self.edges().all(|e| rooted.mu(e) == -1)
    }
}

/// Orientation signs `mu(e)` of the tree edges, in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub signs: Vec<(CubeEdge, i8)>,
}

impl Orientation {
    pub fn mu(&self, e: CubeEdge) -> Option<i8> {
        self.signs
            .binary_search_by(|(f, _)| (f.dir, f.lower).cmp(&(e.dir, e.lower)))
            .ok()
            .map(|k| self.signs[k].1)
    }
}

const NO_PARENT: u32 = u32::MAX;

/// A spanning tree rooted at the empty set, with parent pointers and DFS
/// entry/exit times for constant-time ancestor queries.
#[derive(Debug, Clone)]
pub struct RootedTree {
    parent: Vec<u32>,
    depth: Vec<u32>,
    tin: Vec<u32>,
    tout: Vec<u32>,
}

impl RootedTree {
    fn new(tree: &SpanningTree) -> Self {
        let vcount = tree.cube.vertex_count();
        let mut adj = vec![0u16; vcount];
        for e in tree.edges() {
            adj[e.lower.0 as usize] |= bit(e.dir) as u16;
            adj[e.upper().0 as usize] |= bit(e.dir) as u16;
        }
        let mut parent = vec![NO_PARENT; vcount];
        let mut depth = vec![0u32; vcount];
        let mut tin = vec![0u32; vcount];
        let mut tout = vec![0u32; vcount];
        let mut clock = 0u32;
        // Iterative DFS: (vertex, remaining neighbour directions).
        let mut stack: Vec<(u32, u16)> = vec![(0, adj[0])];
        tin[0] = clock;
        clock += 1;
        while let Some(top) = stack.last_mut() {
            let (v, rest) = *top;
            if rest == 0 {
                tout[v as usize] = clock;
                stack.pop();
                continue;
            }
            let b = rest.trailing_zeros();
            top.1 &= rest - 1;
            let w = v ^ (1 << b);
            if w == 0 || parent[w as usize] != NO_PARENT {
                continue;
            }
            parent[w as usize] = v;
            depth[w as usize] = depth[v as usize] + 1;
            tin[w as usize] = clock;
            clock += 1;
            stack.push((w, adj[w as usize]));
        }
        RootedTree {
            parent,
            depth,
            tin,
            tout,
        }
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v.0 as usize] {
            NO_PARENT => None,
            p => Some(Vertex(p)),
        }
    }

    pub fn depth(&self, v: Vertex) -> u32 {
        self.depth[v.0 as usize]
    }

    /// Whether `a` lies on the path from `b` to the root (inclusive).
    pub fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        let (a, b) = (a.0 as usize, b.0 as usize);
        self.tin[a] <= self.tin[b] && self.tout[b] <= self.tout[a]
    }

    /// The endpoint of tree edge `e` farther from the root.
    pub fn child_end(&self, e: CubeEdge) -> Vertex {
        let (lo, hi) = e.endpoints();
        if self.parent[hi.0 as usize] == lo.0 {
            hi
        } else {
            debug_assert_eq!(self.parent[lo.0 as usize], hi.0);
            lo
        }
    }

    /// `+1` if the root path crosses `e` from lower to upper endpoint.
    pub fn mu(&self, e: CubeEdge) -> i8 {
        if self.child_end(e) == e.lower {
            1
        } else {
            -1
        }
    }

    /// Vertices of the tree path from `a` to `b`, inclusive.
    pub fn path(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let (mut x, mut y) = (a, b);
        let mut front = Vec::new();
        let mut back = Vec::new();
        while self.depth(x) > self.depth(y) {
            front.push(x);
            x = self.parent(x).expect("non-root has a parent");
        }
        while self.depth(y) > self.depth(x) {
            back.push(y);
            y = self.parent(y).expect("non-root has a parent");
        }
        while x != y {
            front.push(x);
            back.push(y);
            x = self.parent(x).expect("non-root has a parent");
            y = self.parent(y).expect("non-root has a parent");
        }
        front.push(x);
        front.extend(back.into_iter().rev());
        front
    }

    /// Edges of the tree path from `a` to `b`, in walking order.
    pub fn path_edges(&self, a: Vertex, b: Vertex) -> Vec<CubeEdge> {
        self.path(a, b)
            .windows(2)
            .map(|w| CubeEdge::between(w[0], w[1]).expect("path steps are cube edges"))
            .collect()
    }

    /// Whether deleting tree edge `cut` separates `a` from `b`.
    pub fn separates(&self, cut: CubeEdge, a: Vertex, b: Vertex) -> bool {
        let child = self.child_end(cut);
        self.is_ancestor(child, a) != self.is_ancestor(child, b)
    }
}
