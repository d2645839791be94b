//! Small-graph helpers on cube edge sets: union-find and cycle extraction.

use std::collections::VecDeque;

use crate::hypercube::{CubeEdge, Vertex};

/// Union by size, path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Union-find without path compression that can undo its most recent unions.
#[derive(Debug, Clone)]
pub(crate) struct RollbackUnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<u32>,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.history.push(rb);
        true
    }

    pub fn rollback(&mut self) {
        let rb = self.history.pop().expect("rollback without union");
        let ra = self.parent[rb as usize];
        self.size[ra as usize] -= self.size[rb as usize];
        self.parent[rb as usize] = rb;
    }
}

/// Finds some cycle in the graph on `vertex_count` vertices with the given
/// edges, returned as a closed edge sequence (consecutive edges share a
/// vertex, and the last shares one with the first).
pub fn find_cycle(vertex_count: usize, edges: &[CubeEdge]) -> Option<Vec<CubeEdge>> {
    let mut uf = UnionFind::new(vertex_count);
    let mut forest: Vec<Vec<(u32, CubeEdge)>> = vec![Vec::new(); vertex_count];
    for &e in edges {
        let (a, b) = (e.lower.0, e.upper().0);
        if uf.union(a, b) {
            forest[a as usize].push((b, e));
            forest[b as usize].push((a, e));
        } else {
            let mut cycle = forest_path(&forest, a, b);
            cycle.push(e);
            return Some(cycle);
        }
    }
    None
}

fn forest_path(forest: &[Vec<(u32, CubeEdge)>], from: u32, to: u32) -> Vec<CubeEdge> {
    let mut prev: Vec<Option<(u32, CubeEdge)>> = vec![None; forest.len()];
    let mut seen = vec![false; forest.len()];
    let mut queue = VecDeque::from([from]);
    seen[from as usize] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, e) in &forest[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                prev[w as usize] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, e) = prev[v as usize].expect("endpoints are in the same tree");
        path.push(e);
        v = p;
    }
    path.reverse();
    path
}

/// Checks that `cycle` is a closed walk of distinct edges through distinct vertices.
pub fn is_closed_cycle(cycle: &[CubeEdge]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != cycle.len() {
        return false;
    }
    // Every vertex on a simple cycle has degree exactly two, and the edge
    // sequence must be connected end to end.
    let mut degree = std::collections::HashMap::<Vertex, usize>::new();
    for e in cycle {
        *degree.entry(e.lower).or_default() += 1;
        *degree.entry(e.upper()).or_default() += 1;
    }
    if degree.values().any(|&d| d != 2) || degree.len() != cycle.len() {
        return false;
    }
    let touches = |e: &CubeEdge, f: &CubeEdge| {
        let (a, b) = e.endpoints();
        let (c, d) = f.endpoints();
        a == c || a == d || b == c || b == d
    };
    cycle.windows(2).all(|w| touches(&w[0], &w[1])) && touches(&cycle[0], &cycle[cycle.len() - 1])
}
