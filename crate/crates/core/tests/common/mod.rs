//! Brute-force reference implementations used to check the library. They
//! work on plain `(lower, dir)` pairs and share no code with it.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use cubeslides::{CubeEdge, SpanningTree};

pub type Edge = (u32, usize);

pub fn bit(dir: usize) -> u32 {
    1 << (dir - 1)
}

pub fn ends(e: Edge) -> (u32, u32) {
    (e.0, e.0 | bit(e.1))
}

pub fn all_cube_edges(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for d in 1..=n {
        for v in 0..1u32 << n {
            if v & bit(d) == 0 {
                out.push((v, d));
            }
        }
    }
    out
}

pub fn plain(t: &SpanningTree) -> BTreeSet<Edge> {
    t.edges().map(|e| (e.lower.0, e.dir)).collect()
}

pub fn lib_edge(e: Edge) -> CubeEdge {
    CubeEdge::new(e.0, e.1)
}

fn adjacency(n: usize, edges: &BTreeSet<Edge>) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); 1 << n];
    for &e in edges {
        let (a, b) = ends(e);
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    adj
}

pub fn is_spanning_tree(n: usize, edges: &BTreeSet<Edge>) -> bool {
    let count = 1usize << n;
    if edges.len() != count - 1 {
        return false;
    }
    let adj = adjacency(n, edges);
    let mut seen = vec![false; count];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == count
}

/// Parent of every vertex when the tree hangs from the empty set.
pub fn parents(n: usize, edges: &BTreeSet<Edge>) -> Vec<Option<u32>> {
    let adj = adjacency(n, edges);
    let mut parent = vec![None; 1 << n];
    let mut seen = vec![false; 1 << n];
    seen[0] = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = Some(v);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// `+1` when walking the edge toward the root raises the cardinality.
pub fn mu(parent: &[Option<u32>], e: Edge) -> i8 {
    let (lo, hi) = ends(e);
    if parent[lo as usize] == Some(hi) {
        1
    } else {
        assert_eq!(parent[hi as usize], Some(lo));
        -1
    }
}

pub fn is_upright(n: usize, edges: &BTreeSet<Edge>) -> bool {
    let p = parents(n, edges);
    edges.iter().all(|&e| mu(&p, e) == -1)
}

pub fn reflect(e: Edge, i: usize) -> Edge {
    (e.0 ^ bit(i), e.1)
}

pub fn exchange(edges: &BTreeSet<Edge>, out: Edge, into: Edge) -> BTreeSet<Edge> {
    let mut s = edges.clone();
    s.remove(&out);
    s.insert(into);
    s
}

pub fn slidable(n: usize, edges: &BTreeSet<Edge>, e: Edge, i: usize) -> bool {
    e.1 != i
        && edges.contains(&e)
        && !edges.contains(&reflect(e, i))
        && is_spanning_tree(n, &exchange(edges, e, reflect(e, i)))
}

pub fn slidable_in(n: usize, edges: &BTreeSet<Edge>, i: usize) -> Vec<Edge> {
    edges
        .iter()
        .copied()
        .filter(|&e| slidable(n, edges, e, i))
        .collect()
}

/// Vertices of the tree path from `a` to `b`.
pub fn vertex_path(n: usize, edges: &BTreeSet<Edge>, a: u32, b: u32) -> Vec<u32> {
    let adj = adjacency(n, edges);
    let mut prev = vec![u32::MAX; 1 << n];
    prev[a as usize] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if prev[w as usize] == u32::MAX {
                prev[w as usize] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(prev[*path.last().unwrap() as usize]);
    }
    path.reverse();
    path
}

/// The shortest tree path from an endpoint of `e1` to an endpoint of `e2`.
pub fn between_edges(n: usize, edges: &BTreeSet<Edge>, e1: Edge, e2: Edge) -> Vec<u32> {
    let (a1, b1) = ends(e1);
    let (a2, b2) = ends(e2);
    [(a1, a2), (a1, b2), (b1, a2), (b1, b2)]
        .into_iter()
        .map(|(x, y)| vertex_path(n, edges, x, y))
        .min_by_key(Vec::len)
        .unwrap()
}

pub fn path_edges(path: &[u32]) -> Vec<Edge> {
    path.windows(2)
        .map(|w| {
            let lo = w[0].min(w[1]);
            let d = (w[0] ^ w[1]).trailing_zeros() as usize + 1;
            (lo, d)
        })
        .collect()
}

/// Whether the path between two `i`-edges passes through an endpoint of a
/// third `i`-edge.
pub fn meets_other_i_edge(
    edges: &BTreeSet<Edge>,
    path: &[u32],
    e1: Edge,
    e2: Edge,
    i: usize,
) -> bool {
    edges.iter().any(|&f| {
        f.1 == i && f != e1 && f != e2 && {
            let (a, b) = ends(f);
            path.contains(&a) || path.contains(&b)
        }
    })
}

/// Edges of `T - e` on the side not containing the root.
pub fn far_side(n: usize, edges: &BTreeSet<Edge>, e: Edge) -> BTreeSet<u32> {
    let mut rest = edges.clone();
    rest.remove(&e);
    let adj = adjacency(n, &rest);
    let mut seen = vec![false; 1 << n];
    let mut stack = vec![0u32];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w);
            }
        }
    }
    (0..1u32 << n).filter(|&v| !seen[v as usize]).collect()
}

/// A vertex set that closes up into one cycle: all degrees 2, connected.
pub fn is_single_cycle(edges: &[Edge]) -> bool {
    use std::collections::BTreeMap;
    let mut degree: BTreeMap<u32, usize> = BTreeMap::new();
    for &e in edges {
        let (a, b) = ends(e);
        *degree.entry(a).or_default() += 1;
        *degree.entry(b).or_default() += 1;
    }
    if edges.len() < 4 || degree.values().any(|&d| d != 2) {
        return false;
    }
    let set: BTreeSet<Edge> = edges.iter().copied().collect();
    let start = ends(edges[0]).0;
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &e in &set {
            let (a, b) = ends(e);
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == degree.len()
}

/// `2^(2^n - n - 1) prod_k k^C(n, k)`, in `u128`.
pub fn tree_count(n: u32) -> u128 {
    let mut binom = 1u128;
    let mut out = 1u128 << ((1u32 << n) - n - 1);
    for k in 1..=n as u128 {
        binom = binom * (n as u128 - k + 1) / k;
        out *= k.pow(binom as u32);
    }
    out
}

/// `prod_k k^C(n, k)`: sections of `Q_n`.
pub fn section_count(n: u32) -> u128 {
    tree_count(n) >> ((1u32 << n) - n - 1)
}

/// Sum of `2|S| - 1` over nonempty `S`: the endpoint cardinality total of
/// an upright tree.
pub fn upright_cardinality_sum(n: usize) -> u32 {
    (1u32..1 << n).map(|s| 2 * s.count_ones() - 1).sum()
}
