//! The edge-slide graph: spanning trees of `Q_n` (`n <= 3`), joined when
//! they differ by a single slide.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercube::CubeEdge;
use crate::slides::{all_slides, SlideMove};
use crate::tree::{encode, enumerate_spanning_trees, EdgeSet, Payload, Signature, SpanningTree};

fn mask_of(tree: &SpanningTree) -> u64 {
    match encode(tree) {
        Payload::Mask(m) => m,
        Payload::Indices(_) => unreachable!("graphs are only built for n <= 3"),
    }
}

#[derive(Debug, Clone)]
pub struct SlideGraph {
    trees: Vec<SpanningTree>,
    masks: Vec<u64>,
    /// Per node, its neighbours with the move that reaches them, in move
    /// order.
    adjacency: Vec<Vec<(usize, SlideMove)>>,
}

/// Builds the slide graph on all spanning trees of `Q_n`, `n <= 3`.
pub fn build(n: usize) -> Result<SlideGraph> {
    let trees = enumerate_spanning_trees(n)?;
    let masks: Vec<u64> = trees.iter().map(mask_of).collect();
    let adjacency = trees
        .par_iter()
        .map(|t| {
            all_slides(t)
                .into_iter()
                .map(|m| {
                    let target = t.exchanged(m.edge, m.target());
                    let k = masks
                        .binary_search(&target.low_word())
                        .expect("a slide yields a spanning tree");
                    (k, m)
                })
                .collect()
        })
        .collect();
    Ok(SlideGraph {
        trees,
        masks,
        adjacency,
    })
}

impl SlideGraph {
    pub fn node_count(&self) -> usize {
        self.trees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn tree(&self, k: usize) -> &SpanningTree {
        &self.trees[k]
    }

    pub fn mask(&self, k: usize) -> u64 {
        self.masks[k]
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.masks.binary_search(&mask).ok()
    }

    pub fn neighbors(&self, k: usize) -> &[(usize, SlideMove)] {
        &self.adjacency[k]
    }

    pub fn degree(&self, k: usize) -> usize {
        self.adjacency[k].len()
    }

    /// Undirected edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().map(move |&(b, _)| (a, b)))
            .filter(|&(a, b)| a < b)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentRecord {
    /// The smallest member mask.
    pub id: u64,
    /// Member masks, increasing.
    pub members: Vec<u64>,
    pub signature: Signature,
    pub size: usize,
    pub q4_certified: bool,
    pub upright_count: usize,
}

/// Connected components, ordered by id.
pub fn components(graph: &SlideGraph) -> Vec<ComponentRecord> {
    let mut seen = vec![false; graph.node_count()];
    let mut groups = Vec::new();
    for start in 0..graph.node_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &(w, _) in graph.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    let mut records: Vec<ComponentRecord> = groups
        .into_par_iter()
        .map(|members| {
            let signature = graph.tree(members[0]).signature();
            assert!(
                members
                    .iter()
                    .all(|&k| graph.tree(k).signature() == signature),
                "slides preserve the signature"
            );
            let mut record = ComponentRecord {
                id: graph.mask(members[0]),
                members: members.iter().map(|&k| graph.mask(k)).collect(),
                signature,
                size: members.len(),
                q4_certified: false,
                upright_count: members
                    .iter()
                    .filter(|&&k| graph.tree(k).is_upright())
                    .count(),
            };
            record.q4_certified = record.size == 16 && certify_q4_component(graph, &record).is_ok();
            record
        })
        .collect();
    records.sort_by_key(|r| r.id);
    records
}

/// Evidence that a component is the 4-cube spanned by the four slides of
/// its smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeCertificate {
    pub base: u64,
    pub moves: Vec<SlideMove>,
    /// Member mask reached by each `epsilon` in `{0,1}^4`.
    pub images: Vec<u64>,
    pub internal_edges: usize,
}

/// The tree reached from `base` by the moves selected in `epsilon`; moves
/// that share an edge compose their reflections.
fn apply_moves(base: &SpanningTree, moves: &[SlideMove], epsilon: usize) -> EdgeSet {
    let mut set = EdgeSet::new();
    for e in base.edges() {
        let moved: CubeEdge = moves
            .iter()
            .enumerate()
            .filter(|&(j, m)| epsilon >> j & 1 == 1 && m.edge == e)
            .fold(e, |acc, (_, m)| acc.reflected(m.slide_dir));
        set.insert(
            base.cube()
                .edge_index(moved)
                .expect("reflections stay in the cube"),
        );
    }
    set
}

/// Checks that `epsilon -> apply the chosen moves` maps `{0,1}^4` onto the
/// component, injectively, with graph adjacency exactly Hamming distance 1.
pub fn certify_q4_component(graph: &SlideGraph, comp: &ComponentRecord) -> Result<CubeCertificate> {
    let fail = |why: String| Error::NotCubeComponent {
        id: comp.id,
        reason: why,
    };
    if comp.size != 16 {
        return Err(Error::NotCubeCandidate(comp.size));
    }
    let base_index = graph
        .index_of(comp.id)
        .ok_or_else(|| fail("id is not a node".into()))?;
    let base = graph.tree(base_index);
    let moves: Vec<SlideMove> = graph
        .neighbors(base_index)
        .iter()
        .map(|&(_, m)| m)
        .collect();
    if moves.len() != 4 {
        return Err(fail(format!("base has {} moves", moves.len())));
    }
    let mut nodes = Vec::with_capacity(16);
    for eps in 0..16 {
        let set = apply_moves(base, &moves, eps);
        let k = graph
            .index_of(set.low_word())
            .filter(|_| crate::tree::validate_edge_set(base.cube(), &set).is_ok())
            .ok_or_else(|| fail(format!("epsilon {eps:04b} is not a spanning tree")))?;
        if comp.members.binary_search(&graph.mask(k)).is_err() {
            return Err(fail(format!("epsilon {eps:04b} leaves the component")));
        }
        if let Some(prev) = nodes.iter().position(|&p| p == k) {
            return Err(fail(format!("epsilon {eps:04b} and {prev:04b} coincide")));
        }
        nodes.push(k);
    }
    let mut internal_edges = 0;
    for a in 0..16usize {
        for b in a + 1..16 {
            let adjacent = graph
                .neighbors(nodes[a])
                .iter()
                .any(|&(w, _)| w == nodes[b]);
            if adjacent != ((a ^ b).count_ones() == 1) {
                return Err(fail(format!("adjacency of {a:04b} and {b:04b} is wrong")));
            }
            internal_edges += usize::from(adjacent);
        }
    }
    Ok(CubeCertificate {
        base: comp.id,
        moves,
        images: nodes.iter().map(|&k| graph.mask(k)).collect(),
        internal_edges,
    })
}

/// Signature of the spanning tree a tree induces on the face `F-_i`, when
/// it has exactly one `i`-edge.
pub fn lower_face_signature(tree: &SpanningTree, i: usize) -> Option<Signature> {
    if tree.edges_in_direction(i).count() != 1 {
        return None;
    }
    let mut counts = vec![0; tree.n()];
    for e in tree.edges().filter(|e| e.dir != i && e.in_lower_face(i)) {
        counts[e.dir - 1] += 1;
    }
    counts.remove(i - 1);
    Some(counts)
}

fn format_signature(signature: &[usize]) -> String {
    let parts: Vec<String> = signature.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// DOT text for the whole graph, or for the nodes in `only` (member masks).
pub fn export_dot(graph: &SlideGraph, only: Option<&[u64]>) -> String {
    let keep = |k: usize| only.is_none_or(|list| list.contains(&graph.mask(k)));
    let mut out = String::from("graph E3 {\n");
    for k in (0..graph.node_count()).filter(|&k| keep(k)) {
        let mask = graph.mask(k);
        let sig = format_signature(&graph.tree(k).signature());
        writeln!(out, "  T{mask} [label=\"T{mask} {sig}\"];").expect("writing to a string");
    }
    for (a, b) in graph.edges() {
        if keep(a) && keep(b) {
            writeln!(out, "  T{} -- T{};", graph.mask(a), graph.mask(b))
                .expect("writing to a string");
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct CensusRow<'a> {
    signature: &'a str,
    component_id: u64,
    size: usize,
    q4_certified: bool,
    upright_count: usize,
}

/// One CSV row per component: signature, component_id, size, q4_certified,
/// upright_count.
pub fn census_csv(records: &[ComponentRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in records {
        let signature = format_signature(&r.signature);
        writer
            .serialize(CensusRow {
                signature: &signature,
                component_id: r.id,
                size: r.size,
                q4_certified: r.q4_certified,
                upright_count: r.upright_count,
            })
            .expect("in-memory CSV");
    }
    String::from_utf8(writer.into_inner().expect("in-memory CSV")).expect("ASCII output")
}
