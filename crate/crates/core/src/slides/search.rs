//! Seeded searches for trees of larger cubes where the `Q_3` slide lemmas
//! fail: more than `k_i - 1` slidable edges, and slidable sets of the right
//! size that are not independent.
//!
//! Candidates come from walks: a uniform random tree followed by random
//! single slides. Walk `w` draws from stream `w` of the seed, and the walks
//! are scanned in parallel but reported in schedule order, so the witness
//! depends only on the seed, the budget and the walk length.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::is_closed_cycle;
use crate::hypercube::CubeEdge;
use crate::tree::{SeededSource, SpanningTree, TreeSampler, SAMPLER_ID};

use super::{all_slides, class_member, is_slidable, slidable_edges, slide};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidate trees examined.
    pub budget: u64,
    pub seed: u64,
    /// Candidates per walk, the first being the sampled tree.
    pub walk_length: u64,
    /// Only accept witnesses whose direction has exactly this many edges.
    pub target_k: Option<usize>,
}

impl SearchConfig {
    pub fn new(budget: u64, seed: u64) -> Self {
        SearchConfig {
            budget,
            seed,
            walk_length: 32,
            target_k: None,
        }
    }
}

/// What happens to the other slidable edges after one of them is slid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideEffect {
    pub slid: CubeEdge,
    /// Previously slidable edges that remain slidable.
    pub still_slidable: Vec<CubeEdge>,
    /// Edges slidable afterwards that were not before (excluding the image
    /// of the slid edge).
    pub newly_slidable: Vec<CubeEdge>,
}

#[derive(Debug, Clone)]
pub struct ExcessWitness {
    pub tree: SpanningTree,
    pub dir: usize,
    pub k: usize,
    pub slidable: Vec<CubeEdge>,
    pub effects: Vec<SlideEffect>,
    /// Position of the witness in the candidate schedule, plus one.
    pub candidates_examined: u64,
}

#[derive(Debug, Clone)]
pub struct DependentWitness {
    pub tree: SpanningTree,
    pub dir: usize,
    pub k: usize,
    pub slidable: Vec<CubeEdge>,
    pub epsilon: Vec<u8>,
    pub cycle: Vec<CubeEdge>,
    pub candidates_examined: u64,
}

fn require_large(n: usize) -> Result<()> {
    if n < 4 {
        // Every tree of a smaller cube satisfies both lemmas.
        return Err(Error::UnsupportedDimension {
            required: 4,
            actual: n,
        });
    }
    Ok(())
}

/// Scans the candidate schedule and returns the earliest hit.
fn run_search<W: Send>(
    n: usize,
    config: SearchConfig,
    check: impl Fn(&SpanningTree, u64) -> Option<W> + Sync,
) -> Result<W> {
    let walk_length = config.walk_length.max(1);
    let walks = config.budget.div_ceil(walk_length);
    let root = SeededSource::new(config.seed);
    // Validate the dimension before fanning out.
    TreeSampler::new(n, root)?;
    let found = (0..walks).into_par_iter().find_map_first(|w| {
        let mut sampler = TreeSampler::new(n, root.split(w)).expect("dimension checked");
        let mut tree = sampler.sample();
        let steps = walk_length.min(config.budget - w * walk_length);
        for s in 0..steps {
            if s > 0 {
                let moves = all_slides(&tree);
                let m = moves[sampler.rng().gen_range(0..moves.len())];
                tree = slide(&tree, m.edge, m.slide_dir).expect("listed moves are slidable");
            }
            let index = w * walk_length + s;
            if let Some(hit) = check(&tree, index + 1) {
                return Some(hit);
            }
        }
        None
    });
    found.ok_or(Error::SearchExhausted {
        examined: config.budget,
    })
}

fn verified_slidable(tree: &SpanningTree, i: usize) -> Vec<CubeEdge> {
    let edges: Vec<CubeEdge> = slidable_edges(tree, i)
        .expect("direction in range")
        .iter()
        .map(|m| m.edge)
        .collect();
    assert!(
        edges.iter().all(|&e| is_slidable(tree, e, i).unwrap()),
        "cut test disagrees with direct validation"
    );
    edges
}

fn slide_effects(tree: &SpanningTree, i: usize, slidable: &[CubeEdge]) -> Vec<SlideEffect> {
    slidable
        .iter()
        .map(|&e| {
            let after = slide(tree, e, i).expect("verified slidable");
            let now = verified_slidable(&after, i);
            SlideEffect {
                slid: e,
                still_slidable: slidable
                    .iter()
                    .copied()
                    .filter(|&f| f != e && now.contains(&f))
                    .collect(),
                newly_slidable: now
                    .iter()
                    .copied()
                    .filter(|&f| f != e.reflected(i) && !slidable.contains(&f))
                    .collect(),
            }
        })
        .collect()
}

/// Looks for a tree and direction `i` with more than `k_i - 1` slidable
/// edges.
pub fn search_excess_slides(n: usize, config: SearchConfig) -> Result<ExcessWitness> {
    require_large(n)?;
    run_search(n, config, |tree, examined| {
        let signature = tree.signature();
        let rooted = tree.rooted();
        let i = tree
            .cube()
            .directions()
            .filter(|&i| config.target_k.is_none_or(|k| k == signature[i - 1]))
            .find(|&i| super::slidable_with(tree, &rooted, i).len() >= signature[i - 1])?;
        let slidable = verified_slidable(tree, i);
        Some(ExcessWitness {
            tree: tree.clone(),
            dir: i,
            k: signature[i - 1],
            effects: slide_effects(tree, i, &slidable),
            slidable,
            candidates_examined: examined,
        })
    })
}

/// Members of `{0,1}^len` with at least two ones, by weight then value.
fn multi_subsets(len: usize) -> Vec<usize> {
    let mut subsets: Vec<usize> = (0..1usize << len).filter(|e| e.count_ones() >= 2).collect();
    subsets.sort_by_key(|e| (e.count_ones(), *e));
    subsets
}

/// Looks for a tree and direction `i` with exactly `k_i - 1 >= 2` slidable
/// edges, some combination of which cannot be slid simultaneously.
pub fn search_dependent_slides(n: usize, config: SearchConfig) -> Result<DependentWitness> {
    require_large(n)?;
    run_search(n, config, |tree, examined| {
        let signature = tree.signature();
        let rooted = tree.rooted();
        tree.cube().directions().find_map(|i| {
            let moves = super::slidable_with(tree, &rooted, i);
            let k = signature[i - 1];
            if moves.len() < 2 || moves.len() + 1 != k || moves.len() > 16 {
                return None;
            }
            if config.target_k.is_some_and(|target| target != k) {
                return None;
            }
            let slidable: Vec<CubeEdge> = moves.iter().map(|m| m.edge).collect();
            multi_subsets(slidable.len()).into_iter().find_map(|eps| {
                match class_member(tree, &slidable, i, eps) {
                    Err(Error::DependentSlides { epsilon, cycle, .. }) => {
                        assert!(is_closed_cycle(&cycle));
                        Some(DependentWitness {
                            tree: tree.clone(),
                            dir: i,
                            k: signature[i - 1],
                            slidable: verified_slidable(tree, i),
                            epsilon,
                            cycle,
                            candidates_examined: examined,
                        })
                    }
                    _ => None,
                }
            })
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Excess,
    Dependent,
}

/// The fixture file format for search witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub n: usize,
    pub tree: Vec<[u32; 2]>,
    pub dir: usize,
    pub kind: WitnessKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<[u32; 2]>>,
    pub k: usize,
    pub slidable: Vec<[u32; 2]>,
    pub sampler: String,
    pub seed: u64,
    pub budget: u64,
    pub walk_length: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_k: Option<usize>,
    pub candidates_examined: u64,
}

fn pairs(edges: &[CubeEdge]) -> Vec<[u32; 2]> {
    edges.iter().map(|e| [e.lower.0, e.dir as u32]).collect()
}

impl WitnessRecord {
    pub fn excess(w: &ExcessWitness, config: SearchConfig) -> Self {
        WitnessRecord {
            n: w.tree.n(),
            tree: pairs(&w.tree.edges().collect::<Vec<_>>()),
            dir: w.dir,
            kind: WitnessKind::Excess,
            epsilon: None,
            cycle: None,
            k: w.k,
            slidable: pairs(&w.slidable),
            sampler: SAMPLER_ID.to_string(),
            seed: config.seed,
            budget: config.budget,
            walk_length: config.walk_length,
            target_k: config.target_k,
            candidates_examined: w.candidates_examined,
        }
    }

    pub fn dependent(w: &DependentWitness, config: SearchConfig) -> Self {
        WitnessRecord {
            n: w.tree.n(),
            tree: pairs(&w.tree.edges().collect::<Vec<_>>()),
            dir: w.dir,
            kind: WitnessKind::Dependent,
            epsilon: Some(w.epsilon.clone()),
            cycle: Some(pairs(&w.cycle)),
            k: w.k,
            slidable: pairs(&w.slidable),
            sampler: SAMPLER_ID.to_string(),
            seed: config.seed,
            budget: config.budget,
            walk_length: config.walk_length,
            target_k: config.target_k,
            candidates_examined: w.candidates_examined,
        }
    }

    pub fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            seed: self.seed,
            walk_length: self.walk_length,
            target_k: self.target_k,
        }
    }

    pub fn to_tree(&self) -> Result<SpanningTree> {
        crate::tree::TreeRecord {
            n: self.n,
            edges: Some(self.tree.clone()),
            mask: None,
        }
        .to_tree()
    }

    /// Re-checks the recorded claim from scratch, independently of the
    /// search that produced it.
    pub fn verify(&self) -> Result<bool> {
        let tree = self.to_tree()?;
        let cube = tree.cube();
        cube.check_direction(self.dir)?;
        let k = tree.signature()[self.dir - 1];
        let slidable: Vec<CubeEdge> = tree
            .edges()
            .filter(|e| e.dir != self.dir)
            .filter(|&e| is_slidable(&tree, e, self.dir).unwrap_or(false))
            .collect();
        if k != self.k || pairs(&slidable) != self.slidable {
            return Ok(false);
        }
        Ok(match self.kind {
            WitnessKind::Excess => slidable.len() > k - 1,
            WitnessKind::Dependent => {
                let (Some(eps), Some(cycle)) = (&self.epsilon, &self.cycle) else {
                    return Ok(false);
                };
                if slidable.len() + 1 != k || eps.len() != slidable.len() {
                    return Ok(false);
                }
                let mut edges: Vec<CubeEdge> = tree.edges().collect();
                for (e, &bit) in slidable.iter().zip(eps) {
                    if bit == 1 {
                        let pos = edges.iter().position(|f| f == e).expect("tree edge");
                        edges[pos] = e.reflected(self.dir);
                    }
                }
                let cycle: Vec<CubeEdge> = cycle
                    .iter()
                    .map(|&[lower, dir]| cube.edge(lower, dir as usize))
                    .collect::<Result<_>>()?;
                is_closed_cycle(&cycle) && cycle.iter().all(|c| edges.contains(c))
            }
        })
    }
}
