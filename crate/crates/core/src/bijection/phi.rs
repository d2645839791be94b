//! The bijection `Phi` from spanning trees of `Q_3` to signed sections.
//!
//! The unsigned part of `Phi(T)` is the section of the upright tree `pi(T)`.
//! For the signs, write `pi = alpha . pi_i . beta`. The `i`-edges of
//! `beta(T)` split into `P_i` (reversed by the downward `i`-slides that
//! `pi_i` performs), `N_i` (reversed by the available upward `i`-slides)
//! and the one remaining edge `Z_i`. The three sets are carried along as
//! `alpha` slides their edges, then `Z_i` is swapped with `(∅, {i})`. A set
//! `S` gets sign `+1` when the first edge of its root path in `pi(T)` is in
//! `P_i` and `-1` when it is in `N_i`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercube::{CubeEdge, Vertex};
use crate::slides::{
    class_member_all, retract_i_tracked, reversed_edge, slidable_edges, slide, Vertical,
};
use crate::tree::SpanningTree;

use super::{section_of_upright, upright_of_section, Choice, SignedSection};

/// Order in which the downward slides of each `pi_i` are carried out one at
/// a time. The outcome does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlideOrder {
    #[default]
    Canonical,
    Reverse,
    Shuffled(u64),
}

impl SlideOrder {
    fn arrange(self, edges: &mut [CubeEdge]) {
        match self {
            SlideOrder::Canonical => {}
            SlideOrder::Reverse => edges.reverse(),
            SlideOrder::Shuffled(seed) => edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
        }
    }
}

/// The `P_i`, `N_i`, `Z_i` split of the `i`-edges of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub dir: usize,
    pub positive: Vec<CubeEdge>,
    pub negative: Vec<CubeEdge>,
    pub zero: CubeEdge,
}

impl EdgePartition {
    fn normalize(&mut self) {
        self.positive.sort();
        self.negative.sort();
    }

    /// Moves tracked edges along with the slides `(from, to)`.
    fn transport(&mut self, moves: &[(CubeEdge, CubeEdge)]) {
        let step = |e: &mut CubeEdge| {
            if let Some(&(_, to)) = moves.iter().find(|(from, _)| from == e) {
                *e = to;
            }
        };
        self.positive.iter_mut().for_each(step);
        self.negative.iter_mut().for_each(step);
        step(&mut self.zero);
        self.normalize();
    }

    fn swap_zero_to_root(&mut self) {
        let root_edge = CubeEdge::new(0, self.dir);
        if self.zero == root_edge {
            return;
        }
        let slot = self
            .positive
            .iter_mut()
            .chain(self.negative.iter_mut())
            .find(|e| **e == root_edge)
            .expect("an upright tree contains every (∅, {i})");
        *slot = self.zero;
        self.zero = root_edge;
        self.normalize();
    }

    fn sign_of(&self, e: CubeEdge) -> Option<i8> {
        if self.positive.contains(&e) {
            Some(1)
        } else if self.negative.contains(&e) {
            Some(-1)
        } else {
            None
        }
    }
}

/// Everything computed on the way to `Phi(T)`.
#[derive(Debug, Clone)]
pub struct PhiTrace {
    /// The partition of each direction as first computed on `beta(T)`,
    /// indexed by `i - 1`.
    pub stages: Vec<EdgePartition>,
    /// The partitions as carried into `pi(T)`, after the swap.
    pub partitions: Vec<EdgePartition>,
    pub upright: SpanningTree,
    pub signed: SignedSection,
}

fn require_q3(n: usize) -> Result<()> {
    if n != 3 {
        return Err(Error::UnsupportedDimension {
            required: 3,
            actual: n,
        });
    }
    Ok(())
}

/// The `i`-edge met from the root once the `i`-slidable edges are removed.
fn root_component_edge(tree: &SpanningTree, i: usize, slidable: &[CubeEdge]) -> Vec<CubeEdge> {
    let kept: Vec<CubeEdge> = tree.edges().filter(|e| !slidable.contains(e)).collect();
    let mut seen = vec![false; tree.cube().vertex_count()];
    let mut stack = vec![Vertex::EMPTY];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for e in &kept {
            let (a, b) = e.endpoints();
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w.0 as usize] {
                seen[w.0 as usize] = true;
                stack.push(w);
            }
        }
    }
    kept.into_iter()
        .filter(|e| e.dir == i && seen[e.lower.0 as usize])
        .collect()
}

/// Splits the `i`-edges of `tree` and performs `pi_i` one slide at a time.
/// A partition, the tree after `pi_i`, and the `(from, to)` slides made.
type Classified = (EdgePartition, SpanningTree, Vec<(CubeEdge, CubeEdge)>);

fn classify(tree: &SpanningTree, i: usize, order: SlideOrder) -> Result<Classified> {
    let moves = slidable_edges(tree, i)?;
    let mut downs: Vec<CubeEdge> = moves
        .iter()
        .filter(|m| m.vertical == Vertical::Down)
        .map(|m| m.edge)
        .collect();
    order.arrange(&mut downs);
    let mut current = tree.clone();
    let mut positive = Vec::new();
    for &e in &downs {
        positive.push(reversed_edge(&current, e, i)?);
        current = slide(&current, e, i)?;
    }
    let negative = moves
        .iter()
        .filter(|m| m.vertical == Vertical::Up)
        .map(|m| reversed_edge(tree, m.edge, i))
        .collect::<Result<Vec<_>>>()?;
    let rest: Vec<CubeEdge> = tree
        .edges_in_direction(i)
        .filter(|e| !positive.contains(e) && !negative.contains(e))
        .collect();
    assert_eq!(
        positive.len() + negative.len() + rest.len(),
        tree.edges_in_direction(i).count(),
        "reversed edges must be distinct"
    );
    let [zero] = rest[..] else {
        panic!("expected one unreversed {i}-edge, found {rest:?}");
    };
    let slidable: Vec<CubeEdge> = moves.iter().map(|m| m.edge).collect();
    assert_eq!(root_component_edge(tree, i, &slidable), vec![zero]);

    let (retracted, tracked) = retract_i_tracked(tree, i)?;
    assert_eq!(current, retracted);
    let mut partition = EdgePartition {
        dir: i,
        positive,
        negative,
        zero,
    };
    partition.normalize();
    Ok((partition, retracted, tracked))
}

/// `Phi(T)` together with the intermediate partitions.
pub fn phi_trace(tree: &SpanningTree, order: SlideOrder) -> Result<PhiTrace> {
    require_q3(tree.n())?;
    let mut current = tree.clone();
    let mut stages: Vec<Option<EdgePartition>> = vec![None; 3];
    let mut carried: Vec<Option<EdgePartition>> = vec![None; 3];
    for i in (1..=3).rev() {
        let (partition, next, moves) = classify(&current, i, order)?;
        stages[i - 1] = Some(partition.clone());
        carried[i - 1] = Some(partition);
        for p in carried.iter_mut().flatten() {
            p.transport(&moves);
        }
        current = next;
    }
    let upright = current;
    assert!(upright.is_upright());
    let mut partitions: Vec<EdgePartition> = carried.into_iter().flatten().collect();
    for p in &mut partitions {
        p.swap_zero_to_root();
    }
    let section = section_of_upright(&upright)?;
    let choices = upright
        .cube()
        .vertices()
        .filter(|s| s.cardinality() >= 2)
        .map(|s| {
            let dir = section.get(s);
            let first = CubeEdge::new(s.toggled(dir).0, dir);
            let sign = partitions[dir - 1]
                .sign_of(first)
                .unwrap_or_else(|| panic!("{first} is the zero edge of direction {dir}"));
            Choice {
                set: s.0,
                dir,
                sign,
            }
        })
        .collect();
    Ok(PhiTrace {
        stages: stages.into_iter().flatten().collect(),
        partitions,
        upright,
        signed: SignedSection::new(3, choices)?,
    })
}

pub fn phi_forward(tree: &SpanningTree) -> Result<SignedSection> {
    phi_forward_with(tree, SlideOrder::Canonical)
}

pub fn phi_forward_with(tree: &SpanningTree, order: SlideOrder) -> Result<SignedSection> {
    Ok(phi_trace(tree, order)?.signed)
}

/// The tree with the given signed section: rebuild `pi(T)`, then undo
/// `pi_1`, `pi_2`, `pi_3` in turn by upward slides chosen so that exactly
/// the `P_i` edges are reversed.
pub fn phi_inverse(signed: &SignedSection) -> Result<SpanningTree> {
    require_q3(signed.n())?;
    let inconsistent = |why: String| Error::InconsistentSignedSection(why);
    let upright = upright_of_section(&signed.section())?;
    let mut partitions: Vec<EdgePartition> = (1..=3)
        .map(|i| EdgePartition {
            dir: i,
            positive: Vec::new(),
            negative: Vec::new(),
            zero: CubeEdge::new(0, i),
        })
        .collect();
    for c in signed.choices() {
        let e = CubeEdge::new(Vertex(c.set).toggled(c.dir).0, c.dir);
        let p = &mut partitions[c.dir - 1];
        if c.sign > 0 {
            p.positive.push(e);
        } else {
            p.negative.push(e);
        }
    }
    partitions.iter_mut().for_each(EdgePartition::normalize);

    let mut tree = upright;
    for i in 1..=3 {
        let moves = slidable_edges(&tree, i)?;
        if moves.iter().any(|m| m.vertical == Vertical::Down) {
            return Err(inconsistent(format!(
                "direction {i} still has downward slides"
            )));
        }
        let reversals = moves
            .iter()
            .map(|m| Ok((m.edge, reversed_edge(&tree, m.edge, i)?)))
            .collect::<Result<Vec<_>>>()?;
        let unreversed: Vec<CubeEdge> = tree
            .edges_in_direction(i)
            .filter(|e| reversals.iter().all(|(_, f)| f != e))
            .collect();
        let [z] = unreversed[..] else {
            return Err(inconsistent(format!(
                "direction {i} has {} unreversible edges",
                unreversed.len()
            )));
        };
        let p = &partitions[i - 1];
        let mut target = p.positive.clone();
        if let Some(k) = target.iter().position(|&e| e == z) {
            target[k] = p.zero;
        }
        let chosen: Vec<CubeEdge> = reversals
            .iter()
            .filter(|(_, f)| target.contains(f))
            .map(|&(e, _)| e)
            .collect();
        if chosen.len() != target.len() {
            return Err(inconsistent(format!(
                "direction {i}: cannot reverse exactly {target:?}"
            )));
        }
        tree = class_member_all(&tree, &chosen, i)?;
        let slid: Vec<(CubeEdge, CubeEdge)> = chosen.iter().map(|&e| (e, e.reflected(i))).collect();
        for q in &mut partitions {
            q.transport(&slid);
        }
    }
    if phi_forward(&tree)? != *signed {
        return Err(inconsistent(
            "round trip does not reproduce the input".into(),
        ));
    }
    Ok(tree)
}
