//! The edge-slide calculus.
//!
//! A tree edge `e` is *i-slidable* when `T - e + sigma_i(e)` is again a
//! spanning tree. [`is_slidable`] decides this by validating the exchanged
//! edge set directly; [`slidable_edges`] uses the equivalent cut test (the
//! endpoints of `sigma_i(e)` lie on opposite sides of `e`) on a rooted copy
//! of the tree, which is what the bulk operations and searches use.

mod retract;
mod search;

pub use retract::{normalize_downward, retract, retract_i, Normalized};
pub use search::{
    search_dependent_slides, search_excess_slides, DependentWitness, ExcessWitness, SearchConfig,
    SlideEffect, WitnessKind, WitnessRecord,
};

pub(crate) use retract::retract_i_tracked;

use std::fmt;

use crate::error::{Error, Result};
use crate::forest::find_cycle;
use crate::hypercube::{CubeEdge, Vertex};
use crate::tree::{validate_edge_set, EdgeSet, RootedTree, SpanningTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertical {
    /// From the lower face `F-_i` to the upper face `F+_i`.
    Up,
    Down,
}

/// Sliding `edge` across direction `slide_dir`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlideMove {
    pub edge: CubeEdge,
    pub slide_dir: usize,
    pub vertical: Vertical,
}

impl SlideMove {
    pub fn new(edge: CubeEdge, slide_dir: usize) -> Self {
        let vertical = if edge.in_lower_face(slide_dir) {
            Vertical::Up
        } else {
            Vertical::Down
        };
        SlideMove {
            edge,
            slide_dir,
            vertical,
        }
    }

    /// The edge that replaces `edge`.
    pub fn target(&self) -> CubeEdge {
        self.edge.reflected(self.slide_dir)
    }
}

impl fmt::Display for SlideMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let way = match self.vertical {
            Vertical::Up => "up",
            Vertical::Down => "down",
        };
        write!(f, "{} {} in direction {}", self.edge, way, self.slide_dir)
    }
}

fn check_slide_args(tree: &SpanningTree, e: CubeEdge, i: usize) -> Result<()> {
    tree.cube().check_direction(i)?;
    if !tree.contains(e) {
        return Err(Error::EdgeNotInTree { edge: e });
    }
    if i == e.dir {
        return Err(Error::ReflectionAlongOwnDirection { edge: e, dir: i });
    }
    Ok(())
}

/// Whether `T - e + sigma_i(e)` is a spanning tree, by direct validation.
pub fn is_slidable(tree: &SpanningTree, e: CubeEdge, i: usize) -> Result<bool> {
    check_slide_args(tree, e, i)?;
    let target = e.reflected(i);
    if tree.contains(target) {
        return Ok(false);
    }
    Ok(validate_edge_set(tree.cube(), &tree.exchanged(e, target)).is_ok())
}

/// Performs the slide, reporting why it fails if `e` is not i-slidable.
pub fn slide(tree: &SpanningTree, e: CubeEdge, i: usize) -> Result<SpanningTree> {
    check_slide_args(tree, e, i)?;
    let target = e.reflected(i);
    if tree.contains(target) {
        return Err(Error::ReflectionInTree { edge: e, dir: i });
    }
    let set = tree.exchanged(e, target);
    validate_edge_set(tree.cube(), &set).map_err(|reason| Error::NotSlidable {
        edge: e,
        dir: i,
        reason: Box::new(reason),
    })?;
    Ok(SpanningTree::from_edge_set(tree.cube(), set).expect("validated above"))
}

pub(crate) fn slidable_with(tree: &SpanningTree, rooted: &RootedTree, i: usize) -> Vec<SlideMove> {
    tree.edges()
        .filter(|e| e.dir != i)
        .filter(|&e| {
            let f = e.reflected(i);
            rooted.separates(e, f.lower, f.upper())
        })
        .map(|e| SlideMove::new(e, i))
        .collect()
}

/// All moves in direction `i`, in canonical edge order.
pub fn slidable_edges(tree: &SpanningTree, i: usize) -> Result<Vec<SlideMove>> {
    tree.cube().check_direction(i)?;
    Ok(slidable_with(tree, &tree.rooted(), i))
}

/// All moves of the tree, by direction then canonical edge order.
pub fn all_slides(tree: &SpanningTree) -> Vec<SlideMove> {
    let rooted = tree.rooted();
    tree.cube()
        .directions()
        .flat_map(|i| slidable_with(tree, &rooted, i))
        .collect()
}

/// Tree edges (other than the slid one) whose orientation sign changes
/// under the slide. In `Q_3` the slid edge keeps its sign on the new
/// position; from `n = 4` on it can lose it.
pub fn flipped_edges(tree: &SpanningTree, e: CubeEdge, i: usize) -> Result<Vec<CubeEdge>> {
    let after = slide(tree, e, i)?;
    let (before_r, after_r) = (tree.rooted(), after.rooted());
    if tree.n() <= 3 {
        assert_eq!(
            before_r.mu(e),
            after_r.mu(e.reflected(i)),
            "slid edge changed orientation"
        );
    }
    Ok(tree
        .edges()
        .filter(|&f| f != e && before_r.mu(f) != after_r.mu(f))
        .collect())
}

/// The unique `i`-edge whose orientation is reversed by sliding `e` in
/// direction `i`. Always unique in `Q_3`; an error elsewhere if not.
pub fn reversed_edge(tree: &SpanningTree, e: CubeEdge, i: usize) -> Result<CubeEdge> {
    let flipped: Vec<CubeEdge> = flipped_edges(tree, e, i)?
        .into_iter()
        .filter(|f| f.dir == i)
        .collect();
    match flipped.as_slice() {
        [f] => Ok(*f),
        _ => Err(Error::NoUniqueReversal {
            edge: e,
            dir: i,
            count: flipped.len(),
        }),
    }
}

/// Vertices of the tree path joining edges `e1` and `e2`, from the endpoint
/// of `e1` to the endpoint of `e2`, using neither edge.
pub fn edge_path(tree: &SpanningTree, e1: CubeEdge, e2: CubeEdge) -> Vec<Vertex> {
    edge_path_with(&tree.rooted(), e1, e2)
}

fn edge_path_with(rooted: &RootedTree, e1: CubeEdge, e2: CubeEdge) -> Vec<Vertex> {
    let mut path = rooted.path(e1.lower, e2.lower);
    if path.len() >= 2 && path[1] == e1.upper() {
        path.remove(0);
    }
    let len = path.len();
    if len >= 2 && path[len - 2] == e2.upper() {
        path.pop();
    }
    path
}

fn touches_i_edge(tree: &SpanningTree, v: Vertex, i: usize) -> bool {
    let lower = if v.contains(i) { v.toggled(i) } else { v };
    tree.contains(CubeEdge { lower, dir: i })
}

/// Whether the path between `i`-edges `e1` and `e2` meets no other
/// `i`-edge of the tree.
pub fn is_consecutive_pair(tree: &SpanningTree, e1: CubeEdge, e2: CubeEdge, i: usize) -> bool {
    let path = edge_path(tree, e1, e2);
    let interior = path.iter().skip(1).take(path.len().saturating_sub(2));
    e1 != e2 && !interior.copied().any(|v| touches_i_edge(tree, v, i))
}

fn check_path_edge(tree: &SpanningTree, e: CubeEdge, i: usize) -> Result<()> {
    if !tree.contains(e) {
        return Err(Error::EdgeNotInTree { edge: e });
    }
    if e.dir != i {
        return Err(Error::NotInDirection { edge: e, dir: i });
    }
    Ok(())
}

/// Finds an `i`-slidable edge on the tree path between two `i`-edges, for
/// any `n`.
///
/// The path is first shortened so that it meets no other `i`-edge. For each
/// path vertex `v` let `phi(v)` be the first path vertex on the tree path
/// from `sigma_i(v)` to `v`; an edge `(v_l, v_{l+1})` whose two `phi` values
/// lie on opposite sides of it is slidable, and one always exists.
pub fn find_slidable_on_path(
    tree: &SpanningTree,
    e1: CubeEdge,
    e2: CubeEdge,
    i: usize,
) -> Result<CubeEdge> {
    tree.cube().check_direction(i)?;
    check_path_edge(tree, e1, i)?;
    check_path_edge(tree, e2, i)?;
    let none_found = || Error::NoSlidableOnPath {
        first: e1,
        second: e2,
    };
    if e1 == e2 {
        return Err(none_found());
    }
    let rooted = tree.rooted();
    let mut path = edge_path_with(&rooted, e1, e2);
    // Stop at the first vertex touching another i-edge, which then plays
    // the part of e2.
    if let Some(j) = (1..path.len().saturating_sub(1)).find(|&j| touches_i_edge(tree, path[j], i)) {
        path.truncate(j + 1);
    }

    let mut position = vec![usize::MAX; tree.cube().vertex_count()];
    for (k, v) in path.iter().enumerate() {
        position[v.0 as usize] = k;
    }
    let phi: Vec<usize> = path
        .iter()
        .map(|&v| {
            rooted
                .path(v.toggled(i), v)
                .into_iter()
                .map(|w| position[w.0 as usize])
                .find(|&k| k != usize::MAX)
                .expect("the path ends at v, which is on P")
        })
        .collect();
    debug_assert_eq!(phi[0], 0);
    for l in 0..path.len().saturating_sub(1) {
        if phi[l] <= l && phi[l + 1] > l {
            let f = CubeEdge::between(path[l], path[l + 1]).expect("path step");
            if is_slidable(tree, f, i)? {
                return Ok(f);
            }
        }
    }
    Err(none_found())
}

/// The set `<T>_i` of trees reachable by sliding any subset of the
/// `i`-slidable edges of `T` simultaneously.
#[derive(Debug, Clone)]
pub struct SlideClass {
    pub base: SpanningTree,
    pub dir: usize,
    /// `S_i(T)` in canonical order; bit `j` of a member index selects
    /// whether `slidable[j]` is slid.
    pub slidable: Vec<CubeEdge>,
    pub members: Vec<SpanningTree>,
}

impl SlideClass {
    pub fn member(&self, epsilon: usize) -> &SpanningTree {
        &self.members[epsilon]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `T_epsilon = (T \ S) + {sigma_i^{epsilon_j}(e_j)}` as an edge set.
pub(crate) fn exchange_subset(
    tree: &SpanningTree,
    slidable: &[CubeEdge],
    i: usize,
    epsilon: usize,
) -> EdgeSet {
    let cube = tree.cube();
    let mut set = *tree.edge_set();
    for (j, &e) in slidable.iter().enumerate() {
        if epsilon >> j & 1 == 1 {
            set.remove(cube.edge_index_unchecked(e));
            set.insert(cube.edge_index_unchecked(e.reflected(i)));
        }
    }
    set
}

pub(crate) fn epsilon_bits(epsilon: usize, len: usize) -> Vec<u8> {
    (0..len).map(|j| (epsilon >> j & 1) as u8).collect()
}

/// Checks `T_epsilon`, returning the dependence report if it is not a tree.
pub(crate) fn class_member(
    tree: &SpanningTree,
    slidable: &[CubeEdge],
    i: usize,
    epsilon: usize,
) -> Result<SpanningTree> {
    let set = exchange_subset(tree, slidable, i, epsilon);
    match validate_edge_set(tree.cube(), &set) {
        Ok(()) => Ok(SpanningTree::from_edge_set(tree.cube(), set).expect("validated")),
        Err(_) => {
            let edges: Vec<CubeEdge> = set
                .iter()
                .map(|k| tree.cube().index_edge(k).expect("in range"))
                .collect();
            let cycle = find_cycle(tree.cube().vertex_count(), &edges)
                .expect("2^n - 1 edges that are not a tree contain a cycle");
            Err(Error::DependentSlides {
                dir: i,
                epsilon: epsilon_bits(epsilon, slidable.len()),
                cycle,
            })
        }
    }
}

/// Slides all of `edges` in direction `i` at once.
pub(crate) fn class_member_all(
    tree: &SpanningTree,
    edges: &[CubeEdge],
    i: usize,
) -> Result<SpanningTree> {
    class_member(tree, edges, i, (1usize << edges.len()) - 1)
}

/// Largest `|S_i(T)|` for which a class is materialized.
const MAX_CLASS_BITS: usize = 20;

/// Builds every member of `<T>_i`. Succeeds for every tree of `Q_3`; for
/// larger cubes reports the first `epsilon` whose simultaneous slide is not
/// a tree.
pub fn slide_class(tree: &SpanningTree, i: usize) -> Result<SlideClass> {
    let slidable: Vec<CubeEdge> = slidable_edges(tree, i)?.iter().map(|m| m.edge).collect();
    if slidable.len() > MAX_CLASS_BITS {
        return Err(Error::TooLarge {
            n: slidable.len(),
            max: MAX_CLASS_BITS,
        });
    }
    let members = (0..1usize << slidable.len())
        .map(|eps| class_member(tree, &slidable, i, eps))
        .collect::<Result<Vec<_>>>()?;
    Ok(SlideClass {
        base: tree.clone(),
        dir: i,
        slidable,
        members,
    })
}
