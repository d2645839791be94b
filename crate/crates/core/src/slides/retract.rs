//! Retractions onto upright trees.

use crate::error::{Error, Result};
use crate::hypercube::CubeEdge;
use crate::tree::SpanningTree;

use super::{class_member, slidable_with, SlideMove, Vertical};

fn require_q3(tree: &SpanningTree) -> Result<()> {
    if tree.n() != 3 {
        return Err(Error::UnsupportedDimension {
            required: 3,
            actual: tree.n(),
        });
    }
    Ok(())
}

/// `pi_i` together with the slides it performed, as `(from, to)` pairs.
pub(crate) fn retract_i_tracked(
    tree: &SpanningTree,
    i: usize,
) -> Result<(SpanningTree, Vec<(CubeEdge, CubeEdge)>)> {
    require_q3(tree)?;
    tree.cube().check_direction(i)?;
    let down: Vec<CubeEdge> = slidable_with(tree, &tree.rooted(), i)
        .into_iter()
        .filter(|m| m.vertical == Vertical::Down)
        .map(|m| m.edge)
        .collect();
    let all = (1usize << down.len()) - 1;
    let result = class_member(tree, &down, i, all)?;
    let moves = down.iter().map(|&e| (e, e.reflected(i))).collect();
    Ok((result, moves))
}

/// `pi_i`: performs every available downward `i`-slide at once (`n = 3`).
pub fn retract_i(tree: &SpanningTree, i: usize) -> Result<SpanningTree> {
    Ok(retract_i_tracked(tree, i)?.0)
}

/// `pi = pi_1 . pi_2 . pi_3`, so `pi_3` acts first (`n = 3`).
pub fn retract(tree: &SpanningTree) -> Result<SpanningTree> {
    let t = retract_i(tree, 3)?;
    let t = retract_i(&t, 2)?;
    retract_i(&t, 1)
}

#[derive(Debug, Clone)]
pub struct Normalized {
    pub tree: SpanningTree,
    pub steps: Vec<SlideMove>,
}

/// Applies the first downward slide (by direction, then edge index) until
/// none is left. Works for any `n`; each step lowers the endpoint
/// cardinality sum by 2, so the result is reached and is upright.
pub fn normalize_downward(tree: &SpanningTree) -> Result<Normalized> {
    let mut current = tree.clone();
    let mut steps = Vec::new();
    loop {
        let rooted = current.rooted();
        let next = current
            .cube()
            .directions()
            .flat_map(|i| slidable_with(&current, &rooted, i))
            .find(|m| m.vertical == Vertical::Down);
        match next {
            Some(m) => {
                current = super::slide(&current, m.edge, m.slide_dir)?;
                steps.push(m);
            }
            None => break,
        }
    }
    debug_assert!(current.is_upright());
    Ok(Normalized {
        tree: current,
        steps,
    })
}
