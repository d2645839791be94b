//! Compact and JSON encodings of spanning trees.
//!
//! For `n <= 3` a tree is the bitmask of its canonical edge indices (a 12-bit
//! integer for `Q_3`); for larger cubes it is the sorted list of indices.
//! The JSON record is `{"n": int, "edges": [[lowerBits, dir], ...]}` with
//! edges in canonical order, or the short form `{"n": 3, "mask": int}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercube::{CubeEdge, Hypercube};

use super::{EdgeSet, SpanningTree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Mask(u64),
    Indices(Vec<usize>),
}

pub fn encode(tree: &SpanningTree) -> Payload {
    if tree.n() <= 3 {
        Payload::Mask(tree.edge_set().low_word())
    } else {
        Payload::Indices(tree.edge_set().iter().collect())
    }
}

pub fn decode(n: usize, payload: &Payload) -> Result<SpanningTree> {
    let cube = Hypercube::new(n)?;
    let expected = cube.vertex_count() - 1;
    let set = match payload {
        Payload::Mask(mask) => {
            if n > 3 {
                return Err(Error::InvalidPayload(format!(
                    "mask payloads are only defined for n <= 3, got n = {n}"
                )));
            }
            if mask >> cube.edge_count() != 0 {
                return Err(Error::InvalidEdgeIndex {
                    index: 63 - mask.leading_zeros() as usize,
                    n,
                });
            }
            EdgeSet::from_low_word(*mask)
        }
        Payload::Indices(indices) => {
            let mut set = EdgeSet::new();
            for &k in indices {
                if k >= cube.edge_count() {
                    return Err(Error::InvalidEdgeIndex { index: k, n });
                }
                set.insert(k);
            }
            if set.len() != indices.len() {
                return Err(Error::InvalidPayload("repeated edge index".into()));
            }
            set
        }
    };
    if set.len() != expected {
        return Err(Error::WrongEdgeCount {
            expected,
            found: set.len(),
        });
    }
    SpanningTree::from_edge_set(cube, set)
}

/// The JSON tree record, in either form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[u32; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask: Option<u64>,
}

impl TreeRecord {
    pub fn full(tree: &SpanningTree) -> Self {
        TreeRecord {
            n: tree.n(),
            edges: Some(tree.edges().map(|e| [e.lower.0, e.dir as u32]).collect()),
            mask: None,
        }
    }

    /// `{"n":3,"mask":...}`; falls back to the full form for `n > 3`.
    pub fn short(tree: &SpanningTree) -> Self {
        match encode(tree) {
            Payload::Mask(mask) if tree.n() == 3 => TreeRecord {
                n: 3,
                edges: None,
                mask: Some(mask),
            },
            _ => Self::full(tree),
        }
    }

    pub fn to_tree(&self) -> Result<SpanningTree> {
        match (&self.edges, self.mask) {
            (Some(edges), None) => {
                let cube = Hypercube::new(self.n)?;
                let list = edges
                    .iter()
                    .map(|&[lower, dir]| cube.edge(lower, dir as usize))
                    .collect::<Result<Vec<CubeEdge>>>()?;
                SpanningTree::from_edges(self.n, list)
            }
            (None, Some(mask)) => decode(self.n, &Payload::Mask(mask)),
            _ => Err(Error::InvalidPayload(
                "tree record needs exactly one of \"edges\" or \"mask\"".into(),
            )),
        }
    }
}
