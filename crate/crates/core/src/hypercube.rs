//! Static structure of the hypercube `Q_n`.
//!
//! Vertices are subsets of `{1, ..., n}` stored as bitmasks (bit `i - 1` set
//! iff `i` is in the subset). Directions are 1-based everywhere in the public
//! surface. An edge is stored as its lower endpoint (the one *not* containing
//! the edge direction) together with the direction.
//!
//! Edges carry a canonical order: by direction ascending, then by the lower
//! endpoint's bitmask ascending. The rank in that order is the edge index used
//! for serialization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest dimension for which trees and slides are supported.
pub const MAX_DIM: usize = 8;

/// A subset of `[n]`, as a bitmask.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Vertex(pub u32);

impl Vertex {
    pub const EMPTY: Vertex = Vertex(0);

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Number of elements in the subset.
    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, dir: usize) -> bool {
        self.0 & bit(dir) != 0
    }

    /// Symmetric difference with `{dir}`; no range checks.
    pub fn toggled(self, dir: usize) -> Vertex {
        Vertex(self.0 ^ bit(dir))
    }

    /// Elements of the subset in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=32).filter(move |&i| bits & bit(i) != 0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[inline]
pub(crate) fn bit(dir: usize) -> u32 {
    1u32 << (dir - 1)
}

/// An edge of the cube: the lower endpoint and the (1-based) direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeEdge {
    pub lower: Vertex,
    pub dir: usize,
}

impl CubeEdge {
    /// Builds the edge without validating it; see [`Hypercube::edge`].
    pub const fn new(lower: u32, dir: usize) -> Self {
        CubeEdge {
            lower: Vertex(lower),
            dir,
        }
    }

    /// The edge joining `a` and `b`, if they differ in exactly one element.
    pub fn between(a: Vertex, b: Vertex) -> Option<Self> {
        let diff = a.0 ^ b.0;
        if diff.count_ones() != 1 {
            return None;
        }
        let dir = diff.trailing_zeros() as usize + 1;
        Some(CubeEdge {
            lower: Vertex(a.0 & b.0),
            dir,
        })
    }

    pub fn upper(self) -> Vertex {
        Vertex(self.lower.0 | bit(self.dir))
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lower, self.upper())
    }

    /// Whether the edge lies in the lower face `F-_i` (no endpoint contains `i`).
    /// Only meaningful for `i != self.dir`.
    pub fn in_lower_face(self, i: usize) -> bool {
        !self.lower.contains(i)
    }

    /// Reflection `sigma_i` applied to both endpoints; no checks.
    pub fn reflected(self, i: usize) -> CubeEdge {
        debug_assert_ne!(i, self.dir);
        CubeEdge {
            lower: self.lower.toggled(i),
            dir: self.dir,
        }
    }

    /// Sum of the endpoint cardinalities.
    pub fn cardinality_sum(self) -> u32 {
        2 * self.lower.cardinality() + 1
    }
}

impl fmt::Display for CubeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lower, self.upper())
    }
}

/// The cube `Q_n` for a fixed `n` in `1..=MAX_DIM`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hypercube {
    n: usize,
}

impl Hypercube {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Hypercube { n })
    }

    pub fn dim(self) -> usize {
        self.n
    }

    pub fn vertex_count(self) -> usize {
        1 << self.n
    }

    pub fn edge_count(self) -> usize {
        self.n << (self.n - 1)
    }

    pub fn directions(self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// The full vertex `[n]`.
    pub fn top(self) -> Vertex {
        Vertex((1u32 << self.n) - 1)
    }

    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        (0..1u32 << self.n).map(Vertex)
    }

    /// All edges in canonical order.
    pub fn edges(self) -> impl Iterator<Item = CubeEdge> {
        (0..self.edge_count()).map(move |k| self.index_edge_unchecked(k))
    }

    pub fn check_direction(self, dir: usize) -> Result<()> {
        if dir == 0 || dir > self.n {
            return Err(Error::InvalidDirection { dir, n: self.n });
        }
        Ok(())
    }

    pub fn check_vertex(self, v: Vertex) -> Result<()> {
        if v.0 >> self.n != 0 {
            return Err(Error::InvalidVertex {
                bits: v.0,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Validated edge constructor.
    pub fn edge(self, lower: u32, dir: usize) -> Result<CubeEdge> {
        let e = CubeEdge::new(lower, dir);
        self.check_edge(e)?;
        Ok(e)
    }

    pub fn check_edge(self, e: CubeEdge) -> Result<()> {
        if e.dir == 0 || e.dir > self.n || e.lower.0 >> self.n != 0 || e.lower.contains(e.dir) {
            return Err(Error::InvalidEdge { edge: e, n: self.n });
        }
        Ok(())
    }

    /// The reflection `sigma_i(S) = S xor {i}`.
    pub fn sigma(self, v: Vertex, i: usize) -> Result<Vertex> {
        self.check_vertex(v)?;
        self.check_direction(i)?;
        Ok(v.toggled(i))
    }

    /// Reflects an edge across direction `i`; rejects `i == e.dir`.
    pub fn sigma_edge(self, e: CubeEdge, i: usize) -> Result<CubeEdge> {
        self.check_edge(e)?;
        self.check_direction(i)?;
        if i == e.dir {
            return Err(Error::ReflectionAlongOwnDirection { edge: e, dir: i });
        }
        Ok(e.reflected(i))
    }

    pub fn edge_index(self, e: CubeEdge) -> Result<usize> {
        self.check_edge(e)?;
        Ok(self.edge_index_unchecked(e))
    }

    pub fn index_edge(self, k: usize) -> Result<CubeEdge> {
        if k >= self.edge_count() {
            return Err(Error::InvalidEdgeIndex {
                index: k,
                n: self.n,
            });
        }
        Ok(self.index_edge_unchecked(k))
    }

    #[inline]
    pub(crate) fn edge_index_unchecked(self, e: CubeEdge) -> usize {
        // Drop bit (dir - 1) from the lower endpoint to get its rank among
        // the 2^(n-1) vertices not containing dir.
        let low_mask = bit(e.dir) - 1;
        let bits = e.lower.0;
        let rank = (bits & low_mask) | ((bits >> 1) & !low_mask);
        ((e.dir - 1) << (self.n - 1)) + rank as usize
    }

    #[inline]
    pub(crate) fn index_edge_unchecked(self, k: usize) -> CubeEdge {
        let half = self.n - 1;
        let dir = (k >> half) + 1;
        let rank = (k & ((1 << half) - 1)) as u32;
        let low_mask = bit(dir) - 1;
        let lower = (rank & low_mask) | ((rank & !low_mask) << 1);
        CubeEdge::new(lower, dir)
    }

    /// Neighbours of `v`, in direction order.
    pub fn neighbors(self, v: Vertex) -> impl Iterator<Item = Vertex> {
        (1..=self.n).map(move |i| v.toggled(i))
    }
}
