//! Uniform random spanning trees by loop-erased random walk (Wilson's
//! algorithm), driven by a seeded, splittable ChaCha stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hypercube::{CubeEdge, Hypercube, Vertex};

use super::{EdgeSet, SpanningTree};

/// Identifies the sampling algorithm and random source; bump on any change
/// that alters the trees produced for a given seed.
pub const SAMPLER_ID: &str = "wilson-lerw/chacha8-v1";

/// A seed plus a stream number. Distinct streams of one seed are independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeededSource {
    pub seed: u64,
    pub stream: u64,
}

impl SeededSource {
    pub fn new(seed: u64) -> Self {
        SeededSource { seed, stream: 0 }
    }

    /// Child source for worker or item `k`.
    pub fn split(self, k: u64) -> Self {
        SeededSource {
            seed: self.seed,
            stream: self
                .stream
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add(k + 1),
        }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Draws independent uniform spanning trees of one cube.
pub struct TreeSampler {
    cube: Hypercube,
    rng: ChaCha8Rng,
    next: Vec<u32>,
    in_tree: Vec<bool>,
}

impl TreeSampler {
    pub fn new(n: usize, source: SeededSource) -> Result<Self> {
        let cube = Hypercube::new(n)?;
        Ok(TreeSampler {
            cube,
            rng: source.rng(),
            next: vec![0; cube.vertex_count()],
            in_tree: vec![false; cube.vertex_count()],
        })
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn sample(&mut self) -> SpanningTree {
        let n = self.cube.dim();
        let vcount = self.cube.vertex_count();
        self.in_tree.fill(false);
        self.in_tree[0] = true;
        for start in 1..vcount {
            // Random walk until the current tree is hit; overwriting `next`
            // erases loops implicitly.
            let mut u = start;
            while !self.in_tree[u] {
                let dir = self.rng.gen_range(0..n);
                let w = u ^ (1 << dir);
                self.next[u] = w as u32;
                u = w;
            }
            u = start;
            while !self.in_tree[u] {
                self.in_tree[u] = true;
                u = self.next[u] as usize;
            }
        }
        let mut edges = EdgeSet::new();
        for v in 1..vcount {
            let e = CubeEdge::between(Vertex(v as u32), Vertex(self.next[v]))
                .expect("walk steps are cube edges");
            edges.insert(self.cube.edge_index_unchecked(e));
        }
        SpanningTree::from_edge_set_unchecked(self.cube, edges)
    }
}

/// One uniform spanning tree of `Q_n`, determined by `seed`.
pub fn random_spanning_tree(n: usize, seed: u64) -> Result<SpanningTree> {
    Ok(TreeSampler::new(n, SeededSource::new(seed))?.sample())
}
