//! Upright trees and sections, and the weight-preserving bijection between
//! spanning trees of `Q_3` and signed sections.
//!
//! A *section* picks an element `phi(S)` of every nonempty `S`; the upright
//! tree with that section joins each `S` to `S \ {phi(S)}`. A *signed
//! section* picks, for every `S` with `|S| >= 2`, an element and a sign.

mod phi;

pub use phi::{
    phi_forward, phi_forward_with, phi_inverse, phi_trace, EdgePartition, PhiTrace, SlideOrder,
};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercube::{CubeEdge, Hypercube, Vertex};
use crate::tree::{signed_section_product, SpanningTree, TreeWeight};

pub fn is_upright(tree: &SpanningTree) -> bool {
    tree.is_upright()
}

/// A choice of element for every nonempty subset of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Section {
    n: usize,
    /// Indexed by subset bits; entry 0 is unused.
    choice: Vec<u8>,
}

impl Section {
    /// Builds a section from `choice[S]` for every subset `S` (entry for the
    /// empty set is ignored).
    pub fn new(n: usize, choice: &[usize]) -> Result<Self> {
        let cube = Hypercube::new(n)?;
        if choice.len() != cube.vertex_count() {
            return Err(Error::InvalidSection(format!(
                "expected {} entries, found {}",
                cube.vertex_count(),
                choice.len()
            )));
        }
        let mut stored = vec![0u8; choice.len()];
        for (s, &i) in choice.iter().enumerate().skip(1) {
            if !(1..=n).contains(&i) || !Vertex(s as u32).contains(i) {
                return Err(Error::InvalidSection(format!(
                    "{i} is not an element of {}",
                    Vertex(s as u32)
                )));
            }
            stored[s] = i as u8;
        }
        Ok(Section { n, choice: stored })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: Vertex) -> usize {
        assert!(s.0 != 0, "the empty set has no choice");
        self.choice[s.0 as usize] as usize
    }

    /// Every section of `[n]`, for `n <= 4`, in lexicographic order of the
    /// choice vector.
    pub fn all(n: usize) -> Result<Vec<Section>> {
        if n > 4 {
            return Err(Error::TooLarge { n, max: 4 });
        }
        let cube = Hypercube::new(n)?;
        let options: Vec<Vec<usize>> = cube
            .vertices()
            .map(|s| {
                if s.0 == 0 {
                    vec![0]
                } else {
                    s.elements().collect()
                }
            })
            .collect();
        let mut out = Vec::new();
        let mut digits = vec![0usize; options.len()];
        loop {
            let choice: Vec<usize> = digits.iter().zip(&options).map(|(&d, o)| o[d]).collect();
            out.push(Section {
                n,
                choice: choice.iter().map(|&i| i as u8).collect(),
            });
            // Odometer increment, last subset fastest.
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < options[pos].len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

/// The section of an upright tree: `phi(S)` is the direction of the first
/// edge on the path from `S` to the root.
pub fn section_of_upright(tree: &SpanningTree) -> Result<Section> {
    if !tree.is_upright() {
        return Err(Error::NotUpright);
    }
    let rooted = tree.rooted();
    let choice: Vec<usize> = tree
        .cube()
        .vertices()
        .map(|s| match rooted.parent(s) {
            Some(p) => CubeEdge::between(s, p).expect("tree edge").dir,
            None => 0,
        })
        .collect();
    Section::new(tree.n(), &choice)
}

/// The upright tree with edges `{S \ {phi(S)}, S}`.
pub fn upright_of_section(section: &Section) -> Result<SpanningTree> {
    let cube = Hypercube::new(section.n)?;
    let edges = cube.vertices().skip(1).map(|s| {
        let i = section.get(s);
        CubeEdge::new(s.toggled(i).0, i)
    });
    SpanningTree::from_edges(section.n, edges)
}

/// `prod_{|S| >= 2} 2|S|`.
pub fn count_signed_sections(n: usize) -> BigUint {
    signed_section_product(n)
}

/// One entry of a signed section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Choice {
    pub set: u32,
    pub dir: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SignedSectionRecord {
    n: usize,
    choices: Vec<Choice>,
}

/// An element and sign for every subset `S` of `[n]` with `|S| >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignedSectionRecord", into = "SignedSectionRecord")]
pub struct SignedSection {
    n: usize,
    /// Sorted by `set`, one entry per set of size at least two.
    choices: Vec<Choice>,
}

impl TryFrom<SignedSectionRecord> for SignedSection {
    type Error = Error;

    fn try_from(record: SignedSectionRecord) -> Result<Self> {
        SignedSection::new(record.n, record.choices)
    }
}

impl From<SignedSection> for SignedSectionRecord {
    fn from(ss: SignedSection) -> Self {
        SignedSectionRecord {
            n: ss.n,
            choices: ss.choices,
        }
    }
}

impl SignedSection {
    pub fn new(n: usize, mut choices: Vec<Choice>) -> Result<Self> {
        let cube = Hypercube::new(n)?;
        choices.sort();
        let domain: Vec<u32> = cube
            .vertices()
            .filter(|s| s.cardinality() >= 2)
            .map(|s| s.0)
            .collect();
        let sets: Vec<u32> = choices.iter().map(|c| c.set).collect();
        if sets != domain {
            return Err(Error::InvalidSection(
                "a signed section needs exactly one choice per set of size >= 2".into(),
            ));
        }
        for c in &choices {
            if !(1..=n).contains(&c.dir) || !Vertex(c.set).contains(c.dir) {
                return Err(Error::InvalidSection(format!(
                    "{} is not an element of {}",
                    c.dir,
                    Vertex(c.set)
                )));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidSection(format!(
                    "sign {} is not +1 or -1",
                    c.sign
                )));
            }
        }
        Ok(SignedSection { n, choices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn choices(&self) -> &[Choice] {
        &self.choices
    }

    fn entry(&self, s: Vertex) -> &Choice {
        let k = self
            .choices
            .binary_search_by_key(&s.0, |c| c.set)
            .unwrap_or_else(|_| panic!("{s} is outside the domain"));
        &self.choices[k]
    }

    pub fn dir(&self, s: Vertex) -> usize {
        self.entry(s).dir
    }

    pub fn sign(&self, s: Vertex) -> i8 {
        self.entry(s).sign
    }

    /// The unsigned part, extended to singletons by the forced choice.
    pub fn section(&self) -> Section {
        let mut choice = vec![0usize; 1 << self.n];
        for (s, slot) in choice.iter_mut().enumerate().skip(1) {
            let v = Vertex(s as u32);
            *slot = if v.cardinality() == 1 {
                v.elements().next().expect("singleton")
            } else {
                self.dir(v)
            };
        }
        Section::new(self.n, &choice).expect("valid by construction")
    }

    /// `q_1 ... q_n prod_S q_{phi(S)} x_{phi(S)}^{sign(S)}` as exponents.
    pub fn weight(&self) -> TreeWeight {
        let mut q_exp = vec![1u32; self.n];
        let mut x_exp = vec![0i32; self.n];
        for c in &self.choices {
            q_exp[c.dir - 1] += 1;
            x_exp[c.dir - 1] += c.sign as i32;
        }
        TreeWeight { q_exp, x_exp }
    }

    /// Every signed section of `[n]`, for `n <= 3`.
    pub fn all(n: usize) -> Result<Vec<SignedSection>> {
        if n > 3 {
            return Err(Error::TooLarge { n, max: 3 });
        }
        let mut out = Vec::new();
        for section in Section::all(n)? {
            let sets: Vec<Vertex> = Hypercube::new(n)?
                .vertices()
                .filter(|s| s.cardinality() >= 2)
                .collect();
            for signs in 0u32..1 << sets.len() {
                let choices = sets
                    .iter()
                    .enumerate()
                    .map(|(k, &s)| Choice {
                        set: s.0,
                        dir: section.get(s),
                        sign: if signs >> k & 1 == 1 { 1 } else { -1 },
                    })
                    .collect();
                out.push(SignedSection::new(n, choices)?);
            }
        }
        Ok(out)
    }
}
