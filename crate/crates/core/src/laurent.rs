//! Multivariate Laurent polynomials with exact integer coefficients, and the
//! two sides of the weighted spanning-tree identity for `Q_n`.
//!
//! Variables are `q_1..q_n` followed by `x_1..x_n`, so an exponent vector has
//! length `2n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::tree::{SpanningTree, TreeWeight};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponents: Vec<i32>, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, coeff.into());
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], 1)
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exponents: &[i32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients (the value at all variables = 1).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let n = self.terms.keys().next().map_or(0, |e| e.len() / 2);
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (v, &p) in e.iter().enumerate() {
                if p != 0 {
                    let name = if v < n { 'q' } else { 'x' };
                    write!(f, "*{name}{}^{p}", v % n + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl TreeWeight {
    /// The weight as a single exponent vector `(q_1..q_n, x_1..x_n)`.
    pub fn exponents(&self) -> Vec<i32> {
        self.q_exp
            .iter()
            .map(|&k| k as i32)
            .chain(self.x_exp.iter().copied())
            .collect()
    }
}

/// `sum_T q^{dir T} x^{dd T}` over the given trees.
pub fn tree_weight_sum<'a>(trees: impl IntoIterator<Item = &'a SpanningTree>) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    for t in trees {
        sum.add_term(t.weight().exponents(), BigInt::one());
    }
    sum
}

/// `q_1 ... q_n prod_{|S| >= 2} sum_{i in S} q_i (x_i^{-1} + x_i)`.
pub fn weighted_count_product(n: usize) -> LaurentPoly {
    let vars = 2 * n;
    let unit = |var: usize, pow: i32| {
        let mut e = vec![0; vars];
        e[var] = pow;
        e
    };
    let mut prefix = vec![0; vars];
    prefix[..n].fill(1);
    let mut acc = LaurentPoly::monomial(prefix, 1);
    for s in 0u32..1 << n {
        if s.count_ones() < 2 {
            continue;
        }
        let mut factor = LaurentPoly::zero();
        for i in (0..n).filter(|i| s >> i & 1 == 1) {
            for sign in [-1, 1] {
                let mut e = unit(i, 1);
                e[n + i] = sign;
                factor.add_term(e, BigInt::one());
            }
        }
        acc = &acc * &factor;
    }
    acc
}
