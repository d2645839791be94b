//! Exact spanning-tree counts of `Q_n`: the closed form and a Matrix-Tree
//! determinant.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`kirchhoff_count`].
pub const KIRCHHOFF_MAX_DIM: usize = 6;

fn binomial(n: usize, k: usize) -> u32 {
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64) as u32
}

/// `prod_{|S| >= 2} 2|S|`, the number of signed sections of subsets of size at least two.
pub fn signed_section_product(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        let factor = BigUint::from(2 * k as u64).pow(binomial(n, k));
        acc *= factor;
    }
    acc
}

/// Closed form `2^(2^n - n - 1) prod_k k^C(n,k)`, cross-checked against
/// `prod_{|S| >= 2} 2|S|`.
pub fn formula_count(n: usize) -> BigUint {
    assert!(n >= 1, "formula_count needs n >= 1");
    assert!(n < 32, "formula_count exponent would overflow");
    let power_of_two = (1u32 << n) - n as u32 - 1;
    let mut left = BigUint::one() << power_of_two as usize;
    for k in 1..=n {
        left *= BigUint::from(k as u64).pow(binomial(n, k));
    }
    let right = signed_section_product(n);
    assert_eq!(left, right, "the two closed forms disagree for n = {n}");
    left
}

/// Number of spanning trees of `Q_n` as the determinant of the reduced
/// Laplacian, by fraction-free (Bareiss) elimination over the integers.
pub fn kirchhoff_count(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidDimension(n));
    }
    if n > KIRCHHOFF_MAX_DIM {
        return Err(Error::TooLarge {
            n,
            max: KIRCHHOFF_MAX_DIM,
        });
    }
    let size = (1usize << n) - 1;
    // Reduced Laplacian: delete the row and column of vertex 0.
    let mut m: Vec<Vec<BigInt>> = (1..=size)
        .map(|v| {
            (1..=size)
                .map(|w| {
                    if v == w {
                        BigInt::from(n)
                    } else if (v ^ w).count_ones() == 1 {
                        -BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let det = bareiss_determinant(&mut m);
    Ok(det
        .to_biguint()
        .expect("reduced Laplacian determinant is non-negative"))
}

/// Determinant of a square integer matrix, destroying it.
pub(crate) fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[size - 1][size - 1]
}
