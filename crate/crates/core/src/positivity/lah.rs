use num_bigint::BigInt;
use num_traits::Zero;

use super::chain_gang::{block_weight, for_each_chain_gang, ChainGang};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, elm, stirling_first_unsigned};

fn sign(i: i64) -> BigInt {
    if i.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `W(q,n,k)` by enumerating chain gangs.
pub fn weighted_lah_w(q: usize, n: usize, k: usize) -> Result<BigInt> {
    let mut count = 0u64;
    for_each_chain_gang(n, |g| {
        if g.len() == k && g.weight() == q {
            count += 1;
        }
    })?;
    Ok(BigInt::from(count))
}

/// Double alternating sum with Stirling factors.
pub fn eta(q: usize, n: usize, k: usize) -> BigInt {
    let (qi, ni, ki) = (q as i64, n as i64, k as i64);
    let mut total = BigInt::zero();
    for j in 0..=qi.min(ni) {
        let tail = binomial(ki - 1 + qi - j, ki - 1);
        if tail.is_zero() {
            continue;
        }
        for i in 0..=j {
            let c1 = stirling_first_unsigned(j as usize, j - i);
            let c2 = stirling_first_unsigned((ni - j) as usize, ki - j + i);
            total += sign(j + i) * binomial(ni, j) * c1 * c2 * &tail;
        }
    }
    total
}

/// Single alternating sum with `⟨n-k⟩_{-j+1, n-1-j}`.
pub fn eta_elm_form(q: usize, n: usize, k: usize) -> BigInt {
    let (qi, ni, ki) = (q as i64, n as i64, k as i64);
    (0..=qi)
        .map(|j| sign(j) * binomial(ni, j) * elm(ni - ki, -j + 1, ni - 1 - j) * binomial(ki - 1 + qi - j, ki - 1))
        .sum()
}

/// A permutation of `[n]` given by its cycles, with a weight on each cycle.
#[derive(Clone, Debug)]
pub struct WeightedPermutation {
    cycles: Vec<Vec<usize>>,
    weights: Vec<usize>,
}

impl WeightedPermutation {
    pub fn new(cycles: Vec<Vec<usize>>, weights: Vec<usize>) -> Result<Self> {
        if cycles.len() != weights.len() {
            return Err(Error::InvalidParameters(format!(
                "{} cycles but {} weights",
                cycles.len(),
                weights.len()
            )));
        }
        // validates that the cycles partition [n]
        ChainGang::new(cycles.clone())?;
        Ok(WeightedPermutation { cycles, weights })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn is_properly_weighted(&self) -> bool {
        self.cycles.iter().zip(&self.weights).all(|(c, &x)| x < c.len())
    }

    /// Each cycle rotated to start at its minimum, cycles sorted by minimum.
    pub fn canonical(&self) -> Vec<(Vec<usize>, usize)> {
        let mut out: Vec<(Vec<usize>, usize)> = self
            .cycles
            .iter()
            .zip(&self.weights)
            .map(|(c, &x)| {
                let start = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
                let mut r = c[start..].to_vec();
                r.extend_from_slice(&c[..start]);
                (r, x)
            })
            .collect();
        out.sort();
        out
    }

    /// Inverse of [`chain_gang_from_weighted_permutation`]: each block is a
    /// cycle, weighted by the block weight.
    pub fn from_chain_gang(g: &ChainGang) -> Self {
        WeightedPermutation {
            cycles: g.blocks().to_vec(),
            weights: g.blocks().iter().map(|b| block_weight(b)).collect(),
        }
    }
}

impl PartialEq for WeightedPermutation {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for WeightedPermutation {}

/// Writes each cycle starting at its `(x(c)+1)`-th smallest element.
pub fn chain_gang_from_weighted_permutation(wp: &WeightedPermutation) -> Result<ChainGang> {
    let mut blocks = Vec::with_capacity(wp.cycles.len());
    for (c, &x) in wp.cycles.iter().zip(&wp.weights) {
        if x >= c.len() {
            return Err(Error::InvalidParameters(format!(
                "cycle {c:?} has weight {x}, not below its length"
            )));
        }
        let mut sorted = c.clone();
        sorted.sort_unstable();
        let start = c.iter().position(|&e| e == sorted[x]).expect("element of the cycle");
        let mut b = c[start..].to_vec();
        b.extend_from_slice(&c[..start]);
        blocks.push(b);
    }
    ChainGang::new(blocks)
}
