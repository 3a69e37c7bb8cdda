use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Chain gangs are enumerated only up to this ground-set size.
pub const MAX_CHAIN_GANG_N: usize = 9;

/// A partition of `[n]` into internally ordered blocks, kept in standard
/// representation (blocks sorted by leader).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainGang {
    blocks: Vec<Vec<usize>>,
}

impl ChainGang {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidParameters("chain gang blocks must be nonempty".into()));
            }
            for &e in b {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidParameters(format!(
                        "chain gang blocks must partition [{n}]; offending element {e}"
                    )));
                }
                seen[e] = true;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(ChainGang { blocks })
    }

    /// Parses `1|32|645|78`; elements are single digits.
    pub fn parse(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|b| {
                b.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad chain gang element {c:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }

    pub fn ground_set_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn leaders(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn trailers(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[b.len() - 1]).collect()
    }

    /// Elements of each block smaller than its leader, summed over blocks.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| block_weight(b)).sum()
    }

    /// Number of trailers after position `l` of the delimiter-free word.
    pub fn gamma(&self, l: usize) -> usize {
        let mut prefix = 0;
        let mut done = 0;
        for b in &self.blocks {
            prefix += b.len();
            if prefix <= l {
                done += 1;
            } else {
                break;
            }
        }
        self.blocks.len() - done
    }
}

pub(crate) fn block_weight(b: &[usize]) -> usize {
    b.iter().filter(|&&e| e < b[0]).count()
}

impl fmt::Display for ChainGang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for e in b {
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CHAIN_GANG_N {
        return Err(Error::GuardExceeded(format!(
            "chain gang enumeration limited to n <= {MAX_CHAIN_GANG_N}, got {n}"
        )));
    }
    Ok(())
}

/// Visits every chain gang on `[n]` once. Each gang on `[n]` arises from a
/// unique gang on `[n-1]` by inserting `n` into a block or as a new block.
pub fn for_each_chain_gang<F: FnMut(&ChainGang)>(n: usize, mut f: F) -> Result<()> {
    check_size(n)?;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    grow(&mut blocks, 1, n, &mut f);
    Ok(())
}

fn grow<F: FnMut(&ChainGang)>(blocks: &mut Vec<Vec<usize>>, e: usize, n: usize, f: &mut F) {
    if e > n {
        let mut sorted = blocks.clone();
        sorted.sort_by_key(|b| b[0]);
        f(&ChainGang { blocks: sorted });
        return;
    }
    blocks.push(vec![e]);
    grow(blocks, e + 1, n, f);
    blocks.pop();
    for bi in 0..blocks.len() {
        for pos in 0..=blocks[bi].len() {
            blocks[bi].insert(pos, e);
            grow(blocks, e + 1, n, f);
            blocks[bi].remove(pos);
        }
    }
}

pub fn enumerate_chain_gangs(n: usize) -> Result<Vec<ChainGang>> {
    let mut out = Vec::new();
    for_each_chain_gang(n, |g| out.push(g.clone()))?;
    Ok(out)
}

/// `|CG(q,n,k)|` and `|CG(q,n,k,ℓ,m)|` tabulated in one pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainGangCounts {
    pub n: usize,
    pub total: u64,
    pub by_weight_blocks: BTreeMap<(usize, usize), u64>,
    pub by_weight_blocks_gamma: BTreeMap<(usize, usize, usize, usize), u64>,
}

impl ChainGangCounts {
    pub fn tabulate(n: usize) -> Result<Self> {
        let mut c = ChainGangCounts {
            n,
            ..Default::default()
        };
        for_each_chain_gang(n, |g| {
            let (q, k) = (g.weight(), g.len());
            c.total += 1;
            *c.by_weight_blocks.entry((q, k)).or_insert(0) += 1;
            for l in 0..n {
                *c.by_weight_blocks_gamma.entry((q, k, l, g.gamma(l))).or_insert(0) += 1;
            }
        })?;
        Ok(c)
    }

    /// `W(q,n,k)`.
    pub fn weighted_lah(&self, q: usize, k: usize) -> u64 {
        self.by_weight_blocks.get(&(q, k)).copied().unwrap_or(0)
    }

    /// `|CG(q,n,k,ℓ,m)|`.
    pub fn with_gamma(&self, q: usize, k: usize, l: usize, m: usize) -> u64 {
        self.by_weight_blocks_gamma.get(&(q, k, l, m)).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn chain_gangs_on_three() {
        let all = enumerate_chain_gangs(3).unwrap();
        assert_eq!(all.len(), 13);
        let shown: HashSet<String> = all.iter().map(|g| g.to_string()).collect();
        for s in [
            "123", "132", "213", "231", "312", "321", "12|3", "21|3", "1|23", "1|32", "13|2", "2|31", "1|2|3",
        ] {
            assert!(shown.contains(s), "{s}");
        }
    }

    #[test]
    fn counts_are_lah_sums_and_duplicate_free() {
        for (n, expect) in [(1, 1), (2, 3), (3, 13), (4, 73), (5, 501), (6, 4051)] {
            let all = enumerate_chain_gangs(n).unwrap();
            assert_eq!(all.len(), expect);
            let set: HashSet<&ChainGang> = all.iter().collect();
            assert_eq!(set.len(), expect);
        }
        assert!(enumerate_chain_gangs(10).is_err());
    }

    #[test]
    fn weight_and_gamma_examples() {
        assert_eq!(block_weight(&[4, 3, 5, 2, 6]), 2);
        let s = ChainGang::parse("1|32|645|78").unwrap();
        assert_eq!(s.weight(), 3);
        assert_eq!(s.trailers(), vec![1, 2, 5, 8]);
        assert_eq!([0, 1, 2, 3].map(|l| s.gamma(l)), [4, 3, 3, 2]);
        assert_eq!(ChainGang::parse("74|28|5|31|69").unwrap().to_string(), "28|31|5|69|74");
        assert!(ChainGang::parse("12|2").is_err());
    }

    #[test]
    fn gamma_at_zero_is_length() {
        for g in enumerate_chain_gangs(5).unwrap() {
            assert_eq!(g.gamma(0), g.len());
            assert_eq!(g.gamma(g.ground_set_size()), 0);
        }
    }

    #[test]
    fn tabulation() {
        let c = ChainGangCounts::tabulate(3).unwrap();
        assert_eq!(c.total, 13);
        assert_eq!(c.weighted_lah(1, 1), 2);
        let sum: u64 = c.by_weight_blocks.values().sum();
        assert_eq!(sum, 13);
    }
}
