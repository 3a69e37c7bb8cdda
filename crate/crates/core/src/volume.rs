//! Normalized volumes of hypersimplices, panhandle matroids, relaxations and
//! paving matroids, all through counts of permutations by descent set.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{eulerian, multinomial};
use crate::matroid::{ElementSet, PanhandleParams, PavingProfile};

/// Permutation enumeration in the oracles stops at `S_{n-1}` with this `n`.
pub const MAX_ORACLE_N: usize = 9;

fn check_descent_set(n: usize, set: ElementSet) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("descent sets need n >= 2, got {n}")));
    }
    if !set.is_subset(ElementSet::interval(1, n - 2)) {
        return Err(Error::InvalidParameters(format!("{set} is not a subset of [{}]", n - 2)));
    }
    Ok(())
}

/// Permutations of `[n-1]` with descent set inside `set`: the multinomial
/// over the gaps between consecutive elements of `set`.
pub fn alpha(n: usize, set: ElementSet) -> Result<BigInt> {
    check_descent_set(n, set)?;
    Ok(alpha_sorted(n, &set.to_vec()))
}

/// Permutations of `[n-1]` with descent set exactly `set`.
pub fn beta(n: usize, set: ElementSet) -> Result<BigInt> {
    check_descent_set(n, set)?;
    Ok(beta_sorted(n, &set.to_vec()))
}

/// `alpha` on an increasing list inside `[n-2]`, with no bound on `n`.
fn alpha_sorted(n: usize, elems: &[usize]) -> BigInt {
    let mut parts = Vec::with_capacity(elems.len() + 1);
    let mut prev = 0;
    for &e in elems {
        parts.push(e - prev);
        prev = e;
    }
    parts.push(n - 1 - prev);
    multinomial(&parts)
}

fn beta_sorted(n: usize, elems: &[usize]) -> BigInt {
    let d = elems.len();
    let mut total = BigInt::zero();
    let mut sub = Vec::with_capacity(d);
    for mask in 0u64..(1u64 << d) {
        sub.clear();
        sub.extend((0..d).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]));
        let a = alpha_sorted(n, &sub);
        if (d - sub.len()).is_multiple_of(2) {
            total += a;
        } else {
            total -= a;
        }
    }
    total
}

/// Increasing `k`-element lists drawn from `lo..=hi`.
fn for_each_combination<F: FnMut(&[usize])>(lo: usize, hi: usize, k: usize, mut f: F) {
    if k == 0 {
        f(&[]);
        return;
    }
    if lo > hi || hi - lo + 1 < k {
        return;
    }
    let mut c: Vec<usize> = (lo..lo + k).collect();
    loop {
        f(&c);
        let Some(i) = (0..k).rev().find(|&i| c[i] < hi - (k - 1 - i)) else {
            return;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn for_each_permutation<F: FnMut(&[usize])>(m: usize, mut f: F) {
    let mut p: Vec<usize> = (1..=m).collect();
    loop {
        f(&p);
        // next lexicographic permutation
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn descent_mask(w: &[usize]) -> u32 {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).fold(0, |acc, i| acc | (1 << (i - 1)))
}

/// Number of permutations of `[n-1]` with each descent set, indexed by bitmask.
pub fn descent_histogram(n: usize) -> Result<Vec<u64>> {
    if !(2..=MAX_ORACLE_N).contains(&n) {
        return Err(Error::GuardExceeded(format!(
            "descent enumeration limited to 2 <= n <= {MAX_ORACLE_N}, got {n}"
        )));
    }
    let mut hist = vec![0u64; 1 << (n - 2)];
    for_each_permutation(n - 1, |w| hist[descent_mask(w) as usize] += 1);
    Ok(hist)
}

/// Brute-force count of `w ∈ S_{n-1}` with `Des(w) = set`.
pub fn descent_oracle(n: usize, set: ElementSet) -> Result<BigInt> {
    check_descent_set(n, set)?;
    let hist = descent_histogram(n)?;
    Ok(BigInt::from(hist[set.0 as usize]))
}

/// Brute-force count of `w ∈ S_{n-1}` with `Des(w) ⊆ set`.
pub fn descent_subset_oracle(n: usize, set: ElementSet) -> Result<BigInt> {
    check_descent_set(n, set)?;
    let hist = descent_histogram(n)?;
    Ok(hist
        .iter()
        .enumerate()
        .filter(|(mask, _)| ElementSet(*mask as u32).is_subset(set))
        .map(|(_, &c)| BigInt::from(c))
        .sum())
}

/// A 0/1 word, leftmost bit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString {
    bits: Vec<bool>,
}

impl BinaryString {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryString { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// `1 d_1 ... d_{n-2} 0` with `d_i = 1` iff `i ∈ set`.
    pub fn from_descent_set(n: usize, set: ElementSet) -> Result<Self> {
        check_descent_set(n, set)?;
        let mut bits = vec![false; n];
        bits[0] = true;
        for e in set.elements() {
            bits[e] = true;
        }
        Ok(BinaryString { bits })
    }

    /// The descent string of a word.
    pub fn of_word(w: &[usize]) -> Self {
        let n = w.len() + 1;
        let mut bits = vec![false; n];
        bits[0] = true;
        for i in 1..w.len() {
            bits[i] = w[i - 1] > w[i];
        }
        BinaryString { bits }
    }

    /// Positions `1..=n-2` holding a one.
    pub fn descent_set(&self) -> ElementSet {
        let inner = self.bits.len().saturating_sub(1);
        ElementSet::from_elements((1..inner).filter(|&i| self.bits[i]))
    }

    /// Membership in `L(r,n)`: length `n`, starts with 1, ends with 0, `r` ones.
    pub fn validate(&self, r: usize, n: usize) -> Result<()> {
        if self.bits.len() != n {
            return Err(Error::InvalidBinaryString(format!("{self} has length {}, expected {n}", self.len())));
        }
        if n < 2 || !self.bits[0] || self.bits[n - 1] {
            return Err(Error::InvalidBinaryString(format!("{self} must start with 1 and end with 0")));
        }
        if self.ones() != r {
            return Err(Error::InvalidBinaryString(format!("{self} has {} ones, expected {r}", self.ones())));
        }
        Ok(())
    }

    /// Partial-sum order: every prefix of `self` has at most as many ones.
    pub fn dominated_by(&self, other: &BinaryString) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for (&x, &y) in self.bits.iter().zip(&other.bits) {
            a += x as usize;
            b += y as usize;
            if a > b {
                return false;
            }
        }
        true
    }

    /// Every element of `L(r,n)`.
    pub fn all_in_l(r: usize, n: usize) -> Vec<BinaryString> {
        if n < 2 || r == 0 || r > n - 1 {
            return Vec::new();
        }
        ElementSet::interval(1, n - 2)
            .subsets_of_size(r - 1)
            .map(|s| BinaryString::from_descent_set(n, s).expect("inside [n-2]"))
            .collect()
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidBinaryString(format!("{s:?} contains {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryString { bits })
    }
}

/// `1 0^{n-s-1} 1^{r-1} 0^{s-r+1}`, the string attached to the panhandle's
/// proper nonempty cyclic flat.
pub fn panhandle_string(p: &PanhandleParams) -> BinaryString {
    let mut bits = vec![true];
    bits.extend(std::iter::repeat_n(false, p.n - p.s - 1));
    bits.extend(std::iter::repeat_n(true, p.r - 1));
    bits.extend(std::iter::repeat_n(false, p.s - p.r + 1));
    BinaryString { bits }
}

/// Permutations of `[n-1]` whose descent string lies in `L(r,n)` below `b`,
/// by enumerating permutations and the dominance order.
pub fn delta_leq_oracle(r: usize, n: usize, b: &BinaryString) -> Result<BigInt> {
    b.validate(r, n)?;
    let hist = descent_histogram(n)?;
    Ok(BinaryString::all_in_l(r, n)
        .iter()
        .filter(|a| a.dominated_by(b))
        .map(|a| BigInt::from(hist[a.descent_set().0 as usize]))
        .sum())
}

/// `A(n-1, r-1)`; a point for `r ∈ {0, n}`.
pub fn hypersimplex_volume(r: usize, n: usize) -> Result<BigInt> {
    if r > n || n == 0 {
        return Err(Error::InvalidParameters(format!("hypersimplex needs r <= n, got r={r}, n={n}")));
    }
    if r == 0 || r == n {
        return Ok(BigInt::from(1));
    }
    Ok(eulerian(n - 1, r as i64 - 1))
}

/// Sum of `beta(n, S)` over `(r-1)`-subsets `S ⊆ [n-s, n-2]`.
pub fn volume_panhandle(p: &PanhandleParams) -> BigInt {
    let mut total = BigInt::zero();
    if p.n < 2 {
        return total;
    }
    for_each_combination(p.n - p.s, p.n - 2, p.r - 1, |c| total += beta_sorted(p.n, c));
    total
}

/// Volume of `M` from the volume of `Rel_H(M)` with `|H| = s`.
pub fn volume_relaxation(vol_rel: &BigInt, p: &PanhandleParams) -> Result<BigInt> {
    let v = vol_rel - volume_panhandle(p);
    if v.is_negative() {
        return Err(Error::InconsistentVolumes(format!(
            "relaxed volume {vol_rel} is smaller than the {p} correction"
        )));
    }
    Ok(v)
}

/// `A(n-1,r-1) - Σ_s |H_s| vol(Pan_{r,s,n})`.
pub fn volume_paving(profile: &PavingProfile) -> Result<BigInt> {
    let (r, n) = (profile.rank(), profile.ground_set_size());
    let mut v = hypersimplex_volume(r, n)?;
    for (s, count) in profile.counts() {
        let p = PanhandleParams::new(r, s, n)?;
        v -= volume_panhandle(&p) * BigInt::from(count);
    }
    if v.is_negative() {
        return Err(Error::InconsistentVolumes(format!(
            "profile {} gives negative volume {v}",
            profile.to_json_value()
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::{ehrhart_panhandle, ehrhart_paving};
    use crate::exactmath::{factorial, Rational};

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    #[test]
    fn alpha_beta_examples() {
        assert_eq!(alpha(7, set(&[4, 5])).unwrap(), BigInt::from(30));
        assert_eq!(beta(7, set(&[4, 5])).unwrap(), BigInt::from(10));
        for n in 2..=9 {
            assert_eq!(alpha(n, ElementSet::EMPTY).unwrap(), BigInt::from(1));
            assert_eq!(beta(n, ElementSet::EMPTY).unwrap(), BigInt::from(1));
            assert_eq!(alpha(n, ElementSet::interval(1, n - 2)).unwrap(), factorial(n - 1));
        }
        assert!(alpha(5, set(&[4])).is_err());
    }

    #[test]
    fn beta_against_enumeration() {
        for n in 2..=8 {
            let hist = descent_histogram(n).unwrap();
            let all = ElementSet::interval(1, n - 2);
            let mut by_size = vec![BigInt::zero(); n];
            let mut total = BigInt::zero();
            for s in all.all_subsets() {
                let b = beta(n, s).unwrap();
                assert_eq!(b, BigInt::from(hist[s.0 as usize]), "n={n} S={s}");
                assert_eq!(alpha(n, s).unwrap(), descent_subset_oracle(n, s).unwrap());
                by_size[s.len()] += &b;
                total += b;
            }
            assert_eq!(total, factorial(n - 1));
            for (d, c) in by_size.iter().enumerate() {
                assert_eq!(*c, eulerian(n - 1, d as i64));
            }
        }
        assert_eq!(descent_oracle(7, set(&[4, 5])).unwrap(), BigInt::from(10));
        assert!(descent_oracle(10, ElementSet::EMPTY).is_err());
        assert!(descent_oracle(6, set(&[5])).is_err());
    }

    #[test]
    fn binary_strings() {
        let b: BinaryString = "10100".parse().unwrap();
        assert_eq!(b, panhandle_string(&PanhandleParams::new(2, 3, 5).unwrap()));
        assert!(b.validate(2, 5).is_ok());
        assert!(b.validate(3, 5).is_err());
        assert!("0110".parse::<BinaryString>().unwrap().validate(2, 4).is_err());
        assert!("1101".parse::<BinaryString>().unwrap().validate(3, 4).is_err());
        assert!("10a0".parse::<BinaryString>().is_err());
        assert_eq!(BinaryString::of_word(&[2, 1, 3]).to_string(), "1100");
        assert_eq!(BinaryString::from_descent_set(5, set(&[2])).unwrap().to_string(), "10100");
        assert_eq!(BinaryString::all_in_l(2, 5).len(), 3);
        assert_eq!(
            panhandle_string(&PanhandleParams::new(5, 6, 11).unwrap()).to_string(),
            "10000111100"
        );
    }

    #[test]
    fn delta_leq_matches_panhandle_volume() {
        for p in PanhandleParams::all_up_to(8) {
            let b = panhandle_string(&p);
            assert_eq!(delta_leq_oracle(p.r, p.n, &b).unwrap(), volume_panhandle(&p), "{p}");
        }
        // the minimal string of L(2,5) only dominates itself
        let min: BinaryString = "10010".parse().unwrap();
        assert_eq!(delta_leq_oracle(2, 5, &min).unwrap(), beta(5, set(&[3])).unwrap());
        assert!(delta_leq_oracle(2, 5, &"1100".parse().unwrap()).is_err());
    }

    #[test]
    fn panhandle_volume_is_scaled_leading_coefficient() {
        for p in PanhandleParams::all_up_to(9) {
            let lead = ehrhart_panhandle(&p).leading_coeff();
            let scaled = lead * Rational::from(factorial(p.n - 1));
            assert_eq!(scaled, Rational::from(volume_panhandle(&p)), "{p}");
        }
        assert_eq!(volume_panhandle(&PanhandleParams::new(2, 2, 4).unwrap()), BigInt::from(2));
        for p in PanhandleParams::all_up_to(9) {
            let by_sets: BigInt = ElementSet::interval(p.n - p.s, p.n - 2)
                .subsets_of_size(p.r - 1)
                .map(|set| beta(p.n, set).unwrap())
                .sum();
            assert_eq!(by_sets, volume_panhandle(&p), "{p}");
        }
        assert_eq!(volume_panhandle(&PanhandleParams::new(3, 3, 7).unwrap()), BigInt::from(10));
        for n in 2..=10 {
            for r in 1..n {
                let p = PanhandleParams::new(r, n - 1, n).unwrap();
                assert_eq!(volume_panhandle(&p), eulerian(n - 1, r as i64 - 1));
            }
        }
    }

    #[test]
    fn relaxation_and_paving_volumes() {
        let fano = PavingProfile::new(3, 7, [(3, 7)]).unwrap();
        assert_eq!(hypersimplex_volume(3, 7).unwrap(), BigInt::from(302));
        assert_eq!(volume_paving(&fano).unwrap(), BigInt::from(232));
        let p = PanhandleParams::new(3, 3, 7).unwrap();
        let mut v = BigInt::from(302);
        for _ in 0..7 {
            v = volume_relaxation(&v, &p).unwrap();
        }
        assert_eq!(v, BigInt::from(232));
        assert!(volume_relaxation(&BigInt::from(5), &p).is_err());
        let lead = ehrhart_paving(&fano).unwrap().leading_coeff() * Rational::from(factorial(6));
        assert_eq!(lead, Rational::from(BigInt::from(232)));
        assert_eq!(volume_paving(&PavingProfile::empty(2, 6).unwrap()).unwrap(), eulerian(5, 1));
        assert!(volume_paving(&PavingProfile::new(2, 4, [(2, 9)]).unwrap()).is_err());
    }

    #[test]
    fn eulerian_second_column_closed_form() {
        for n in 0..=12u32 {
            let expect = BigInt::from(3).pow(n) - BigInt::from(n + 1) * BigInt::from(2).pow(n)
                + BigInt::from(n * (n + 1) / 2);
            assert_eq!(eulerian(n as usize, 2), expect, "n={n}");
        }
    }
}
