use std::fmt;

/// A subset of the ground set `[n]`, element `e` stored at bit `e - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(pub u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n < 32);
        ElementSet((1u32 << n) - 1)
    }

    /// `[lo, hi]`, empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return ElementSet::EMPTY;
        }
        let lo = lo.max(1);
        ElementSet(ElementSet::full(hi).0 & !ElementSet::full(lo - 1).0)
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << (e - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        ElementSet(elems.into_iter().fold(0, |acc, e| acc | (1 << (e - 1))))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && self.0 >> (e - 1) & 1 == 1
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn insert(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << (e - 1))
    }

    pub fn remove(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << (e - 1)))
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_element(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// All `k`-subsets of `self`, in increasing bitmask order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        let elems = self.to_vec();
        let m = elems.len();
        let mut idx: Option<Vec<usize>> = if k <= m { Some((0..k).collect()) } else { None };
        std::iter::from_fn(move || {
            let cur = idx.as_mut()?;
            let set = ElementSet::from_elements(cur.iter().map(|&i| elems[i]));
            // advance to the next combination in colex-compatible order
            let mut i = k;
            loop {
                if i == 0 {
                    idx = None;
                    break;
                }
                i -= 1;
                if cur[i] < m - k + i {
                    cur[i] += 1;
                    for j in i + 1..k {
                        cur[j] = cur[j - 1] + 1;
                    }
                    break;
                }
            }
            Some(set)
        })
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn all_subsets(self) -> impl Iterator<Item = ElementSet> {
        let full = self.0;
        let mut sub = Some(0u32);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(ElementSet(cur))
        })
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let s = ElementSet::from_elements([1, 3, 4]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(ElementSet::interval(3, 5), ElementSet::from_elements([3, 4, 5]));
        assert_eq!(ElementSet::interval(5, 4), ElementSet::EMPTY);
        assert_eq!(s.max_element(), 4);
        assert_eq!(ElementSet::EMPTY.max_element(), 0);
    }

    #[test]
    fn subset_enumeration_counts() {
        let full = ElementSet::full(7);
        for k in 0..=8 {
            let subs: Vec<_> = full.subsets_of_size(k).collect();
            let expect = if k <= 7 { crate::exactmath::binomial(7, k as i64) } else { 0.into() };
            assert_eq!(num_bigint::BigInt::from(subs.len()), expect);
            assert!(subs.iter().all(|s| s.len() == k && s.is_subset(full)));
            let mut sorted = subs.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), subs.len());
        }
        let h = ElementSet::from_elements([2, 5, 6]);
        assert_eq!(h.all_subsets().count(), 8);
        assert!(h.all_subsets().all(|x| x.is_subset(h)));
    }
}
