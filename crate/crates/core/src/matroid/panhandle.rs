use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{ElementSet, Matroid, MAX_GROUND_SET};
use crate::error::{Error, Result};
use crate::exactmath::binomial;

/// Largest basis enumeration `panhandle_matroid` will attempt.
pub const PANHANDLE_ENUMERATION_GUARD: u64 = 10_000_000;

/// `Pan_{r,s,n}` parameters, with `1 <= r <= s < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PanhandleParams {
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl PanhandleParams {
    pub fn new(r: usize, s: usize, n: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameters(
                "panhandle rank r must be at least 1".into(),
            ));
        }
        if !(r <= s && s < n) {
            return Err(Error::InvalidParameters(format!(
                "panhandle parameters need r <= s < n, got r={r}, s={s}, n={n}"
            )));
        }
        Ok(PanhandleParams { r, s, n })
    }

    /// Every valid triple with `n <= n_max`, ordered by `(n, s, r)`.
    pub fn all_up_to(n_max: usize) -> Vec<PanhandleParams> {
        let mut out = Vec::new();
        for n in 2..=n_max {
            for s in 1..n {
                for r in 1..=s {
                    out.push(PanhandleParams { r, s, n });
                }
            }
        }
        out
    }

    pub fn is_uniform(&self) -> bool {
        self.s + 1 == self.n
    }
}

impl std::fmt::Display for PanhandleParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Pan_{{{},{},{}}}", self.r, self.s, self.n)
    }
}

/// `C(s, r) + C(s, r-1) (n-s)`.
pub fn panhandle_basis_count(p: &PanhandleParams) -> BigInt {
    let (r, s, n) = (p.r as i64, p.s as i64, p.n as i64);
    binomial(s, r) + binomial(s, r - 1) * BigInt::from(n - s)
}

/// Bases are the `r`-sets meeting `[s]` in at least `r - 1` elements.
pub fn panhandle_matroid(p: &PanhandleParams) -> Result<Matroid> {
    if p.n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(p.n));
    }
    let total = binomial(p.n as i64, p.r as i64);
    if total > BigInt::from(PANHANDLE_ENUMERATION_GUARD) {
        return Err(Error::GuardExceeded(format!(
            "{p} has C({},{}) = {total} candidate r-sets (limit {PANHANDLE_ENUMERATION_GUARD}); use the closed-form Ehrhart and volume paths instead",
            p.n, p.r
        )));
    }
    let head = ElementSet::full(p.s);
    let tail = ElementSet::full(p.n).difference(head);
    let mut bases: Vec<ElementSet> = head.subsets_of_size(p.r).collect();
    for a in head.subsets_of_size(p.r - 1) {
        for x in tail.elements() {
            bases.push(a.insert(x));
        }
    }
    Matroid::new_unchecked(p.n, bases)
}

/// Closed-form rank: `min(|T ∩ [s]|, r)` if `T ⊆ [s]`, else `min(|T ∩ [s]| + 1, r)`.
pub fn panhandle_rank(p: &PanhandleParams, t: ElementSet) -> usize {
    let head = ElementSet::full(p.s);
    let t1 = t.intersection(head).len();
    let t2 = t.intersection(ElementSet::full(p.n)).difference(head);
    if t2.is_empty() {
        t1.min(p.r)
    } else {
        (t1 + 1).min(p.r)
    }
}
