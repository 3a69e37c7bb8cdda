//! Explicit small matroids given by their basis systems on `[n]`, plus the
//! structure the Ehrhart formulas need: rank, flats, hyperplanes, stressed
//! hyperplanes, relaxation, paving profiles and panhandle matroids.

mod io;
mod panhandle;
pub(crate) mod paving;
mod set;

use std::collections::HashSet;
use std::sync::OnceLock;

pub use io::MatroidJson;
pub use panhandle::{panhandle_basis_count, panhandle_matroid, panhandle_rank, PanhandleParams};
pub use paving::PavingProfile;
pub use set::ElementSet;

use crate::error::{Error, Result};

/// Largest ground set representable by [`ElementSet`].
pub const MAX_GROUND_SET: usize = 31;

/// Ground sets up to this size get exhaustive subset tables (rank, flats,
/// exchange-axiom validation).
pub const SMALL_GROUND_SET: usize = 16;

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<ElementSet>,
    ranks: OnceLock<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Validates sizes and, for `n <= 16`, the basis exchange axiom.
    pub fn new(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        let m = Self::new_unchecked(n, bases)?;
        if n <= SMALL_GROUND_SET {
            m.check_exchange_axiom()?;
        }
        Ok(m)
    }

    /// Skips the exchange axiom check; sizes and ground-set membership are
    /// still validated.
    pub fn new_unchecked(n: usize, mut bases: Vec<ElementSet>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let Some(first) = bases.first() else {
            return Err(Error::InvalidBasisSystem("basis system is empty".into()));
        };
        let rank = first.len();
        let full = ElementSet::full(n);
        for b in &bases {
            if b.len() != rank {
                return Err(Error::InvalidBasisSystem(format!(
                    "basis {b} has {} elements, expected {rank}",
                    b.len()
                )));
            }
            if !b.is_subset(full) {
                return Err(Error::InvalidBasisSystem(format!("basis {b} is not contained in [{n}]")));
            }
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(Matroid {
            n,
            rank,
            bases,
            ranks: OnceLock::new(),
        })
    }

    pub fn from_lists(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        for b in bases {
            if let Some(&e) = b.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::InvalidBasisSystem(format!("element {e} outside [1, {n}]")));
            }
        }
        Self::new(n, bases.iter().map(|b| ElementSet::from_elements(b.iter().copied())).collect())
    }

    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidParameters(format!("U_{{{r},{n}}} needs r <= n")));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        Self::new_unchecked(n, ElementSet::full(n).subsets_of_size(r).collect())
    }

    /// `self ⊕ other`, with `other` relabeled onto `n+1 .. n+n'`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in &self.bases {
            for b in &other.bases {
                bases.push(ElementSet(a.0 | b.0 << self.n));
            }
        }
        Self::new_unchecked(n, bases)
    }

    pub fn dual(&self) -> Matroid {
        let full = ElementSet::full(self.n);
        Self::new_unchecked(self.n, self.bases.iter().map(|b| full.difference(*b)).collect())
            .expect("complements of a basis system are well formed")
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: ElementSet) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    fn check_exchange_axiom(&self) -> Result<()> {
        let members: HashSet<ElementSet> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                for e in b1.difference(b2).elements() {
                    let base = b1.remove(e);
                    let ok = b2
                        .difference(b1)
                        .elements()
                        .any(|f| members.contains(&base.insert(f)));
                    if !ok {
                        return Err(Error::InvalidBasisSystem(format!(
                            "exchange axiom fails for B={b1}, B'={b2}, e={e}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn require_small(&self, what: &str) -> Result<()> {
        if self.n > SMALL_GROUND_SET {
            return Err(Error::GuardExceeded(format!(
                "{what} needs n <= {SMALL_GROUND_SET}, got n = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Rank of every subset, indexed by bitmask; built lazily for `n <= 16`.
    fn rank_table(&self) -> &[u8] {
        self.ranks.get_or_init(|| {
            let size = 1usize << self.n;
            let mut indep = vec![false; size];
            for b in &self.bases {
                indep[b.0 as usize] = true;
            }
            // downward closure: a set is independent if some one-element
            // extension is independent
            for mask in (0..size).rev() {
                if indep[mask] {
                    continue;
                }
                let mut free = !mask & (size - 1);
                while free != 0 {
                    let bit = free & free.wrapping_neg();
                    if indep[mask | bit] {
                        indep[mask] = true;
                        break;
                    }
                    free &= free - 1;
                }
            }
            let mut ranks = vec![0u8; size];
            for mask in 1..size {
                ranks[mask] = if indep[mask] {
                    mask.count_ones() as u8
                } else {
                    let mut best = 0;
                    let mut bits = mask;
                    while bits != 0 {
                        let bit = bits & bits.wrapping_neg();
                        best = best.max(ranks[mask ^ bit]);
                        bits &= bits - 1;
                    }
                    best
                };
            }
            ranks
        })
    }

    /// `max_B |T ∩ B|`.
    pub fn rank_of(&self, t: ElementSet) -> usize {
        let t = t.intersection(ElementSet::full(self.n));
        if self.n <= SMALL_GROUND_SET {
            return self.rank_table()[t.0 as usize] as usize;
        }
        self.bases
            .iter()
            .map(|b| b.intersection(t).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, t: ElementSet) -> bool {
        self.rank_of(t) == t.len()
    }

    pub fn is_flat(&self, f: ElementSet) -> bool {
        let r = self.rank_of(f);
        ElementSet::full(self.n)
            .difference(f)
            .elements()
            .all(|e| self.rank_of(f.insert(e)) > r)
    }

    /// All flats, in increasing bitmask order.
    pub fn flats(&self) -> Result<Vec<ElementSet>> {
        self.require_small("flat enumeration")?;
        Ok(ElementSet::full(self.n)
            .all_subsets()
            .filter(|&f| self.is_flat(f))
            .collect())
    }

    pub fn hyperplanes(&self) -> Result<Vec<ElementSet>> {
        if self.rank == 0 {
            return Ok(Vec::new());
        }
        Ok(self
            .flats()?
            .into_iter()
            .filter(|&f| self.rank_of(f) == self.rank - 1)
            .collect())
    }

    pub fn is_hyperplane(&self, h: ElementSet) -> bool {
        h.is_subset(ElementSet::full(self.n))
            && self.rank > 0
            && self.rank_of(h) == self.rank - 1
            && self.is_flat(h)
    }

    /// A hyperplane whose `(r-1)`-subsets are all independent.
    pub fn is_stressed_hyperplane(&self, h: ElementSet) -> Result<bool> {
        if !self.is_hyperplane(h) {
            return Err(Error::NotHyperplane(h.to_string()));
        }
        Ok(h.subsets_of_size(self.rank - 1).all(|s| self.is_independent(s)))
    }

    fn relaxation_candidate(&self, s: ElementSet) -> Result<Vec<ElementSet>> {
        if !s.is_subset(ElementSet::full(self.n)) {
            return Err(Error::InvalidParameters(format!("{s} is not a subset of [{}]", self.n)));
        }
        if s.len() < self.rank {
            return Err(Error::InvalidParameters(format!(
                "relaxed set {s} has fewer than r = {} elements",
                self.rank
            )));
        }
        let added: Vec<ElementSet> = s.subsets_of_size(self.rank).collect();
        if added.iter().any(|b| self.is_basis(*b)) {
            return Err(Error::ContainsBasis(s.to_string()));
        }
        let mut bases = self.bases.clone();
        bases.extend(added);
        Ok(bases)
    }

    /// Whether `B ∪ C(S, r)` is a basis system.
    pub fn can_relax(&self, s: ElementSet) -> Result<bool> {
        let bases = self.relaxation_candidate(s)?;
        let cand = Matroid::new_unchecked(self.n, bases)?;
        Ok(cand.check_exchange_axiom().is_ok())
    }

    pub fn relax(&self, s: ElementSet) -> Result<Matroid> {
        let bases = self.relaxation_candidate(s)?;
        let cand = Matroid::new_unchecked(self.n, bases)?;
        cand.check_exchange_axiom()
            .map_err(|_| Error::NotRelaxable(s.to_string()))?;
        Ok(cand)
    }

    pub fn loops(&self) -> ElementSet {
        let covered = self.bases.iter().fold(ElementSet::EMPTY, |acc, b| acc.union(*b));
        ElementSet::full(self.n).difference(covered)
    }

    /// Every `(r-1)`-subset is independent (so every circuit has size >= r).
    pub fn is_paving(&self) -> bool {
        if self.rank == 0 {
            return true;
        }
        if self.rank >= 2 && !self.loops().is_empty() {
            return false;
        }
        ElementSet::full(self.n)
            .subsets_of_size(self.rank - 1)
            .all(|s| self.is_independent(s))
    }

    pub fn is_sparse_paving(&self) -> bool {
        self.is_paving() && self.dual().is_paving()
    }

    pub fn paving_profile(&self) -> Result<PavingProfile> {
        if !self.is_paving() {
            return Err(Error::NotPaving);
        }
        let mut profile = PavingProfile::empty(self.rank, self.n)?;
        for h in self.hyperplanes()? {
            if h.len() >= self.rank {
                profile.add(h.len(), 1)?;
            }
        }
        Ok(profile)
    }

    /// Connected components, each as an element set, sorted by least element.
    ///
    /// Two elements share a component exactly when they are linked through
    /// fundamental circuits of a fixed basis; loops and coloops are singletons.
    pub fn components(&self) -> Vec<ElementSet> {
        let basis = self.bases[0];
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for e in ElementSet::full(self.n).difference(basis).elements() {
            for b in basis.elements() {
                if self.is_basis(basis.remove(b).insert(e)) {
                    let (x, y) = (find(&mut parent, e), find(&mut parent, b));
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
        }
        let mut comps: Vec<ElementSet> = Vec::new();
        let mut root_index = vec![usize::MAX; self.n + 1];
        for e in 1..=self.n {
            let r = find(&mut parent, e);
            if root_index[r] == usize::MAX {
                root_index[r] = comps.len();
                comps.push(ElementSet::EMPTY);
            }
            comps[root_index[r]] = comps[root_index[r]].insert(e);
        }
        comps
    }

    pub fn num_components(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// Builds the paving matroid of rank `r` on `[n]` whose hyperplanes of
    /// size at least `r` are `big_hyperplanes`; every `(r-1)`-set outside them
    /// becomes a hyperplane of its own. Requires that no `(r-1)`-set lies in two
    /// of the given sets.
    pub fn paving_from_hyperplanes(n: usize, r: usize, big_hyperplanes: &[ElementSet]) -> Result<Matroid> {
        if r == 0 || r > n {
            return Err(Error::InvalidParameters(format!("paving matroid needs 1 <= r <= n, got r={r}, n={n}")));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let full = ElementSet::full(n);
        for (i, h) in big_hyperplanes.iter().enumerate() {
            if !h.is_subset(full) || h.len() < r || h.len() >= n {
                return Err(Error::InvalidParameters(format!(
                    "hyperplane {h} must be a subset of [{n}] with {r} <= |H| < {n}"
                )));
            }
            for g in &big_hyperplanes[i + 1..] {
                if h.intersection(*g).len() + 1 >= r {
                    return Err(Error::InvalidParameters(format!(
                        "hyperplanes {h} and {g} share an ({}-)subset", r - 1
                    )));
                }
            }
        }
        let bases: Vec<ElementSet> = full
            .subsets_of_size(r)
            .filter(|b| !big_hyperplanes.iter().any(|h| b.is_subset(*h)))
            .collect();
        Matroid::new_unchecked(n, bases)
    }
}
