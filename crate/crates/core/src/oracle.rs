//! Brute-force lattice-point counts of dilated base polytopes, and Ehrhart
//! polynomials recovered from them by interpolation.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{lagrange_interpolate, Polynomial};
use crate::matroid::{ElementSet, Matroid, PanhandleParams};
use crate::par::Strategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub panhandle_max_n: usize,
    pub panhandle_max_t: u64,
    pub matroid_max_n: usize,
    pub matroid_max_t: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            panhandle_max_n: 12,
            panhandle_max_t: 8,
            matroid_max_n: 9,
            matroid_max_t: 6,
        }
    }
}

fn guard(what: &str, n: usize, t: u64, max_n: usize, max_t: u64) -> Result<()> {
    if n > max_n || t > max_t {
        return Err(Error::GuardExceeded(format!(
            "{what} oracle limited to n <= {max_n}, t <= {max_t} (got n = {n}, t = {t})"
        )));
    }
    Ok(())
}

pub fn count_panhandle_points(p: &PanhandleParams, t: u64) -> Result<BigInt> {
    count_panhandle_points_with(p, t, &OracleLimits::default())
}

/// Counts `x ∈ [0,t]^n` with `Σ x = tr` and `Σ_{i>s} x_i <= t`, scanning
/// coordinates and tracking (running total, running tail sum).
pub fn count_panhandle_points_with(p: &PanhandleParams, t: u64, limits: &OracleLimits) -> Result<BigInt> {
    guard("panhandle", p.n, t, limits.panhandle_max_n, limits.panhandle_max_t)?;
    let t = t as usize;
    let goal = t * p.r;
    let tail_cap = t + 1;
    // states[total][tail]; tails above t are dead and never stored
    let mut states = vec![vec![BigInt::zero(); tail_cap]; goal + 1];
    states[0][0] = BigInt::from(1);
    for i in 1..=p.n {
        let mut next = vec![vec![BigInt::zero(); tail_cap]; goal + 1];
        for (total, row) in states.iter().enumerate() {
            for (tail, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for x in 0..=t.min(goal - total) {
                    let new_tail = if i > p.s { tail + x } else { tail };
                    if new_tail >= tail_cap {
                        break;
                    }
                    next[total + x][new_tail] += c;
                }
            }
        }
        states = next;
    }
    Ok(states[goal].iter().sum())
}

pub fn count_matroid_points(m: &Matroid, t: u64) -> Result<BigInt> {
    count_matroid_points_with(m, t, &OracleLimits::default())
}

struct Constraint {
    members: ElementSet,
    cap: u64,
}

/// Counts integer `x ∈ [0,t]^n` with `Σ x = t·r` and `Σ_{i∈F} x_i <= t·rank(F)`
/// for every flat `F`.
pub fn count_matroid_points_with(m: &Matroid, t: u64, limits: &OracleLimits) -> Result<BigInt> {
    let n = m.ground_set_size();
    guard("matroid", n, t, limits.matroid_max_n, limits.matroid_max_t)?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let full = ElementSet::full(n);
    // independent flats are implied by the box, the full set by the equation
    let mut constraints: Vec<Constraint> = m
        .flats()?
        .into_iter()
        .filter(|&f| f != full && m.rank_of(f) < f.len())
        .map(|f| Constraint {
            members: f,
            cap: t * m.rank_of(f) as u64,
        })
        .collect();
    // drop F when some G ⊋ F has the same cap: Σ_F x <= Σ_G x <= cap
    let snapshot: Vec<(ElementSet, u64)> = constraints.iter().map(|c| (c.members, c.cap)).collect();
    constraints.retain(|c| {
        !snapshot
            .iter()
            .any(|&(g, cap)| g != c.members && c.members.is_subset(g) && cap <= c.cap)
    });
    let mut by_element: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (idx, c) in constraints.iter().enumerate() {
        for e in c.members.elements() {
            by_element[e].push(idx);
        }
    }
    let mut search = Search {
        n,
        t,
        goal: t * m.rank() as u64,
        caps: constraints.iter().map(|c| c.cap).collect(),
        by_element,
        sums: vec![0; constraints.len()],
        count: 0,
    };
    search.descend(1, 0);
    Ok(BigInt::from(search.count))
}

struct Search {
    n: usize,
    t: u64,
    goal: u64,
    caps: Vec<u64>,
    by_element: Vec<Vec<usize>>,
    sums: Vec<u64>,
    count: u64,
}

impl Search {
    fn fits(&self, e: usize, x: u64) -> bool {
        self.by_element[e].iter().all(|&c| self.sums[c] + x <= self.caps[c])
    }

    fn apply(&mut self, e: usize, x: u64, add: bool) {
        for &c in &self.by_element[e] {
            if add {
                self.sums[c] += x;
            } else {
                self.sums[c] -= x;
            }
        }
    }

    fn descend(&mut self, e: usize, total: u64) {
        let remaining = self.goal - total;
        if e == self.n {
            if remaining <= self.t && self.fits(e, remaining) {
                self.count += 1;
            }
            return;
        }
        let slots_after = (self.n - e) as u64;
        let lo = remaining.saturating_sub(self.t * slots_after);
        let hi = self.t.min(remaining);
        for x in lo..=hi {
            if !self.fits(e, x) {
                // sums only grow with x
                break;
            }
            self.apply(e, x, true);
            self.descend(e + 1, total + x);
            self.apply(e, x, false);
        }
    }
}

fn interpolate_counts<F>(degree: usize, count: F) -> Result<Polynomial>
where
    F: Fn(u64) -> Result<BigInt> + Sync + Send,
{
    let ts: Vec<u64> = (0..=degree as u64).collect();
    let values = Strategy::Parallel.map(&ts, |&t| count(t));
    let mut points = Vec::with_capacity(values.len());
    for (t, v) in ts.into_iter().zip(values) {
        points.push((t as i64, v?));
    }
    lagrange_interpolate(&points)
}

pub fn interpolate_matroid_ehrhart(m: &Matroid) -> Result<Polynomial> {
    interpolate_matroid_ehrhart_with(m, &OracleLimits::default())
}

/// Samples `t = 0..=n-c`, `c` the number of components, and interpolates.
pub fn interpolate_matroid_ehrhart_with(m: &Matroid, limits: &OracleLimits) -> Result<Polynomial> {
    let d = m.ground_set_size() - m.num_components();
    guard("matroid", m.ground_set_size(), d as u64, limits.matroid_max_n, limits.matroid_max_t)?;
    interpolate_counts(d, |t| count_matroid_points_with(m, t, limits))
}

pub fn interpolate_panhandle_ehrhart(p: &PanhandleParams) -> Result<Polynomial> {
    interpolate_panhandle_ehrhart_with(p, &OracleLimits::default())
}

/// Panhandle matroids are connected, so `t = 0..=n-1` suffices.
pub fn interpolate_panhandle_ehrhart_with(p: &PanhandleParams, limits: &OracleLimits) -> Result<Polynomial> {
    let d = p.n - 1;
    guard("panhandle", p.n, d as u64, limits.panhandle_max_n, limits.panhandle_max_t)?;
    interpolate_counts(d, |t| count_panhandle_points_with(p, t, limits))
}
