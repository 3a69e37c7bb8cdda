//! Steiner systems and finite projective planes as sources of paving
//! matroids, with their Ehrhart polynomials and volumes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::ehrhart::ehrhart_paving;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, Polynomial};
use crate::matroid::paving::{as_u64, field_usize};
use crate::matroid::{ElementSet, Matroid, PavingProfile, MAX_GROUND_SET};
use crate::par::Strategy;
use crate::volume::volume_paving;

/// `validate_steiner` checks every `t`-subset of `[n]` up to this `n`.
pub const MAX_VALIDATION_N: usize = 15;

/// `S(t,k,n)`, optionally with an explicit block list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub t: usize,
    pub k: usize,
    pub n: usize,
    pub blocks: Option<Vec<ElementSet>>,
}

fn check_params(t: usize, k: usize, n: usize) -> Result<()> {
    if !(1 <= t && t < k && k < n) {
        return Err(Error::InvalidParameters(format!(
            "Steiner parameters need 1 <= t < k < n, got t={t}, k={k}, n={n}"
        )));
    }
    Ok(())
}

/// `C(n,t) / C(k,t)`, which must be an integer.
pub fn steiner_block_count(t: usize, k: usize, n: usize) -> Result<BigInt> {
    if !(t <= k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "Steiner parameters need t <= k <= n, got t={t}, k={k}, n={n}"
        )));
    }
    let (q, rem) = binomial(n as i64, t as i64).div_rem(&binomial(k as i64, t as i64));
    if !rem.is_zero() {
        return Err(Error::NonIntegralBlockCount { t, k, n });
    }
    Ok(q)
}

impl SteinerSystem {
    /// Parameters only; formulas are evaluated without a witness.
    pub fn from_parameters(t: usize, k: usize, n: usize) -> Result<Self> {
        check_params(t, k, n)?;
        steiner_block_count(t, k, n)?;
        Ok(SteinerSystem { t, k, n, blocks: None })
    }

    pub fn with_blocks(t: usize, k: usize, n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        check_params(t, k, n)?;
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut sets = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            if b.iter().any(|&e| e == 0 || e > n) {
                return Err(Error::InvalidParameters(format!("block {i} has an element outside [1, {n}]")));
            }
            let s = ElementSet::from_elements(b.iter().copied());
            if s.len() != k || b.len() != k {
                return Err(Error::InvalidParameters(format!("block {i} is not a {k}-subset")));
            }
            sets.push(s);
        }
        Ok(SteinerSystem { t, k, n, blocks: Some(sets) })
    }

    /// True when no explicit, valid block list backs the parameters.
    pub fn is_formula_only(&self) -> bool {
        !(self.blocks.is_some() && validate_steiner(self))
    }

    pub fn to_json_value(&self) -> Value {
        let mut v = json!({"t": self.t, "k": self.k, "n": self.n});
        if let Some(b) = &self.blocks {
            v["blocks"] = json!(b.iter().map(|s| s.to_vec()).collect::<Vec<_>>());
        }
        v
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("Steiner system must be a JSON object".into()))?;
        let t = field_usize(obj, "t")?;
        let k = field_usize(obj, "k")?;
        let n = field_usize(obj, "n")?;
        let named = |e: Error| Error::Parse(format!("field \"t\"/\"k\"/\"n\": {e}"));
        match obj.get("blocks") {
            None | Some(Value::Null) => Self::from_parameters(t, k, n).map_err(named),
            Some(list) => {
                let list = list
                    .as_array()
                    .ok_or_else(|| Error::Parse("field \"blocks\" must be an array of arrays".into()))?;
                let mut blocks = Vec::with_capacity(list.len());
                for (i, b) in list.iter().enumerate() {
                    let elems = b
                        .as_array()
                        .ok_or_else(|| Error::Parse(format!("field \"blocks[{i}]\" must be an array")))?;
                    let block = elems
                        .iter()
                        .map(|e| as_u64(e).map(|e| e as usize))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| Error::Parse(format!("field \"blocks[{i}]\" must hold positive integers")))?;
                    blocks.push(block);
                }
                Self::with_blocks(t, k, n, &blocks).map_err(|e| Error::Parse(format!("field \"blocks\": {e}")))
            }
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// Whether every `t`-subset of `[n]` lies in exactly one block.
pub fn validate_steiner(s: &SteinerSystem) -> bool {
    validate_steiner_with(s, Strategy::Sequential)
}

pub fn validate_steiner_with(s: &SteinerSystem, strategy: Strategy) -> bool {
    let Some(blocks) = &s.blocks else {
        return false;
    };
    if s.n > MAX_VALIDATION_N || check_params(s.t, s.k, s.n).is_err() {
        return false;
    }
    let full = ElementSet::full(s.n);
    if blocks.iter().any(|b| b.len() != s.k || !b.is_subset(full)) {
        return false;
    }
    let subsets: Vec<ElementSet> = full.subsets_of_size(s.t).collect();
    strategy
        .map(&subsets, |&ts| blocks.iter().filter(|b| ts.is_subset(**b)).count() == 1)
        .into_iter()
        .all(|ok| ok)
}

/// Rank `t+1` with the blocks as the hyperplanes of size at least `t+1`.
pub fn steiner_to_profile(s: &SteinerSystem) -> Result<PavingProfile> {
    check_params(s.t, s.k, s.n)?;
    let count = steiner_block_count(s.t, s.k, s.n)?;
    let count = count
        .to_u64()
        .ok_or_else(|| Error::GuardExceeded(format!("block count {count} does not fit in 64 bits")))?;
    PavingProfile::new(s.t + 1, s.n, [(s.k, count)])
}

/// The explicit paving matroid of a validated system.
pub fn steiner_matroid(s: &SteinerSystem) -> Result<Matroid> {
    if !validate_steiner(s) {
        return Err(Error::InvalidParameters(format!(
            "S({},{},{}) needs a valid explicit block list",
            s.t, s.k, s.n
        )));
    }
    Matroid::paving_from_hyperplanes(s.n, s.t + 1, s.blocks.as_deref().unwrap_or_default())
}

pub fn ehrhart_steiner(t: usize, k: usize, n: usize) -> Result<Polynomial> {
    ehrhart_paving(&steiner_to_profile(&SteinerSystem::from_parameters(t, k, n)?)?)
}

pub fn volume_steiner(t: usize, k: usize, n: usize) -> Result<BigInt> {
    volume_paving(&steiner_to_profile(&SteinerSystem::from_parameters(t, k, n)?)?)
}

fn plane_params(q: usize) -> Result<(usize, usize, usize)> {
    if q < 2 {
        return Err(Error::InvalidParameters(format!("projective plane order must be at least 2, got {q}")));
    }
    Ok((2, q + 1, q * q + q + 1))
}

/// `S(2, q+1, q²+q+1)`.
pub fn projective_plane(q: usize) -> Result<SteinerSystem> {
    let (t, k, n) = plane_params(q)?;
    SteinerSystem::from_parameters(t, k, n)
}

pub fn ehrhart_projective_plane(q: usize) -> Result<Polynomial> {
    let (t, k, n) = plane_params(q)?;
    ehrhart_steiner(t, k, n)
}

pub fn volume_projective_plane(q: usize) -> Result<BigInt> {
    let (t, k, n) = plane_params(q)?;
    volume_steiner(t, k, n)
}

/// Planes `PG(2,q)` exist for every prime power `q`; for other orders the
/// values are formula-only.
pub fn plane_known_to_exist(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Only dimension 2 is handled.
pub fn ehrhart_projective_geometry(dim: usize, q: usize) -> Result<Polynomial> {
    if dim != 2 {
        return Err(Error::Unsupported(format!(
            "PG({dim},{q}): higher-dimensional projective geometries do not in general give rise to paving matroids"
        )));
    }
    ehrhart_projective_plane(q)
}

/// The lines `{i, i+1, i+3}` mod 7.
pub fn fano_plane() -> SteinerSystem {
    let lines: Vec<Vec<usize>> = (0..7).map(|i| [0, 1, 3].iter().map(|d| (i + d) % 7 + 1).collect()).collect();
    SteinerSystem::with_blocks(2, 3, 7, &lines).expect("Fano lines are 3-subsets of [7]")
}
