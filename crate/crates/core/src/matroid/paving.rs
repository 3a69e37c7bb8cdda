use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Rank, ground-set size and the number of hyperplanes of each size
/// `s ∈ [r, n-1]` of a paving matroid. Smaller hyperplanes carry no
/// correction term and are not recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PavingProfile {
    r: usize,
    n: usize,
    counts: BTreeMap<usize, u64>,
}

impl PavingProfile {
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::InvalidParameters(format!(
                "paving profile needs 1 <= r <= n, got r={r}, n={n}"
            )));
        }
        Ok(PavingProfile {
            r,
            n,
            counts: BTreeMap::new(),
        })
    }

    pub fn new<I: IntoIterator<Item = (usize, u64)>>(r: usize, n: usize, counts: I) -> Result<Self> {
        let mut p = Self::empty(r, n)?;
        for (s, c) in counts {
            p.add(s, c)?;
        }
        Ok(p)
    }

    pub fn add(&mut self, s: usize, count: u64) -> Result<()> {
        if s < self.r || s >= self.n {
            return Err(Error::InvalidParameters(format!(
                "hyperplane size {s} outside [{}, {}]",
                self.r,
                self.n - 1
            )));
        }
        if count > 0 {
            *self.counts.entry(s).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn count(&self, s: usize) -> u64 {
        self.counts.get(&s).copied().unwrap_or(0)
    }

    /// Nonzero `(s, |H_s|)` pairs in increasing `s`.
    pub fn counts(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn to_json_value(&self) -> Value {
        let by_size: Map<String, Value> = self
            .counts
            .iter()
            .map(|(s, c)| (s.to_string(), json!(c)))
            .collect();
        json!({"n": self.n, "r": self.r, "hyperplanes_by_size": by_size})
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("profile must be a JSON object".into()))?;
        let n = field_usize(obj, "n")?;
        let r = field_usize(obj, "r")?;
        let mut p = Self::empty(r, n).map_err(|e| Error::Parse(format!("field \"r\"/\"n\": {e}")))?;
        if let Some(h) = obj.get("hyperplanes_by_size") {
            let h = h
                .as_object()
                .ok_or_else(|| Error::Parse("field \"hyperplanes_by_size\" must be an object".into()))?;
            for (key, val) in h {
                let s: usize = key.parse().map_err(|_| {
                    Error::Parse(format!("field \"hyperplanes_by_size\": key {key:?} is not a size"))
                })?;
                let c = as_u64(val).ok_or_else(|| {
                    Error::Parse(format!("field \"hyperplanes_by_size.{key}\" must be a nonnegative integer"))
                })?;
                p.add(s, c)
                    .map_err(|e| Error::Parse(format!("field \"hyperplanes_by_size.{key}\": {e}")))?;
            }
        }
        Ok(p)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// Accepts either a JSON number or a decimal string.
pub(crate) fn as_u64(v: &Value) -> Option<u64> {
    match v {
        Value::Number(n) => n.as_u64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub(crate) fn field_usize(obj: &Map<String, Value>, name: &str) -> Result<usize> {
    let v = obj
        .get(name)
        .ok_or_else(|| Error::Parse(format!("missing field \"{name}\"")))?;
    as_u64(v)
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::Parse(format!("field \"{name}\" must be a nonnegative integer")))
}
