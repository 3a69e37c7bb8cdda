use serde_json::{json, Value};

use super::paving::field_usize;
use super::{ElementSet, Matroid, MAX_GROUND_SET};
use crate::error::{Error, Result};

/// JSON form `{"n": .., "r": .., "bases": [[..], ..]}` with 1-based elements.
pub trait MatroidJson: Sized {
    fn to_json_value(&self) -> Value;
    fn from_json_value(v: &Value) -> Result<Self>;
    fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

impl MatroidJson for Matroid {
    fn to_json_value(&self) -> Value {
        let bases: Vec<Vec<usize>> = self.bases.iter().map(|b| b.to_vec()).collect();
        json!({"n": self.n, "r": self.rank, "bases": bases})
    }

    fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("matroid must be a JSON object".into()))?;
        let n = field_usize(obj, "n")?;
        if n > MAX_GROUND_SET {
            return Err(Error::Parse(format!("field \"n\": {}", Error::GroundSetTooLarge(n))));
        }
        let r = field_usize(obj, "r")?;
        let list = obj
            .get("bases")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("field \"bases\" must be an array of arrays".into()))?;
        let mut bases = Vec::with_capacity(list.len());
        for (i, b) in list.iter().enumerate() {
            let elems = b
                .as_array()
                .ok_or_else(|| Error::Parse(format!("field \"bases[{i}]\" must be an array")))?;
            let mut set = ElementSet::EMPTY;
            for e in elems {
                let e = e
                    .as_u64()
                    .filter(|&e| e >= 1 && e as usize <= n)
                    .ok_or_else(|| Error::Parse(format!("field \"bases[{i}]\": element {e} outside [1, {n}]")))?;
                if set.contains(e as usize) {
                    return Err(Error::Parse(format!("field \"bases[{i}]\": repeated element {e}")));
                }
                set = set.insert(e as usize);
            }
            if set.len() != r {
                return Err(Error::Parse(format!(
                    "field \"bases[{i}]\" has {} elements but \"r\" is {r}",
                    set.len()
                )));
            }
            bases.push(set);
        }
        Matroid::new(n, bases).map_err(|e| Error::Parse(format!("field \"bases\": {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = Matroid::from_lists(4, &[vec![1, 2, 3], vec![1, 2, 4]]).unwrap();
        let v = m.to_json_value();
        assert_eq!(v.to_string(), r#"{"bases":[[1,2,3],[1,2,4]],"n":4,"r":3}"#);
        assert_eq!(Matroid::from_json_value(&v).unwrap(), m);
    }

    #[test]
    fn errors_name_fields() {
        for (input, field) in [
            (r#"{"r":1,"bases":[[1]]}"#, "\"n\""),
            (r#"{"n":3,"bases":[[1]]}"#, "\"r\""),
            (r#"{"n":3,"r":1}"#, "\"bases\""),
            (r#"{"n":3,"r":1,"bases":[[4]]}"#, "bases[0]"),
            (r#"{"n":3,"r":2,"bases":[[1,2],[3]]}"#, "bases[1]"),
            (r#"{"n":4,"r":2,"bases":[[1,2],[3,4]]}"#, "\"bases\""),
        ] {
            let e = Matroid::from_json_str(input).unwrap_err();
            assert!(matches!(e, Error::Parse(_)));
            assert!(e.to_string().contains(field), "{e} should mention {field}");
        }
    }
}
