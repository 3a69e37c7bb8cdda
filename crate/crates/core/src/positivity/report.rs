use serde_json::{json, Map, Value};

/// A failing parameter tuple plus whatever values disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    tuple: Vec<(String, i64)>,
    details: Vec<(String, String)>,
}

impl Counterexample {
    pub fn new(tuple: &[(&str, i64)]) -> Self {
        Counterexample {
            tuple: tuple.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            details: Vec::new(),
        }
    }

    pub fn detail(mut self, key: &str, value: String) -> Self {
        self.details.push((key.to_string(), value));
        self
    }

    fn sort_key(&self) -> Vec<i64> {
        self.tuple.iter().map(|(_, v)| *v).collect()
    }

    pub fn to_json_value(&self) -> Value {
        let tuple: Map<String, Value> = self.tuple.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let mut obj: Map<String, Value> = self.details.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        obj.insert("tuple".into(), Value::Object(tuple));
        Value::Object(obj)
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    conjecture: String,
    range: Value,
    counterexamples: Vec<Counterexample>,
    tuples_checked: u64,
}

impl VerificationReport {
    pub fn new(conjecture: &str, range: Value) -> Self {
        VerificationReport {
            conjecture: conjecture.to_string(),
            range,
            counterexamples: Vec::new(),
            tuples_checked: 0,
        }
    }

    pub(crate) fn absorb(&mut self, checked: usize, results: Vec<Option<Counterexample>>) {
        self.tuples_checked += checked as u64;
        self.counterexamples.extend(results.into_iter().flatten());
        self.counterexamples.sort_by_key(Counterexample::sort_key);
    }

    pub fn is_certified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn tuples_checked(&self) -> u64 {
        self.tuples_checked
    }

    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.counterexamples
    }

    pub fn status(&self) -> &'static str {
        if self.is_certified() {
            "certified"
        } else {
            "counterexample"
        }
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "conjecture": self.conjecture,
            "range": self.range,
            "status": self.status(),
            "counterexamples": self.counterexamples.iter().map(Counterexample::to_json_value).collect::<Vec<_>>(),
            "tuples_checked": self.tuples_checked.to_string(),
        })
    }
}
