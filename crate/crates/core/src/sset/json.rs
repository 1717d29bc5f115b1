use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::SimplicialSet;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct Doc {
    cap: usize,
    levels: Vec<usize>,
    face: Vec<Vec<Vec<usize>>>,
    degen: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<String, Vec<String>>>,
}

impl SimplicialSet {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = Doc {
            cap: self.cap,
            levels: self.counts.clone(),
            face: self.faces.clone(),
            degen: self.degens.clone(),
            labels: self.labels.as_ref().map(|l| {
                l.iter()
                    .enumerate()
                    .map(|(n, v)| (n.to_string(), v.clone()))
                    .collect()
            }),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text)?;
        Self::from_json_value(v)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let doc: Doc = serde_json::from_value(v)?;
        let labels =
            match doc.labels {
                None => None,
                Some(m) => {
                    let mut l = Vec::with_capacity(doc.cap + 1);
                    for n in 0..=doc.cap {
                        l.push(m.get(&n.to_string()).cloned().ok_or_else(|| {
                            Error::input(format!("labels missing for level {n}"))
                        })?);
                    }
                    Some(l)
                }
            };
        let set = SimplicialSet::from_tables(doc.cap, doc.levels, doc.face, doc.degen, labels)?;
        set.check_identities()?;
        Ok(set)
    }
}
