//! Run reports: ordered `key: value` lines, or the same fields as JSON.

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::oracle::TransversalCertificate;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    /// A report opening with the command, library version and input hash.
    pub fn new(command: &str, input: &[u8]) -> Self {
        let mut r = Self::default();
        r.push("command", command);
        r.push("version", VERSION);
        r.push("input_sha256", sha256_hex(input));
        r
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn certificate(&mut self, cert: &TransversalCertificate) -> &mut Self {
        self.push("method", cert.method.to_string());
        self.push("certificate", cert.transversal.to_vec());
        self.push("size", cert.size());
        self.push("bound", cert.bound_claimed.map_or(Value::Null, Value::from));
        self.push("within_bound", cert.within_bound());
        self.push("verified", cert.verified)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Null => "none".to_string(),
                Value::Array(items) => items
                    .iter()
                    .map(|i| match i {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self.fields.iter().cloned().collect();
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("serialisable");
        out.push('\n');
        out
    }
}
