//! Machine-readable verification outcomes.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

/// Hypothesis flags as evaluated from the ring, never taken from input.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Hypotheses {
    pub f2_free: bool,
    pub theta: bool,
    /// True when the claim's side conditions fail but the check ran anyway;
    /// the verdict then records an observation, not an asserted statement.
    pub exploratory: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    /// Row-major matrix entries of the offending element.
    pub matrix: Vec<Vec<u32>>,
    /// Which inclusion or equality it violates.
    pub context: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictReport {
    pub claim: String,
    pub phi: String,
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_i: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_j: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub hypotheses: Hypotheses,
    /// Cardinalities of every subgroup the check enumerated, by label.
    pub sizes: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Free-form observations (indices, observed truth values in
    /// exploratory mode, structural shortcuts taken).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    pub millis: u64,
}

impl VerdictReport {
    pub fn new(claim: &str, phi: &str, ring: &str) -> VerdictReport {
        VerdictReport {
            claim: claim.into(),
            phi: phi.into(),
            ring: ring.into(),
            ideal_i: None,
            ideal_j: None,
            verdict: Verdict::Holds,
            skip_reason: None,
            hypotheses: Hypotheses::default(),
            sizes: BTreeMap::new(),
            witness: None,
            notes: Vec::new(),
            millis: 0,
        }
    }

    pub fn skip(mut self, reason: &str) -> VerdictReport {
        self.verdict = Verdict::Skipped;
        self.skip_reason = Some(reason.into());
        self
    }

    pub fn size(&self, label: &str) -> Option<usize> {
        self.sizes.get(label).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = VerdictReport::new("T1", "A2", "Z/8");
        r.ideal_i = Some("2".into());
        r.sizes.insert("E(Phi,R,I)".into(), 256);
        let s = serde_json::to_string(&r).unwrap();
        let back: VerdictReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.verdict, Verdict::Holds);
        assert_eq!(back.size("E(Phi,R,I)"), Some(256));
        assert!(s.contains("\"verdict\":\"holds\""));
    }

    #[test]
    fn optional_fields_are_omitted() {
        let r = VerdictReport::new("T1", "A2", "Z/8");
        let s = serde_json::to_string(&r).unwrap();
        assert!(!s.contains("witness"));
        assert!(!s.contains("skip_reason"));
        assert!(!s.contains("notes"));
    }
}
