//! Verification reports.
//!
//! Every axiom checker returns a [`Report`]: a bounded list of located
//! violations plus per-identity counts and a set of named boolean facts.

use std::collections::BTreeMap;

use crate::linear::{is_zero_vec, Vector};

/// Number of violations retained verbatim.
pub const MAX_VIOLATIONS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub residual: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    violations: Vec<Violation>,
    total: usize,
    /// identity name -> number of failing instances (0 = checked and passed)
    counts: BTreeMap<String, usize>,
    facts: BTreeMap<String, bool>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    /// Records one instance of `identity`; fails when `residual` is nonzero.
    pub fn check(&mut self, identity: &str, indices: &[usize], residual: Vector) {
        let failed = !is_zero_vec(&residual);
        self.record(identity, indices, residual, failed);
    }

    /// Records a boolean requirement; an unmet requirement is a violation
    /// with empty residual.
    pub fn require(&mut self, identity: &str, ok: bool) {
        self.record(identity, &[], Vec::new(), !ok);
    }

    pub fn require_at(&mut self, identity: &str, indices: &[usize], ok: bool) {
        self.record(identity, indices, Vec::new(), !ok);
    }

    fn record(&mut self, identity: &str, indices: &[usize], residual: Vector, failed: bool) {
        let count = self.counts.entry(identity.to_string()).or_insert(0);
        if failed {
            *count += 1;
            self.total += 1;
            if self.violations.len() < MAX_VIOLATIONS {
                self.violations.push(Violation {
                    identity: identity.to_string(),
                    indices: indices.to_vec(),
                    residual,
                });
            }
        }
    }

    /// Informational fact; does not affect [`Report::passed`].
    pub fn fact(&mut self, name: &str, value: bool) {
        self.facts.insert(name.to_string(), value);
    }

    pub fn passed(&self) -> bool {
        self.total == 0
    }

    pub fn total_violations(&self) -> usize {
        self.total
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn counts(&self) -> &BTreeMap<String, usize> {
        &self.counts
    }

    pub fn facts(&self) -> &BTreeMap<String, bool> {
        &self.facts
    }

    pub fn get_fact(&self, name: &str) -> Option<bool> {
        self.facts.get(name).copied()
    }

    /// `true` when `identity` was evaluated and never failed.
    pub fn holds(&self, identity: &str) -> bool {
        self.counts.get(identity) == Some(&0)
    }

    pub fn failed(&self, identity: &str) -> bool {
        self.counts.get(identity).is_some_and(|&c| c > 0)
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Folds `other` into `self` with identity and fact names prefixed by
    /// `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let name = |s: &str| {
            if prefix.is_empty() {
                s.to_string()
            } else {
                format!("{prefix}/{s}")
            }
        };
        for (k, v) in other.counts {
            *self.counts.entry(name(&k)).or_insert(0) += v;
        }
        for (k, v) in other.facts {
            self.facts.insert(name(&k), v);
        }
        self.total += other.total;
        for mut v in other.violations {
            if self.violations.len() >= MAX_VIOLATIONS {
                break;
            }
            v.identity = name(&v.identity);
            self.violations.push(v);
        }
    }

    /// Names of identities with at least one failure.
    pub fn failing_identities(&self) -> Vec<&str> {
        self.counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{int, zero_vec};

    #[test]
    fn bounded_violations() {
        let mut r = Report::new("t");
        for i in 0..100 {
            r.check("x", &[i], vec![int(1)]);
        }
        r.check("y", &[0], zero_vec(1));
        assert_eq!(r.total_violations(), 100);
        assert_eq!(r.violations().len(), MAX_VIOLATIONS);
        assert!(r.failed("x"));
        assert!(r.holds("y"));
        assert!(!r.holds("z"));
    }

    #[test]
    fn absorb_prefixes() {
        let mut inner = Report::new("inner");
        inner.require("ok", false);
        inner.fact("f", true);
        let mut outer = Report::new("outer");
        outer.absorb("sub", inner);
        assert!(outer.failed("sub/ok"));
        assert_eq!(outer.get_fact("sub/f"), Some(true));
        assert_eq!(outer.first_violation().unwrap().identity, "sub/ok");
    }
}
