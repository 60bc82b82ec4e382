use std::fmt;

use crate::linalg::{is_zero_vector, Rational};

/// A single failed identity: which one, at which basis tuple (0-based), and
/// the nonzero residual left over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub args: Vec<usize>,
    pub residual: Vec<Rational>,
}

/// Outcome of evaluating a family of identities on all basis tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records `residual` under `identity` unless it vanishes.
    pub fn record(&mut self, identity: &str, args: &[usize], residual: Vec<Rational>) {
        if !is_zero_vector(&residual) {
            self.violations.push(Violation {
                identity: identity.to_string(),
                args: args.to_vec(),
                residual,
            });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    /// First recorded violation of `identity`, if any.
    pub fn first(&self, identity: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.identity == identity)
    }

    pub fn fails(&self, identity: &str) -> bool {
        self.first(identity).is_some()
    }

    /// Distinct identity labels that failed, in first-seen order.
    pub fn failed_identities(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.identity.as_str()) {
                out.push(&v.identity);
            }
        }
        out
    }

    /// Keeps only the first witness per identity.
    pub fn first_per_identity(&self) -> AxiomReport {
        let mut out = AxiomReport::new();
        for label in self.failed_identities() {
            out.violations.push(self.first(label).unwrap().clone());
        }
        out
    }

    pub(crate) fn into_result<E>(self, wrap: impl FnOnce(Box<AxiomReport>) -> E) -> Result<(), E> {
        if self.valid() {
            Ok(())
        } else {
            Err(wrap(Box::new(self)))
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid() {
            return write!(f, "valid");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let args: Vec<String> = v.args.iter().map(|a| (a + 1).to_string()).collect();
            let res: Vec<String> = v.residual.iter().map(|r| r.to_string()).collect();
            writeln!(f, "  {} at ({}): residual [{}]", v.identity, args.join(","), res.join(", "))?;
        }
        Ok(())
    }
}
