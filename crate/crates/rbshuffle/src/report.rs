//! Machine-readable results of identity checks.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one algebraic identity over a sample set. A failing
/// report carries the first counterexample with both sides rendered; the two
/// sides of a recorded counterexample are genuinely unequal canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub operator: String,
    pub ambient: String,
    pub pass: bool,
    pub samples: u64,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(identity: &str, operator: &str, ambient: &str, samples: u64) -> Self {
        CheckReport {
            identity: identity.to_string(),
            operator: operator.to_string(),
            ambient: ambient.to_string(),
            pass: true,
            samples,
            counterexample: None,
        }
    }

    pub fn failed(
        identity: &str,
        operator: &str,
        ambient: &str,
        samples: u64,
        counterexample: Counterexample,
    ) -> Self {
        CheckReport {
            identity: identity.to_string(),
            operator: operator.to_string(),
            ambient: ambient.to_string(),
            pass: false,
            samples,
            counterexample: Some(counterexample),
        }
    }

    /// Flip the expectation: a negative control passes when the inner check
    /// fails and supplies its counterexample.
    pub fn expect_failure(self) -> Self {
        CheckReport {
            identity: format!("not({})", self.identity),
            pass: !self.pass,
            ..self
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
