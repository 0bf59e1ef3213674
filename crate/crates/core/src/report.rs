//! Structured verification outcomes, serialized as JSON by the CLI.
//!
//! Reports are plain data. Determinism matters: verifiers fill them from
//! seeded runs only, so identical inputs and seeds reproduce identical
//! reports byte for byte.

use serde::Serialize;

/// One measured quantity checked against its own tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Measurement {
    pub label: String,
    pub value: f64,
    pub tolerance: f64,
}

/// Outcome of a geometric verification: named distances, each required to
/// stay at or below its tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub inputs: String,
    pub measured: Vec<Measurement>,
    /// Headline geometric tolerance of the run (individual measurements may
    /// carry stricter or looser ones).
    pub tolerance: f64,
    pub pass: bool,
    pub seed: u64,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, inputs: impl Into<String>, tolerance: f64, seed: u64) -> Self {
        Self {
            name: name.into(),
            inputs: inputs.into(),
            measured: Vec::new(),
            tolerance,
            pass: false,
            seed,
        }
    }

    pub fn measure(&mut self, label: impl Into<String>, value: f64, tolerance: f64) {
        self.measured.push(Measurement {
            label: label.into(),
            value,
            tolerance,
        });
    }

    /// Sets `pass` from the measurements: every value within its tolerance.
    pub fn finalize(mut self) -> Self {
        self.pass = self.measured.iter().all(|m| m.value <= m.tolerance);
        self
    }
}

/// Outcome of a sampled equivalence check over random trials.
#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub name: String,
    pub trials: u64,
    pub mismatches: u64,
    /// Smallest decision margin seen among counted trials: how close the
    /// counted samples came to the excluded boundary band.
    pub worst_margin: f64,
    pub seed: u64,
    pub pass: bool,
}
