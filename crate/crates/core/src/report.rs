//! Verification reports shared by every checker.

use std::fmt::Display;

use serde::Serialize;

use crate::principal_gl::{CycMat, MatrixDump};

/// Residual dumps kept per report; later failures carry only their index.
pub const MAX_DUMPS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// Every residual must vanish.
    Zero,
    /// Negative control: at least one residual must be nonzero.
    Nonzero,
    /// Recorded for evidence, never fails.
    Informational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: String,
    pub residual: Option<MatrixDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub depth: Option<usize>,
    pub variant: Option<String>,
    pub expectation: Expectation,
    pub indices_tested: usize,
    pub failures: Vec<Failure>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, n: usize) -> Self {
        Self {
            check: check.into(),
            n,
            depth: None,
            variant: None,
            expectation: Expectation::Zero,
            indices_tested: 0,
            failures: Vec::new(),
            passed: true,
            note: None,
        }
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.depth = Some(depth);
        self
    }

    pub fn with_variant(mut self, variant: impl Into<String>) -> Self {
        self.variant = Some(variant.into());
        self
    }

    pub fn expecting(mut self, expectation: Expectation) -> Self {
        self.expectation = expectation;
        self.update();
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records one tested index; a nonzero residual is a failure.
    pub fn record_residual(&mut self, index: impl Display, residual: &CycMat) {
        self.indices_tested += 1;
        if !residual.is_zero() {
            let dump = (self.failures.len() < MAX_DUMPS).then(|| residual.dump());
            self.failures.push(Failure {
                index: index.to_string(),
                residual: dump,
            });
        }
        self.update();
    }

    /// Records a scalar or structural check with no residual matrix.
    pub fn record(&mut self, index: impl Display, ok: bool) {
        self.indices_tested += 1;
        if !ok {
            self.failures.push(Failure {
                index: index.to_string(),
                residual: None,
            });
        }
        self.update();
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    fn update(&mut self) {
        self.passed = match self.expectation {
            Expectation::Zero => self.failures.is_empty(),
            Expectation::Nonzero => !self.failures.is_empty(),
            Expectation::Informational => true,
        };
    }
}
