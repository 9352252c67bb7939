//! Witness-producing axiom check reports.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::tables::{Carrier, El};

/// How many violations a checker collects before truncating. Checks keep
/// scanning the whole quantifier space regardless, so the verdict is exact.
pub const DEFAULT_VIOLATION_CAP: usize = 100;

/// One broken law: which axiom, which elements, and why.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
    pub reason: String,
}

/// Outcome of an axiom check. The verdict is pass exactly when no
/// violation was found.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
    /// True when more violations existed than the collection cap allowed.
    pub truncated: bool,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// First violation of the named axiom, if any.
    pub fn first(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub fn has(&self, axiom: &str) -> bool {
        self.first(axiom).is_some()
    }
}

/// Accumulates violations against a carrier, rendering element labels as it
/// goes. Witnesses come out in scan order, which every checker keeps
/// lexicographic by element index.
pub struct Reporter<'a> {
    carrier: &'a Carrier,
    cap: usize,
    overflowed: bool,
    report: CheckReport,
}

impl<'a> Reporter<'a> {
    pub fn new(carrier: &'a Carrier) -> Self {
        Self::with_cap(carrier, DEFAULT_VIOLATION_CAP)
    }

    pub fn with_cap(carrier: &'a Carrier, cap: usize) -> Self {
        Reporter {
            carrier,
            cap: cap.max(1),
            overflowed: false,
            report: CheckReport::default(),
        }
    }

    pub fn violation(&mut self, axiom: &str, witness: &[El], reason: impl Into<String>) {
        if self.report.violations.len() >= self.cap {
            self.overflowed = true;
            return;
        }
        self.report.violations.push(Violation {
            axiom: axiom.to_string(),
            witness: witness.iter().map(|&x| self.carrier.label(x).to_string()).collect(),
            reason: reason.into(),
        });
    }

    /// Folds a sub-check's findings in, prefixing nothing; used by composite
    /// checkers that layer axioms.
    pub fn absorb(&mut self, sub: CheckReport) {
        for v in sub.violations {
            if self.report.violations.len() >= self.cap {
                self.overflowed = true;
                return;
            }
            self.report.violations.push(v);
        }
        self.overflowed |= sub.truncated;
    }

    pub fn failed(&self) -> bool {
        !self.report.violations.is_empty()
    }

    pub fn finish(mut self) -> CheckReport {
        self.report.truncated = self.overflowed;
        self.report
    }
}
