//! Runs every algebraic identity of the two-qubit Dirac representation as a
//! named numerical check and collects the results into a [`Report`].
//!
//! A check passes when its max error is at most `min(bound, tol)`, where
//! `bound` is the check's own accuracy target and `tol` the caller's
//! tolerance. Check names are stable identifiers.

mod checks;
mod printed;

use serde::Serialize;

use crate::dirac::{DiracBasis, DiracLabel};
use crate::linalg::{ComplexMatrix4, Tolerance, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub max_error: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

/// How [`corrupt_basis`] damages a basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    /// Adds 1/2 to the top-left entry.
    Perturb,
    /// Flips the overall sign.
    Negate,
    /// Replaces the element with a copy of another one.
    ReplaceWith(DiracLabel),
}

/// Standard basis with one element damaged, for exercising the suite.
pub fn corrupt_basis(label: DiracLabel, how: Corruption) -> DiracBasis {
    let basis = DiracBasis::standard();
    let m = *basis.matrix(label);
    let damaged = match how {
        Corruption::Perturb => {
            let mut d = m;
            d[(0, 0)] += C64::new(0.5, 0.0);
            d
        }
        Corruption::Negate => -m,
        Corruption::ReplaceWith(other) => *basis.matrix(other),
    };
    basis.with_matrix(label, damaged)
}

pub fn run_verification(tol: Tolerance) -> Report {
    run_verification_with(DiracBasis::standard(), tol)
}

pub fn run_verification_with(basis: &DiracBasis, tol: Tolerance) -> Report {
    let mut suite = Suite { basis, tol, checks: Vec::new() };
    checks::run_all(&mut suite);
    Report { checks: suite.checks }
}

struct Suite<'a> {
    basis: &'a DiracBasis,
    tol: Tolerance,
    checks: Vec<Check>,
}

impl Suite<'_> {
    fn threshold(&self, bound: f64) -> f64 {
        bound.min(self.tol.eps())
    }

    /// Passes iff `error ≤ min(bound, tol)`.
    fn numeric(&mut self, name: &str, bound: f64, error: f64, detail: impl Into<String>) {
        self.record(name, true, bound, error, detail.into());
    }

    /// Passes iff `ok` and `error ≤ min(bound, tol)`.
    fn combined(&mut self, name: &str, ok: bool, bound: f64, error: f64, detail: impl Into<String>) {
        self.record(name, ok, bound, error, detail.into());
    }

    /// A yes/no property; reported error is 0 on success and 1 on failure.
    fn structural(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        let err = if ok { 0.0 } else { 1.0 };
        self.record(name, ok, f64::INFINITY, err, detail.into());
    }

    fn record(&mut self, name: &str, ok: bool, bound: f64, error: f64, detail: String) {
        let pass = ok && error.is_finite() && error <= self.threshold(bound);
        // Unbounded errors are reported as 1 so the JSON stays numeric.
        let max_error = if error.is_finite() { error } else { 1.0 };
        self.checks.push(Check {
            name: name.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail,
            max_error,
        });
    }
}

fn max_diff(a: &ComplexMatrix4, b: &ComplexMatrix4) -> f64 {
    a.max_abs_diff(b)
}
