use std::fmt;

use serde::{Deserialize, Serialize};

use crate::genus::{CaseResidue, VanishingAssumption};
use crate::rational::Rational;

use super::table::BranchLabel;

/// Which established fact a trace step relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Anchor {
    /// Genus defect cap from Jacobi's formula and `μ ≤ μ_cap`.
    JacobiDeltaCap,
    /// `c ≤ d + e(1 - s) + s² - 4s`.
    SpecialityCCap,
    /// Linkage bound `c ≤ k + 3` in the `e = k - 3` branch.
    LiaisonCCap,
    /// `h²(I_S(t)) ≤ [(c - t)(g(χ(C)) - g(C) - credit)]_+`.
    RestrictionUpperBound,
    /// Riemann-Roch lower bounds ρ, λ, φ.
    RiemannRochLowerBound,
    /// The lower bound families increase in `k`.
    Monotonicity,
    /// Degree caps for arithmetically Cohen-Macaulay surfaces.
    AcmDegreeCap,
    CurveTable,
    CaseConclusion,
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Comparison {
    pub fn holds(self, left: Rational, right: Rational) -> bool {
        match self {
            Comparison::Lt => left < right,
            Comparison::Le => left <= right,
            Comparison::Eq => left == right,
            Comparison::Ge => left >= right,
            Comparison::Gt => left > right,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Lt => "<",
            Comparison::Le => "<=",
            Comparison::Eq => "=",
            Comparison::Ge => ">=",
            Comparison::Gt => ">",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub claim: String,
    pub anchor: Anchor,
    pub left: Rational,
    pub comparison: Comparison,
    pub right: Rational,
    pub verdict: bool,
}

impl TraceStep {
    pub fn new(
        claim: impl Into<String>,
        anchor: Anchor,
        left: Rational,
        comparison: Comparison,
        right: Rational,
    ) -> Self {
        TraceStep {
            claim: claim.into(),
            anchor,
            left,
            comparison,
            right,
            verdict: comparison.holds(left, right),
        }
    }

    pub fn replays(&self) -> bool {
        self.comparison.holds(self.left, self.right) == self.verdict
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {}",
            if self.verdict { "ok" } else { "FAIL" },
            self.claim,
            self.left,
            self.comparison.symbol(),
            self.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseBound {
    pub residue: CaseResidue,
    /// `(branch, first contradictory k)`.
    pub thresholds: Vec<(BranchLabel, i64)>,
    pub k_max: i64,
    pub degree_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub k_max: i64,
    pub degree_bound: i64,
    pub cases: Vec<CaseBound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationTrace {
    pub title: String,
    pub assumption: VanishingAssumption,
    pub mu_cap: i64,
    pub steps: Vec<TraceStep>,
    pub notes: Vec<String>,
    /// Present only when every step holds.
    pub outcome: Option<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub steps: usize,
    /// Indices of steps whose recorded verdict disagrees with recomputation.
    pub mismatched: Vec<usize>,
    /// An outcome is present although some step failed, or vice versa.
    pub outcome_inconsistent: bool,
}

impl ReplayReport {
    pub fn is_clean(&self) -> bool {
        self.mismatched.is_empty() && !self.outcome_inconsistent
    }
}

impl DerivationTrace {
    pub(crate) fn new(
        title: impl Into<String>,
        assumption: VanishingAssumption,
        mu_cap: i64,
    ) -> Self {
        DerivationTrace {
            title: title.into(),
            assumption,
            mu_cap,
            steps: Vec::new(),
            notes: Vec::new(),
            outcome: None,
        }
    }

    pub(crate) fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn all_hold(&self) -> bool {
        self.steps.iter().all(|s| s.verdict)
    }

    /// Attaches the outcome unless some step failed.
    pub(crate) fn conclude(&mut self, outcome: Outcome) {
        self.outcome = self.all_hold().then_some(outcome);
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &TraceStep> {
        self.steps.iter().filter(|s| !s.verdict)
    }

    pub fn degree_bound(&self) -> Option<i64> {
        self.outcome.as_ref().map(|o| o.degree_bound)
    }

    /// Recomputes every comparison from its recorded operands.
    pub fn replay(&self) -> ReplayReport {
        let mismatched = self
            .steps
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.replays())
            .map(|(i, _)| i)
            .collect();
        let all_hold = self
            .steps
            .iter()
            .all(|s| s.comparison.holds(s.left, s.right));
        ReplayReport {
            steps: self.steps.len(),
            mismatched,
            outcome_inconsistent: self.outcome.is_some() != all_hold,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(left: i64, cmp: Comparison, right: i64) -> TraceStep {
        TraceStep::new("x", Anchor::Theorem, left.into(), cmp, right.into())
    }

    #[test]
    fn comparisons() {
        assert!(step(54, Comparison::Lt, 62).verdict);
        assert!(!step(62, Comparison::Le, 54).verdict);
        assert!(step(3, Comparison::Eq, 3).verdict);
        assert!(step(3, Comparison::Ge, 3).verdict);
        assert!(!step(3, Comparison::Gt, 3).verdict);
    }

    #[test]
    fn failed_step_withholds_outcome() {
        let mut t = DerivationTrace::new("t", VanishingAssumption::GeometricGenusZero, 81);
        t.push(step(1, Comparison::Lt, 2));
        t.push(step(5, Comparison::Lt, 2));
        t.conclude(Outcome {
            k_max: 5,
            degree_bound: 20,
            cases: vec![],
        });
        assert!(t.outcome.is_none());
        assert_eq!(t.failed_steps().count(), 1);
        assert!(t.replay().is_clean());
    }

    #[test]
    fn tampering_is_detected() {
        let mut t = DerivationTrace::new("t", VanishingAssumption::GeometricGenusZero, 81);
        t.push(step(1, Comparison::Lt, 2));
        t.conclude(Outcome {
            k_max: 5,
            degree_bound: 20,
            cases: vec![],
        });
        assert!(t.replay().is_clean());
        t.steps[0].left = Rational::integer(3);
        let report = t.replay();
        assert_eq!(report.mismatched, vec![0]);
        assert!(report.outcome_inconsistent);
    }
}
