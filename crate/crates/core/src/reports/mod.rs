//! Report documents behind the command-line front end.
//!
//! Every command produces a [`ReportDocument`]; the CLI prints it either as
//! a plain-text table or as JSON matching `schema/report.schema.json`.
//! Numbers that may be fractional are always `{numerator, denominator}`
//! pairs.

mod golden;
mod text;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::characters::{enumerate_connected, max_connected_character, NumericalCharacter};
use crate::cohomology::{BoundFamily, BoundPolynomial};
use crate::engine::{derive_case, derive_theorem_jobs, DerivationTrace};
use crate::error::{Error, Result};
use crate::genus::{
    genus_by_remainder, max_genus, max_genus_quartic, CaseResidue, GenusBudget, VanishingAssumption,
};
use crate::rational::Rational;

pub use golden::{golden_checks, run_golden_suite, CheckRow, GoldenValue, Tamper};
pub use text::render_text;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON schema for [`ReportDocument`].
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

/// Process exit status. Stable across releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitStatus {
    Success,
    CheckFailed,
    UsageError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::CheckFailed => 1,
            ExitStatus::UsageError => 2,
        }
    }

    /// Exit status for a library error: failures of the mathematics versus
    /// inputs the tool does not accept.
    pub fn for_error(err: &Error) -> Self {
        match err {
            Error::NoContradiction { .. }
            | Error::NotMonotone { .. }
            | Error::NonIntegral { .. } => ExitStatus::CheckFailed,
            _ => ExitStatus::UsageError,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: ExitStatus,
    pub exit_code: i32,
    pub summary: String,
}

impl Verdict {
    pub fn new(status: ExitStatus, summary: impl Into<String>) -> Self {
        Verdict {
            status,
            exit_code: status.code(),
            summary: summary.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub character: NumericalCharacter,
    pub degree: i64,
    pub genus: i64,
    pub maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusRow {
    pub budget: GenusBudget,
    /// `G(d, s)` from the general formula.
    pub general: Option<i64>,
    /// Quartic-specific formula, `s = 4` only.
    pub quartic: Option<i64>,
    /// Expansion in `k` for `d = 4k + r`, `s = 4` only.
    pub by_remainder: Option<i64>,
    /// Genus of the maximal connected character of length `s`.
    pub character_genus: Option<i64>,
    pub maximal_character: Option<NumericalCharacter>,
}

impl GenusRow {
    pub fn consistent(&self) -> bool {
        let values = [
            self.general,
            self.quartic,
            self.by_remainder,
            self.character_genus,
        ];
        let mut present = values.iter().flatten();
        match present.next() {
            Some(first) => present.all(|v| v == first),
            None => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Characters {
        degree: i64,
        length: i64,
        entries: Vec<CharacterEntry>,
        tied: bool,
        note: Option<String>,
    },
    GenusTable {
        rows: Vec<GenusRow>,
    },
    Polynomial {
        polynomial: BoundPolynomial,
        k: i64,
        delta: i64,
        geometric_genus: Rational,
        value: Rational,
    },
    Trace {
        trace: DerivationTrace,
    },
    Verification {
        rows: Vec<CheckRow>,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub params: Value,
    pub payload: Payload,
    pub verdict: Verdict,
}

impl ReportDocument {
    fn new(command: &str, params: Value, payload: Payload, verdict: Verdict) -> Self {
        ReportDocument {
            version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            params,
            payload,
            verdict,
        }
    }

    /// A document describing a failed command.
    pub fn from_error(command: &str, params: Value, err: &Error) -> Self {
        let status = ExitStatus::for_error(err);
        ReportDocument::new(
            command,
            params,
            Payload::Error {
                message: err.to_string(),
            },
            Verdict::new(status, err.to_string()),
        )
    }

    /// A document for input the tool rejects before computing anything.
    pub fn usage_error(command: &str, params: Value, message: impl Into<String>) -> Self {
        let message = message.into();
        ReportDocument::new(
            command,
            params,
            Payload::Error {
                message: message.clone(),
            },
            Verdict::new(ExitStatus::UsageError, message),
        )
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents serialize")
    }
}

/// Lists the connected characters of the given degree and length.
pub fn cmd_chars(degree: i64, length: i64) -> ReportDocument {
    let params = json!({ "degree": degree, "sigma": length });
    let all = enumerate_connected(degree, length);
    let maximal = max_connected_character(degree, length).ok();
    let entries: Vec<CharacterEntry> = all
        .into_iter()
        .map(|c| CharacterEntry {
            degree: c.degree(),
            genus: c.genus(),
            maximal: maximal.as_ref().is_some_and(|m| m.character == c),
            character: c,
        })
        .collect();
    let note = entries
        .is_empty()
        .then(|| format!("no connected character of degree {degree} and length {length}"));
    let summary = match &maximal {
        Some(m) => format!(
            "{} connected character(s); maximal {} with genus {}",
            entries.len(),
            m.character,
            m.genus
        ),
        None => "no connected character".to_string(),
    };
    ReportDocument::new(
        "chars",
        params,
        Payload::Characters {
            degree,
            length,
            tied: maximal.as_ref().is_some_and(|m| m.tied),
            entries,
            note,
        },
        Verdict::new(ExitStatus::Success, summary),
    )
}

fn genus_row(degree: i64, surface_degree: i64) -> Result<GenusRow> {
    let budget = GenusBudget::new(degree, surface_degree)?;
    let quartic = surface_degree == 4;
    let maximal = max_connected_character(degree, surface_degree).ok();
    Ok(GenusRow {
        budget,
        general: max_genus(degree, surface_degree).ok(),
        quartic: if quartic {
            max_genus_quartic(degree).ok()
        } else {
            None
        },
        by_remainder: if quartic {
            genus_by_remainder(budget.quotient, budget.case_residue).ok()
        } else {
            None
        },
        character_genus: maximal.as_ref().map(|m| m.genus),
        maximal_character: maximal.map(|m| m.character),
    })
}

/// Maximal genus by every available route for `d` in `from..=to`.
pub fn cmd_genus(from: i64, to: i64, surface_degree: i64) -> ReportDocument {
    let params = json!({ "from": from, "to": to, "surface_degree": surface_degree });
    let rows: Result<Vec<GenusRow>> = (from..=to).map(|d| genus_row(d, surface_degree)).collect();
    match rows {
        Err(e) => ReportDocument::from_error("genus", params, &e),
        Ok(rows) => {
            // Below d > s(s-1) the formulas do not apply and only the
            // character route is reported; consistency is checked in range.
            let bad: Vec<i64> = rows
                .iter()
                .filter(|r| r.general.is_some() && !r.consistent())
                .map(|r| r.budget.degree)
                .collect();
            let verdict = if bad.is_empty() {
                Verdict::new(
                    ExitStatus::Success,
                    format!("{} row(s), all routes agree", rows.len()),
                )
            } else {
                Verdict::new(
                    ExitStatus::CheckFailed,
                    format!("routes disagree at d = {bad:?}"),
                )
            };
            ReportDocument::new("genus", params, Payload::GenusTable { rows }, verdict)
        }
    }
}

/// Evaluates a lower-bound family at `(k, δ)`.
pub fn cmd_poly(
    family: BoundFamily,
    k: i64,
    delta: i64,
    residue: CaseResidue,
    geometric_genus: Rational,
) -> ReportDocument {
    let params = json!({
        "family": family.name(),
        "k": k,
        "delta": delta,
        "r": residue.get(),
        "pg": geometric_genus,
    });
    if k < 1 || delta < 0 {
        let err = Error::OutOfDomain {
            what: if k < 1 { "k" } else { "delta" },
            value: if k < 1 { k } else { delta },
            expected: "k >= 1 and delta >= 0",
        };
        return ReportDocument::from_error("poly", params, &err);
    }
    let polynomial = BoundPolynomial::new(family, residue);
    let value = polynomial.eval_with_pg(k, delta, geometric_genus);
    ReportDocument::new(
        "poly",
        params,
        Payload::Polynomial {
            polynomial,
            k,
            delta,
            geometric_genus,
            value,
        },
        Verdict::new(
            ExitStatus::Success,
            format!("{family}_{{{delta},{residue}}}({k}) = {value}"),
        ),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseSelection {
    One(CaseResidue),
    All,
}

/// Runs the derivation for one residue class or for all of them.
pub fn cmd_bounds(
    selection: CaseSelection,
    assumption: VanishingAssumption,
    mu_cap: i64,
    jobs: usize,
) -> ReportDocument {
    let params = json!({
        "r": match selection { CaseSelection::One(r) => json!(r.get()), CaseSelection::All => json!("all") },
        "assumption": assumption.tag(),
        "mu_cap": mu_cap,
        "jobs": jobs,
    });
    let trace = match selection {
        CaseSelection::One(r) => derive_case(r, assumption, mu_cap),
        CaseSelection::All => derive_theorem_jobs(assumption, mu_cap, jobs),
    };
    match trace {
        Err(e) => ReportDocument::from_error("bounds", params, &e),
        Ok(trace) => {
            let verdict = match trace.degree_bound() {
                Some(d) => Verdict::new(
                    ExitStatus::Success,
                    format!("d <= {d} under {}", assumption.describe()),
                ),
                None => {
                    let failed: Vec<String> =
                        trace.failed_steps().map(|s| s.claim.clone()).collect();
                    Verdict::new(
                        ExitStatus::CheckFailed,
                        format!("failed steps: {}", failed.join("; ")),
                    )
                }
            };
            ReportDocument::new("bounds", params, Payload::Trace { trace }, verdict)
        }
    }
}

/// Runs the golden verification suite.
pub fn cmd_verify(tamper: Option<Tamper>) -> ReportDocument {
    let params = json!({ "tamper": tamper.map(|t| t.to_string()) });
    let rows = run_golden_suite(tamper);
    let failed = rows.iter().filter(|r| !r.pass).count();
    let verdict = if failed == 0 {
        Verdict::new(
            ExitStatus::Success,
            format!("{} checks, all pass", rows.len()),
        )
    } else {
        Verdict::new(
            ExitStatus::CheckFailed,
            format!("{failed} of {} checks failed", rows.len()),
        )
    };
    ReportDocument::new("verify", params, Payload::Verification { rows }, verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chars_document_flags_the_maximal_character() {
        let doc = cmd_chars(20, 4);
        let Payload::Characters { entries, .. } = &doc.payload else {
            panic!("wrong payload");
        };
        assert_eq!(entries.len(), 2);
        assert!(entries[0].maximal);
        assert_eq!(entries[0].genus, 51);
        assert_eq!(doc.exit_code(), 0);
    }

    #[test]
    fn infeasible_chars_is_not_an_error() {
        let doc = cmd_chars(5, 4);
        assert_eq!(doc.exit_code(), 0);
        let Payload::Characters { entries, note, .. } = &doc.payload else {
            panic!("wrong payload");
        };
        assert!(entries.is_empty());
        assert!(note.is_some());
    }

    #[test]
    fn genus_table_routes_agree() {
        let doc = cmd_genus(13, 60, 4);
        assert_eq!(doc.exit_code(), 0);
        let doc = cmd_genus(0, 3, 4);
        assert_eq!(doc.exit_code(), 2);
    }

    #[test]
    fn poly_document() {
        let r1 = CaseResidue::new(1).unwrap();
        let doc = cmd_poly(BoundFamily::Phi, 7, 0, r1, Rational::ZERO);
        let Payload::Polynomial { value, .. } = doc.payload else {
            panic!("wrong payload");
        };
        assert_eq!(value, Rational::new(239, 2));
        assert_eq!(
            cmd_poly(BoundFamily::Phi, 0, 0, r1, Rational::ZERO).exit_code(),
            2
        );
    }

    #[test]
    fn bounds_documents() {
        let omega = VanishingAssumption::OmegaTwistVanishes;
        let doc = cmd_bounds(
            CaseSelection::One(CaseResidue::new(0).unwrap()),
            omega,
            81,
            1,
        );
        assert_eq!(doc.exit_code(), 0);
        let Payload::Trace { trace } = &doc.payload else {
            panic!()
        };
        assert_eq!(trace.degree_bound(), Some(24));
        let doc = cmd_bounds(CaseSelection::All, omega, 200, 1);
        assert_eq!(doc.exit_code(), 2);
    }

    #[test]
    fn documents_round_trip() {
        let docs = [
            cmd_chars(23, 4),
            cmd_genus(20, 24, 4),
            cmd_poly(
                BoundFamily::Lambda,
                7,
                10,
                CaseResidue::new(0).unwrap(),
                Rational::ZERO,
            ),
            cmd_bounds(
                CaseSelection::All,
                VanishingAssumption::GeometricGenusZero,
                81,
                2,
            ),
            cmd_verify(None),
        ];
        for doc in docs {
            let back: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
        }
    }
}
