use std::fmt::Write;

use super::{Payload, ReportDocument};

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Plain-text rendering of a report for terminals.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match &doc.payload {
        Payload::Characters {
            degree,
            length,
            entries,
            tied,
            note,
        } => {
            let _ = writeln!(out, "connected characters, d = {degree}, sigma = {length}");
            for e in entries {
                let mark = if e.maximal { " *" } else { "" };
                let _ = writeln!(
                    out,
                    "  {:<28} genus {:>6}{mark}",
                    e.character.to_string(),
                    e.genus
                );
            }
            if *tied {
                out.push_str("  (maximal genus attained more than once)\n");
            }
            if let Some(n) = note {
                let _ = writeln!(out, "  {n}");
            }
        }
        Payload::GenusTable { rows } => {
            let _ = writeln!(
                out,
                "{:>5} {:>3} {:>8} {:>8} {:>8} {:>8}  maximal character",
                "d", "r", "G(d,s)", "quartic", "by k,r", "char"
            );
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:>5} {:>3} {:>8} {:>8} {:>8} {:>8}  {}",
                    row.budget.degree,
                    row.budget.notation_residue,
                    opt(row.general),
                    opt(row.quartic),
                    opt(row.by_remainder),
                    opt(row.character_genus),
                    row.maximal_character
                        .as_ref()
                        .map_or_else(|| "-".to_string(), ToString::to_string),
                );
            }
        }
        Payload::Polynomial {
            polynomial: p,
            k,
            delta,
            geometric_genus,
            value,
        } => {
            let _ = writeln!(
                out,
                "{}_{{delta,{}}}: {}*k^3 + {}*k^2 + {}*k + {} + delta*({}*k + {}) + {}*pg",
                p.family, p.residue, p.k3, p.k2, p.k1, p.k0, p.delta_k, p.delta_0, p.pg
            );
            let _ = writeln!(
                out,
                "at k = {k}, delta = {delta}, pg = {geometric_genus}: {value}"
            );
        }
        Payload::Trace { trace } => {
            let _ = writeln!(out, "{} (mu <= {})", trace.title, trace.mu_cap);
            for step in &trace.steps {
                let _ = writeln!(out, "  {step}");
            }
            for note in &trace.notes {
                let _ = writeln!(out, "  note: {note}");
            }
            if let Some(o) = &trace.outcome {
                for case in &o.cases {
                    let th: Vec<String> = case
                        .thresholds
                        .iter()
                        .map(|(b, k)| format!("{b}: k >= {k}"))
                        .collect();
                    let _ = writeln!(
                        out,
                        "  r = {}: contradiction for {}; d <= {}",
                        case.residue,
                        th.join(", "),
                        case.degree_bound
                    );
                }
            }
        }
        Payload::Verification { rows } => {
            for row in rows {
                let _ = writeln!(
                    out,
                    "{} {:<22} expected {:<22} got {}",
                    if row.pass { "PASS" } else { "FAIL" },
                    row.id,
                    row.expected.to_string(),
                    row.computed
                );
            }
        }
        Payload::Error { message } => {
            let _ = writeln!(out, "error: {message}");
        }
    }
    let _ = writeln!(out, "{}", doc.verdict.summary);
    out
}
