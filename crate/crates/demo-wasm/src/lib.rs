//! Browser bindings. Every function returns a JSON string; the page in
//! `www/` parses it and draws.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use quartic_bounds::cohomology::BoundPolynomial;
use quartic_bounds::engine::{case_table_with_mu, h2_upper};
use quartic_bounds::genus::{CaseResidue, VanishingAssumption};
use quartic_bounds::reports::{cmd_bounds, cmd_chars, CaseSelection, ReportDocument};

fn usage(command: &str, params: Value, message: impl Into<String>) -> String {
    ReportDocument::usage_error(command, params, message).to_json()
}

/// Connected characters of degree `degree` and length `sigma`.
#[wasm_bindgen]
pub fn characters(degree: i32, sigma: i32) -> String {
    if !(1..=400).contains(&degree) || !(1..=12).contains(&sigma) {
        return usage(
            "chars",
            json!({ "degree": degree, "sigma": sigma }),
            "degree must be in 1..=400 and sigma in 1..=12",
        );
    }
    cmd_chars(degree.into(), sigma.into()).to_json()
}

/// Derivation trace for residue `r` (0..=3), or all residues when `r < 0`.
#[wasm_bindgen]
pub fn derive(r: i32, assumption: &str, mu_cap: i32) -> String {
    let params = json!({ "r": r, "assumption": assumption, "mu_cap": mu_cap });
    let assumption: VanishingAssumption = match assumption.parse() {
        Ok(a) => a,
        Err(e) => return ReportDocument::from_error("bounds", params, &e).to_json(),
    };
    let selection = if r < 0 {
        CaseSelection::All
    } else {
        match u8::try_from(r)
            .map_err(|_| ())
            .and_then(|r| CaseResidue::new(r).map_err(|_| ()))
        {
            Ok(r) => CaseSelection::One(r),
            Err(()) => return usage("bounds", params, "r must be 0..=3, or negative for all"),
        }
    };
    cmd_bounds(selection, assumption, mu_cap.into(), 1).to_json()
}

/// Lower bound against upper bound in `k` for one `δ`, per branch of the
/// case table. Values stay exact; the page divides for plotting.
#[wasm_bindgen]
pub fn curves(r: i32, assumption: &str, delta: i32, mu_cap: i32, k_to: i32) -> String {
    let params =
        json!({ "r": r, "assumption": assumption, "delta": delta, "mu_cap": mu_cap, "k_to": k_to });
    let assumption: VanishingAssumption = match assumption.parse() {
        Ok(a) => a,
        Err(e) => return ReportDocument::from_error("curves", params, &e).to_json(),
    };
    let Some(residue) = u8::try_from(r).ok().and_then(|r| CaseResidue::new(r).ok()) else {
        return usage("curves", params, "r must be 0..=3");
    };
    let case = match case_table_with_mu(residue, assumption, mu_cap.into()) {
        Ok(c) => c,
        Err(e) => return ReportDocument::from_error("curves", params, &e).to_json(),
    };
    let delta = i64::from(delta);
    let k_to = i64::from(k_to).clamp(case.validity_floor, 60);

    let branches: Vec<Value> = case
        .branches
        .iter()
        .filter(|b| b.delta_interval.contains(delta))
        .map(|b| {
            let poly = BoundPolynomial::new(b.lower_family, residue);
            let points: Vec<Value> = (case.validity_floor..=k_to)
                .map(|k| {
                    let upper = b
                        .routes
                        .iter()
                        .map(|route| {
                            h2_upper(
                                k + route.c_cap_offset,
                                k,
                                b.genus_gap(delta),
                                route.prefix_credit,
                            )
                        })
                        .max()
                        .unwrap_or(0);
                    json!({ "k": k, "lower": poly.eval(k, delta), "upper": upper })
                })
                .collect();
            json!({
                "branch": b.label.to_string(),
                "family": b.lower_family.name(),
                "points": points,
            })
        })
        .collect();

    json!({
        "command": "curves",
        "params": params,
        "delta_cap": case.delta_cap,
        "branches": branches,
    })
    .to_string()
}
