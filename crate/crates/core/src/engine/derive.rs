use serde::{Deserialize, Serialize};

use crate::cohomology::{check_monotone_on, BoundPolynomial, Monotonicity};
use crate::error::{Error, Result};
use crate::genus::{acm_degree_cap, CaseResidue, VanishingAssumption};
use crate::rational::Rational;

use super::table::{case_table_with_mu, CaseBranch, RouteSource, SurfaceCase};
use super::trace::{Anchor, CaseBound, Comparison, DerivationTrace, Outcome, TraceStep};
use super::{c_cap_from_speciality, CurveCohomologyProfile};

/// Largest `k` the threshold search will try.
pub const SEARCH_LIMIT: i64 = 60;

/// The curve is not on a cubic, so its postulation is 4.
const POSTULATION: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    /// First `k` at which every admissible `δ` is contradictory.
    pub k: i64,
    /// A `δ` with `lower ≤ upper` at `k - 1`, when `k` is above the floor.
    pub witness_below: Option<i64>,
}

/// Upper bound for `h²(I_S(k))` in this branch: the largest of its routes.
fn branch_upper(branch: &CaseBranch, residue: CaseResidue, k: i64, delta: i64) -> i64 {
    let degree = 4 * k + residue.as_i64();
    let speciality = k + branch.min_e_offset();
    branch
        .routes
        .iter()
        .map(|route| {
            route_upper(
                branch,
                route.c_cap_offset,
                route.prefix_credit,
                degree,
                speciality,
                k,
                delta,
            )
        })
        .max()
        .expect("branch has at least one route")
}

fn route_upper(
    branch: &CaseBranch,
    offset: i64,
    credit: i64,
    degree: i64,
    speciality: i64,
    k: i64,
    delta: i64,
) -> i64 {
    let profile = CurveCohomologyProfile::new(
        degree,
        speciality,
        k + offset,
        POSTULATION,
        branch.linearly_normal,
        credit,
    )
    .expect("table profiles are well formed");
    profile
        .h2_upper_at(k, branch.genus_gap(delta))
        .expect("every table branch has c > e - 1")
}

fn contradicts_all(
    poly: &BoundPolynomial,
    branch: &CaseBranch,
    residue: CaseResidue,
    k: i64,
) -> bool {
    branch.delta_interval.iter().all(|delta| {
        poly.eval(k, delta) > Rational::integer(branch_upper(branch, residue, k, delta))
    })
}

/// Smallest `k ≥ validity_floor` at which the lower bound exceeds the upper
/// bound for every `δ` in the branch. The lower family must increase in `k`
/// on `[validity_floor, SEARCH_LIMIT]` for this to be meaningful.
pub fn branch_threshold(
    branch: &CaseBranch,
    residue: CaseResidue,
    validity_floor: i64,
) -> Result<Threshold> {
    if let Monotonicity::Violation { k, delta } = check_monotone_on(
        branch.lower_family,
        residue,
        branch.delta_interval.iter(),
        validity_floor,
        SEARCH_LIMIT,
    ) {
        return Err(Error::NotMonotone {
            branch: branch.label,
            k,
            delta,
        });
    }
    let poly = BoundPolynomial::new(branch.lower_family, residue);
    let k = (validity_floor..=SEARCH_LIMIT)
        .find(|&k| contradicts_all(&poly, branch, residue, k))
        .ok_or(Error::NoContradiction {
            branch: branch.label,
            residue: residue.get(),
            limit: SEARCH_LIMIT,
        })?;
    let witness_below = (k > validity_floor)
        .then(|| {
            branch.delta_interval.iter().find(|&delta| {
                poly.eval(k - 1, delta)
                    <= Rational::integer(branch_upper(branch, residue, k - 1, delta))
            })
        })
        .flatten();
    Ok(Threshold { k, witness_below })
}

fn r_of(x: i64) -> Rational {
    Rational::integer(x)
}

fn record_delta_cap(trace: &mut DerivationTrace, case: &SurfaceCase) {
    let r = case.residue.as_i64();
    let offset = 3 * r * (4 - r);
    trace.push(TraceStep::new(
        format!(
            "delta = {} admissible: 8*delta + 3r(4-r) <= mu cap",
            case.delta_cap
        ),
        Anchor::JacobiDeltaCap,
        r_of(8 * case.delta_cap + offset),
        Comparison::Le,
        r_of(case.mu_cap),
    ));
    trace.push(TraceStep::new(
        format!(
            "delta = {} excluded: 8*delta + 3r(4-r) > mu cap",
            case.delta_cap + 1
        ),
        Anchor::JacobiDeltaCap,
        r_of(8 * (case.delta_cap + 1) + offset),
        Comparison::Gt,
        r_of(case.mu_cap),
    ));
}

fn record_curve_facts(trace: &mut DerivationTrace, case: &SurfaceCase) {
    let r = case.residue;
    trace.note(format!(
        "curve table (r = {r}): valid for k >= {}, delta >= {} for a non projectively normal section, facts stated for delta <= {}",
        case.validity_floor, case.delta_floor, case.table_delta_max
    ));
    for b in &case.branches {
        let routes: Vec<String> = b
            .routes
            .iter()
            .map(|u| {
                format!(
                    "c <= k+{} with credit {} ({:?})",
                    u.c_cap_offset, u.prefix_credit, u.source
                )
            })
            .collect();
        trace.note(format!(
            "branch {}: delta in {}, e - k in {:?}, g(chi(C)) - G(d,4) = {}{}, {}; lower family {}{}",
            b.label,
            b.delta_interval,
            b.e_offsets,
            if r.get() == 2 { "at most " } else { "" },
            b.char_gap,
            routes.join(" or "),
            b.lower_family,
            if b.linearly_normal { ", C linearly normal" } else { "" },
        ));
    }
}

fn record_c_caps(trace: &mut DerivationTrace, case: &SurfaceCase, branch: &CaseBranch) {
    let r = case.residue.as_i64();
    for route in &branch.routes {
        let ks = match route.source {
            RouteSource::SpecialityCap => vec![case.validity_floor, case.validity_floor + 1],
            RouteSource::Liaison => vec![case.validity_floor],
        };
        for k in ks {
            let formula = c_cap_from_speciality(4 * k + r, k + branch.min_e_offset(), 4) - k;
            let (claim, anchor, cmp) = match route.source {
                RouteSource::SpecialityCap => (
                    format!(
                        "{}: c - k cap from e = k{:+} at k = {k} equals table offset",
                        branch.label,
                        branch.min_e_offset()
                    ),
                    Anchor::SpecialityCCap,
                    Comparison::Eq,
                ),
                RouteSource::Liaison => (
                    format!(
                        "{}: liaison offset within the speciality cap at k = {k}",
                        branch.label
                    ),
                    Anchor::LiaisonCCap,
                    Comparison::Le,
                ),
            };
            trace.push(TraceStep::new(
                claim,
                anchor,
                r_of(route.c_cap_offset),
                cmp,
                r_of(formula),
            ));
        }
    }
}

fn record_monotonicity(trace: &mut DerivationTrace, case: &SurfaceCase, branch: &CaseBranch) {
    let poly = BoundPolynomial::new(branch.lower_family, case.residue);
    let min_increment = branch
        .delta_interval
        .iter()
        .flat_map(|delta| (case.validity_floor..SEARCH_LIMIT).map(move |k| (k, delta)))
        .map(|(k, delta)| poly.eval(k + 1, delta) - poly.eval(k, delta))
        .min();
    if let Some(inc) = min_increment {
        trace.push(TraceStep::new(
            format!(
                "{}: {} increases in k on [{}, {}] (smallest step)",
                branch.label, branch.lower_family, case.validity_floor, SEARCH_LIMIT
            ),
            Anchor::Monotonicity,
            inc,
            Comparison::Gt,
            Rational::ZERO,
        ));
    }
}

fn record_threshold(
    trace: &mut DerivationTrace,
    case: &SurfaceCase,
    branch: &CaseBranch,
    threshold: Threshold,
) {
    let residue = case.residue;
    let poly = BoundPolynomial::new(branch.lower_family, residue);
    let k = threshold.k;
    let degree = 4 * k + residue.as_i64();
    let speciality = k + branch.min_e_offset();
    for delta in branch.delta_interval.iter() {
        let upper = branch_upper(branch, residue, k, delta);
        if branch.routes.len() > 1 {
            for route in &branch.routes {
                let value = route_upper(
                    branch,
                    route.c_cap_offset,
                    route.prefix_credit,
                    degree,
                    speciality,
                    k,
                    delta,
                );
                trace.push(TraceStep::new(
                    format!(
                        "{}: delta = {delta}, upper bound covers route c <= k+{} credit {}",
                        branch.label, route.c_cap_offset, route.prefix_credit
                    ),
                    Anchor::RestrictionUpperBound,
                    r_of(upper),
                    Comparison::Ge,
                    r_of(value),
                ));
            }
        }
        trace.push(TraceStep::new(
            format!(
                "{}: k = {k}, delta = {delta}: {}(k, delta) > h2 upper bound",
                branch.label, branch.lower_family
            ),
            Anchor::RiemannRochLowerBound,
            poly.eval(k, delta),
            Comparison::Gt,
            r_of(upper),
        ));
    }
    match threshold.witness_below {
        Some(delta) => trace.push(TraceStep::new(
            format!(
                "{}: k = {}, delta = {delta} is not contradictory, so k = {k} is the first",
                branch.label,
                k - 1
            ),
            Anchor::RiemannRochLowerBound,
            poly.eval(k - 1, delta),
            Comparison::Le,
            r_of(branch_upper(branch, residue, k - 1, delta)),
        )),
        None if branch.delta_interval.is_empty() => trace.note(format!(
            "branch {}: empty delta interval, nothing to exclude",
            branch.label
        )),
        None => trace.note(format!(
            "branch {}: contradiction already at the validity floor k = {k}",
            branch.label
        )),
    }
}

fn derive_case_parts(
    residue: CaseResidue,
    assumption: VanishingAssumption,
    mu_cap: i64,
) -> Result<(DerivationTrace, CaseBound)> {
    let case = case_table_with_mu(residue, assumption, mu_cap)?;
    let r = residue.as_i64();
    let mut trace = DerivationTrace::new(
        format!("d = 4k + {r} under {}", assumption.describe()),
        assumption,
        mu_cap,
    );
    trace.note("S is assumed not arithmetically Cohen-Macaulay, i.e. C is not projectively normal; the aCM case is capped separately");
    record_delta_cap(&mut trace, &case);
    record_curve_facts(&mut trace, &case);

    let mut thresholds = Vec::with_capacity(case.branches.len());
    for branch in &case.branches {
        record_c_caps(&mut trace, &case, branch);
        record_monotonicity(&mut trace, &case, branch);
        let threshold = branch_threshold(branch, residue, case.validity_floor)?;
        record_threshold(&mut trace, &case, branch, threshold);
        thresholds.push((branch.label, threshold.k));
    }

    let k_max = thresholds
        .iter()
        .map(|(_, k)| k - 1)
        .max()
        .expect("at least one branch");
    let derived = 4 * k_max + r;
    let acm = acm_degree_cap(assumption);
    if acm <= derived {
        trace.push(TraceStep::new(
            format!("aCM surfaces have d <= {acm}, below the derived bound"),
            Anchor::AcmDegreeCap,
            r_of(acm),
            Comparison::Le,
            r_of(derived),
        ));
    } else {
        trace.push(TraceStep::new(
            format!("aCM surfaces have d <= {acm}, above the derived bound, which it replaces"),
            Anchor::AcmDegreeCap,
            r_of(acm),
            Comparison::Gt,
            r_of(derived),
        ));
    }
    let degree_bound = derived.max(acm);
    trace.note(format!(
        "conclusion: k <= {k_max}, hence d <= {degree_bound}"
    ));
    let bound = CaseBound {
        residue,
        thresholds,
        k_max,
        degree_bound,
    };
    trace.conclude(Outcome {
        k_max,
        degree_bound,
        cases: vec![bound.clone()],
    });
    Ok((trace, bound))
}

/// Derivation for one residue class `d ≡ r (mod 4)`.
pub fn derive_case(
    residue: CaseResidue,
    assumption: VanishingAssumption,
    mu_cap: i64,
) -> Result<DerivationTrace> {
    derive_case_parts(residue, assumption, mu_cap).map(|(trace, _)| trace)
}

pub fn derive_theorem(assumption: VanishingAssumption, mu_cap: i64) -> Result<DerivationTrace> {
    derive_theorem_jobs(assumption, mu_cap, 1)
}

/// As [`derive_theorem`], running the four residue classes on up to `jobs`
/// threads. The result does not depend on `jobs`.
pub fn derive_theorem_jobs(
    assumption: VanishingAssumption,
    mu_cap: i64,
    jobs: usize,
) -> Result<DerivationTrace> {
    let jobs = jobs.clamp(1, CaseResidue::ALL.len());
    let parts: Vec<Result<(DerivationTrace, CaseBound)>> = if jobs == 1 {
        CaseResidue::ALL
            .iter()
            .map(|&r| derive_case_parts(r, assumption, mu_cap))
            .collect()
    } else {
        let chunk = CaseResidue::ALL.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = CaseResidue::ALL
                .chunks(chunk)
                .map(|rs| {
                    scope.spawn(move || {
                        rs.iter()
                            .map(|&r| derive_case_parts(r, assumption, mu_cap))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("derivation thread panicked"))
                .collect()
        })
    };

    let mut trace = DerivationTrace::new(
        format!("all residues under {}", assumption.describe()),
        assumption,
        mu_cap,
    );
    let mut cases = Vec::with_capacity(4);
    for part in parts {
        let (case_trace, bound) = part?;
        let r = bound.residue;
        for mut step in case_trace.steps {
            step.claim = format!("r = {r}: {}", step.claim);
            trace.push(step);
        }
        for note in case_trace.notes {
            trace.note(format!("r = {r}: {note}"));
        }
        cases.push(bound);
    }

    let k_lo = cases.iter().map(|c| c.k_max).min().expect("four cases");
    let k_hi = cases.iter().map(|c| c.k_max).max().expect("four cases");
    let degree_bound = cases
        .iter()
        .map(|c| c.degree_bound)
        .max()
        .expect("four cases");
    if k_lo == k_hi {
        trace.push(TraceStep::new(
            "k_max is the same for every residue",
            Anchor::Theorem,
            r_of(k_lo),
            Comparison::Eq,
            r_of(k_hi),
        ));
        trace.push(TraceStep::new(
            "largest case bound is max(4*k_max + 3, aCM cap)",
            Anchor::Theorem,
            r_of(degree_bound),
            Comparison::Eq,
            r_of((4 * k_hi + 3).max(acm_degree_cap(assumption))),
        ));
    } else {
        // Reduced mu caps can end the residues at different k.
        trace.note(format!(
            "k_max ranges over [{k_lo}, {k_hi}] across residues; the bound is the largest case bound"
        ));
        for case in &cases {
            trace.push(TraceStep::new(
                format!("r = {}: case bound within the overall bound", case.residue),
                Anchor::Theorem,
                r_of(case.degree_bound),
                Comparison::Le,
                r_of(degree_bound),
            ));
        }
    }
    match assumption {
        VanishingAssumption::OmegaTwistVanishes => trace.note(
            "a surface that is not of general type has h^0(omega_S(-1)) = 0, so the bound applies to it",
        ),
        VanishingAssumption::GeometricGenusZero => {
            trace.note("a rational surface has p_g = 0, so the bound applies to it")
        }
    }
    trace.conclude(Outcome {
        k_max: k_hi,
        degree_bound,
        cases,
    });
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::table::{case_table, BranchLabel};
    use crate::genus::DEFAULT_MU_CAP;

    const PG0: VanishingAssumption = VanishingAssumption::GeometricGenusZero;
    const OMEGA: VanishingAssumption = VanishingAssumption::OmegaTwistVanishes;

    fn r(x: u8) -> CaseResidue {
        CaseResidue::new(x).unwrap()
    }

    fn threshold_of(res: u8, a: VanishingAssumption, label: BranchLabel) -> i64 {
        let case = case_table(r(res), a);
        let b = case.branches.iter().find(|b| b.label == label).unwrap();
        branch_threshold(b, r(res), case.validity_floor).unwrap().k
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            threshold_of(0, PG0, BranchLabel::SpecialityAtLeastKMinus2),
            6
        );
        assert_eq!(
            threshold_of(0, OMEGA, BranchLabel::SpecialityAtLeastKMinus2),
            7
        );
        assert_eq!(
            threshold_of(3, PG0, BranchLabel::SpecialityAtLeastKMinus2),
            6
        );
        assert_eq!(threshold_of(0, PG0, BranchLabel::SpecialityKMinus3), 6);
        assert_eq!(threshold_of(0, OMEGA, BranchLabel::SpecialityKMinus3), 7);
    }

    #[test]
    fn branch_a_upper_bound_is_fifty_four() {
        let case = case_table(r(0), OMEGA);
        let a = &case.branches[0];
        for k in 5..12 {
            assert_eq!(branch_upper(a, r(0), k, 10), 54);
        }
        let b = &case.branches[1];
        assert_eq!(branch_upper(b, r(0), 7, 10), 48);
    }

    #[test]
    fn case_examples() {
        let t = derive_case(r(0), PG0, DEFAULT_MU_CAP).unwrap();
        assert_eq!(
            t.outcome.as_ref().map(|o| (o.k_max, o.degree_bound)),
            Some((5, 20))
        );
        let t = derive_case(r(1), OMEGA, DEFAULT_MU_CAP).unwrap();
        assert_eq!(t.degree_bound(), Some(25));
        let t = derive_case(r(2), OMEGA, DEFAULT_MU_CAP).unwrap();
        assert_eq!(t.degree_bound(), Some(26));
    }

    #[test]
    fn theorem_examples() {
        let t = derive_theorem(PG0, DEFAULT_MU_CAP).unwrap();
        let o = t.outcome.as_ref().unwrap();
        assert_eq!(o.degree_bound, 23);
        let per: Vec<i64> = o.cases.iter().map(|c| c.degree_bound).collect();
        assert_eq!(per, vec![20, 21, 22, 23]);
        let t = derive_theorem(OMEGA, DEFAULT_MU_CAP).unwrap();
        assert_eq!(t.degree_bound(), Some(27));
    }

    #[test]
    fn parallel_derivation_matches_serial() {
        for a in VanishingAssumption::ALL {
            let serial = derive_theorem(a, DEFAULT_MU_CAP).unwrap();
            for jobs in [2, 3, 4, 16] {
                assert_eq!(
                    derive_theorem_jobs(a, DEFAULT_MU_CAP, jobs).unwrap(),
                    serial
                );
            }
        }
    }

    #[test]
    fn smaller_mu_cap_can_only_lower_bounds() {
        for a in VanishingAssumption::ALL {
            for res in CaseResidue::ALL {
                let full = derive_case(res, a, DEFAULT_MU_CAP)
                    .unwrap()
                    .degree_bound()
                    .unwrap();
                for mu in [40, 60, 75] {
                    let reduced = derive_case(res, a, mu).unwrap().degree_bound().unwrap();
                    assert!(reduced <= full, "r = {res}, mu = {mu}");
                }
            }
        }
    }

    #[test]
    fn theorem_under_reduced_mu_caps() {
        for a in VanishingAssumption::ALL {
            for mu in [20, 40, 60, 75] {
                let t = derive_theorem(a, mu).unwrap();
                let o = t.outcome.as_ref().expect("every step holds");
                let max = o.cases.iter().map(|c| c.degree_bound).max().unwrap();
                assert_eq!(o.degree_bound, max);
                assert!(
                    o.degree_bound
                        <= derive_theorem(a, DEFAULT_MU_CAP)
                            .unwrap()
                            .degree_bound()
                            .unwrap()
                );
            }
        }
    }

    #[test]
    fn oversized_mu_cap_is_rejected() {
        assert!(matches!(
            derive_case(r(0), PG0, 200),
            Err(Error::TableRangeExceeded { .. })
        ));
    }
}
