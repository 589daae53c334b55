//! Per-residue constraint tables for curves `C ⊂ P³` of degree `d = 4k + r`
//! on an irreducible quartic surface with genus `G(d,4) - δ`, assuming `C`
//! is not projectively normal.
//!
//! These facts rest on geometric input (character classification, liaison,
//! Castelnuovo-Mumford regularity) and are stated here as data, not derived.
//!
//! | r | δ range | e - k       | g(χ(C)) - G | c - k      | credit |
//! |---|---------|-------------|-------------|------------|--------|
//! | 0 | 10      | -3          | -2          | ≤ 3 or ≤ 9 | 0 or 2 |
//! | 0 | 3..=10  | -2, -1      | -2          | ≤ 6        | 0      |
//! | 1 | 2..=9   | -2, -1, 0   | -1          | ≤ 7        | 0      |
//! | 2 | 0..=8   | -2, -1, 0   | ≤ 0         | ≤ 8        | 0      |
//! | 3 | 2..=9   | -2, -1, 0   | -1          | ≤ 9        | 0      |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology::BoundFamily;
use crate::error::{Error, Result};
use crate::genus::{delta_cap_with_mu, CaseResidue, VanishingAssumption, DEFAULT_MU_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchLabel {
    /// `e = k - 3`.
    SpecialityKMinus3,
    /// `e ≥ k - 2`.
    SpecialityAtLeastKMinus2,
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BranchLabel::SpecialityKMinus3 => "e = k-3",
            BranchLabel::SpecialityAtLeastKMinus2 => "e >= k-2",
        })
    }
}

/// Closed integer interval; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaInterval {
    pub lo: i64,
    pub hi: i64,
}

impl DeltaInterval {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn contains(&self, delta: i64) -> bool {
        (self.lo..=self.hi).contains(&delta)
    }
}

impl fmt::Display for DeltaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RouteSource {
    /// `c ≤ d + e(1 - s) + s² - 4s` at the smallest admissible `e`.
    SpecialityCap,
    /// Linkage by a complete intersection `(4, k + 1)`.
    Liaison,
}

/// One way of bounding `c`, possibly with a credit from the restriction
/// cokernels. A branch is bounded above by the largest of its routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperRoute {
    /// `u` in `c ≤ k + u`.
    pub c_cap_offset: i64,
    pub prefix_credit: i64,
    pub source: RouteSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseBranch {
    pub label: BranchLabel,
    pub delta_interval: DeltaInterval,
    /// Admissible `e - k`.
    pub e_offsets: Vec<i64>,
    /// `g(χ(C)) - G(d, 4)`; for `r = 2` only an upper bound.
    pub char_gap: i64,
    pub routes: Vec<UpperRoute>,
    pub lower_family: BoundFamily,
    pub linearly_normal: bool,
    pub requires_linear_normality: bool,
}

impl CaseBranch {
    pub fn min_e_offset(&self) -> i64 {
        *self
            .e_offsets
            .iter()
            .min()
            .expect("branch has at least one e value")
    }

    /// `g(χ(C)) - g(C) = δ + char_gap`.
    pub fn genus_gap(&self, delta: i64) -> i64 {
        delta + self.char_gap
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCase {
    pub residue: CaseResidue,
    pub assumption: VanishingAssumption,
    /// Smallest `k` the curve table is stated for.
    pub validity_floor: i64,
    pub mu_cap: i64,
    /// Largest `δ` allowed by `μ ≤ mu_cap`.
    pub delta_cap: i64,
    /// Smallest `δ` for a curve that is not projectively normal.
    pub delta_floor: i64,
    /// Largest `δ` the curve-level facts are stated for.
    pub table_delta_max: i64,
    pub branches: Vec<CaseBranch>,
}

pub fn case_table(residue: CaseResidue, assumption: VanishingAssumption) -> SurfaceCase {
    case_table_with_mu(residue, assumption, DEFAULT_MU_CAP)
        .expect("default mu cap is within table range")
}

pub fn case_table_with_mu(
    residue: CaseResidue,
    assumption: VanishingAssumption,
    mu_cap: i64,
) -> Result<SurfaceCase> {
    let cap = delta_cap_with_mu(residue, mu_cap)?;
    let (validity_floor, delta_floor, table_delta_max) = match residue.get() {
        0 => (5, 3, 10),
        1 => (4, 2, 9),
        2 => (4, 0, 8),
        _ => (4, 2, 9),
    };
    if cap > table_delta_max {
        return Err(Error::TableRangeExceeded {
            mu_cap,
            residue: residue.get(),
            requested: cap,
            supported: table_delta_max,
        });
    }

    let pg0 = assumption == VanishingAssumption::GeometricGenusZero;
    let general_family = if pg0 {
        BoundFamily::Rho
    } else {
        BoundFamily::Phi
    };
    let cap_route = |offset| UpperRoute {
        c_cap_offset: offset,
        prefix_credit: 0,
        source: RouteSource::SpecialityCap,
    };

    let branches = match residue.get() {
        0 => vec![
            // e < k-2 forces h¹(I_C(k-2)) = δ - 10 ≥ 0, so δ = 10 and C is
            // linearly normal; then either c ≤ k+3 or r_{k+1} = 2.
            CaseBranch {
                label: BranchLabel::SpecialityKMinus3,
                delta_interval: DeltaInterval { lo: 10, hi: cap },
                e_offsets: vec![-3],
                char_gap: -2,
                routes: vec![
                    UpperRoute {
                        c_cap_offset: 3,
                        prefix_credit: 0,
                        source: RouteSource::Liaison,
                    },
                    UpperRoute {
                        c_cap_offset: 9,
                        prefix_credit: 2,
                        source: RouteSource::SpecialityCap,
                    },
                ],
                lower_family: if pg0 {
                    BoundFamily::Rho
                } else {
                    BoundFamily::Lambda
                },
                linearly_normal: true,
                requires_linear_normality: !pg0,
            },
            CaseBranch {
                label: BranchLabel::SpecialityAtLeastKMinus2,
                delta_interval: DeltaInterval {
                    lo: delta_floor,
                    hi: cap,
                },
                e_offsets: vec![-2, -1],
                char_gap: -2,
                routes: vec![cap_route(6)],
                lower_family: general_family,
                linearly_normal: false,
                requires_linear_normality: false,
            },
        ],
        r => vec![CaseBranch {
            label: BranchLabel::SpecialityAtLeastKMinus2,
            delta_interval: DeltaInterval {
                lo: delta_floor,
                hi: cap,
            },
            e_offsets: vec![-2, -1, 0],
            char_gap: if r == 2 { 0 } else { -1 },
            routes: vec![cap_route(6 + r as i64)],
            lower_family: general_family,
            linearly_normal: false,
            requires_linear_normality: false,
        }],
    };

    Ok(SurfaceCase {
        residue,
        assumption,
        validity_floor,
        mu_cap,
        delta_cap: cap,
        delta_floor,
        table_delta_max,
        branches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::c_cap_from_speciality;
    use crate::genus::delta_cap;

    fn r(x: u8) -> CaseResidue {
        CaseResidue::new(x).unwrap()
    }

    #[test]
    fn residue_zero_under_omega_has_two_branches() {
        let case = case_table(r(0), VanishingAssumption::OmegaTwistVanishes);
        assert_eq!(case.branches.len(), 2);
        let a = &case.branches[0];
        assert_eq!(a.label, BranchLabel::SpecialityKMinus3);
        assert!(a.requires_linear_normality);
        assert_eq!(a.lower_family, BoundFamily::Lambda);
        assert_eq!(a.delta_interval, DeltaInterval { lo: 10, hi: 10 });
        assert_eq!(case.branches[1].lower_family, BoundFamily::Phi);
    }

    #[test]
    fn residue_two_single_branch() {
        let case = case_table(r(2), VanishingAssumption::GeometricGenusZero);
        assert_eq!(case.branches.len(), 1);
        assert_eq!(
            case.branches[0].delta_interval,
            DeltaInterval { lo: 0, hi: 8 }
        );
        assert_eq!(case.branches[0].lower_family, BoundFamily::Rho);
    }

    #[test]
    fn residue_three_c_cap() {
        let case = case_table(r(3), VanishingAssumption::GeometricGenusZero);
        assert_eq!(case.branches[0].routes[0].c_cap_offset, 9);
    }

    #[test]
    fn intervals_stay_below_delta_cap() {
        for res in CaseResidue::ALL {
            for a in VanishingAssumption::ALL {
                let case = case_table(res, a);
                for b in &case.branches {
                    assert!(b.delta_interval.lo >= 0);
                    assert!(b.delta_interval.hi <= delta_cap(res));
                }
            }
        }
    }

    #[test]
    fn speciality_routes_match_the_c_cap_formula() {
        for res in CaseResidue::ALL {
            let case = case_table(res, VanishingAssumption::OmegaTwistVanishes);
            for b in &case.branches {
                for route in &b.routes {
                    for k in [case.validity_floor, case.validity_floor + 7] {
                        let formula =
                            c_cap_from_speciality(4 * k + res.as_i64(), k + b.min_e_offset(), 4)
                                - k;
                        match route.source {
                            RouteSource::SpecialityCap => assert_eq!(route.c_cap_offset, formula),
                            RouteSource::Liaison => assert!(route.c_cap_offset <= formula),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mu_cap_overrides() {
        let case = case_table_with_mu(r(0), VanishingAssumption::GeometricGenusZero, 60).unwrap();
        assert_eq!(case.delta_cap, 7);
        assert!(case.branches[0].delta_interval.is_empty());
        assert!(matches!(
            case_table_with_mu(r(2), VanishingAssumption::GeometricGenusZero, 100),
            Err(Error::TableRangeExceeded { .. })
        ));
        assert!(matches!(
            case_table_with_mu(r(1), VanishingAssumption::GeometricGenusZero, 5),
            Err(Error::MuCapTooSmall { .. })
        ));
    }
}
