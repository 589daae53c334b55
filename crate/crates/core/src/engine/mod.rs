//! Replays the case analysis that bounds the degree of a smooth surface
//! `S ⊂ P⁴` contained in a quartic threefold with finitely many singular points.
//!
//! For `d = 4k + r` the general hyperplane section `C ⊂ P³` is a curve on a
//! quartic surface whose genus is within `δ` of the maximum. Facts about such
//! curves (admissible `δ`, speciality index, gap to the character genus) are
//! encoded as data in [`table`]. For each branch the engine compares the
//! Riemann-Roch lower bound for `h²(I_S(k))` against the restriction upper
//! bound and finds the first `k` at which they contradict for every
//! admissible `δ`. Everything is recorded in a [`DerivationTrace`] that can be
//! replayed from its serialized form.

mod derive;
pub mod table;
mod trace;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use derive::{
    branch_threshold, derive_case, derive_theorem, derive_theorem_jobs, Threshold, SEARCH_LIMIT,
};
pub use table::{
    case_table, case_table_with_mu, BranchLabel, CaseBranch, DeltaInterval, RouteSource,
    SurfaceCase, UpperRoute,
};
pub use trace::{Anchor, CaseBound, Comparison, DerivationTrace, Outcome, ReplayReport, TraceStep};

/// Bound on `c = max{t : h¹(I_C(t)) ≠ 0}` for a smooth curve of degree `d`
/// and speciality index `e` on a smooth surface of degree `s`:
/// `c ≤ d + e(1 - s) + s² - 4s`.
pub fn c_cap_from_speciality(degree: i64, speciality: i64, surface_degree: i64) -> i64 {
    let s = surface_degree;
    degree + speciality * (1 - s) + s * s - 4 * s
}

/// `h²(I_S(t)) ≤ [(c - t)·(gap - credit)]_+`, where `gap = g(χ(C)) - g(C)`
/// and `credit` is a lower bound for the restriction cokernel dimensions
/// summed up to `t + 1`. Zero when `c ≤ t`.
pub fn h2_upper(c: i64, t: i64, gap: i64, prefix_credit: i64) -> i64 {
    if c <= t {
        return 0;
    }
    ((c - t) * (gap - prefix_credit)).max(0)
}

/// Cohomological data of the general hyperplane section `C ⊂ P³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCohomologyProfile {
    pub degree: i64,
    /// Speciality index, `max{t : h¹(O_C(t)) ≠ 0}`.
    pub speciality: i64,
    /// `max{t : h¹(I_C(t)) ≠ 0}`, `-1` by convention when none.
    pub c: i64,
    pub postulation: i64,
    pub linearly_normal: bool,
    pub prefix_credit: i64,
}

impl CurveCohomologyProfile {
    pub fn new(
        degree: i64,
        speciality: i64,
        c: i64,
        postulation: i64,
        linearly_normal: bool,
        prefix_credit: i64,
    ) -> Result<Self> {
        if speciality >= degree {
            return Err(Error::OutOfDomain {
                what: "speciality index",
                value: speciality,
                expected: "e < d",
            });
        }
        if c < -1 {
            return Err(Error::OutOfDomain {
                what: "c",
                value: c,
                expected: "c >= -1",
            });
        }
        if prefix_credit < 0 {
            return Err(Error::OutOfDomain {
                what: "prefix credit",
                value: prefix_credit,
                expected: ">= 0",
            });
        }
        Ok(Self {
            degree,
            speciality,
            c,
            postulation,
            linearly_normal,
            prefix_credit,
        })
    }

    /// Upper bound for `h²(I_S(t))`; only available when `c > e - 1`.
    pub fn h2_upper_at(&self, t: i64, genus_gap: i64) -> Option<i64> {
        (self.c > self.speciality - 1).then(|| h2_upper(self.c, t, genus_gap, self.prefix_credit))
    }
}
