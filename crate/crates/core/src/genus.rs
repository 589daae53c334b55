//! Maximal genus formulas for space curves on quartic surfaces, Jacobi's
//! genus formula and the genus-defect caps that follow from it.
//!
//! Two residues of `d` are in play and they are easy to confuse:
//!
//! * the *notation* residue `r_n` with `d + r_n ≡ 0 (mod s)`, used by the
//!   general formula for `G(d, s)`;
//! * the *case* residue `r_c = d mod 4`, used when writing `d = 4k + r_c`.
//!
//! They are kept in distinct types ([`GenusBudget`] carries both, every other
//! interface takes a [`CaseResidue`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Milnor-number bound for a quartic threefold with isolated singularities.
pub const DEFAULT_MU_CAP: i64 = 81;

/// `d mod 4`, the residue in the split `d = 4k + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct CaseResidue(u8);

impl CaseResidue {
    pub const ALL: [CaseResidue; 4] = [
        CaseResidue(0),
        CaseResidue(1),
        CaseResidue(2),
        CaseResidue(3),
    ];

    pub fn new(r: u8) -> Result<Self> {
        if r <= 3 {
            Ok(CaseResidue(r))
        } else {
            Err(Error::OutOfDomain {
                what: "case residue",
                value: r as i64,
                expected: "0 <= r <= 3",
            })
        }
    }

    pub fn of_degree(d: i64) -> Self {
        CaseResidue(d.rem_euclid(4) as u8)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }
}

impl TryFrom<u8> for CaseResidue {
    type Error = Error;
    fn try_from(r: u8) -> Result<Self> {
        CaseResidue::new(r)
    }
}

impl From<CaseResidue> for u8 {
    fn from(r: CaseResidue) -> u8 {
        r.0
    }
}

impl fmt::Display for CaseResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Degree data of a curve on a surface of degree `s`, with both residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBudget {
    pub degree: i64,
    pub surface_degree: i64,
    /// `d + r ≡ 0 (mod s)`, `0 ≤ r < s`.
    pub notation_residue: i64,
    /// `d mod 4`.
    pub case_residue: CaseResidue,
    /// `(d - d mod 4) / 4`.
    pub quotient: i64,
}

impl GenusBudget {
    pub fn new(degree: i64, surface_degree: i64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::OutOfDomain {
                what: "degree",
                value: degree,
                expected: "d >= 1",
            });
        }
        if surface_degree < 1 {
            return Err(Error::OutOfDomain {
                what: "surface degree",
                value: surface_degree,
                expected: "s >= 1",
            });
        }
        let case_residue = CaseResidue::of_degree(degree);
        Ok(Self {
            degree,
            surface_degree,
            notation_residue: (-degree).rem_euclid(surface_degree),
            case_residue,
            quotient: (degree - case_residue.as_i64()) / 4,
        })
    }
}

fn require_integral(value: Rational, context: &'static str) -> Result<i64> {
    value.to_integer().ok_or_else(|| Error::NonIntegral {
        context,
        value: value.to_string(),
    })
}

/// Maximal genus `G(d, s)` of a degree-`d` curve in P³ not on a surface of
/// degree `< s`, valid for `d > s(s - 1)`:
///
/// ```text
/// G(d, s) = 1 + d(d + s² - 4s) / 2s - r(s - 1)(s - r) / 2s,   d + r ≡ 0 (mod s)
/// ```
pub fn max_genus(degree: i64, surface_degree: i64) -> Result<i64> {
    let budget = GenusBudget::new(degree, surface_degree)?;
    let (d, s, r) = (degree, surface_degree, budget.notation_residue);
    if d <= s * (s - 1) {
        return Err(Error::OutsideValidityRange {
            degree: d,
            floor: s * (s - 1),
        });
    }
    let value = Rational::ONE + Rational::new(d * (d + s * s - 4 * s), 2 * s)
        - Rational::new(r * (s - 1) * (s - r), 2 * s);
    require_integral(value, "maximal genus G(d, s)")
}

/// `G(d, 4) = 1 + (d² - 3r(4 - r)) / 8` with `r = d mod 4`, for `d > 12`.
pub fn max_genus_quartic(degree: i64) -> Result<i64> {
    if degree <= 12 {
        return Err(Error::OutsideValidityRange { degree, floor: 12 });
    }
    let r = CaseResidue::of_degree(degree).as_i64();
    let value = Rational::ONE + Rational::new(degree * degree - 3 * r * (4 - r), 8);
    require_integral(value, "maximal genus G(d, 4)")
}

/// `G(4k + r, 4)` expanded in `k`: `1 + 2k² + kr + r(r - 3)/2`.
pub fn genus_by_remainder(k: i64, residue: CaseResidue) -> Result<i64> {
    let r = residue.as_i64();
    if 4 * k + r <= 12 {
        return Err(Error::OutsideValidityRange {
            degree: 4 * k + r,
            floor: 12,
        });
    }
    Ok(quartic_genus_polynomial(k, residue))
}

/// The polynomial behind [`genus_by_remainder`] without the range check.
/// `r(r - 3)` is always even, so this is exact.
pub(crate) fn quartic_genus_polynomial(k: i64, residue: CaseResidue) -> i64 {
    let r = residue.as_i64();
    1 + 2 * k * k + k * r + r * (r - 3) / 2
}

/// Jacobi's formula `π = 1 + (d² - μ)/8`.
pub fn jacobi_genus(degree: i64, mu: i64) -> Result<i64> {
    if mu < 0 {
        return Err(Error::OutOfDomain {
            what: "mu",
            value: mu,
            expected: "mu >= 0",
        });
    }
    let square = degree * degree;
    if (square - mu).rem_euclid(8) != 0 {
        return Err(Error::IncongruentMilnor { square, mu });
    }
    Ok(1 + (square - mu) / 8)
}

/// Largest genus defect `δ = G(d,4) - π` permitted by `μ ≤ 81`:
/// `(10, 9, 8, 9)` for `r = (0, 1, 2, 3)`.
pub fn delta_cap(residue: CaseResidue) -> i64 {
    delta_cap_with_mu(residue, DEFAULT_MU_CAP).expect("default cap is admissible for every residue")
}

/// Largest `δ` with `8δ + 3r(4 - r) ≤ mu_cap`. Jacobi's formula forces
/// `μ ≡ d² ≡ 3r(4 - r) (mod 8)`, so `δ = (μ - 3r(4 - r))/8` runs over all
/// integers up to this value.
pub fn delta_cap_with_mu(residue: CaseResidue, mu_cap: i64) -> Result<i64> {
    let r = residue.as_i64();
    let offset = 3 * r * (4 - r);
    if mu_cap < offset {
        return Err(Error::MuCapTooSmall {
            mu_cap,
            residue: residue.get(),
        });
    }
    Ok((mu_cap - offset).div_euclid(8))
}

/// Vanishing hypothesis on the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VanishingAssumption {
    /// `p_g = 0`.
    #[serde(rename = "pg0")]
    GeometricGenusZero,
    /// `h⁰(ω_S(-1)) = 0`.
    #[serde(rename = "omega")]
    OmegaTwistVanishes,
}

impl VanishingAssumption {
    pub const ALL: [VanishingAssumption; 2] = [
        VanishingAssumption::GeometricGenusZero,
        VanishingAssumption::OmegaTwistVanishes,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            VanishingAssumption::GeometricGenusZero => "pg0",
            VanishingAssumption::OmegaTwistVanishes => "omega",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            VanishingAssumption::GeometricGenusZero => "p_g = 0",
            VanishingAssumption::OmegaTwistVanishes => "h^0(omega_S(-1)) = 0",
        }
    }
}

impl FromStr for VanishingAssumption {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pg0" | "GeometricGenusZero" => Ok(VanishingAssumption::GeometricGenusZero),
            "omega" | "OmegaTwistVanishes" => Ok(VanishingAssumption::OmegaTwistVanishes),
            other => Err(Error::UnknownAssumption(other.to_string())),
        }
    }
}

impl fmt::Display for VanishingAssumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Degree cap for arithmetically Cohen-Macaulay surfaces on an irreducible
/// quartic. Taken as a known result.
pub fn acm_degree_cap(assumption: VanishingAssumption) -> i64 {
    match assumption {
        VanishingAssumption::OmegaTwistVanishes => 16,
        VanishingAssumption::GeometricGenusZero => 12,
    }
}
