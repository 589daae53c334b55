//! Lower bounds for `h²(I_S(k))` from Riemann-Roch, for a smooth surface
//! `S ⊂ P⁴` of degree `d = 4k + r` on an irreducible quartic hypersurface,
//! with sectional genus `π = G(d, 4) - δ`.
//!
//! The general bound is
//!
//! ```text
//! h²(I_S(k)) ≥ (2/3)k³ + k²(r/2 - 1) + k(7/3 + r²/2 - 2r - δ) - p_g
//! ```
//!
//! and the three families ρ, λ, φ come from bounding `p_g` by `0`,
//! `π - d + 3` (linearly normal hyperplane section) and `π - d/2` (Clifford).
//! All values are exact rationals; nothing is rounded.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genus::{quartic_genus_polynomial, CaseResidue};
use crate::rational::{q, Rational};

/// `h⁰(O_{Pⁿ}(t))`.
pub fn projective_space_sections(n: u32, t: i64) -> u64 {
    if t < 0 {
        return 0;
    }
    binomial(t as u64 + n as u64, n as u64)
}

/// Numerical invariants of a surface `S ⊂ P⁴` of degree `d = 4k + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub degree: i64,
    pub quotient: i64,
    pub residue: CaseResidue,
    /// Genus defect `G(d,4) - π`.
    pub delta: i64,
    pub sectional_genus: i64,
    pub geometric_genus: i64,
    pub irregularity: i64,
}

impl SurfaceInvariants {
    pub fn new(
        degree: i64,
        sectional_genus: i64,
        geometric_genus: i64,
        irregularity: i64,
    ) -> Result<Self> {
        if degree < 4 {
            return Err(Error::OutOfDomain {
                what: "degree",
                value: degree,
                expected: "d = 4k + r with k >= 1",
            });
        }
        for (what, value) in [("p_g", geometric_genus), ("q", irregularity)] {
            if value < 0 {
                return Err(Error::OutOfDomain {
                    what,
                    value,
                    expected: ">= 0",
                });
            }
        }
        let residue = CaseResidue::of_degree(degree);
        let quotient = (degree - residue.as_i64()) / 4;
        let delta = quartic_genus_polynomial(quotient, residue) - sectional_genus;
        if delta < 0 {
            return Err(Error::OutOfDomain {
                what: "sectional genus",
                value: sectional_genus,
                expected: "pi <= G(d, 4)",
            });
        }
        Ok(Self {
            degree,
            quotient,
            residue,
            delta,
            sectional_genus,
            geometric_genus,
            irregularity,
        })
    }

    /// Invariants with `π = G(d,4) - δ` and `q = 0`.
    pub fn from_defect(
        k: i64,
        residue: CaseResidue,
        delta: i64,
        geometric_genus: i64,
    ) -> Result<Self> {
        let pi = quartic_genus_polynomial(k, residue) - delta;
        Self::new(4 * k + residue.as_i64(), pi, geometric_genus, 0)
    }
}

/// `χ(O_S(t)) = d·t(t+1)/2 - t(π - 1) + 1 - q + p_g`.
pub fn euler_char_twist(inv: &SurfaceInvariants, twist: i64) -> i64 {
    inv.degree * twist * (twist + 1) / 2 - twist * (inv.sectional_genus - 1) + 1 - inv.irregularity
        + inv.geometric_genus
}

/// The Riemann-Roch estimate before simplification:
/// `h⁰(O_{P⁴}(k)) - h⁰(O_{P⁴}(k-4)) - χ(O_S(k))`, using that the only forms
/// of degree `k` through `S` are multiples of the quartic. Equals the
/// displayed cubic plus `q`.
pub fn h2_lower_via_riemann_roch(inv: &SurfaceInvariants) -> i64 {
    let k = inv.quotient;
    projective_space_sections(4, k) as i64
        - projective_space_sections(4, k - 4) as i64
        - euler_char_twist(inv, k)
}

/// `(2/3)k³ + k²(r/2 - 1) + k(7/3 + r²/2 - 2r - δ) - p_g`, for `4k + r > 16`.
pub fn h2_lower_bound(
    k: i64,
    residue: CaseResidue,
    delta: i64,
    geometric_genus: Rational,
) -> Result<Rational> {
    let r = residue.as_i64();
    if 4 * k + r <= 16 {
        return Err(Error::OutsideValidityRange {
            degree: 4 * k + r,
            floor: 16,
        });
    }
    let k_r = Rational::integer(k);
    let r_r = Rational::integer(r);
    let half = q(1, 2);
    let value = q(2, 3) * k_r * k_r * k_r
        + k_r * k_r * (r_r * half - Rational::ONE)
        + k_r * (q(7, 3) + r_r * r_r * half - Rational::integer(2 * r) - Rational::integer(delta))
        - geometric_genus;
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundFamily {
    /// `p_g = 0`.
    Rho,
    /// `p_g ≤ π - d + 3`, needs a linearly normal hyperplane section.
    Lambda,
    /// `p_g ≤ π - d/2`.
    Phi,
    /// The bound with an explicit `p_g` term.
    Full,
}

impl BoundFamily {
    pub const LOWER: [BoundFamily; 3] = [BoundFamily::Rho, BoundFamily::Lambda, BoundFamily::Phi];

    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::Rho => "rho",
            BoundFamily::Lambda => "lambda",
            BoundFamily::Phi => "phi",
            BoundFamily::Full => "full",
        }
    }
}

impl FromStr for BoundFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rho" => Ok(BoundFamily::Rho),
            "lambda" => Ok(BoundFamily::Lambda),
            "phi" => Ok(BoundFamily::Phi),
            "full" => Ok(BoundFamily::Full),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A lower bound for `h²(I_S(k))` as a polynomial in `k`, `δ` and `p_g`:
///
/// ```text
/// k3·k³ + k2·k² + k1·k + k0 + δ·(delta_k·k + delta_0) + pg·p_g
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundPolynomial {
    pub family: BoundFamily,
    pub residue: CaseResidue,
    pub k3: Rational,
    pub k2: Rational,
    pub k1: Rational,
    pub k0: Rational,
    pub delta_k: Rational,
    pub delta_0: Rational,
    pub pg: Rational,
}

impl BoundPolynomial {
    pub fn new(family: BoundFamily, residue: CaseResidue) -> Self {
        let r = residue.as_i64();
        let rr = Rational::integer(r);
        let half_r = Rational::new(r, 2);
        let half_r2 = Rational::new(r * r, 2);
        let base = BoundPolynomial {
            family,
            residue,
            k3: q(2, 3),
            k2: half_r - Rational::ONE,
            k1: q(7, 3) + half_r2 - Rational::integer(2) * rr,
            k0: Rational::ZERO,
            delta_k: Rational::integer(-1),
            delta_0: Rational::ZERO,
            pg: Rational::ZERO,
        };
        match family {
            BoundFamily::Rho => base,
            BoundFamily::Full => BoundPolynomial {
                pg: Rational::integer(-1),
                ..base
            },
            BoundFamily::Lambda => BoundPolynomial {
                k2: half_r - Rational::integer(3),
                k1: q(19, 3) + half_r2 - Rational::integer(3) * rr,
                k0: -Rational::new(r * (r - 5), 2) - Rational::integer(4),
                delta_0: Rational::ONE,
                ..base
            },
            BoundFamily::Phi => BoundPolynomial {
                k2: half_r - Rational::integer(3),
                k1: q(13, 3) + half_r2 - Rational::integer(3) * rr,
                k0: Rational::integer(2 * r - 1) - half_r2,
                delta_0: Rational::ONE,
                ..base
            },
        }
    }

    /// Value at `(k, δ)` with `p_g = 0`.
    pub fn eval(&self, k: i64, delta: i64) -> Rational {
        self.eval_with_pg(k, delta, Rational::ZERO)
    }

    pub fn eval_with_pg(&self, k: i64, delta: i64, geometric_genus: Rational) -> Rational {
        let k = Rational::integer(k);
        let d = Rational::integer(delta);
        ((self.k3 * k + self.k2) * k + self.k1) * k
            + self.k0
            + d * (self.delta_k * k + self.delta_0)
            + self.pg * geometric_genus
    }

    /// The polynomial in `δ` obtained by fixing `k`: `(constant, slope)`.
    pub fn at_k(&self, k: i64) -> (Rational, Rational) {
        let constant = self.eval(k, 0);
        let slope = self.eval(k, 1) - constant;
        (constant, slope)
    }
}

pub fn rho(k: i64, delta: i64, residue: CaseResidue) -> Rational {
    BoundPolynomial::new(BoundFamily::Rho, residue).eval(k, delta)
}

pub fn lambda(k: i64, delta: i64, residue: CaseResidue) -> Rational {
    BoundPolynomial::new(BoundFamily::Lambda, residue).eval(k, delta)
}

pub fn phi(k: i64, delta: i64, residue: CaseResidue) -> Rational {
    BoundPolynomial::new(BoundFamily::Phi, residue).eval(k, delta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PgCapMode {
    /// `p_g ≤ π - d/2`.
    Clifford,
    /// `p_g ≤ π - d + 3`.
    LinearNormal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PgCap {
    pub value: i64,
    /// The rational cap `π - d/2` was a half-integer and got floored.
    pub floored: bool,
}

/// Upper bound on `p_g` for a surface with `h⁰(ω_S(-1)) = 0`.
pub fn pg_cap(sectional_genus: i64, degree: i64, mode: PgCapMode) -> PgCap {
    match mode {
        PgCapMode::Clifford => {
            let exact = Rational::integer(sectional_genus) - Rational::new(degree, 2);
            PgCap {
                value: exact.floor(),
                floored: !exact.is_integer(),
            }
        }
        PgCapMode::LinearNormal => PgCap {
            value: sectional_genus - degree + 3,
            floored: false,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    /// `f(k + 1, δ) ≤ f(k, δ)`.
    Violation {
        k: i64,
        delta: i64,
    },
}

impl Monotonicity {
    pub fn holds(&self) -> bool {
        matches!(self, Monotonicity::Increasing)
    }
}

/// Checks `f(k+1, δ) > f(k, δ)` for every `δ ∈ [0, delta_max]` and
/// `k ∈ [k_lo, k_hi - 1]`. Scans `δ` in the outer loop; reports the first
/// failure.
pub fn check_monotone(
    family: BoundFamily,
    residue: CaseResidue,
    delta_max: i64,
    k_lo: i64,
    k_hi: i64,
) -> Monotonicity {
    check_monotone_on(family, residue, 0..=delta_max, k_lo, k_hi)
}

pub(crate) fn check_monotone_on(
    family: BoundFamily,
    residue: CaseResidue,
    deltas: impl IntoIterator<Item = i64>,
    k_lo: i64,
    k_hi: i64,
) -> Monotonicity {
    let poly = BoundPolynomial::new(family, residue);
    for delta in deltas {
        for k in k_lo..k_hi {
            if poly.eval(k + 1, delta) <= poly.eval(k, delta) {
                return Monotonicity::Violation { k, delta };
            }
        }
    }
    Monotonicity::Increasing
}
