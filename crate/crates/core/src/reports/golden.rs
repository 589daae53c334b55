//! Golden verification suite: every published intermediate value the
//! derivation depends on, recomputed and compared exactly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::characters::{enumerate_connected, max_connected_character, NumericalCharacter};
use crate::cohomology::{BoundFamily, BoundPolynomial};
use crate::engine::{
    c_cap_from_speciality, case_table, derive_case, derive_theorem, h2_upper, Anchor,
};
use crate::error::Error;
use crate::genus::{
    delta_cap, max_genus_quartic, CaseResidue, VanishingAssumption, DEFAULT_MU_CAP,
};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoldenValue {
    Integer(i64),
    Rational(Rational),
    /// `constant + slope·δ`.
    Affine {
        constant: Rational,
        slope: Rational,
    },
    Characters(Vec<NumericalCharacter>),
    Flag(bool),
}

impl fmt::Display for GoldenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldenValue::Integer(n) => write!(f, "{n}"),
            GoldenValue::Rational(x) => write!(f, "{x}"),
            GoldenValue::Affine { constant, slope } => {
                if slope.is_negative() {
                    write!(f, "{constant} - {}*delta", -*slope)
                } else {
                    write!(f, "{constant} + {slope}*delta")
                }
            }
            GoldenValue::Characters(cs) => {
                let parts: Vec<String> = cs.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            GoldenValue::Flag(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub id: String,
    pub claim: String,
    pub anchor: Anchor,
    pub expected: GoldenValue,
    pub computed: GoldenValue,
    pub pass: bool,
}

/// Harness self-test: shift the constant coefficient of one bound
/// polynomial by one so the rows depending on it must fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tamper {
    pub family: BoundFamily,
    pub residue: CaseResidue,
}

impl FromStr for Tamper {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (family, residue) = s.split_once(':').unwrap_or((s, "0"));
        let residue: u8 = residue.parse().map_err(|_| Error::OutOfDomain {
            what: "tamper residue",
            value: -1,
            expected: "family:r with 0 <= r <= 3",
        })?;
        Ok(Tamper {
            family: family.parse()?,
            residue: CaseResidue::new(residue)?,
        })
    }
}

impl fmt::Display for Tamper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.residue)
    }
}

struct Suite {
    tamper: Option<Tamper>,
    rows: Vec<CheckRow>,
}

impl Suite {
    fn poly(&self, family: BoundFamily, residue: CaseResidue) -> BoundPolynomial {
        let mut p = BoundPolynomial::new(family, residue);
        if self.tamper == Some(Tamper { family, residue }) {
            p.k0 = p.k0 + Rational::ONE;
        }
        p
    }

    fn row(
        &mut self,
        id: &str,
        claim: String,
        anchor: Anchor,
        expected: GoldenValue,
        computed: GoldenValue,
        ok: bool,
    ) {
        let pass = ok && expected == computed;
        self.rows.push(CheckRow {
            id: id.to_string(),
            claim,
            anchor,
            expected,
            computed,
            pass,
        });
    }

    fn eq(
        &mut self,
        id: &str,
        claim: impl Into<String>,
        anchor: Anchor,
        expected: GoldenValue,
        computed: GoldenValue,
    ) {
        self.row(id, claim.into(), anchor, expected, computed, true);
    }
}

fn res(r: u8) -> CaseResidue {
    CaseResidue::new(r).expect("literal residue")
}

fn chars(list: &[&[i64]]) -> Vec<NumericalCharacter> {
    list.iter()
        .map(|e| NumericalCharacter::new(e.to_vec()).expect("literal character"))
        .collect()
}

/// Largest `δ = (μ - 3r(4-r))/8` over integers `0 ≤ μ ≤ 81` congruent to
/// `d² (mod 8)`, found by scanning `μ`.
fn delta_cap_by_scan(residue: CaseResidue) -> Option<i64> {
    let r = residue.as_i64();
    let offset = 3 * r * (4 - r);
    let square_mod_8 = (r * r).rem_euclid(8);
    (0..=DEFAULT_MU_CAP)
        .filter(|mu| mu.rem_euclid(8) == square_mod_8 && *mu >= offset)
        .map(|mu| (mu - offset) / 8)
        .max()
}

fn bound_rows(suite: &mut Suite) {
    let cases: [(BoundFamily, u8, i64, i64, i64, &str); 9] = [
        (BoundFamily::Rho, 0, 6, 122, 1, "rho_0(6)"),
        (BoundFamily::Rho, 1, 6, 131, 1, "rho_1(6)"),
        (BoundFamily::Rho, 2, 6, 146, 1, "rho_2(6)"),
        (BoundFamily::Rho, 3, 6, 167, 1, "rho_3(6)"),
        (BoundFamily::Lambda, 0, 7, 122, 1, "lambda_0(7)"),
        (BoundFamily::Phi, 0, 7, 111, 1, "phi_0(7)"),
        (BoundFamily::Phi, 1, 7, 239, 2, "phi_1(7)"),
        (BoundFamily::Phi, 2, 7, 134, 1, "phi_2(7)"),
        (BoundFamily::Phi, 3, 7, 309, 2, "phi_3(7)"),
    ];
    for (family, r, k, num, den, id) in cases {
        let poly = suite.poly(family, res(r));
        let constant = Rational::new(num, den);
        let slope = Rational::integer(-6);
        let every_delta =
            (0..=10).all(|d| poly.eval(k, d) == constant + slope * Rational::integer(d));
        let (c, s) = poly.at_k(k);
        suite.row(
            id,
            format!("{family}_{{delta,{r}}}({k}) for every delta in 0..=10"),
            Anchor::RiemannRochLowerBound,
            GoldenValue::Affine { constant, slope },
            GoldenValue::Affine {
                constant: c,
                slope: s,
            },
            every_delta,
        );
    }
    let lam = suite.poly(BoundFamily::Lambda, res(0)).eval(7, 10);
    suite.eq(
        "lambda_10_0(7)",
        "lambda_{10,0}(7), against the upper bound 54",
        Anchor::RiemannRochLowerBound,
        GoldenValue::Rational(Rational::integer(62)),
        GoldenValue::Rational(lam),
    );
    let rho = suite.poly(BoundFamily::Rho, res(0)).eval(6, 10);
    suite.eq(
        "rho_10_0(6)",
        "rho_{10,0}(6)",
        Anchor::RiemannRochLowerBound,
        GoldenValue::Rational(Rational::integer(62)),
        GoldenValue::Rational(rho),
    );
}

fn delta_cap_rows(suite: &mut Suite) {
    for (r, expected) in [(0u8, 10i64), (1, 9), (2, 8), (3, 9)] {
        let computed = delta_cap(res(r));
        let scanned = delta_cap_by_scan(res(r));
        suite.row(
            &format!("delta_cap_r{r}"),
            format!("largest genus defect for r = {r} with mu <= 81 (closed form and scan agree)"),
            Anchor::JacobiDeltaCap,
            GoldenValue::Integer(expected),
            GoldenValue::Integer(computed),
            scanned == Some(computed),
        );
    }
}

fn character_rows(suite: &mut Suite) {
    let listed: [(i64, &[&[i64]]); 3] = [
        (20, &[&[8, 7, 6, 5], &[7, 7, 6, 6]]),
        (21, &[&[8, 7, 6, 6], &[7, 7, 7, 6]]),
        (23, &[&[8, 8, 7, 6], &[8, 7, 7, 7]]),
    ];
    for (d, expected) in listed {
        suite.eq(
            &format!("chars_{d}_4"),
            format!("connected characters of degree {d}, length 4"),
            Anchor::CurveTable,
            GoldenValue::Characters(chars(expected)),
            GoldenValue::Characters(enumerate_connected(d, 4)),
        );
    }
    for (r, gap) in [(0i64, 2i64), (1, 1), (3, 1)] {
        // The gap must hold at every k in 4..=10, reported at the worst k.
        let gaps: Vec<i64> = (4..=10)
            .map(|k| {
                let list = enumerate_connected(4 * k + r, 4);
                if list.len() == 2 {
                    list[0].genus() - list[1].genus()
                } else {
                    -1
                }
            })
            .collect();
        let uniform = gaps.iter().all(|g| *g == gaps[0]);
        suite.row(
            &format!("char_gap_4k+{r}"),
            format!("genus gap between the two characters of degree 4k+{r}, k = 4..=10"),
            Anchor::CurveTable,
            GoldenValue::Integer(gap),
            GoldenValue::Integer(gaps[0]),
            uniform,
        );
    }
    for d in [20, 23] {
        let by_char = max_connected_character(d, 4).map(|m| m.genus).unwrap_or(-1);
        let by_formula = max_genus_quartic(d).unwrap_or(-2);
        suite.row(
            &format!("max_genus_{d}"),
            format!("G({d},4) from the formula equals the maximal character genus"),
            Anchor::CurveTable,
            GoldenValue::Integer(by_formula),
            GoldenValue::Integer(by_char),
            true,
        );
    }
}

fn upper_bound_rows(suite: &mut Suite) {
    let k = 5;
    suite.eq(
        "h2_upper_54",
        "c <= k+9, gap delta-2 = 8, credit 2 gives 9(delta-4)",
        Anchor::RestrictionUpperBound,
        GoldenValue::Integer(54),
        GoldenValue::Integer(h2_upper(k + 9, k, 8, 2)),
    );
    suite.eq(
        "h2_upper_24",
        "c <= k+3, gap delta-2 = 8, no credit gives 3 delta - 6",
        Anchor::RestrictionUpperBound,
        GoldenValue::Integer(24),
        GoldenValue::Integer(h2_upper(k + 3, k, 8, 0)),
    );
    for r in 0..4u8 {
        let e_min = -2;
        let offsets: Vec<i64> = [5, 9]
            .iter()
            .map(|&k| c_cap_from_speciality(4 * k + r as i64, k + e_min, 4) - k)
            .collect();
        suite.row(
            &format!("c_cap_r{r}"),
            format!("c - k cap for d = 4k+{r}, e >= k-2"),
            Anchor::SpecialityCCap,
            GoldenValue::Integer(6 + r as i64),
            GoldenValue::Integer(offsets[0]),
            offsets[0] == offsets[1],
        );
    }
    suite.eq(
        "c_cap_r0_branch_a",
        "c - k cap for d = 4k, e = k-3",
        Anchor::SpecialityCCap,
        GoldenValue::Integer(9),
        GoldenValue::Integer(c_cap_from_speciality(4 * k, k - 3, 4) - k),
    );
    let table_offset = case_table(res(0), VanishingAssumption::GeometricGenusZero).branches[1]
        .routes[0]
        .c_cap_offset;
    suite.eq(
        "table_c_cap_r0",
        "table offset for d = 4k, e >= k-2",
        Anchor::CurveTable,
        GoldenValue::Integer(6),
        GoldenValue::Integer(table_offset),
    );
}

fn derivation_rows(suite: &mut Suite) {
    let expected = [
        (
            VanishingAssumption::GeometricGenusZero,
            [20, 21, 22, 23],
            23,
        ),
        (
            VanishingAssumption::OmegaTwistVanishes,
            [24, 25, 26, 27],
            27,
        ),
    ];
    for (assumption, per_case, total) in expected {
        for (r, bound) in per_case.into_iter().enumerate() {
            let computed = derive_case(res(r as u8), assumption, DEFAULT_MU_CAP)
                .ok()
                .and_then(|t| t.degree_bound())
                .unwrap_or(-1);
            suite.eq(
                &format!("case_{}_r{r}", assumption.tag()),
                format!("d = 4k+{r} under {}: degree bound", assumption.describe()),
                Anchor::CaseConclusion,
                GoldenValue::Integer(bound),
                GoldenValue::Integer(computed),
            );
        }
        let trace = derive_theorem(assumption, DEFAULT_MU_CAP).ok();
        let computed = trace.as_ref().and_then(|t| t.degree_bound()).unwrap_or(-1);
        suite.eq(
            &format!("theorem_{}", assumption.tag()),
            format!("all residues under {}: degree bound", assumption.describe()),
            Anchor::Theorem,
            GoldenValue::Integer(total),
            GoldenValue::Integer(computed),
        );
        let replayed = trace
            .as_ref()
            .and_then(|t| serde_json::to_string(t).ok())
            .and_then(|json| serde_json::from_str::<crate::engine::DerivationTrace>(&json).ok())
            .map(|t| t.replay().is_clean())
            .unwrap_or(false);
        suite.eq(
            &format!("replay_{}", assumption.tag()),
            "serialized trace replays with identical verdicts",
            Anchor::Theorem,
            GoldenValue::Flag(true),
            GoldenValue::Flag(replayed),
        );
    }
}

/// Runs every check; `tamper` corrupts one polynomial for self-testing.
pub fn run_golden_suite(tamper: Option<Tamper>) -> Vec<CheckRow> {
    let mut suite = Suite {
        tamper,
        rows: Vec::new(),
    };
    bound_rows(&mut suite);
    delta_cap_rows(&mut suite);
    character_rows(&mut suite);
    upper_bound_rows(&mut suite);
    derivation_rows(&mut suite);
    suite.rows
}

/// The untampered suite.
pub fn golden_checks() -> Vec<CheckRow> {
    run_golden_suite(None)
}
