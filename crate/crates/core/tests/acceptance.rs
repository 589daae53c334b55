//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every check compares the library against an oracle
//! written here independently of it.

use std::process::ExitCode;

use quartic_bounds::characters::{
    enumerate_connected, max_connected_character, NumericalCharacter,
};
use quartic_bounds::cohomology::{check_monotone, BoundFamily, BoundPolynomial};
use quartic_bounds::engine::{
    branch_threshold, c_cap_from_speciality, case_table, derive_case, derive_theorem, h2_upper,
    CaseBranch, DerivationTrace,
};
use quartic_bounds::genus::{
    delta_cap, max_genus, max_genus_quartic, CaseResidue, VanishingAssumption,
};
use quartic_bounds::Rational;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn res(r: i64) -> CaseResidue {
    CaseResidue::new(r as u8).unwrap()
}

/// Exact value of `a - 6δ` with `a = num/den`, written out by hand.
fn criterion_1() -> Check {
    let expected: [(BoundFamily, i64, i64, i64, i64); 9] = [
        (BoundFamily::Rho, 0, 6, 122, 1),
        (BoundFamily::Rho, 1, 6, 131, 1),
        (BoundFamily::Rho, 2, 6, 146, 1),
        (BoundFamily::Rho, 3, 6, 167, 1),
        (BoundFamily::Lambda, 0, 7, 122, 1),
        (BoundFamily::Phi, 0, 7, 111, 1),
        (BoundFamily::Phi, 1, 7, 239, 2),
        (BoundFamily::Phi, 2, 7, 134, 1),
        (BoundFamily::Phi, 3, 7, 309, 2),
    ];
    for (family, r, k, num, den) in expected {
        let poly = BoundPolynomial::new(family, res(r));
        for delta in 0..=10 {
            // 2·value = 2·num/den - 12δ, compared as integers.
            let want = Rational::new(2 * num - 12 * delta * den, 2 * den);
            let got = poly.eval(k, delta);
            ensure(got == want, || {
                format!("{family}_{{{delta},{r}}}({k}) = {got}, want {want}")
            })?;
        }
    }
    Ok("9 evaluations x 11 deltas exact".into())
}

/// All non-increasing sequences of the given length with last entry at least
/// the length and degree `d`, by plain nested recursion without pruning.
fn brute_characters(d: i64, length: usize) -> Vec<Vec<i64>> {
    fn go(prefix: &mut Vec<i64>, length: usize, d: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == length {
            let degree: i64 = prefix.iter().enumerate().map(|(i, n)| n - i as i64).sum();
            let connected = prefix.windows(2).all(|w| w[0] - w[1] <= 1);
            if degree == d && connected {
                out.push(prefix.clone());
            }
            return;
        }
        let hi = prefix.last().copied().unwrap_or(d + length as i64);
        for n in (length as i64..=hi).rev() {
            prefix.push(n);
            go(prefix, length, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), length, d, &mut out);
    out
}

fn criterion_2() -> Check {
    for k in 4..=10 {
        let expected: [(i64, [[i64; 4]; 2], i64); 3] = [
            (
                0,
                [[k + 3, k + 2, k + 1, k], [k + 2, k + 2, k + 1, k + 1]],
                2,
            ),
            (
                1,
                [[k + 3, k + 2, k + 1, k + 1], [k + 2, k + 2, k + 2, k + 1]],
                1,
            ),
            (
                3,
                [[k + 3, k + 3, k + 2, k + 1], [k + 3, k + 2, k + 2, k + 2]],
                1,
            ),
        ];
        for (r, pair, gap) in expected {
            let d = 4 * k + r;
            let got = enumerate_connected(d, 4);
            let got_entries: Vec<Vec<i64>> = got.iter().map(|c| c.entries().to_vec()).collect();
            let want: Vec<Vec<i64>> = pair.iter().map(|p| p.to_vec()).collect();
            ensure(got_entries == want, || {
                format!("d = {d}: {got_entries:?}, want {want:?}")
            })?;
            ensure(brute_characters(d, 4) == want, || {
                format!("d = {d}: brute force disagrees")
            })?;
            let g = got[0].genus() - got[1].genus();
            ensure(g == gap, || format!("d = {d}: gap {g}, want {gap}"))?;
        }
    }
    for d in 13..=60 {
        let lib: Vec<Vec<i64>> = enumerate_connected(d, 4)
            .iter()
            .map(|c| c.entries().to_vec())
            .collect();
        ensure(lib == brute_characters(d, 4), || {
            format!("enumeration differs at d = {d}")
        })?;
    }
    Ok(
        "pairs and gaps for k in 4..=10, full enumeration matches brute force for d in 13..=60"
            .into(),
    )
}

fn criterion_3() -> Check {
    for d in 13..=100 {
        let a = max_genus(d, 4).map_err(|e| e.to_string())?;
        let b = max_genus_quartic(d).map_err(|e| e.to_string())?;
        let c = max_connected_character(d, 4)
            .map_err(|e| e.to_string())?
            .genus;
        ensure(a == b && b == c, || format!("d = {d}: {a}, {b}, {c}"))?;
    }
    Ok("three routes agree for d in 13..=100".into())
}

fn criterion_4() -> Check {
    let mut caps = Vec::new();
    for r in 0..4 {
        // μ ≡ d² (mod 8) and 8δ = μ - 3r(4 - r); scan every μ.
        let mut best = None;
        for k in 5..9 {
            let d = 4 * k + r;
            for mu in 0..=81i64 {
                let num = mu - 3 * r * (4 - r);
                if (d * d - mu) % 8 == 0 && num >= 0 {
                    debug_assert_eq!(num % 8, 0);
                    best = best.max(Some(num / 8));
                }
            }
        }
        let best = best.ok_or("no admissible mu")?;
        ensure(delta_cap(res(r)) == best, || {
            format!("r = {r}: {} vs {best}", delta_cap(res(r)))
        })?;
        caps.push(best);
    }
    ensure(caps == [10, 9, 8, 9], || format!("caps {caps:?}"))?;
    Ok(format!("delta caps {caps:?}"))
}

fn criterion_5() -> Check {
    ensure(h2_upper(14, 5, 8, 2) == 54, || "nine steps: not 54".into())?;
    ensure(h2_upper(8, 5, 8, 0) == 24, || "three steps: not 24".into())?;
    for k in 4..=20 {
        for r in 0..4 {
            let d = 4 * k + r;
            // c ≤ d + e(1 - s) + s² - 4s with s = 4, e = k - 2.
            let by_hand = d - 3 * (k - 2);
            ensure(c_cap_from_speciality(d, k - 2, 4) == by_hand, || {
                format!("d = {d}")
            })?;
            ensure(by_hand - k == 6 + r, || format!("offset at d = {d}"))?;
        }
    }
    Ok("54, 24, offsets k+6..k+9".into())
}

/// Largest route upper bound, recomputed from the table data directly.
fn upper(branch: &CaseBranch, k: i64, delta: i64) -> i64 {
    branch
        .routes
        .iter()
        .map(|route| {
            let c = k + route.c_cap_offset;
            let gap = delta + branch.char_gap;
            ((c - k).max(0) * (gap - route.prefix_credit)).max(0)
        })
        .max()
        .unwrap()
}

fn contradictory(branch: &CaseBranch, r: i64, k: i64) -> bool {
    let poly = BoundPolynomial::new(branch.lower_family, res(r));
    branch
        .delta_interval
        .iter()
        .all(|delta| poly.eval(k, delta) > Rational::integer(upper(branch, k, delta)))
}

fn criterion_6() -> Check {
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
        for r in 0..4 {
            let trace = derive_case(res(r), assumption, 81).map_err(|e| e.to_string())?;
            let bound = trace.degree_bound();
            ensure(bound == Some(per_case[r as usize]), || {
                format!("{} r = {r}: {bound:?}", assumption.tag())
            })?;
            let case = case_table(res(r), assumption);
            for branch in &case.branches {
                let t = branch_threshold(branch, res(r), case.validity_floor)
                    .map_err(|e| e.to_string())?;
                // First contradictory k, searched independently.
                let first = (case.validity_floor..=60).find(|&k| contradictory(branch, r, k));
                ensure(first == Some(t.k), || {
                    format!("r = {r} {}: {first:?} vs {}", branch.label, t.k)
                })?;
                ensure(
                    t.k > case.validity_floor && !contradictory(branch, r, t.k - 1),
                    || format!("r = {r} {}: k - 1 already contradictory", branch.label),
                )?;
            }
        }
        let bound = derive_theorem(assumption, 81)
            .map_err(|e| e.to_string())?
            .degree_bound();
        ensure(bound == Some(total), || {
            format!("{}: {bound:?}", assumption.tag())
        })?;
    }
    Ok("per-case 20..23 and 24..27, overall 23 and 27, thresholds tight".into())
}

/// Hilbert function of the plane section by counting monomials x^i y^j z^l
/// of degree n outside the staircase `{i < σ, j < n_i - i}`.
fn staircase_hilbert(entries: &[i64], n: i64) -> i64 {
    let mut count = 0;
    for i in 0..=n {
        for j in 0..=(n - i) {
            let inside = (i as usize) < entries.len() && j < entries[i as usize] - i;
            if inside {
                count += 1;
            }
        }
    }
    count
}

fn oracle_genus(entries: &[i64]) -> i64 {
    let d: i64 = entries.iter().enumerate().map(|(i, n)| n - i as i64).sum();
    let top = entries[0];
    (1..=top + 1)
        .map(|n| d - staircase_hilbert(entries, n))
        .sum()
}

fn criterion_7() -> Check {
    let mut checked = 0;
    for length in 1..=5 {
        for d in 1..=40 {
            for c in enumerate_connected(d, length) {
                let want = oracle_genus(c.entries());
                ensure(c.genus() == want, || {
                    format!("{c}: {} vs {want}", c.genus())
                })?;
                checked += 1;
            }
        }
    }
    for a in 2..=8 {
        let plane = NumericalCharacter::new(vec![a]).map_err(|e| e.to_string())?;
        ensure(plane.genus() == (a - 1) * (a - 2) / 2, || {
            format!("plane {a}")
        })?;
        for b in a..=8 {
            let ci = NumericalCharacter::new((0..a).map(|i| a + b - 1 - i).collect())
                .map_err(|e| e.to_string())?;
            ensure(ci.degree() == a * b, || format!("ci {a},{b} degree"))?;
            ensure(ci.genus() == a * b * (a + b - 4) / 2 + 1, || {
                format!("ci {a},{b} genus")
            })?;
        }
    }
    for family in BoundFamily::LOWER {
        for r in 0..4 {
            let m = check_monotone(family, res(r), 10, 4, 60);
            ensure(m.holds(), || format!("{family} r = {r}: {m:?}"))?;
        }
    }
    Ok(format!(
        "{checked} characters vs staircase oracle, plane/CI laws, monotone on [4, 60]"
    ))
}

fn replay_bitwise(trace: &DerivationTrace) -> Result<usize, String> {
    let json = serde_json::to_string(trace).map_err(|e| e.to_string())?;
    let back: DerivationTrace = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure(serde_json::to_string(&back).unwrap() == json, || {
        "re-serialization differs".into()
    })?;
    for (i, step) in back.steps.iter().enumerate() {
        let again = step.comparison.holds(step.left, step.right);
        ensure(again == step.verdict, || {
            format!("step {i} ({}) does not replay", step.claim)
        })?;
    }
    ensure(back.replay().is_clean(), || {
        "replay report not clean".into()
    })?;
    Ok(back.steps.len())
}

fn criterion_8() -> Check {
    let mut steps = 0;
    for assumption in VanishingAssumption::ALL {
        steps += replay_bitwise(&derive_theorem(assumption, 81).map_err(|e| e.to_string())?)?;
        for r in 0..4 {
            steps +=
                replay_bitwise(&derive_case(res(r), assumption, 81).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(format!("{steps} serialized steps replay identically"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 lower-bound evaluations", criterion_1),
        ("2 character enumeration", criterion_2),
        ("3 genus-formula consistency", criterion_3),
        ("4 delta caps", criterion_4),
        ("5 upper-bound reproductions", criterion_5),
        ("6 theorem reproduction", criterion_6),
        ("7 property suites", criterion_7),
        ("8 trace replay", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
