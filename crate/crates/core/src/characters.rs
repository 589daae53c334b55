//! Numerical characters of zero-dimensional subschemes of the plane.
//!
//! A character `(n_0, ..., n_{σ-1})` is a non-increasing sequence with
//! `n_{σ-1} ≥ σ`. It determines the Hilbert function of the point set: the
//! degree is `Σ (n_i - i)` and the failure of the point set to impose
//! independent conditions on curves of degree `n` is
//!
//! ```text
//! h(n) = Σ_i [ (n_i - n - 1)_+ - (i - n - 1)_+ ]
//! ```
//!
//! The genus of a character is `Σ_{m ≥ 1} h(m)`; it bounds the arithmetic
//! genus of any space curve whose general plane section has this character.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `max(x, 0)`, defined on all integers.
#[inline]
pub fn positive_part(x: i64) -> i64 {
    x.max(0)
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NumericalCharacter {
    entries: Vec<i64>,
}

impl NumericalCharacter {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let invalid = |reason| Error::InvalidCharacter {
            entries: entries.clone(),
            reason,
        };
        let Some(&last) = entries.last() else {
            return Err(invalid("empty sequence"));
        };
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid("entries must be non-increasing"));
        }
        if last < entries.len() as i64 {
            return Err(invalid("smallest entry is below the length"));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// The length σ.
    pub fn length(&self) -> i64 {
        self.entries.len() as i64
    }

    /// `n_0`, the largest entry.
    pub fn top(&self) -> i64 {
        self.entries[0]
    }

    pub fn degree(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &n)| n - i as i64)
            .sum()
    }

    /// `h¹(I_Γ(n))` for a point set Γ with this character.
    pub fn h_deficiency(&self, n: i64) -> Result<i64> {
        if n < 0 {
            return Err(Error::OutOfDomain {
                what: "twist",
                value: n,
                expected: "n >= 0",
            });
        }
        Ok(self.deficiency_unchecked(n))
    }

    fn deficiency_unchecked(&self, n: i64) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &ni)| positive_part(ni - n - 1) - positive_part(i as i64 - n - 1))
            .sum()
    }

    /// `Σ_{m ≥ 1} h(m)`; the terms vanish from `m = n_0 - 1` on.
    pub fn genus(&self) -> i64 {
        (1..self.top()).map(|m| self.deficiency_unchecked(m)).sum()
    }

    /// Consecutive entries differ by at most one.
    pub fn is_connected(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] - w[1] <= 1)
    }
}

impl fmt::Display for NumericalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, n) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for NumericalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for NumericalCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<i64>::deserialize(deserializer)?;
        NumericalCharacter::new(entries).map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for NumericalCharacter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalCharacter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

/// All connected characters of degree `degree` and length `length`, in
/// lexicographically descending order. Empty when none exists.
pub fn enumerate_connected(degree: i64, length: i64) -> Vec<NumericalCharacter> {
    let mut out = Vec::new();
    if degree < 1 || length < 1 {
        return out;
    }
    let sigma = length;
    // Σ n_i = degree + σ(σ-1)/2 and every n_i ≥ n_{σ-1}.
    let total = degree + sigma * (sigma - 1) / 2;
    let mut buf = Vec::with_capacity(sigma as usize);
    for last in sigma..=total / sigma {
        buf.clear();
        buf.push(last);
        extend_upward(&mut buf, sigma as usize, total - last, &mut out);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Builds the sequence from the smallest entry upward. `buf` holds the tail
/// `n_{σ-1}, n_{σ-2}, ...` and `remaining` is what the missing entries must
/// sum to.
fn extend_upward(
    buf: &mut Vec<i64>,
    sigma: usize,
    remaining: i64,
    out: &mut Vec<NumericalCharacter>,
) {
    let missing = (sigma - buf.len()) as i64;
    let current = *buf.last().expect("buffer starts non-empty");
    if missing == 0 {
        if remaining == 0 {
            let entries: Vec<i64> = buf.iter().rev().copied().collect();
            out.push(NumericalCharacter { entries });
        }
        return;
    }
    // Each further entry is current or current + 1, so the missing block sums
    // to between missing*current and missing*current + missing(missing+1)/2.
    let min_sum = missing * current;
    let max_sum = min_sum + missing * (missing + 1) / 2;
    if remaining < min_sum || remaining > max_sum {
        return;
    }
    for step in 0..=1 {
        buf.push(current + step);
        extend_upward(buf, sigma, remaining - current - step, out);
        buf.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalCharacter {
    pub character: NumericalCharacter,
    pub genus: i64,
    /// Several characters share the maximal genus; the lexicographically
    /// largest was returned.
    pub tied: bool,
}

/// The genus-maximal connected character of the given degree and length.
pub fn max_connected_character(degree: i64, length: i64) -> Result<MaximalCharacter> {
    let all = enumerate_connected(degree, length);
    let best = all
        .iter()
        .map(NumericalCharacter::genus)
        .max()
        .ok_or(Error::NoCharacter { degree, length })?;
    let mut winners = all.into_iter().filter(|c| c.genus() == best);
    // Input is in descending order, so the first winner is the largest.
    let character = winners.next().expect("maximum is attained");
    Ok(MaximalCharacter {
        character,
        genus: best,
        tied: winners.next().is_some(),
    })
}
