use thiserror::Error;

use crate::engine::BranchLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid numerical character {entries:?}: {reason}")]
    InvalidCharacter {
        entries: Vec<i64>,
        reason: &'static str,
    },

    #[error("{what} = {value} is out of domain ({expected})")]
    OutOfDomain {
        what: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("no connected numerical character of degree {degree} and length {length}")]
    NoCharacter { degree: i64, length: i64 },

    #[error("d = {degree} is outside the formula's validity range d > {floor}")]
    OutsideValidityRange { degree: i64, floor: i64 },

    #[error("d^2 = {square} and mu = {mu} are not congruent mod 8")]
    IncongruentMilnor { square: i64, mu: i64 },

    #[error("non-integral value {value} in {context}")]
    NonIntegral {
        context: &'static str,
        value: String,
    },

    #[error("unknown vanishing assumption `{0}` (expected `pg0` or `omega`)")]
    UnknownAssumption(String),

    #[error("unknown bound family `{0}` (expected `rho`, `lambda`, `phi` or `full`)")]
    UnknownFamily(String),

    #[error("mu cap {mu_cap} admits no nonnegative genus defect for residue {residue}")]
    MuCapTooSmall { mu_cap: i64, residue: u8 },

    #[error(
        "mu cap {mu_cap} allows defect {requested} for residue {residue}, beyond the curve table's range (max {supported})"
    )]
    TableRangeExceeded {
        mu_cap: i64,
        residue: u8,
        requested: i64,
        supported: i64,
    },

    #[error("branch {branch} (residue {residue}): no contradiction found up to k = {limit}")]
    NoContradiction {
        branch: BranchLabel,
        residue: u8,
        limit: i64,
    },

    #[error("lower bound family is not increasing for branch {branch}: k = {k}, defect = {delta}")]
    NotMonotone {
        branch: BranchLabel,
        k: i64,
        delta: i64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
