//! Exact numerical-character calculus for space curves and a replayable
//! derivation of degree bounds for a smooth surface in P⁴ contained in a
//! quartic threefold whose singular points are finitely many.
//!
//! Module map:
//!
//! * [`characters`]: numerical characters of plane point sets.
//! * [`genus`]: maximal genus formulas, Jacobi's formula, genus-defect caps.
//! * [`cohomology`]: Riemann-Roch lower bounds for `h²(I_S(k))`.
//! * [`engine`]: case tables and the contradiction search, with traces.
//! * [`reports`]: report documents and the golden verification suite.

pub mod characters;
pub mod cohomology;
pub mod engine;
pub mod error;
pub mod genus;
pub mod rational;
pub mod reports;

pub use characters::{
    enumerate_connected, max_connected_character, MaximalCharacter, NumericalCharacter,
};
pub use cohomology::{BoundFamily, BoundPolynomial, SurfaceInvariants};
pub use engine::{derive_case, derive_theorem, DerivationTrace};
pub use error::{Error, Result};
pub use genus::{CaseResidue, GenusBudget, VanishingAssumption, DEFAULT_MU_CAP};
pub use rational::Rational;
