//! Exact verification of Rota-Baxter Lie algebras, 2-term Rota-Baxter
//! L∞-algebras, their categorified counterparts and crossed modules.
//!
//! All structures are stored as structure constants over exact rationals.
//! Verifiers return a [`VerificationReport`] listing each failing identity
//! instance with its basis indices and residual; constructions re-verify
//! their outputs.

pub mod algebra;
pub mod catalog;
pub mod categorify;
pub mod crossed;
pub mod error;
pub mod format;
pub mod linsolve;
pub mod par;
pub mod report;
pub mod scalar;
pub mod search;
pub mod structure;
pub mod tensor;
pub mod two_term;

pub use error::{Error, Result};
pub use report::{Condition, VerificationReport, Violation};
pub use scalar::Scalar;
