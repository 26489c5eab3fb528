//! High-precision evaluation of parametric Euler sums.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`] defines the [`Real`] trait implemented for `f64` and the
//!   MPFR-backed [`Mp`] type.
//! * [`precision`] holds the precision context, certified series summation
//!   (direct + Euler–Maclaurin) and double-exponential quadrature.
//! * [`special`] provides ζ, ζ̄, Hurwitz ζ, ψ, polygamma, π·cot(π·) and the
//!   parametric polylogarithm.
//! * [`exact`] does harmonic numbers and Stirling numbers in exact arithmetic.
//! * [`euler_sums`] is the identity registry with left- and right-hand
//!   evaluators and the verification driver.
//! * [`residues`] covers the local kernel expansions and residue ledgers.
//! * [`suite`] is the batch runner used by the command-line tool.

pub mod cache;
pub mod error;
pub mod euler_sums;
pub mod exact;
pub mod precision;
pub mod residues;
pub mod scalar;
pub mod special;
pub mod suite;

pub use error::{Error, Result};
pub use precision::{PrecisionContext, SeriesValue, SmoothTerm};
pub use scalar::Real;

/// Multiple-precision binary floating point (MPFR).
pub type Mp = rug::Float;
/// Series value carried at multiple precision.
pub type SeriesValueMp = SeriesValue<Mp>;
/// Verification outcome at multiple precision.
pub type VerificationResultMp = euler_sums::VerificationResult<Mp>;
/// Registry entry evaluated at multiple precision.
pub type IdentityEntryMp = euler_sums::IdentityEntry<Mp>;
/// Kernel expansion with multiple-precision coefficients.
pub type LocalExpansionMp = residues::LocalExpansion<Mp>;
/// Residue ledger at multiple precision.
pub type ResidueLedgerMp = residues::ResidueLedger<Mp>;
