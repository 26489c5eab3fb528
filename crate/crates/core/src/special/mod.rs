//! Continuous special functions: Riemann, alternating and Hurwitz zeta,
//! digamma and polygamma, `π·cot(π·)`, the parametric polylogarithm and
//! `H_m(x, a)`.
//!
//! Every function takes a [`PrecisionContext`] and returns a value accurate
//! to the context target. Arguments are validated and poles are guarded by
//! the context's pole radius.

mod gamma;
mod polylog;
mod zeta;

use crate::precision::PrecisionContext;
use crate::scalar::{bits_to_digits, Real};

pub use gamma::{aux_sum_reciprocal, digamma, pi_cot_pi, polygamma};
pub use polylog::{h_cap, param_polylog};
pub use zeta::{alt_hurwitz_zeta, alt_zeta, hurwitz_zeta, hurwitz_zeta_int, riemann_zeta, ZetaConvention};

/// Decimal digits the scalar type actually carries under `ctx`.
fn carried_digits<T: Real>(ctx: &PrecisionContext) -> f64 {
    let bits = T::native_bits().unwrap_or_else(|| ctx.bits());
    bits_to_digits(bits)
}

/// Shift threshold for the asymptotic expansions: arguments are moved to at
/// least this value before the Bernoulli series is applied.
fn asymptotic_threshold<T: Real>(ctx: &PrecisionContext) -> f64 {
    (0.6 * carried_digits::<T>(ctx) + 10.0).ceil()
}

/// Number of Bernoulli coefficients the asymptotic series may need.
fn bernoulli_budget<T: Real>(ctx: &PrecisionContext) -> usize {
    carried_digits::<T>(ctx) as usize + 32
}

/// Truncation tolerance for a value of magnitude `mag`.
fn tolerance<T: Real>(ctx: &PrecisionContext, mag: &T) -> T {
    let bits = ctx.bits();
    let t: T = ctx.target();
    t / T::from_i64(16, bits) * mag.abs().max_of(T::one(bits))
}

#[cfg(test)]
mod tests;
