//! Parametric polylogarithm `Li_s(a, x) = Σ_{n≥1} xⁿ/(n+a)^s` and
//! `H_m(x, a) = Σ_{n≥1} x^(n+a)/(n+a)^m = x^a Li_m(a, x)`.

use super::{alt_hurwitz_zeta, hurwitz_zeta_int};
use crate::error::{Error, Result};
use crate::precision::{sum_geometric, PrecisionContext};
use crate::scalar::Real;

/// `Li_s(a, x)` for `s ≥ 1`, `a > −1`, `x ∈ [−1, 1]` (`x = 1` needs `s ≥ 2`).
///
/// `x = 1` gives `ζ(s, a+1)`, `x = −1` gives `−ζ̄(s, a+1)`; interior points
/// are summed directly with a geometric tail bound.
pub fn param_polylog<T: Real>(s: u32, a: &T, x: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    let one = T::one(bits);
    if s == 0 {
        return Err(Error::domain("param_polylog", "s must be at least 1"));
    }
    if !(a.clone() > -one.clone()) {
        return Err(Error::domain("param_polylog", format!("a = {a} must exceed −1")));
    }
    if x.clone() > one.clone() || x.clone() < -one.clone() {
        return Err(Error::domain("param_polylog", format!("x = {x} outside [−1, 1]")));
    }
    let a1 = a.clone() + &one;
    if *x == one {
        if s == 1 {
            return Err(Error::domain("param_polylog", "Li_1(a, 1) diverges"));
        }
        return hurwitz_zeta_int(s, &a1, ctx);
    }
    if *x == -one.clone() {
        return Ok(-alt_hurwitz_zeta(s, &a1, ctx)?);
    }
    if x.is_zero() {
        return Ok(T::zero(bits));
    }
    let mut power = one;
    let r = sum_geometric(
        x.abs().to_f64(),
        |n| {
            power *= x;
            power.clone() * (T::from_i64(n as i64, bits) + a).powi(-(s as i32))
        },
        ctx,
    )?;
    Ok(r.value)
}

/// `H_m(x, a) = x^a Li_m(a, x)`.
///
/// Needs `x ∈ [0, 1]`; negative `x` is accepted only for integer `a`.
/// `(m, x) = (1, 1)` diverges.
pub fn h_cap<T: Real>(m: u32, x: &T, a: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    let zero = T::zero(bits);
    let integer_a = a.round() == *a;
    if x.clone() < zero && !integer_a {
        return Err(Error::domain("h_cap", "negative x needs an integer a"));
    }
    if x.is_zero() {
        return Ok(zero);
    }
    let li = param_polylog(m, a, x, ctx)?;
    let power = if integer_a {
        x.powi(a.to_f64() as i32)
    } else {
        x.powf(a)
    };
    Ok(power * li)
}
