//! Digamma, polygamma and the complement kernel `π·cot(πa)`.

use super::{asymptotic_threshold, bernoulli_budget, hurwitz_zeta_int, tolerance};
use crate::error::{Error, Result};
use crate::precision::{bernoulli_table, PrecisionContext};
use crate::scalar::Real;

/// `ψ(x)` for `x > 0`: upward shift, then
/// `ψ(w) = ln w − 1/(2w) − Σ_j B_{2j}/(2j) · w^(−2j)`.
pub fn digamma<T: Real>(x: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    if !(x.clone() > T::zero(bits)) || !x.is_finite() {
        return Err(Error::domain("digamma", format!("x = {x} must be positive")));
    }
    let threshold = asymptotic_threshold::<T>(ctx);
    let xf = x.to_f64();
    let shift = if xf < threshold { (threshold - xf).ceil() as i64 } else { 0 };
    let one = T::one(bits);
    let mut head = T::zero(bits);
    for k in 0..shift {
        head += one.clone() / (x.clone() + T::from_i64(k, bits));
    }
    let w = x.clone() + T::from_i64(shift, bits);
    let mut value = w.ln() - one.clone() / (w.clone() * T::from_i64(2, bits));
    let table = bernoulli_table::<T>(bernoulli_budget::<T>(ctx), bits);
    let w2_inv = one / (w.clone() * &w);
    let mut w_pow = w2_inv.clone();
    let tol = tolerance(ctx, &value);
    for b in &table.over_index {
        let term = b.clone() * &w_pow;
        let small = term.abs() <= tol;
        value -= term;
        if small {
            return Ok(value - head);
        }
        w_pow *= &w2_inv;
    }
    Err(Error::ConvergenceFailure {
        op: "digamma",
        achieved: f64::NAN,
        target: tol.to_f64(),
        terms: table.over_index.len() as u64,
    })
}

/// `ψ^(m)(x)` for `x > 0`; `m = 0` is [`digamma`], higher orders use
/// `ψ^(m)(x) = (−1)^(m+1) m! ζ(m+1, x)`.
pub fn polygamma<T: Real>(m: u32, x: &T, ctx: &PrecisionContext) -> Result<T> {
    if m == 0 {
        return digamma(x, ctx);
    }
    let bits = ctx.bits();
    if !(x.clone() > T::zero(bits)) {
        return Err(Error::domain("polygamma", format!("x = {x} must be positive")));
    }
    let mut fact = T::one(bits);
    for k in 2..=i64::from(m) {
        fact *= T::from_i64(k, bits);
    }
    let z = hurwitz_zeta_int(m + 1, x, ctx)?;
    let v = fact * z;
    Ok(if m % 2 == 1 { v } else { -v })
}

/// `π·cot(πa)` from the argument reduced to `[−1/2, 1/2]`; arguments within
/// the pole guard of an integer are rejected.
pub fn pi_cot_pi<T: Real>(a: &T, ctx: &PrecisionContext) -> Result<T> {
    let r = a.clone() - a.round();
    if r.abs() < ctx.pole_guard::<T>() {
        return Err(Error::domain("pi_cot_pi", format!("a = {a} is at a pole")));
    }
    let pi = T::pi(ctx.bits());
    let x = pi.clone() * &r;
    Ok(pi * x.cos() / x.sin())
}

/// `Σ_{n≥1} 1/(n(n+a)) = (ψ(a+1) + γ)/a` for `a > −1`, `a ≠ 0`.
pub fn aux_sum_reciprocal<T: Real>(a: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    let one = T::one(bits);
    if !(a.clone() > -one.clone()) {
        return Err(Error::domain("aux_sum_reciprocal", format!("a = {a} must exceed −1")));
    }
    if a.abs() < ctx.pole_guard::<T>() {
        return Err(Error::domain(
            "aux_sum_reciprocal",
            "a is too close to 0; the value there is ζ(2)",
        ));
    }
    let psi = digamma(&(a.clone() + one), ctx)?;
    Ok((psi + T::euler_gamma(bits)) / a)
}
