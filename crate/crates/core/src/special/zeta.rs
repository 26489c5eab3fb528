//! Riemann, alternating and Hurwitz zeta functions.

use serde::{Deserialize, Serialize};

use super::{asymptotic_threshold, bernoulli_budget, digamma, tolerance};
use crate::cache;
use crate::error::{Error, Result};
use crate::precision::{bernoulli_table, PrecisionContext};
use crate::scalar::Real;

/// Values assigned to the divergent or continued `ζ(0)` and `ζ(1)` where a
/// formula sums over indices that reach them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaConvention {
    pub zeta_zero: f64,
    pub zeta_one: f64,
}

impl ZetaConvention {
    pub const STANDARD: Self = Self {
        zeta_zero: -0.5,
        zeta_one: 0.0,
    };
}

impl Default for ZetaConvention {
    fn default() -> Self {
        Self::STANDARD
    }
}

/// `ζ(s)` for integer `s ≥ 2`, or `s ∈ {0, 1}` under the convention
/// `ζ(0) = −1/2`, `ζ(1) = 0`. Values are cached per precision.
pub fn riemann_zeta<T: Real>(s: i64, ctx: &PrecisionContext, use_convention: bool) -> Result<T> {
    let bits = ctx.bits();
    match s {
        0 | 1 if use_convention => {
            let c = ZetaConvention::STANDARD;
            let v = if s == 0 { c.zeta_zero } else { c.zeta_one };
            Ok(T::from_f64(v, bits))
        }
        _ if s < 2 => Err(Error::domain(
            "riemann_zeta",
            format!("s = {s} requires s ≥ 2 or the ζ(0)/ζ(1) convention"),
        )),
        _ => {
            let key = s as u64 | u64::from(ctx.decimal_digits()) << 32;
            let cell = cache::shared::<Result<T>, _>("riemann-zeta", bits, key, || {
                hurwitz_zeta_int(s as u32, &T::one(bits), ctx)
            });
            (*cell).clone()
        }
    }
}

/// `ζ̄(s) = Σ (−1)^(n−1)/n^s`: `ln 2` for `s = 1`, `(1 − 2^(1−s))ζ(s)` above.
pub fn alt_zeta<T: Real>(s: i64, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    match s {
        1 => Ok(T::ln2(bits)),
        _ if s < 1 => Err(Error::domain("alt_zeta", format!("s = {s} must be at least 1"))),
        _ => {
            let z: T = riemann_zeta(s, ctx, false)?;
            let factor = T::one(bits) - T::from_i64(2, bits).powi(1 - s as i32);
            Ok(factor * z)
        }
    }
}

/// `ζ(s, q) = Σ_{n≥0} (n+q)^(−s)` for real `s > 1`, `q > 0`.
pub fn hurwitz_zeta<T: Real>(s: &T, q: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    if !(s.clone() > T::one(bits)) {
        return Err(Error::domain("hurwitz_zeta", format!("s = {s} must exceed 1")));
    }
    let rounded = s.round();
    if rounded == *s && rounded.to_f64() < f64::from(i32::MAX) {
        return hurwitz_zeta_int(rounded.to_f64() as u32, q, ctx);
    }
    let neg = -s.clone();
    hurwitz_core(s, q, ctx, |w: &T| w.powf(&neg))
}

/// [`hurwitz_zeta`] for integer `s ≥ 2`.
pub fn hurwitz_zeta_int<T: Real>(s: u32, q: &T, ctx: &PrecisionContext) -> Result<T> {
    if s < 2 {
        return Err(Error::domain("hurwitz_zeta", format!("s = {s} must exceed 1")));
    }
    let bits = ctx.bits();
    hurwitz_core(&T::from_i64(i64::from(s), bits), q, ctx, |w: &T| w.powi(-(s as i32)))
}

/// Shift to `w = q + N` past the asymptotic threshold, then
/// `ζ(s,w) = w^(1−s)/(s−1) + w^(−s)/2 + Σ_j B_{2j}/(2j)! · (s)_{2j−1} · w^(−s−2j+1)`.
fn hurwitz_core<T, P>(s: &T, q: &T, ctx: &PrecisionContext, neg_pow: P) -> Result<T>
where
    T: Real,
    P: Fn(&T) -> T,
{
    let bits = ctx.bits();
    if !(q.clone() > T::zero(bits)) || !q.is_finite() {
        return Err(Error::domain("hurwitz_zeta", format!("q = {q} must be positive")));
    }
    let threshold = asymptotic_threshold::<T>(ctx);
    let qf = q.to_f64();
    let shift = if qf < threshold { (threshold - qf).ceil() as i64 } else { 0 };

    let mut value = T::zero(bits);
    for k in 0..shift {
        value += neg_pow(&(q.clone() + T::from_i64(k, bits)));
    }
    let w = q.clone() + T::from_i64(shift, bits);
    let w_s = neg_pow(&w);
    let one = T::one(bits);
    value += w.clone() * &w_s / (s.clone() - &one);
    value += w_s.clone() / T::from_i64(2, bits);

    let table = bernoulli_table::<T>(bernoulli_budget::<T>(ctx), bits);
    let w2_inv = one.clone() / (w.clone() * &w);
    let mut poch = s.clone();
    let mut w_pow = w_s / &w;
    let tol = tolerance(ctx, &value);
    for j in 1..table.over_factorial.len() {
        let term = table.over_factorial[j - 1].clone() * &poch * &w_pow;
        let small = term.abs() <= tol;
        value += term;
        if small {
            return Ok(value);
        }
        let k = T::from_i64(2 * j as i64, bits);
        poch *= (s.clone() + &k - &one) * (s.clone() + &k);
        w_pow *= &w2_inv;
    }
    Err(Error::ConvergenceFailure {
        op: "hurwitz_zeta",
        achieved: f64::NAN,
        target: tol.to_f64(),
        terms: table.over_factorial.len() as u64,
    })
}

/// `ζ̄(s, q) = Σ_{n≥1} (−1)^(n−1)/(n−1+q)^s` for integer `s ≥ 1`, `q > 0`,
/// from the even/odd split of the Hurwitz series.
pub fn alt_hurwitz_zeta<T: Real>(s: u32, q: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    if !(q.clone() > T::zero(bits)) {
        return Err(Error::domain("alt_hurwitz_zeta", format!("q = {q} must be positive")));
    }
    let two = T::from_i64(2, bits);
    let half_q = q.clone() / &two;
    let half_q1 = (q.clone() + T::one(bits)) / &two;
    match s {
        0 => Err(Error::domain("alt_hurwitz_zeta", "s must be at least 1")),
        1 => {
            let d = digamma(&half_q1, ctx)? - digamma(&half_q, ctx)?;
            Ok(d / two)
        }
        _ => {
            let d = hurwitz_zeta_int(s, &half_q, ctx)? - hurwitz_zeta_int(s, &half_q1, ctx)?;
            Ok(d * two.powi(-(s as i32)))
        }
    }
}
