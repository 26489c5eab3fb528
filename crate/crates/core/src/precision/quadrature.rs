//! Double-exponential quadrature: tanh-sinh on finite intervals and exp-sinh
//! on `[base, ∞)`.
//!
//! Each refinement level halves the step and only evaluates the new (odd)
//! nodes. The error estimate is the last level difference scaled by the
//! observed contraction ratio, which over-estimates the true error of a
//! quadratically converging rule.

use std::sync::Arc;

use crate::cache;
use crate::error::{Error, Result};
use crate::precision::{PrecisionContext, SeriesValue};
use crate::scalar::{bits_to_digits, Real};

const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 12;
/// Consecutive negligible contributions that end the walk along one side.
const NEGLIGIBLE_RUN: usize = 4;

/// Abscissa parameter and weight for `u = k·2^-level`, `k ≥ 0`
/// (`k` odd above level 0), ordered by increasing `u`.
struct Nodes<T> {
    pos: Vec<(T, T)>,
    neg: Vec<(T, T)>,
}

fn level_ks(level: u32, u_cap: f64) -> Vec<i64> {
    let h = (0.5f64).powi(level as i32);
    let kmax = (u_cap / h).floor() as i64;
    (0..=kmax)
        .filter(|k| level == 0 || k % 2 == 1)
        .collect()
}

fn u_cap(bits: u32, scale: f64) -> f64 {
    let d = bits_to_digits(bits) + 5.0;
    (scale * d * std::f64::consts::LN_10 / std::f64::consts::PI).asinh() + 0.25
}

/// tanh-sinh: `(c, w)` with `c = 1 - tanh(v)`, `w = (π/2) cosh u / cosh² v`,
/// `v = (π/2) sinh u`.
fn tanh_sinh_nodes<T: Real>(level: u32, bits: u32) -> Arc<Nodes<T>> {
    cache::shared("tanh-sinh", bits, u64::from(level), || {
        let cap = u_cap(bits, 2.0);
        let h = T::one(bits) / T::from_i64(1i64 << level, bits);
        let half_pi = T::pi(bits) / T::from_i64(2, bits);
        let pos = level_ks(level, cap)
            .into_iter()
            .map(|k| {
                let u = h.clone() * T::from_i64(k, bits);
                let v = half_pi.clone() * u.sinh();
                let cv = v.cosh();
                let c = (-v).exp() / &cv;
                let w = half_pi.clone() * u.cosh() / (cv.clone() * &cv);
                (c, w)
            })
            .collect();
        Nodes { pos, neg: Vec::new() }
    })
}

/// exp-sinh: `(x, w)` with `x = exp((π/2) sinh u)`, `w = (π/2) cosh u · x`.
fn exp_sinh_nodes<T: Real>(level: u32, bits: u32) -> Arc<Nodes<T>> {
    cache::shared("exp-sinh", bits, u64::from(level), || {
        let cap = u_cap(bits, 4.0);
        let h = T::one(bits) / T::from_i64(1i64 << level, bits);
        let half_pi = T::pi(bits) / T::from_i64(2, bits);
        let node = |k: i64| {
            let u = h.clone() * T::from_i64(k, bits);
            let x = (half_pi.clone() * u.sinh()).exp();
            let w = half_pi.clone() * u.cosh() * &x;
            (x, w)
        };
        let ks = level_ks(level, cap);
        let pos = ks.iter().map(|&k| node(k)).collect();
        let neg = ks.iter().filter(|&&k| k > 0).map(|&k| node(-k)).collect();
        Nodes { pos, neg }
    })
}

/// Sums contributions along one side, stopping after a run of negligible
/// terms. Returns the partial sum and the number of evaluations.
fn walk_side<T: Real, I>(contribs: I, threshold: &T) -> Result<(T, u64)>
where
    I: Iterator<Item = Option<T>>,
{
    let mut sum: Option<T> = None;
    let mut evals = 0u64;
    let mut quiet = 0usize;
    for c in contribs {
        evals += 1;
        let Some(c) = c else {
            continue;
        };
        if !c.is_finite() {
            return Err(Error::domain("quadrature", "integrand is not finite at a node"));
        }
        if c.abs() <= *threshold {
            quiet += 1;
        } else {
            quiet = 0;
        }
        sum = Some(match sum {
            Some(s) => s + c,
            None => c,
        });
        if quiet >= NEGLIGIBLE_RUN {
            break;
        }
    }
    let bits = threshold.precision();
    Ok((sum.unwrap_or_else(|| T::zero(bits)), evals))
}

struct Refiner<T> {
    total: Option<T>,
    history: Vec<T>,
    evals: u64,
}

impl<T: Real> Refiner<T> {
    fn new() -> Self {
        Self {
            total: None,
            history: Vec::new(),
            evals: 0,
        }
    }

    /// Runs levels until the error estimate meets `tol_abs·max(1,|I|)`.
    fn run<F>(mut self, op: &'static str, ctx: &PrecisionContext, mut level_sum: F) -> Result<SeriesValue<T>>
    where
        F: FnMut(u32, &T) -> Result<(T, u64)>,
    {
        let bits = ctx.bits();
        let tol: T = ctx.target();
        let eps = T::epsilon(bits);
        let mut prev_diff: Option<T> = None;
        let max_level = if T::native_bits().is_some() { 8 } else { MAX_LEVEL };
        for level in 0..=max_level {
            let scale = self
                .history
                .last()
                .map(|v: &T| v.abs())
                .unwrap_or_else(|| T::one(bits));
            let threshold = eps.clone() * &scale / T::from_i64(1 << 10, bits);
            let (s, n) = level_sum(level, &threshold)?;
            self.evals += n;
            let total = match self.total.take() {
                Some(t) => t + s,
                None => s,
            };
            let h = T::one(bits) / T::from_i64(1i64 << level, bits);
            let estimate = total.clone() * &h;
            self.total = Some(total);
            if let Some(last) = self.history.last() {
                let diff = (estimate.clone() - last).abs();
                let err = match &prev_diff {
                    Some(pd) if diff < *pd && !pd.is_zero() => diff.clone() * &diff / pd,
                    _ => diff.clone(),
                };
                let mag = estimate.abs().max_of(T::one(bits));
                let floor = eps.clone() * &mag * T::from_i64(self.evals.max(1) as i64, bits);
                if level >= MIN_LEVEL && err <= tol.clone() * &mag {
                    let bound = err.max_of(floor);
                    return Ok(SeriesValue::new(estimate, bound, self.evals));
                }
                prev_diff = Some(diff);
            }
            self.history.push(estimate);
        }
        let achieved = prev_diff.map(|d| d.to_f64()).unwrap_or(f64::INFINITY);
        Err(Error::ConvergenceFailure {
            op,
            achieved,
            target: tol.to_f64(),
            terms: self.evals,
        })
    }
}

/// `∫_lo^hi f(t) dt` by tanh-sinh quadrature.
///
/// Nodes that round onto an endpoint are skipped, so `f` is never evaluated
/// at `lo` or `hi`; integrable algebraic endpoint singularities are handled by
/// the double-exponential clustering.
pub fn integrate_adaptive<T, F>(f: F, lo: &T, hi: &T, ctx: &PrecisionContext) -> Result<SeriesValue<T>>
where
    T: Real,
    F: Fn(&T) -> T,
{
    if !(lo < hi) {
        return Err(Error::domain("integrate_adaptive", "requires lo < hi"));
    }
    let bits = ctx.bits();
    let half = (hi.clone() - lo) / T::from_i64(2, bits);
    Refiner::new().run("integrate_adaptive", ctx, |level, threshold| {
        let nodes = tanh_sinh_nodes::<T>(level, bits);
        let mut evals = 0;
        let mut sum = T::zero(bits);
        for upper in [true, false] {
            let side = nodes.pos.iter().map(|(c, w)| {
                if level == 0 && c == &T::one(bits) && !upper {
                    return None;
                }
                let off = half.clone() * c;
                let t = if upper { hi.clone() - off } else { lo.clone() + off };
                if t <= *lo || t >= *hi {
                    return None;
                }
                Some(f(&t) * w * &half)
            });
            let (s, n) = walk_side(side, threshold)?;
            sum += s;
            evals += n;
        }
        Ok((sum, evals))
    })
}

/// `∫_base^∞ f(t) dt` by exp-sinh quadrature with `t = base + scale·x`.
pub fn integrate_to_infinity<T, F>(
    f: F,
    base: &T,
    scale: &T,
    ctx: &PrecisionContext,
) -> Result<SeriesValue<T>>
where
    T: Real,
    F: Fn(&T) -> T,
{
    if !(scale.clone() > T::zero(ctx.bits())) {
        return Err(Error::domain("integrate_to_infinity", "scale must be positive"));
    }
    let bits = ctx.bits();
    Refiner::new().run("integrate_to_infinity", ctx, |level, threshold| {
        let nodes = exp_sinh_nodes::<T>(level, bits);
        let eval = |(x, w): &(T, T)| {
            let t = base.clone() + scale.clone() * x;
            if t <= *base {
                return None;
            }
            Some(f(&t) * w * scale)
        };
        let (a, na) = walk_side(nodes.pos.iter().map(eval), threshold)?;
        let (b, nb) = walk_side(nodes.neg.iter().map(eval), threshold)?;
        Ok((a + b, na + nb))
    })
}
