//! Certified summation of infinite series.
//!
//! [`sum_series`] handles summands that extend to a smooth function of the
//! index with algebraic decay: terms below a crossover index are added
//! directly and the remainder is completed by Euler–Maclaurin,
//!
//! ```text
//! Σ_{n≥N} f(n) = ∫_N^∞ f + f(N)/2 − Σ_{k=1}^{K} B_{2k}/(2k)! · f^{(2k−1)}(N) + R_K
//! ```
//!
//! with the integral from exp-sinh quadrature and the odd derivatives from
//! central finite differences on the integer stencil around `N`. Alternating
//! series are first paired into a smooth series.
//!
//! [`sum_geometric`] handles summands that decay at least geometrically and
//! only need sequential evaluation.

use crate::error::{Error, Result};
use crate::precision::{bernoulli_table, fd_weights, integrate_to_infinity, PrecisionContext, SeriesValue};
use crate::scalar::Real;

/// Extra stencil points beyond the highest derivative order.
const STENCIL_SLACK: usize = 8;
/// Safety factor on the first omitted Euler–Maclaurin term.
const REMAINDER_FACTOR: i64 = 4;

type Eval<'a, T> = Box<dyn Fn(&T) -> T + Send + Sync + 'a>;
type Direct<'a, T> = Box<dyn FnMut(u64) -> T + Send + 'a>;

/// Summand `f(n)`, `n ≥ 1`, given as a function of a real argument.
///
/// An optional sequential evaluator may supply `f(1), f(2), …` for the
/// directly summed head more cheaply than the smooth extension, e.g. from
/// running partial sums. It is called with consecutive indices starting at 1.
pub struct SmoothTerm<'a, T> {
    eval: Eval<'a, T>,
    direct: Option<Direct<'a, T>>,
    decay_exponent: f64,
    alternating: bool,
}

impl<'a, T: Real> SmoothTerm<'a, T> {
    /// `Σ_{n≥1} f(n)` where `|f(t)| = O(t^-decay_exponent)`.
    pub fn new(decay_exponent: f64, f: impl Fn(&T) -> T + Send + Sync + 'a) -> Self {
        Self {
            eval: Box::new(f),
            direct: None,
            decay_exponent,
            alternating: false,
        }
    }

    /// `Σ_{n≥1} (−1)^(n−1) f(n)`; `f` itself must not carry the sign.
    pub fn alternating(decay_exponent: f64, f: impl Fn(&T) -> T + Send + Sync + 'a) -> Self {
        Self {
            eval: Box::new(f),
            direct: None,
            decay_exponent,
            alternating: true,
        }
    }

    /// Attaches a sequential evaluator for integer indices.
    pub fn with_direct(mut self, f: impl FnMut(u64) -> T + Send + 'a) -> Self {
        self.direct = Some(Box::new(f));
        self
    }

    pub fn eval(&self, t: &T) -> T {
        (self.eval)(t)
    }

    pub fn decay_exponent(&self) -> f64 {
        self.decay_exponent
    }

    pub fn is_alternating(&self) -> bool {
        self.alternating
    }
}

/// Sums a smooth series to the context target.
///
/// Fails with a domain error when the declared decay does not guarantee
/// convergence and with [`Error::ConvergenceFailure`] when the crossover index
/// would exceed the term cap.
pub fn sum_series<T: Real>(term: SmoothTerm<'_, T>, ctx: &PrecisionContext) -> Result<SeriesValue<T>> {
    let SmoothTerm {
        eval,
        direct,
        decay_exponent,
        alternating,
    } = term;
    if alternating {
        if decay_exponent <= 0.0 {
            return Err(Error::domain("sum_series", "alternating summand must decay"));
        }
        let mut paired = SmoothTerm::new(decay_exponent + 1.0, move |t: &T| {
            let two_t = t.clone() * t.int(2);
            let odd = two_t.clone() - t.int(1);
            eval(&odd) - eval(&two_t)
        });
        if let Some(mut d) = direct {
            paired = paired.with_direct(move |n| {
                let odd = d(2 * n - 1);
                odd - d(2 * n)
            });
        }
        let mut r = sum_series(paired, ctx)?;
        r.terms_used *= 2;
        return Ok(r);
    }
    if decay_exponent <= 1.0 {
        return Err(Error::domain(
            "sum_series",
            format!("decay exponent {decay_exponent} does not exceed 1"),
        ));
    }
    let bits = ctx.bits();
    let target: T = ctx.target();
    let mut direct = direct;
    let mut n = ctx.crossover();
    let mut head = T::zero(bits);
    let mut next = 1u64;
    let mut head_abs = T::zero(bits);
    let mut best = f64::INFINITY;
    loop {
        while next < n {
            let v = match direct.as_mut() {
                Some(d) => d(next),
                None => eval(&T::from_i64(next as i64, bits)),
            };
            head_abs += v.abs();
            head += v;
            next += 1;
        }
        match em_tail(&eval, n, ctx) {
            Ok((tail, bound, evals)) => {
                let rounding = head_abs.clone() * ctx.rounding::<T>();
                let total = bound + rounding;
                if total <= target {
                    return Ok(SeriesValue::new(head + tail, total, n - 1 + evals));
                }
                best = best.min(total.to_f64());
            }
            Err(Error::ConvergenceFailure { achieved, .. }) => best = best.min(achieved),
            Err(e) => return Err(e),
        }
        n *= 2;
        if n > ctx.max_terms() {
            return Err(Error::ConvergenceFailure {
                op: "sum_series",
                achieved: best,
                target: target.to_f64(),
                terms: next,
            });
        }
    }
}

/// Euler–Maclaurin completion from index `n`: value, error bound and the
/// number of summand evaluations.
fn em_tail<T: Real>(eval: &Eval<'_, T>, n: u64, ctx: &PrecisionContext) -> Result<(T, T, u64)> {
    let bits = ctx.bits();
    let k = ctx.em_order() as usize;
    let order = 2 * k + 1;
    let m = k + STENCIL_SLACK;
    let wide = fd_weights::<T>(m, order, bits);
    let narrow = fd_weights::<T>(m - 2, order, bits);
    let bern = bernoulli_table::<T>(k + 1, bits);

    let values: Vec<T> = (0..=2 * m)
        .map(|j| eval(&T::from_i64(n as i64 + j as i64 - m as i64, bits)))
        .collect();
    if values.iter().all(Real::is_zero) {
        return Ok((T::zero(bits), T::zero(bits), values.len() as u64));
    }
    let derivative = |weights: &[Vec<T>], offset: usize, ord: usize| {
        let row = &weights[ord];
        let mut acc = T::zero(bits);
        for (w, v) in row.iter().zip(&values[offset..]) {
            acc += w.clone() * v;
        }
        acc
    };

    let mut correction = T::zero(bits);
    let mut fd_error = T::zero(bits);
    for j in 1..=k {
        let ord = 2 * j - 1;
        let d = derivative(&wide, 0, ord);
        let d_narrow = derivative(&narrow, 2, ord);
        let b = &bern.over_factorial[j - 1];
        fd_error += b.abs() * (d.clone() - d_narrow).abs();
        correction += b.clone() * d;
    }
    let omitted = (bern.over_factorial[k].clone() * derivative(&wide, 0, order)).abs();

    let base = T::from_i64(n as i64, bits);
    let integral = integrate_to_infinity(|t: &T| eval(t), &base, &base, ctx)?;
    let value = integral.value + values[m].clone() / T::from_i64(2, bits) - correction;
    let bound = omitted * T::from_i64(REMAINDER_FACTOR, bits) + integral.tail_bound + fd_error;
    Ok((value, bound, values.len() as u64 + integral.terms_used))
}

/// Sums `Σ_{n≥1} t_n` for terms with `|t_{n+1}/t_n| → ratio < 1`.
///
/// The tail after `n` terms is bounded by `|t_n| ρ/(1−ρ)` where `ρ` is the
/// larger of `ratio` and the recently observed term ratios, inflated by
/// `1 + 2/n`.
pub fn sum_geometric<T, F>(ratio: f64, mut term: F, ctx: &PrecisionContext) -> Result<SeriesValue<T>>
where
    T: Real,
    F: FnMut(u64) -> T,
{
    if !(0.0..1.0).contains(&ratio) {
        return Err(Error::domain("sum_geometric", format!("ratio {ratio} outside [0, 1)")));
    }
    let bits = ctx.bits();
    let target: T = ctx.target();
    let quarter = target.clone() / T::from_i64(4, bits);
    let mut sum = T::zero(bits);
    let mut abs_sum = T::zero(bits);
    let mut last_abs: Option<T> = None;
    let mut window = [0.0f64; 4];
    let mut best = f64::INFINITY;
    for n in 1..=ctx.max_terms() {
        let t = term(n);
        if !t.is_finite() {
            return Err(Error::domain("sum_geometric", format!("term {n} is not finite")));
        }
        let a = t.abs();
        sum += t;
        abs_sum += &a;
        if let Some(prev) = &last_abs {
            let observed = if prev.is_zero() {
                if a.is_zero() {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                (a.clone() / prev).to_f64()
            };
            window[(n % 4) as usize] = observed;
        }
        last_abs = Some(a.clone());
        let observed_max = window.iter().copied().fold(0.0, f64::max);
        let rho = ratio.max(observed_max) * (1.0 + 2.0 / n as f64);
        if rho < 1.0 && n >= 8 {
            let rho_t = T::from_f64(rho, bits);
            let bound = a * &rho_t / (T::one(bits) - rho_t);
            best = best.min(bound.to_f64());
            if bound <= quarter {
                let total = bound + abs_sum * ctx.rounding::<T>();
                return Ok(SeriesValue::new(sum, total, n));
            }
        }
    }
    Err(Error::ConvergenceFailure {
        op: "sum_geometric",
        achieved: best,
        target: target.to_f64(),
        terms: ctx.max_terms(),
    })
}
