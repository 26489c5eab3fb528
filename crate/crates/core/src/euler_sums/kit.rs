//! Evaluation helpers shared by the identity evaluators: typed access to
//! special values, engine wrappers that carry evaluator errors out of the
//! summand closures, memoised auxiliary series and the smooth extensions of
//! the harmonic-type prefixes.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::sync::Mutex;

use num_rational::Rational64;

use super::point::{Param, ParamPoint};
use crate::cache;
use crate::error::{Error, Result};
use crate::precision::{sum_geometric, sum_series, PrecisionContext, SeriesValue, SmoothTerm};
use crate::scalar::Real;
use crate::special::{
    alt_hurwitz_zeta, alt_zeta, aux_sum_reciprocal, digamma, h_cap, hurwitz_zeta_int, param_polylog, pi_cot_pi,
    riemann_zeta,
};

/// `H_t = ψ(t+1) + γ`.
pub fn harmonic_ext<T: Real>(t: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    Ok(digamma(&(t.clone() + T::one(bits)), ctx)? + T::euler_gamma(bits))
}

/// `ζ_t(p, a+1)`, the smooth extension of `Σ_{k≤n} 1/(k+a)^p`:
/// `ζ(p, a+1) − ζ(p, t+a+1)` for `p ≥ 2` and `ψ(t+a+1) − ψ(a+1)` for `p = 1`.
pub fn partial_hurwitz_ext<T: Real>(p: u32, a: &T, t: &T, ctx: &PrecisionContext) -> Result<T> {
    PrefixExt::new(p, a, ctx)?.eval(t, ctx)
}

/// [`partial_hurwitz_ext`] with the `t`-independent part computed once.
pub(crate) struct PrefixExt<T> {
    p: u32,
    a1: T,
    full: T,
}

impl<T: Real> PrefixExt<T> {
    pub fn new(p: u32, a: &T, ctx: &PrecisionContext) -> Result<Self> {
        let a1 = a.clone() + T::one(ctx.bits());
        let full = match p {
            0 => return Err(Error::domain("partial_hurwitz_ext", "p must be at least 1")),
            1 => digamma(&a1, ctx)?,
            _ => hurwitz_zeta_int(p, &a1, ctx)?,
        };
        Ok(Self { p, a1, full })
    }

    pub fn eval(&self, t: &T, ctx: &PrecisionContext) -> Result<T> {
        let q = t.clone() + &self.a1;
        if self.p == 1 {
            Ok(digamma(&q, ctx)? - &self.full)
        } else {
            Ok(self.full.clone() - hurwitz_zeta_int(self.p, &q, ctx)?)
        }
    }
}

/// Running prefix `Σ_{k≤n} 1/(k+a)^p` advanced one index per call.
pub(crate) struct Prefix<T> {
    p: i32,
    a: T,
    n: i64,
    acc: T,
}

impl<T: Real> Prefix<T> {
    pub fn new(p: u32, a: &T) -> Self {
        Self {
            p: p as i32,
            a: a.clone(),
            n: 0,
            acc: T::zero(a.precision()),
        }
    }

    /// Advances to the next index and returns the new prefix.
    pub fn next(&mut self) -> T {
        self.n += 1;
        let base = self.a.int(self.n) + &self.a;
        self.acc += base.powi(-self.p);
        self.acc.clone()
    }
}

/// Typed access to the evaluation context.
pub(crate) struct Ev<'c, T> {
    pub ctx: &'c PrecisionContext,
    pub bits: u32,
    _scalar: PhantomData<T>,
}

impl<'c, T: Real> Ev<'c, T> {
    pub fn new(ctx: &'c PrecisionContext) -> Self {
        Self {
            ctx,
            bits: ctx.bits(),
            _scalar: PhantomData,
        }
    }

    pub fn int(&self, v: i64) -> T {
        T::from_i64(v, self.bits)
    }

    pub fn rational(&self, q: Rational64) -> T {
        self.int(*q.numer()) / self.int(*q.denom())
    }

    pub fn real(&self, pt: &ParamPoint, param: Param) -> Result<T> {
        Ok(self.rational(pt.real(param)?))
    }

    /// A value computed by a special function, carrying its accuracy target.
    pub fn special(&self, v: T) -> SeriesValue<T> {
        let bound = self.ctx.target::<T>() * v.abs().max_of(T::one(self.bits));
        SeriesValue::new(v, bound, 0)
    }

    pub fn exact(&self, v: T) -> SeriesValue<T> {
        SeriesValue::exact(v)
    }

    pub fn zero(&self) -> SeriesValue<T> {
        SeriesValue::exact(T::zero(self.bits))
    }

    /// `ζ(s)` with `ζ(0) = −1/2`, `ζ(1) = 0`.
    pub fn zeta(&self, s: i64) -> Result<SeriesValue<T>> {
        Ok(self.special(riemann_zeta(s, self.ctx, true)?))
    }

    pub fn alt_zeta(&self, s: i64) -> Result<SeriesValue<T>> {
        Ok(self.special(alt_zeta(s, self.ctx)?))
    }

    /// `ζ(s, q)`.
    pub fn hurwitz(&self, s: u32, q: &T) -> Result<SeriesValue<T>> {
        Ok(self.special(hurwitz_zeta_int(s, q, self.ctx)?))
    }

    /// `ζ(s, a+1)`.
    pub fn hurwitz1(&self, s: u32, a: &T) -> Result<SeriesValue<T>> {
        self.hurwitz(s, &(a.clone() + T::one(self.bits)))
    }

    /// `ζ̄(s, a+1)`.
    pub fn alt_hurwitz1(&self, s: u32, a: &T) -> Result<SeriesValue<T>> {
        Ok(self.special(alt_hurwitz_zeta(s, &(a.clone() + T::one(self.bits)), self.ctx)?))
    }

    pub fn pi_cot(&self, a: &T) -> Result<SeriesValue<T>> {
        Ok(self.special(pi_cot_pi(a, self.ctx)?))
    }

    /// `Σ 1/(n(n+a))`.
    pub fn aux(&self, a: &T) -> Result<SeriesValue<T>> {
        Ok(self.special(aux_sum_reciprocal(a, self.ctx)?))
    }

    /// `a · Σ 1/(n(n+a))`, which vanishes at `a = 0`.
    pub fn a_aux(&self, a: &T) -> Result<SeriesValue<T>> {
        if a.is_zero() {
            return Ok(self.zero());
        }
        Ok(self.aux(a)? * a.clone())
    }

    /// `Li_s(a, x)`.
    pub fn li(&self, s: u32, a: &T, x: &T) -> Result<SeriesValue<T>> {
        Ok(self.special(param_polylog(s, a, x, self.ctx)?))
    }

    /// `Li_1(x) = −ln(1−x)`.
    pub fn li1(&self, x: &T) -> SeriesValue<T> {
        let one = T::one(self.bits);
        self.special(-(one - x).ln())
    }

    /// `H_m(x, a)`.
    pub fn h(&self, m: u32, x: &T, a: &T) -> Result<SeriesValue<T>> {
        Ok(self.special(h_cap(m, x, a, self.ctx)?))
    }

    /// `Σ_{n≥1} f(n)` by the accelerated engine.
    pub fn smooth<F>(&self, decay: f64, f: F) -> Result<SeriesValue<T>>
    where
        F: Fn(&T) -> Result<T> + Send + Sync,
    {
        self.engine(decay, false, f, None::<fn(u64) -> Result<T>>)
    }

    /// As [`Ev::smooth`] with a sequential evaluator for the direct head.
    pub fn smooth_with<F, D>(&self, decay: f64, f: F, direct: D) -> Result<SeriesValue<T>>
    where
        F: Fn(&T) -> Result<T> + Send + Sync,
        D: FnMut(u64) -> Result<T> + Send,
    {
        self.engine(decay, false, f, Some(direct))
    }

    /// `Σ (−1)^(n−1) f(n)`.
    pub fn alternating<F, D>(&self, decay: f64, f: F, direct: Option<D>) -> Result<SeriesValue<T>>
    where
        F: Fn(&T) -> Result<T> + Send + Sync,
        D: FnMut(u64) -> Result<T> + Send,
    {
        self.engine(decay, true, f, direct)
    }

    fn engine<F, D>(&self, decay: f64, alternating: bool, f: F, direct: Option<D>) -> Result<SeriesValue<T>>
    where
        F: Fn(&T) -> Result<T> + Send + Sync,
        D: FnMut(u64) -> Result<T> + Send,
    {
        let failure: Mutex<Option<Error>> = Mutex::new(None);
        let bits = self.bits;
        let record = |r: Result<T>| match r {
            Ok(v) => v,
            Err(e) => {
                failure.lock().expect("failure slot").get_or_insert(e);
                T::zero(bits)
            }
        };
        let rec = &record;
        let eval = |t: &T| rec(f(t));
        let mut term = if alternating {
            SmoothTerm::alternating(decay, eval)
        } else {
            SmoothTerm::new(decay, eval)
        };
        if let Some(mut d) = direct {
            term = term.with_direct(move |n| rec(d(n)));
        }
        let r = sum_series(term, self.ctx);
        if let Some(e) = failure.into_inner().expect("failure slot") {
            return Err(e);
        }
        r
    }

    /// `Σ_{n≥1} t_n` for terms decaying like `ratioⁿ`.
    pub fn geometric<F>(&self, ratio: f64, mut term: F) -> Result<SeriesValue<T>>
    where
        F: FnMut(u64) -> Result<T>,
    {
        let mut failure = None;
        let bits = self.bits;
        let r = sum_geometric(
            ratio,
            |n| match term(n) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    T::zero(bits)
                }
            },
            self.ctx,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        r
    }

    /// Memoises an auxiliary series under `(tag, key)` for this context.
    pub fn memo<K, F>(&self, tag: &'static str, key: K, build: F) -> Result<SeriesValue<T>>
    where
        K: Hash,
        F: FnOnce() -> Result<SeriesValue<T>>,
    {
        let mut h = DefaultHasher::new();
        tag.hash(&mut h);
        key.hash(&mut h);
        self.ctx.hash(&mut h);
        let slot = cache::shared::<Result<SeriesValue<T>>, _>("euler-sums-memo", self.bits, h.finish(), build);
        (*slot).clone()
    }
}

/// `(−1)^k` as an integer.
pub(crate) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficient for small arguments; zero outside `0 ≤ k ≤ n`.
pub(crate) fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    num_integer::binomial(n, k)
}
