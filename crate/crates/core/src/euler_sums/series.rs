//! Building blocks for both sides: prefix-weighted series, the `c_n(x)`
//! recurrences, and memoised auxiliary sums keyed by exact parameters.

use num_rational::Rational64;

use super::kit::{Ev, Prefix, PrefixExt};
use crate::error::Result;
use crate::precision::SeriesValue;
use crate::scalar::Real;

pub(crate) type Sv<T> = Result<SeriesValue<T>>;

/// `Σ_{n≥1} g(P(n), n)` where `P(n)` lists the prefixes `ζ_n(p_i, a_i+1)`
/// named by `specs`. The direct head uses running prefixes and the tail
/// their smooth extensions.
pub(crate) fn prefix_series<T, G>(ev: &Ev<'_, T>, decay: f64, specs: &[(u32, T)], g: G) -> Sv<T>
where
    T: Real,
    G: Fn(&[T], &T) -> T + Send + Sync,
{
    let ctx = ev.ctx;
    let exts = specs
        .iter()
        .map(|(p, a)| PrefixExt::new(*p, a, ctx))
        .collect::<Result<Vec<_>>>()?;
    let mut running: Vec<Prefix<T>> = specs.iter().map(|(p, a)| Prefix::new(*p, a)).collect();
    let g = &g;
    ev.smooth_with(
        decay,
        |t: &T| {
            let vals = exts.iter().map(|e| e.eval(t, ctx)).collect::<Result<Vec<_>>>()?;
            Ok(g(&vals, t))
        },
        move |n| {
            let vals: Vec<T> = running.iter_mut().map(Prefix::next).collect();
            Ok(g(&vals, &ev.int(n as i64)))
        },
    )
}

/// `Σ_{n≥1} f(n)` for an explicit rational summand.
pub(crate) fn plain<T, F>(ev: &Ev<'_, T>, decay: f64, f: F) -> Sv<T>
where
    T: Real,
    F: Fn(&T) -> T + Send + Sync,
{
    ev.smooth(decay, |t: &T| Ok(f(t)))
}

/// `c_n(x) = Σ_{j<n} x^(n−j)/j`, advanced one index per call.
pub(crate) struct CSeq<T> {
    x: T,
    n: i64,
    c: T,
}

impl<T: Real> CSeq<T> {
    pub fn new(x: &T) -> Self {
        Self {
            x: x.clone(),
            n: 0,
            c: T::zero(x.precision()),
        }
    }

    pub fn next(&mut self) -> T {
        self.n += 1;
        if self.n > 1 {
            let prev = self.x.int(self.n - 1);
            self.c = self.x.clone() * (self.c.clone() + T::one(self.x.precision()) / prev);
        }
        self.c.clone()
    }
}

/// Key for memoised sums over exact parameters.
pub(crate) type Key = (i64, i64);

pub(crate) fn key(q: Rational64) -> Key {
    (*q.numer(), *q.denom())
}

/// `Σ H_n/(n+a)^j`.
pub(crate) fn harmonic_over_pow<T: Real>(ev: &Ev<'_, T>, a: Rational64, j: u32) -> Sv<T> {
    ev.memo("H/(n+a)^j", (key(a), j), || {
        let av = ev.rational(a);
        let zero = T::zero(ev.bits);
        prefix_series(ev, f64::from(j) - 0.5, &[(1, zero)], |v, t| {
            v[0].clone() * (t.clone() + &av).powi(-(j as i32))
        })
    })
}

/// `Σ H_n²/(n+a)^j`.
pub(crate) fn harmonic_sq_over_pow<T: Real>(ev: &Ev<'_, T>, a: Rational64, j: u32) -> Sv<T> {
    ev.memo("H^2/(n+a)^j", (key(a), j), || {
        let av = ev.rational(a);
        let zero = T::zero(ev.bits);
        prefix_series(ev, f64::from(j) - 0.5, &[(1, zero)], |v, t| {
            v[0].square() * (t.clone() + &av).powi(-(j as i32))
        })
    })
}

/// `Σ H_n/(n(n+a)^j)`.
pub(crate) fn harmonic_over_n_pow<T: Real>(ev: &Ev<'_, T>, a: Rational64, j: u32) -> Sv<T> {
    ev.memo("H/(n(n+a)^j)", (key(a), j), || {
        let av = ev.rational(a);
        let zero = T::zero(ev.bits);
        prefix_series(ev, f64::from(j) + 0.5, &[(1, zero)], |v, t| {
            v[0].clone() / t * (t.clone() + &av).powi(-(j as i32))
        })
    })
}

/// `Σ ζ_n(p, a+1)/(n+a)^i`.
pub(crate) fn prefix_over_pow<T: Real>(ev: &Ev<'_, T>, p: u32, a: Rational64, i: u32) -> Sv<T> {
    ev.memo("zeta_n(p,a+1)/(n+a)^i", (p, key(a), i), || {
        let av = ev.rational(a);
        let decay = if p == 1 { f64::from(i) - 0.5 } else { f64::from(i) };
        prefix_series(ev, decay, &[(p, av.clone())], |v, t| {
            v[0].clone() * (t.clone() + &av).powi(-(i as i32))
        })
    })
}

/// `Σ ζ_n(p, a+1) x^(n+a)/(n+a)^i` for `0 < x < 1`.
pub(crate) fn prefix_power_series<T: Real>(ev: &Ev<'_, T>, p: u32, a: Rational64, x: Rational64, i: u32) -> Sv<T> {
    ev.memo("zeta_n(p,a+1)x^(n+a)/(n+a)^i", (p, key(a), key(x), i), || {
        let av = ev.rational(a);
        let xv = ev.rational(x);
        let mut power = xv.powf(&av);
        let mut prefix = Prefix::new(p, &av);
        let ratio = xv.to_f64().abs();
        ev.geometric(ratio, |n| {
            power *= &xv;
            let z = prefix.next();
            Ok(z * &power * (ev.int(n as i64) + &av).powi(-(i as i32)))
        })
    })
}

/// `Σ 1/((n+a)(n+2a))`.
pub(crate) fn w_sum<T: Real>(ev: &Ev<'_, T>, a: Rational64) -> Sv<T> {
    ev.memo("1/((n+a)(n+2a))", key(a), || {
        let av = ev.rational(a);
        let two_a = av.clone() * ev.int(2);
        plain(ev, 2.0, |t| ((t.clone() + &av) * (t.clone() + &two_a)).powi(-1))
    })
}

/// `Σ 1/((n+a)(n+a+b))`.
pub(crate) fn shifted_product_sum<T: Real>(ev: &Ev<'_, T>, a: Rational64, b: Rational64) -> Sv<T> {
    ev.memo("1/((n+a)(n+a+b))", (key(a), key(b)), || {
        let av = ev.rational(a);
        let ab = ev.rational(a + b);
        plain(ev, 2.0, |t| ((t.clone() + &av) * (t.clone() + &ab)).powi(-1))
    })
}

/// `Σ 1/(n^e (n²−a²)^k)`.
pub(crate) fn quad_sum<T: Real>(ev: &Ev<'_, T>, a: Rational64, e: u32, k: u32) -> Sv<T> {
    ev.memo("1/(n^e(n^2-a^2)^k)", (key(a), e, k), || {
        let a2 = ev.rational(a * a);
        plain(ev, f64::from(e + 2 * k), |t| {
            t.powi(-(e as i32)) * (t.square() - &a2).powi(-(k as i32))
        })
    })
}

/// `Σ {(n+a)^(−e) + (n−a)^(−e) − 2n^(−e)}`.
pub(crate) fn bracket_sum<T: Real>(ev: &Ev<'_, T>, a: Rational64, e: u32) -> Sv<T> {
    ev.memo("(n+a)^-e+(n-a)^-e-2n^-e", (key(a), e), || {
        let av = ev.rational(a);
        let two = ev.int(2);
        let ei = -(e as i32);
        plain(ev, f64::from(e + 2), |t| {
            (t.clone() + &av).powi(ei) + (t.clone() - &av).powi(ei) - t.powi(ei) * &two
        })
    })
}

/// `Σ {(n−a)^(−e) − (n+a)^(−e)}`.
pub(crate) fn difference_sum<T: Real>(ev: &Ev<'_, T>, a: Rational64, e: u32) -> Sv<T> {
    ev.memo("(n-a)^-e-(n+a)^-e", (key(a), e), || {
        let av = ev.rational(a);
        let ei = -(e as i32);
        plain(ev, f64::from(e + 1), |t| (t.clone() - &av).powi(ei) - (t.clone() + &av).powi(ei))
    })
}

/// `Σ 1/(n(n+a)^s)`.
pub(crate) fn reciprocal_pow_sum<T: Real>(ev: &Ev<'_, T>, a: Rational64, s: u32) -> Sv<T> {
    ev.memo("1/(n(n+a)^s)", (key(a), s), || {
        let av = ev.rational(a);
        plain(ev, f64::from(s + 1), |t| (t.clone() + &av).powi(-(s as i32)) / t)
    })
}
