//! Families built on `H_m(x, a)`: the integral of `H_m(t, a) t^(n+b−1)`,
//! sums weighted by `S_n(x) = Σ_{k≤n} x^(k+e)/(k+e)` and their `x → 1`
//! limits, and the quadratic sums of Hurwitz-type prefixes.

use num_rational::Rational64;

use super::kit::{sign, Ev, Prefix};
use super::point::{Param, ParamPoint};
use super::series::{
    plain, prefix_over_pow, prefix_power_series, prefix_series, quad_sum, shifted_product_sum, w_sum, CSeq, Sv,
};
use crate::error::Result;
use crate::precision::{integrate_adaptive, PrecisionContext, SeriesValue};
use crate::scalar::Real;

/// Truncated power series `Σ_{k≤K} t^k/(k+a)^m` with a bound on the omitted
/// tail valid for `|t| ≤ x_max`.
struct PolylogPoly<T> {
    coeffs: Vec<T>,
    tail: T,
}

impl<T: Real> PolylogPoly<T> {
    fn new(m: u32, a: &T, x_max: &T, ctx: &PrecisionContext) -> Self {
        let bits = ctx.bits();
        let goal = ctx.target::<T>() / T::from_i64(1000, bits);
        let one = T::one(bits);
        let geometric = one.clone() / (one.clone() - x_max.abs());
        let mut coeffs = Vec::new();
        let mut power = one;
        loop {
            let k = coeffs.len() as i64 + 1;
            let c = (T::from_i64(k, bits) + a).powi(-(m as i32));
            power *= x_max;
            let tail = c.clone() * power.abs() * &geometric;
            if tail <= goal && coeffs.len() >= 4 {
                return Self { coeffs, tail };
            }
            coeffs.push(c);
        }
    }

    fn eval(&self, t: &T) -> T {
        let mut acc = T::zero(t.precision());
        for c in self.coeffs.iter().rev() {
            acc = (acc + c) * t;
        }
        acc
    }
}

/// `∫_0^x H_m(t, a) t^(n+b−1) dt` by tanh-sinh quadrature.
pub(crate) fn e4_4_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let b = ev.real(pt, Param::B)?;
    let x = ev.real(pt, Param::X)?;
    let m = pt.int(Param::M)?;
    let n = ev.int(i64::from(pt.int(Param::NSmall)?));
    let poly = PolylogPoly::new(m, &a, &x, ctx);
    let expo = a.clone() + &b + &n;
    let expo_m1 = expo.clone() - ev.int(1);
    let q = integrate_adaptive(|t: &T| t.powf(&expo_m1) * poly.eval(t), &T::zero(ev.bits), &x, ctx)?;
    let truncation = poly.tail.clone() * x.powf(&expo) / &expo;
    Ok(q.widen(&truncation))
}

pub(crate) fn e4_4_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let b = ev.real(pt, Param::B)?;
    let x = ev.real(pt, Param::X)?;
    let m = i64::from(pt.int(Param::M)?);
    let n_small = i64::from(pt.int(Param::NSmall)?);
    let nb = ev.int(n_small) + &b;
    let x_nb = x.powf(&nb);
    let ab = a.clone() + &b;
    let mut total = ev.zero();
    for k in 1..m {
        let c = x_nb.clone() * nb.powi(-(k as i32)) * ev.int(sign(k - 1));
        total = total + ev.h((m + 1 - k) as u32, &x, &a)?.scale(&c);
    }
    let mut finite = T::zero(ev.bits);
    for k in 1..=n_small {
        let e = ev.int(k) + &ab;
        finite += x.powf(&e) / e;
    }
    let brace = ev.h(1, &x, &a)?.scale(&x_nb) + ev.exact(finite) - ev.h(1, &x, &ab)?;
    let c = nb.powi(-(m as i32)) * ev.int(sign(m - 1));
    Ok(total + brace.scale(&c))
}

/// `Σ_n c_n S_n` with `S_n = Σ_{k≤n} scale·x^k/(k+e)`, from `C = Σ c_n`
/// and the integer terms `c_n`, as `C·S_∞ − Σ_k s_k (c_1 + … + c_{k−1})`.
fn against_partial_logs<T, C>(ev: &Ev<'_, T>, total: SeriesValue<T>, mut c: C, x: &T, e: &T, scale: &T) -> Sv<T>
where
    T: Real,
    C: FnMut(u64) -> T,
{
    let ratio = x.abs().to_f64();
    let mut power = scale.clone();
    let s_inf = ev.geometric(ratio, |k| {
        power *= x;
        Ok(power.clone() / (ev.int(k as i64) + e))
    })?;
    let mut power = scale.clone();
    let mut prefix = T::zero(ev.bits);
    let inner = ev.geometric(ratio, |k| {
        power *= x;
        let term = power.clone() / (ev.int(k as i64) + e) * &prefix;
        prefix += c(k);
        Ok(term)
    })?;
    Ok(total * s_inf - inner)
}

/// `Σ {(−1)^(p−1)/(n+a)^(m+p) − (−1)^(m−1)/(n+b)^(m+p)} S_n` with
/// `S_n = Σ_{k≤n} x^(k+a+b)/(k+a+b)`.
pub(crate) fn e4_7_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let b = ev.real(pt, Param::B)?;
    let x = ev.real(pt, Param::X)?;
    let m = i64::from(pt.int(Param::M)?);
    let p = i64::from(pt.int(Param::P)?);
    let w = (m + p) as i32;
    let (sa, sb) = (ev.int(sign(p - 1)), ev.int(sign(m - 1)));
    let coeff = |t: &T| (t.clone() + &a).powi(-w) * &sa - (t.clone() + &b).powi(-w) * &sb;
    let total = plain(&ev, f64::from(w), coeff)?;
    let ab = a.clone() + &b;
    against_partial_logs(&ev, total, |k| coeff(&ev.int(k as i64)), &x, &ab, &x.powf(&ab))
}

pub(crate) fn e4_7_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let b = ev.real(pt, Param::B)?;
    let x = ev.real(pt, Param::X)?;
    let m = i64::from(pt.int(Param::M)?);
    let p = i64::from(pt.int(Param::P)?);
    let ab = a.clone() + &b;
    let h = |k: i64, shift: &T| ev.h(k as u32, &x, shift);
    let mut total = ev.zero();
    for k in 1..m {
        total = total + (h(m + 1 - k, &a)? * h(p + k, &b)?).scale(&ev.int(sign(k - 1)));
    }
    for k in 1..p {
        total = total - (h(p + 1 - k, &b)? * h(m + k, &a)?).scale(&ev.int(sign(k - 1)));
    }
    let h1_ab = h(1, &ab)?;
    let first = h(p + m, &b)? * h(1, &a)? - ev.hurwitz1((p + m) as u32, &b)? * h1_ab.clone();
    let second = h(p + m, &a)? * h(1, &b)? - ev.hurwitz1((p + m) as u32, &a)? * h1_ab;
    Ok(total + first.scale(&ev.int(sign(m - 1))) - second.scale(&ev.int(sign(p - 1))))
}

/// `Σ {(−1)^(p−1)/(n+a)^(m+p) − (−1)^(m−1)/(n+b)^(m+p)} ζ_n(1, a+b+1)`.
pub(crate) fn e4_9_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let b = ev.real(pt, Param::B)?;
    let m = i64::from(pt.int(Param::M)?);
    let p = i64::from(pt.int(Param::P)?);
    let w = (m + p) as i32;
    let (sa, sb) = (ev.int(sign(p - 1)), ev.int(sign(m - 1)));
    let ab = a.clone() + &b;
    prefix_series(&ev, f64::from(w) - 0.5, &[(1, ab)], |v, t| {
        ((t.clone() + &a).powi(-w) * &sa - (t.clone() + &b).powi(-w) * &sb) * &v[0]
    })
}

pub(crate) fn e4_9_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let (aq, bq) = (pt.real(Param::A)?, pt.real(Param::B)?);
    let (a, b) = (ev.rational(aq), ev.rational(bq));
    let m = i64::from(pt.int(Param::M)?);
    let p = i64::from(pt.int(Param::P)?);
    let z = |k: i64, shift: &T| ev.hurwitz1(k as u32, shift);
    let mut total = ev.zero();
    for k in 1..m {
        total = total + (z(m + 1 - k, &a)? * z(p + k, &b)?).scale(&ev.int(sign(k - 1)));
    }
    for k in 1..p {
        total = total - (z(p + 1 - k, &b)? * z(m + k, &a)?).scale(&ev.int(sign(k - 1)));
    }
    let first = z(m + p, &b)? * shifted_product_sum(&ev, aq, bq)?;
    let second = z(m + p, &a)? * shifted_product_sum(&ev, bq, aq)?;
    total = total + first.scale(&(b * ev.int(sign(m - 1))));
    Ok(total - second.scale(&(a * ev.int(sign(p - 1)))))
}

/// `Σ n H_n/(n²−a²)²`.
pub(crate) fn e4_10_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let zero = T::zero(ev.bits);
    prefix_series(&ev, 2.5, &[(1, zero)], |v, t| {
        v[0].clone() * t / (t.square() - &a2).square()
    })
}

/// `ζ(2, 1+a)·Σ 1/(n(n−a))` and `ζ(2, 1−a)·Σ 1/(n(n+a))`.
fn hurwitz_aux_pair<T: Real>(ev: &Ev<'_, T>, a: &T) -> Result<(SeriesValue<T>, SeriesValue<T>)> {
    let neg = -a.clone();
    let plus = ev.hurwitz1(2, a)? * ev.aux(&neg)?;
    let minus = ev.hurwitz1(2, &neg)? * ev.aux(a)?;
    Ok((plus, minus))
}

pub(crate) fn e4_10_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let (plus, minus) = hurwitz_aux_pair(&ev, &a)?;
    Ok((plus + minus).scale(&(T::one(ev.bits) / ev.int(4))))
}

/// `Σ n xⁿ c_n(x)/(n²−a²)²`.
pub(crate) fn e4_11_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let x = ev.real(pt, Param::X)?;
    let mut cx = CSeq::new(&x);
    let mut xn = T::one(ev.bits);
    ev.geometric(x.abs().to_f64(), |n| {
        xn *= &x;
        let t = ev.int(n as i64);
        Ok(xn.clone() * cx.next() * &t / (t.square() - &a2).square())
    })
}

pub(crate) fn e4_11_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let neg = -a.clone();
    let x2 = x.square();
    let l1 = ev.li1(&x);
    let first = ev.li(2, &neg, &x2)? * l1.clone() - ev.li(2, &neg, &x)? * ev.li(1, &neg, &x)?;
    let second = ev.li(2, &a, &x2)? * l1 - ev.li(2, &a, &x)? * ev.li(1, &a, &x)?;
    let quarter_inv_a = (a.clone() * ev.int(4)).powi(-1);
    let a2 = a.square();
    let mut x2n = T::one(ev.bits);
    let tail = ev.geometric(x2.to_f64(), |n| {
        x2n *= &x2;
        let t2 = ev.int(n as i64).square();
        Ok((t2.clone() * ev.int(3) + &a2) * &x2n / (t2 - &a2).powi(3))
    })?;
    let half = T::one(ev.bits) / ev.int(2);
    Ok((first - second).scale(&quarter_inv_a) + tail.scale(&half))
}

pub(crate) fn e4_12_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let a2 = a.square();
    let cubic = plain(&ev, 4.0, |t| {
        let t2 = t.square();
        (t2.clone() * ev.int(3) + &a2) / (t2 - &a2).powi(3)
    })?;
    let neg = -a.clone();
    let pair = ev.hurwitz1(2, &neg)? * ev.aux(&neg)? + ev.hurwitz1(2, &a)? * ev.aux(&a)?;
    let half = T::one(ev.bits) / ev.int(2);
    let quarter = half.clone() / ev.int(2);
    Ok(cubic.scale(&half) + quad_sum(&ev, aq, 0, 2)? - pair.scale(&quarter))
}

/// `(5/2) Σ 1/(n²−a²)² − (Σ 1/(n²−a²))²`.
pub(crate) fn e4_13_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let big_d = plain(&ev, 4.0, |t| (t.square() - &a2).powi(-2))?;
    let big_a = plain(&ev, 2.0, |t| (t.square() - &a2).powi(-1))?;
    Ok(big_d.scale(&(ev.int(5) / ev.int(2))) - big_a.square())
}

pub(crate) fn e4_13_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let two_a2 = ev.rational(aq * aq) * ev.int(2);
    let big_a = quad_sum(&ev, aq, 0, 1)?;
    let big_d = quad_sum(&ev, aq, 0, 2)?;
    let big_e = quad_sum(&ev, aq, 0, 3)?;
    Ok((big_a * big_d - big_e).scale(&two_a2))
}

/// `Σ (n+a)^(−(2m+1)) Σ_{k≤n} x^k/(k+2a)`.
pub(crate) fn e4_14_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let w = 2 * pt.int(Param::M)? as i32 + 1;
    let coeff = |t: &T| (t.clone() + &a).powi(-w);
    let total = plain(&ev, f64::from(w), coeff)?;
    let two_a = a.clone() * ev.int(2);
    against_partial_logs(&ev, total, |k| coeff(&ev.int(k as i64)), &x, &two_a, &T::one(ev.bits))
}

pub(crate) fn e4_14_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let m = i64::from(pt.int(Param::M)?);
    let li = |k: i64, shift: &T| ev.li(k as u32, shift, &x);
    let mut total = ev.zero();
    for k in 1..m {
        total = total + (li(m + 1 - k, &a)? * li(m + 1 + k, &a)?).scale(&ev.int(sign(m + k - 1)));
    }
    let two_a = a.clone() * ev.int(2);
    let middle = li(2 * m + 1, &a)? * li(1, &a)? - ev.hurwitz1((2 * m + 1) as u32, &a)? * li(1, &two_a)?;
    let last = li(m + 1, &a)?.square().scale(&(ev.int(sign(m - 1)) / ev.int(2)));
    Ok(total - middle + last)
}

/// `Σ ζ_n(1, 2a+1)/(n+a)^(2m+1)`.
pub(crate) fn e4_15_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let w = 2 * pt.int(Param::M)? as i32 + 1;
    let two_a = a.clone() * ev.int(2);
    prefix_series(&ev, f64::from(w) - 0.5, &[(1, two_a)], |v, t| {
        v[0].clone() * (t.clone() + &a).powi(-w)
    })
}

pub(crate) fn e4_15_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let m = i64::from(pt.int(Param::M)?);
    let z = |k: i64| ev.hurwitz1(k as u32, &a);
    let mut total = ev.zero();
    for k in 1..m {
        total = total + (z(m + 1 - k)? * z(m + 1 + k)?).scale(&ev.int(sign(m + k - 1)));
    }
    let middle = (z(2 * m + 1)? * w_sum(&ev, aq)?).scale(&a);
    let last = z(m + 1)?.square().scale(&(ev.int(sign(m - 1)) / ev.int(2)));
    Ok(total - middle + last)
}

/// Shape of the two prefix-weighted families against `S_n(x)`.
#[derive(Clone, Copy)]
enum Parity {
    /// Exponent gap `2m`, difference of the two halves.
    Even,
    /// Exponent gap `2m+1`, sum of the two halves.
    Odd,
}

impl Parity {
    fn gap(self, m: u32) -> u32 {
        match self {
            Parity::Even => 2 * m,
            Parity::Odd => 2 * m + 1,
        }
    }

    fn sign(self) -> i64 {
        match self {
            Parity::Even => -1,
            Parity::Odd => 1,
        }
    }
}

/// `(−1)^(p−1) Σ {ζ_n(p+e, b+1)/(n+b)^p ± ζ_n(p, a+1)/(n+a)^(p+e)} S_n`.
fn prefix_log_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, parity: Parity) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let b = ev.real(pt, Param::B)?;
    let x = ev.real(pt, Param::X)?;
    let m = pt.int(Param::M)?;
    let p = pt.int(Param::P)?;
    let q = p + parity.gap(m);
    let (pi, qi) = (p as i32, q as i32);
    let sg = ev.int(parity.sign());
    let combine = |zb: &T, za: &T, t: &T| {
        zb.clone() * (t.clone() + &b).powi(-pi) + za.clone() * (t.clone() + &a).powi(-qi) * &sg
    };
    let total = prefix_series(&ev, f64::from(p), &[(q, b.clone()), (p, a.clone())], |v, t| {
        combine(&v[0], &v[1], t)
    })?;
    let mut pb = Prefix::new(q, &b);
    let mut pa = Prefix::new(p, &a);
    let coeff = |k: u64| {
        let (zb, za) = (pb.next(), pa.next());
        combine(&zb, &za, &ev.int(k as i64))
    };
    let ab = a.clone() + &b;
    let raw = against_partial_logs(&ev, total, coeff, &x, &ab, &x.powf(&ab))?;
    Ok(raw.scale(&ev.int(sign(i64::from(p) - 1))))
}

fn prefix_log_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, parity: Parity) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let (aq, bq, xq) = (pt.real(Param::A)?, pt.real(Param::B)?, pt.real(Param::X)?);
    let (a, b, x) = (ev.rational(aq), ev.rational(bq), ev.rational(xq));
    let m = pt.int(Param::M)?;
    let p = pt.int(Param::P)?;
    let q = p + parity.gap(m);
    let h = |k: u32, shift: &T| ev.h(k, &x, shift);
    let big_a = |i: u32| prefix_power_series(&ev, p, aq, xq, i);
    let big_b = |i: u32| prefix_power_series(&ev, q, bq, xq, i);
    let mut total = ev.zero();
    for i in 1..q {
        total = total + (h(q + 1 - i, &b)? * big_a(i)?).scale(&ev.int(sign(i64::from(i) - 1)));
    }
    for i in 1..p {
        total = total - (h(p + 1 - i, &a)? * big_b(i)?).scale(&ev.int(sign(i64::from(i) - 1)));
    }
    let h1_ab = h(1, &(a.clone() + &b))?;
    let za = prefix_over_pow(&ev, p, aq, q)?;
    let zb = prefix_over_pow(&ev, q, bq, p)?;
    let ca = h(1, &b)? * big_a(q)? - h1_ab.clone() * za;
    let cb = h(1, &a)? * big_b(p)? - h1_ab * zb;
    let sp1 = sign(i64::from(p) - 1);
    let (sa, sb) = match parity {
        Parity::Even => (sp1, -sp1),
        Parity::Odd => (-sp1, -sp1),
    };
    Ok(total + ca.scale(&ev.int(sa)) + cb.scale(&ev.int(sb)))
}

pub(crate) fn e4_16_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_log_lhs(pt, ctx, Parity::Even)
}

pub(crate) fn e4_16_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_log_rhs(pt, ctx, Parity::Even)
}

pub(crate) fn e4_17_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_log_lhs(pt, ctx, Parity::Odd)
}

pub(crate) fn e4_17_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_log_rhs(pt, ctx, Parity::Odd)
}

/// `Σ [ζ(m, a+1) ζ_n(p, a+1) − ζ(p, a+1) ζ_n(m, a+1)]/(n+a)`.
pub(crate) fn e4_21_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let m = pt.int(Param::M)?;
    let p = pt.int(Param::P)?;
    let zm = ev.hurwitz1(m, &a)?.value;
    let zp = ev.hurwitz1(p, &a)?.value;
    prefix_series(&ev, f64::from(m.min(p)), &[(p, a.clone()), (m, a.clone())], |v, t| {
        (zm.clone() * &v[0] - zp.clone() * &v[1]) / (t.clone() + &a)
    })
}

pub(crate) fn e4_21_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let m = pt.int(Param::M)?;
    let p = pt.int(Param::P)?;
    let z = |k: u32| ev.hurwitz1(k, &a);
    let mut total = z(p)? * prefix_over_pow(&ev, 1, aq, m)?;
    total = total - z(m)? * prefix_over_pow(&ev, 1, aq, p)?;
    Ok(total + z(m)? * z(p + 1)? - z(m + 1)? * z(p)?)
}

fn shift_or_zero(pt: &ParamPoint, shifted: bool) -> Result<Rational64> {
    if shifted {
        pt.real(Param::A)
    } else {
        Ok(Rational64::from_integer(0))
    }
}

/// `(−1)^(p−1) Σ {ζ_n(q, a+1)/(n+a)^p ± ζ_n(p, a+1)/(n+a)^q} ζ_n(1, 2a+1)`.
fn prefix_pair_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, parity: Parity, shifted: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.rational(shift_or_zero(pt, shifted)?);
    let m = pt.int(Param::M)?;
    let p = pt.int(Param::P)?;
    let q = p + parity.gap(m);
    let (pi, qi) = (p as i32, q as i32);
    let sg = ev.int(parity.sign());
    let two_a = a.clone() * ev.int(2);
    let specs = [(q, a.clone()), (p, a.clone()), (1, two_a)];
    let sum = prefix_series(&ev, f64::from(p) - 0.5, &specs, |v, t| {
        let ta = t.clone() + &a;
        (v[0].clone() * ta.powi(-pi) + v[1].clone() * ta.powi(-qi) * &sg) * &v[2]
    })?;
    Ok(sum.scale(&ev.int(sign(i64::from(p) - 1))))
}

fn prefix_pair_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, parity: Parity, shifted: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = shift_or_zero(pt, shifted)?;
    let a = ev.rational(aq);
    let m = pt.int(Param::M)?;
    let p = pt.int(Param::P)?;
    let q = p + parity.gap(m);
    let z = |k: u32| ev.hurwitz1(k, &a);
    let zn = |r: u32, i: u32| prefix_over_pow(&ev, r, aq, i);
    let mut total = ev.zero();
    for i in 2..q {
        total = total + (z(q + 1 - i)? * zn(p, i)?).scale(&ev.int(sign(i64::from(i) - 1)));
    }
    for i in 2..p {
        total = total - (z(p + 1 - i)? * zn(q, i)?).scale(&ev.int(sign(i64::from(i) - 1)));
    }
    total = total + z(p)? * zn(1, q)? - z(q)? * zn(1, p)?;
    total = total + z(q)? * z(p + 1)? - z(q + 1)? * z(p)?;
    if shifted {
        let w = w_sum(&ev, aq)?;
        let sp1 = sign(i64::from(p) - 1);
        let tail = match parity {
            Parity::Even => (zn(p, q)? - zn(q, p)?).scale(&ev.int(sp1)),
            Parity::Odd => (zn(p, q)? + zn(q, p)?).scale(&ev.int(-sp1)),
        };
        total = total + (w * tail).scale(&a);
    }
    Ok(total)
}

pub(crate) fn e4_22_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_lhs(pt, ctx, Parity::Even, true)
}

pub(crate) fn e4_22_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_rhs(pt, ctx, Parity::Even, true)
}

pub(crate) fn e4_23_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_lhs(pt, ctx, Parity::Odd, true)
}

pub(crate) fn e4_23_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_rhs(pt, ctx, Parity::Odd, true)
}

pub(crate) fn e4_24_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_lhs(pt, ctx, Parity::Even, false)
}

pub(crate) fn e4_24_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_rhs(pt, ctx, Parity::Even, false)
}

pub(crate) fn e4_25_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_lhs(pt, ctx, Parity::Odd, false)
}

pub(crate) fn e4_25_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    prefix_pair_rhs(pt, ctx, Parity::Odd, false)
}
