//! Linear sums: `ζ_n(k)` against `1/(n²−a²)`-type weights, the `c_n(x)`
//! power-series family, and the Hurwitz-type linear sums with their `a = 0`
//! classical forms.

use super::kit::{binom, Ev};
use super::point::{Param, ParamPoint};
use super::series::{
    bracket_sum, difference_sum, plain, prefix_series, quad_sum, reciprocal_pow_sum, CSeq, Sv,
};
use crate::precision::{PrecisionContext, SeriesValue};
use crate::scalar::Real;

fn half<T: Real>(ev: &Ev<'_, T>, v: SeriesValue<T>) -> SeriesValue<T> {
    v.scale(&(T::one(ev.bits) / ev.int(2)))
}

/// `Σ ζ_n(2m)/(n(n²−a²))`.
pub(crate) fn e2_13_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let m = pt.int(Param::M)?;
    let zero = T::zero(ev.bits);
    prefix_series(&ev, 3.0, &[(2 * m, zero)], |v, t| {
        v[0].clone() / (t.clone() * (t.square() - &a2))
    })
}

pub(crate) fn e2_13_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let m = pt.int(Param::M)?;
    let inv_a2 = a.square().powi(-1);
    let mut total = half(&ev, quad_sum(&ev, aq, 2 * m + 1, 1)?);
    let cot = ev.pi_cot(&a)? * (inv_a2.clone() / ev.int(4));
    total = total - cot * difference_sum(&ev, aq, 2 * m)?;
    let mut zsum = ev.zero();
    for k in 1..=m {
        zsum = zsum + ev.zeta(2 * i64::from(k))? * bracket_sum(&ev, aq, 2 * m - 2 * k + 1)?;
    }
    total = total + zsum.scale(&(inv_a2.clone() / ev.int(2)));
    total = total + ev.zeta(2 * i64::from(m) + 1)?.scale(&(inv_a2.clone() * ev.int(i64::from(m))));
    Ok(total - bracket_sum(&ev, aq, 2 * m + 1)?.scale(&(inv_a2 / ev.int(4))))
}

/// `Σ ζ_n(2m+1)/(n^(2s)(n²−a²))`, with `ζ_n(1) = H_n`.
pub(crate) fn e2_14_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let m = pt.int(Param::M)?;
    let s = pt.int(Param::S)? as i32;
    let zero = T::zero(ev.bits);
    let decay = f64::from(2 * s + 2) - if m == 0 { 0.5 } else { 0.0 };
    prefix_series(&ev, decay, &[(2 * m + 1, zero)], |v, t| {
        v[0].clone() * t.powi(-2 * s) / (t.square() - &a2)
    })
}

pub(crate) fn e2_14_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    e2_14_rhs_with(pt, ctx, false)
}

pub(crate) fn e2_14_rhs_corrected<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    e2_14_rhs_with(pt, ctx, true)
}

fn e2_14_rhs_with<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, corrected: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let m = i64::from(pt.int(Param::M)?);
    let s = i64::from(pt.int(Param::S)?);
    let inv_a = |e: i64| a.powi(-(e as i32));
    let z = |k: i64| ev.zeta(k);

    let t1 = half(&ev, quad_sum(&ev, aq, (2 * s + 2 * m + 1) as u32, 1)?);

    let mut t2 = ev.zero();
    for n in 1..=s {
        for k in 1..=n {
            let c = if corrected {
                binom(2 * m + 2 * k - 2, 2 * k - 2)
            } else {
                binom(2 * m + 2 * k - 1, 2 * k - 1)
            };
            let term = z(2 * m + 2 * k - 1)? * z(2 * n - 2 * k + 2)?;
            t2 = t2 + term.scale(&(ev.int(c) * inv_a(2 * s - 2 * n + 2)));
        }
    }

    let t3 = if s > 0 {
        let a2 = a.square();
        let a_pow = inv_a(2 * s);
        let series = plain(&ev, 2.0, |t| (t.powi(-2 * s as i32) - &a_pow) / (t.square() - &a2))?;
        z(2 * m + 1)? * series
    } else {
        ev.zero()
    };

    let mut t4 = ev.zero();
    for k in 2..=s + 1 {
        let c = binom(2 * m + 2 * k - 2, 2 * k - 2);
        t4 = t4 + z(2 * m + 2 * k - 1)?.scale(&(ev.int(c) * inv_a(2 * s - 2 * k + 4)));
    }
    let t4 = -half(&ev, t4);

    let t5 = ev.pi_cot(&a)? * bracket_sum(&ev, aq, (2 * m + 1) as u32)?;
    let t5 = t5.scale(&(inv_a(2 * s + 1) / ev.int(4)));

    let mut t6 = ev.zero();
    for j in 1..=s {
        let c = binom(2 * m + 2 * j, 2 * j - 1);
        t6 = t6 + z(2 * m + 2 * j + 1)?.scale(&(ev.int(c) * inv_a(2 * s + 2 - 2 * j)));
    }
    let t6 = -half(&ev, t6);

    let mut t7 = ev.zero();
    for k in 1..=m {
        for j in 1..=s {
            let c = binom(2 * m - 2 * k + 2 * j, 2 * j - 1);
            let term = z(2 * k)? * z(2 * m + 2 * j - 2 * k + 1)?;
            t7 = t7 + term.scale(&(ev.int(c) * inv_a(2 * s + 2 - 2 * j)));
        }
    }

    let mut t8 = ev.zero();
    for k in 0..=m {
        t8 = t8 + z(2 * k)? * difference_sum(&ev, aq, (2 * m - 2 * k + 2) as u32)?;
    }
    let t8 = -t8.scale(&(inv_a(2 * s + 1) / ev.int(2)));

    Ok(t1 + t2 + t3 + t4 + t5 + t6 + t7 + t8)
}

/// `Σ ζ_n(2m+1)/(n²−a²)`.
pub(crate) fn e2_16_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let m = pt.int(Param::M)?;
    let zero = T::zero(ev.bits);
    let decay = if m == 0 { 1.5 } else { 2.0 };
    prefix_series(&ev, decay, &[(2 * m + 1, zero)], |v, t| v[0].clone() / (t.square() - &a2))
}

pub(crate) fn e2_16_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let m = pt.int(Param::M)?;
    let mut total = half(&ev, quad_sum(&ev, aq, 2 * m + 1, 1)?);
    let mut zsum = ev.zero();
    for k in 0..=m {
        zsum = zsum + ev.zeta(2 * i64::from(k))? * difference_sum(&ev, aq, 2 * m - 2 * k + 2)?;
    }
    let inv_a = a.powi(-1);
    total = total - zsum.scale(&(inv_a.clone() / ev.int(2)));
    let cot = ev.pi_cot(&a)? * bracket_sum(&ev, aq, 2 * m + 1)?;
    Ok(total + cot.scale(&(inv_a / ev.int(4))))
}

/// `Σ [yⁿ c_n(x) + xⁿ c_n(y)]/(n+a)^s`.
pub(crate) fn e2_17_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let y = ev.real(pt, Param::Y)?;
    let s = pt.int(Param::S)? as i32;
    let ratio = x.abs().max_of(y.abs()).to_f64();
    let (mut cx, mut cy) = (CSeq::new(&x), CSeq::new(&y));
    let (mut xn, mut yn) = (T::one(ev.bits), T::one(ev.bits));
    ev.geometric(ratio, |n| {
        xn *= &x;
        yn *= &y;
        let num = yn.clone() * cx.next() + xn.clone() * cy.next();
        Ok(num * (ev.int(n as i64) + &a).powi(-s))
    })
}

pub(crate) fn e2_17_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let y = ev.real(pt, Param::Y)?;
    let s = pt.int(Param::S)?;
    let xy = x.clone() * &y;
    let mut total = ev.li(s + 1, &a, &xy)?.scale(&ev.int(i64::from(s)));
    for j in 1..=s {
        total = total - ev.li(j, &a, &x)? * ev.li(s + 1 - j, &a, &y)?;
    }
    Ok(total + ev.li(s, &a, &xy)? * (ev.li1(&x) + ev.li1(&y)))
}

/// `Σ xⁿ c_n(x)/(n+a)^s`.
pub(crate) fn e2_21_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let s = pt.int(Param::S)? as i32;
    let mut cx = CSeq::new(&x);
    let mut xn = T::one(ev.bits);
    ev.geometric(x.abs().to_f64(), |n| {
        xn *= &x;
        Ok(xn.clone() * cx.next() * (ev.int(n as i64) + &a).powi(-s))
    })
}

pub(crate) fn e2_21_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let x = ev.real(pt, Param::X)?;
    let s = pt.int(Param::S)?;
    let x2 = x.square();
    let mut total = half(&ev, ev.li(s + 1, &a, &x2)?.scale(&ev.int(i64::from(s))));
    total = total + ev.li(s, &a, &x2)? * ev.li1(&x);
    total = total - ev.li(s, &a, &x)? * ev.li(1, &a, &x)?;
    let mut mid = ev.zero();
    for j in 2..s {
        mid = mid + ev.li(j, &a, &x)? * ev.li(s + 1 - j, &a, &x)?;
    }
    Ok(total - half(&ev, mid))
}

/// `Σ L_n(1)/(n+a)^s`, split as `ln 2 · Σ 1/(n+a)^s` plus the alternating
/// series of `ζ̄(1, n+1)/(n+a)^s`.
pub(crate) fn e2_22_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let s = pt.int(Param::S)?;
    alt_harmonic_sum(&ev, &a, s)
}

fn alt_harmonic_sum<T: Real>(ev: &Ev<'_, T>, a: &T, s: u32) -> Sv<T> {
    let ctx = ev.ctx;
    let bits = ev.bits;
    let si = s as i32;
    let ln2 = T::ln2(bits);
    let head = plain(ev, f64::from(s), |t| (t.clone() + a).powi(-si))?.scale(&ln2);
    let mut running = T::zero(bits);
    let one = T::one(bits);
    let direct = move |n: u64| {
        let term = one.clone() / ev.int(n as i64);
        if n % 2 == 1 {
            running += term;
        } else {
            running -= term;
        }
        let tail = running.clone() - &ln2;
        let tail = if n % 2 == 1 { tail } else { -tail };
        Ok(tail * (ev.int(n as i64) + a).powi(-si))
    };
    let alt = ev.alternating(
        f64::from(s) + 1.0,
        |t: &T| {
            let z = crate::special::alt_hurwitz_zeta(1, &(t.clone() + T::one(bits)), ctx)?;
            Ok(z * (t.clone() + a).powi(-si))
        },
        Some(direct),
    )?;
    Ok(head + alt)
}

pub(crate) fn e2_22_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let s = pt.int(Param::S)?;
    let si = s as i32;
    let mut mid = ev.zero();
    for j in 1..s.saturating_sub(1) {
        mid = mid + ev.alt_hurwitz1(s - j, &a)? * ev.alt_hurwitz1(j + 1, &a)?;
    }
    let mut total = half(&ev, mid);
    total = total - half(&ev, ev.hurwitz1(s + 1, &a)?.scale(&ev.int(i64::from(s))));
    total = total + ev.hurwitz1(s, &a)?.scale(&T::ln2(ev.bits));
    total = total + ev.alt_hurwitz1(s, &a)? * ev.alt_hurwitz1(1, &a)?;
    let alt = ev.alternating(
        f64::from(s) + 1.0,
        |t: &T| Ok((t.clone() + &a).powi(-si) / t),
        None::<fn(u64) -> crate::error::Result<T>>,
    )?;
    Ok(total + alt)
}

/// `Σ H_n/(n+a)^s`.
pub(crate) fn e2_24_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.real(pt, Param::A)?;
    let s = pt.int(Param::S)? as i32;
    let zero = T::zero(ev.bits);
    prefix_series(&ev, f64::from(s) - 0.5, &[(1, zero)], |v, t| {
        v[0].clone() * (t.clone() + &a).powi(-s)
    })
}

pub(crate) fn e2_24_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let s = pt.int(Param::S)?;
    let mut total = half(&ev, ev.hurwitz1(s + 1, &a)?.scale(&ev.int(i64::from(s))));
    let mut mid = ev.zero();
    for j in 1..s.saturating_sub(1) {
        mid = mid + ev.hurwitz1(s - j, &a)? * ev.hurwitz1(j + 1, &a)?;
    }
    total = total - half(&ev, mid);
    total = total + ev.hurwitz1(s, &a)? * ev.a_aux(&a)?;
    Ok(total + reciprocal_pow_sum(&ev, aq, s)?)
}

/// `Σ H_n/n^s`.
pub(crate) fn eh_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let s = pt.int(Param::S)? as i32;
    let zero = T::zero(ev.bits);
    prefix_series(&ev, f64::from(s) - 0.5, &[(1, zero)], |v, t| v[0].clone() * t.powi(-s))
}

pub(crate) fn eh_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let s = i64::from(pt.int(Param::S)?);
    let mut total = ev.zeta(s + 1)?.scale(&ev.int(s + 2));
    for i in 1..=s - 2 {
        total = total - ev.zeta(s - i)? * ev.zeta(i + 1)?;
    }
    Ok(half(&ev, total))
}

/// `Σ L_n(1)/n^s`.
pub(crate) fn el_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let s = pt.int(Param::S)?;
    alt_harmonic_sum(&ev, &T::zero(ev.bits), s)
}

pub(crate) fn el_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let s = i64::from(pt.int(Param::S)?);
    let mut total = ev.zeta(s)?.scale(&T::ln2(ev.bits));
    total = total - half(&ev, ev.zeta(s + 1)?.scale(&ev.int(s)));
    total = total + ev.alt_zeta(s + 1)?;
    let mut mid = ev.zero();
    for j in 1..=s {
        mid = mid + ev.alt_zeta(s - j + 1)? * ev.alt_zeta(j)?;
    }
    Ok(total + half(&ev, mid))
}

/// `Σ H_n/(n²−a²)`.
pub(crate) fn e2_28_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let zero = T::zero(ev.bits);
    prefix_series(&ev, 1.5, &[(1, zero)], |v, t| v[0].clone() / (t.square() - &a2))
}

pub(crate) fn e2_28_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a2 = ev.rational(aq * aq);
    let a2c = a2.clone();
    let weighted = plain(&ev, 3.0, move |t| t.clone() / (t.square() - &a2c).square())?;
    let big_a = quad_sum(&ev, aq, 0, 1)?;
    let big_c = quad_sum(&ev, aq, 1, 1)?;
    let factor = ev.exact(T::one(ev.bits)) - big_a.scale(&a2);
    Ok(weighted + factor * big_c)
}

/// `Σ H_n/(n(n²−a²))`.
pub(crate) fn e2_30_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a2 = ev.real(pt, Param::A)?.square();
    let zero = T::zero(ev.bits);
    prefix_series(&ev, 2.5, &[(1, zero)], |v, t| v[0].clone() / (t.clone() * (t.square() - &a2)))
}

pub(crate) fn e2_30_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    e2_30_rhs_with(pt, ctx, false)
}

pub(crate) fn e2_30_rhs_corrected<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    e2_30_rhs_with(pt, ctx, true)
}

fn e2_30_rhs_with<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, corrected: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let half_a2 = ev.rational(aq * aq) / ev.int(2);
    let big_a = quad_sum(&ev, aq, 0, 1)?;
    let big_b = quad_sum(&ev, aq, 2, 1)?;
    let big_d = quad_sum(&ev, aq, 0, 2)?;
    let big_e = quad_sum(&ev, aq, 2, 2)?;
    let last = if corrected { quad_sum(&ev, aq, 1, 1)? } else { big_b.clone() };
    let mut total = big_d.scale(&(ev.int(3) / ev.int(2))) + big_b;
    total = total - half(&ev, big_a.square());
    total = total - big_e.scale(&half_a2);
    Ok(total - last.square().scale(&half_a2))
}
