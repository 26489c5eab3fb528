//! Quadratic and cubic sums `Σ (H_n² − ζ_n(2))/(n+a)^s` and
//! `Σ (H_n³ − 3H_nζ_n(2))/(n+a)^s`, with their `a = 0` forms.

use num_rational::Rational64;

use super::kit::Ev;
use super::point::{Param, ParamPoint};
use super::series::{harmonic_over_n_pow, harmonic_over_pow, harmonic_sq_over_pow, prefix_series, Sv};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

fn shift(pt: &ParamPoint, shifted: bool) -> crate::error::Result<Rational64> {
    if shifted {
        pt.real(Param::A)
    } else {
        Ok(Rational64::from_integer(0))
    }
}

fn quadratic_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, shifted: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.rational(shift(pt, shifted)?);
    let s = pt.int(Param::S)? as i32;
    let zero = T::zero(ev.bits);
    let three_halves = ev.int(3) / ev.int(2);
    let sum = prefix_series(&ev, f64::from(s) - 0.5, &[(1, zero.clone()), (2, zero)], |v, t| {
        (v[0].square() - &v[1]) * (t.clone() + &a).powi(-s)
    })?;
    Ok(sum.scale(&three_halves))
}

fn cubic_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, shifted: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let a = ev.rational(shift(pt, shifted)?);
    let s = pt.int(Param::S)? as i32;
    let zero = T::zero(ev.bits);
    let three = ev.int(3);
    prefix_series(&ev, f64::from(s) - 0.5, &[(1, zero.clone()), (2, zero)], |v, t| {
        let h = &v[0];
        (h.square() * h - h.clone() * &v[1] * &three) * (t.clone() + &a).powi(-s)
    })
}

/// `(3/2) Σ (H_n² − ζ_n(2))/(n+a)^s`.
pub(crate) fn e3_1_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    quadratic_lhs(pt, ctx, true)
}

pub(crate) fn e3_1_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = pt.real(Param::A)?;
    let a = ev.rational(aq);
    let s = pt.int(Param::S)?;
    let mut total = harmonic_over_pow(&ev, aq, s + 1)?.scale(&ev.int(i64::from(s)));
    total = total + harmonic_over_n_pow(&ev, aq, s)?;
    for j in 2..s {
        total = total - harmonic_over_pow(&ev, aq, j)? * ev.hurwitz1(s + 1 - j, &a)?;
    }
    total = total + harmonic_over_pow(&ev, aq, s)? * ev.a_aux(&a)?;
    let last = ev.hurwitz1(s, &a)? * harmonic_over_n_pow(&ev, aq, 1)?;
    Ok(total + last.scale(&a))
}

/// `(3/2) Σ (H_n² − ζ_n(2))/n^s`.
pub(crate) fn e3_12_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    quadratic_lhs(pt, ctx, false)
}

pub(crate) fn e3_12_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let zero = Rational64::from_integer(0);
    let s = pt.int(Param::S)?;
    let mut total = harmonic_over_pow(&ev, zero, s + 1)?.scale(&ev.int(i64::from(s) + 1));
    for j in 2..s {
        total = total - harmonic_over_pow(&ev, zero, j)? * ev.zeta(i64::from(s + 1 - j))?;
    }
    Ok(total)
}

/// `Σ (H_n³ − 3H_nζ_n(2))/(n+a)^s`.
pub(crate) fn e3_13_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    cubic_lhs(pt, ctx, true)
}

pub(crate) fn e3_13_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    cubic_rhs(pt, ctx, true)
}

/// `Σ (H_n³ − 3H_nζ_n(2))/n^s`.
pub(crate) fn e3_23_lhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    cubic_lhs(pt, ctx, false)
}

pub(crate) fn e3_23_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext) -> Sv<T> {
    cubic_rhs(pt, ctx, false)
}

fn cubic_rhs<T: Real>(pt: &ParamPoint, ctx: &PrecisionContext, shifted: bool) -> Sv<T> {
    let ev = Ev::<T>::new(ctx);
    let aq = shift(pt, shifted)?;
    let a = ev.rational(aq);
    let s = pt.int(Param::S)?;
    let mut total = harmonic_sq_over_pow(&ev, aq, s + 1)?.scale(&ev.int(i64::from(s)));
    for j in 2..s {
        total = total - harmonic_over_pow(&ev, aq, j)? * harmonic_over_pow(&ev, aq, s + 1 - j)?;
    }
    if shifted {
        let last = harmonic_over_pow(&ev, aq, s)? * harmonic_over_n_pow(&ev, aq, 1)?;
        total = total + last.scale(&(a * ev.int(2)));
    }
    Ok(total)
}
