use rayon::prelude::*;

use super::ResidueLedger;
use crate::error::{Error, Result};
use crate::precision::{sum_series, PrecisionContext, SmoothTerm};
use crate::scalar::Real;
use crate::special::{digamma, pi_cot_pi, riemann_zeta};

use super::kernels::polygamma_reflected;

/// Which form of the double zeta sum in the pole at zero to use for the
/// odd-weight ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LedgerVariant {
    /// Binomial `C(2m+2k−1, 2k−1)`, as usually quoted.
    #[default]
    Printed,
    /// Binomial `C(2m+2k−2, 2k−2)`, the form that balances the ledger.
    Corrected,
}

fn check_inputs<T: Real>(a: &T, n_max: usize, ctx: &PrecisionContext) -> Result<()> {
    if n_max < 1 {
        return Err(Error::domain("residue ledger", "N must be at least 1"));
    }
    if (a.clone() - a.round()).abs() < ctx.pole_guard::<T>() {
        return Err(Error::domain("residue ledger", format!("a = {a} must not be an integer")));
    }
    Ok(())
}

fn binom<T: Real>(n: u32, k: u32, bits: u32) -> T {
    let mut v = T::one(bits);
    for j in 1..=k {
        v = v * T::from_i64(i64::from(n - k + j), bits) / T::from_i64(i64::from(j), bits);
    }
    v
}

/// Running `ζ_n(k)` for `n = 1..=n_max`.
fn prefixes<T: Real>(k: u32, n_max: usize, bits: u32) -> Vec<T> {
    let mut acc = T::zero(bits);
    (1..=n_max)
        .map(|n| {
            acc += T::from_i64(n as i64, bits).powi(-(k as i32));
            acc.clone()
        })
        .collect()
}

/// `(n+a)^(−e) + (n−a)^(−e) − 2n^(−e)`.
fn bracket<T: Real>(n: &T, a: &T, e: i32) -> T {
    (n.clone() + a).powi(-e) + (n.clone() - a).powi(-e) - n.powi(-e) * n.int(2)
}

/// `(n−a)^(−e) − (n+a)^(−e)`.
fn difference<T: Real>(n: &T, a: &T, e: i32) -> T {
    (n.clone() - a).powi(-e) - (n.clone() + a).powi(-e)
}

/// Residues of `π·cot(πz) ψ^(2m−1)(−z)/(2m−1)!` against
/// `1/(z(z²−a²))`, `m ≥ 1`, for `n = 1..=N`.
pub fn even_weight_ledger<T: Real>(a: &T, m: u32, n_max: usize, ctx: &PrecisionContext) -> Result<ResidueLedger<T>> {
    check_inputs(a, n_max, ctx)?;
    if m < 1 {
        return Err(Error::domain("even_weight_ledger", "m must be at least 1"));
    }
    let bits = ctx.bits();
    let a2 = a.square();
    let inv_a2 = T::one(bits) / &a2;
    let zetas = (1..=m)
        .map(|k| riemann_zeta::<T>(i64::from(2 * k), ctx, false))
        .collect::<Result<Vec<T>>>()?;
    let z2m = zetas[m as usize - 1].clone();
    let zn = prefixes::<T>(2 * m, n_max, bits);
    let e = (2 * m + 1) as i32;
    let pairs: Vec<(T, T)> = zn
        .par_iter()
        .enumerate()
        .map(|(i, znv)| {
            let n = T::from_i64(i as i64 + 1, bits);
            let base = n.clone() * (n.square() - &a2);
            let neg = (znv.clone() - &z2m) / &base - T::one(bits) / (n.powi(2 * m as i32) * &base);
            let mut pos = (znv.clone() + &z2m) / &base + bracket(&n, a, e) * &inv_a2 / n.int(2);
            for (k, z) in zetas.iter().enumerate() {
                let ek = (2 * m - 2 * (k as u32 + 1) + 1) as i32;
                pos -= z.clone() * bracket(&n, a, ek) * &inv_a2;
            }
            (pos, neg)
        })
        .collect();
    let aa = a.clone();
    let series = sum_series(
        SmoothTerm::new(f64::from(2 * m + 1), move |t: &T| difference(t, &aa, (2 * m) as i32)),
        ctx,
    )?;
    let coeff = pi_cot_pi(a, ctx)? * &inv_a2 / T::from_i64(2, bits);
    let pole_at_zero = riemann_zeta::<T>(i64::from(2 * m + 1), ctx, false)? * inv_a2 * T::from_i64(-2 * i64::from(m), bits);
    let (positive_residues, negative_residues) = pairs.into_iter().unzip();
    Ok(ResidueLedger {
        positive_residues,
        negative_residues,
        pole_at_a: series.value * &coeff,
        pole_at_zero,
        series_bound: series.tail_bound * coeff.abs(),
    })
}

/// Residues of `π·cot(πz) ψ^(2m)(−z)/(2m)!` against `z^(−2s)/(z²−a²)`,
/// `m, s ≥ 0`, for `n = 1..=N`. At `m = 0` the kernel is taken as
/// `π·cot(πz)(ψ(−z) + γ)` and `ζ(1)` is read as 0.
pub fn odd_weight_ledger<T: Real>(
    a: &T,
    m: u32,
    s: u32,
    variant: LedgerVariant,
    n_max: usize,
    ctx: &PrecisionContext,
) -> Result<ResidueLedger<T>> {
    check_inputs(a, n_max, ctx)?;
    let bits = ctx.bits();
    let zeta = |k: u32| riemann_zeta::<T>(i64::from(k), ctx, true);
    let a2 = a.square();
    let a_pow = |e: i32| a.powi(-e);
    let half_inv = a_pow(2 * s as i32 + 1) / T::from_i64(2, bits);
    let z_odd = zeta(2 * m + 1)?;
    let zetas = (1..=m).map(|k| zeta(2 * k)).collect::<Result<Vec<T>>>()?;
    // Coefficients of 1/n^e from the z^(−2j) parts.
    let mut power_terms: Vec<(i32, T)> = Vec::new();
    for (k, z) in zetas.iter().enumerate() {
        let k = k as u32 + 1;
        for j in 1..=s {
            let c = z.clone() * a_pow((2 * s + 2 - 2 * j) as i32) * binom::<T>(2 * m - 2 * k + 2 * j, 2 * j - 1, bits);
            power_terms.push(((2 * m + 2 * j - 2 * k + 1) as i32, c * T::from_i64(-2, bits)));
        }
    }
    for j in 1..=s {
        let c = a_pow((2 * s + 2 - 2 * j) as i32) * binom::<T>(2 * m + 2 * j, 2 * j - 1, bits);
        power_terms.push(((2 * m + 2 * j + 1) as i32, c));
    }
    let zn = prefixes::<T>(2 * m + 1, n_max, bits);
    let pairs: Vec<(T, T)> = zn
        .par_iter()
        .enumerate()
        .map(|(i, znv)| {
            let n = T::from_i64(i as i64 + 1, bits);
            let base = n.powi(2 * s as i32) * (n.square() - &a2);
            let shared = (znv.clone() - &z_odd) / &base;
            let neg = shared.clone() - T::one(bits) / (n.powi((2 * m + 1) as i32) * &base);
            let mut pos = shared - difference(&n, a, (2 * m + 2) as i32) * &half_inv;
            for (k, z) in zetas.iter().enumerate() {
                let e = (2 * m - 2 * (k as u32 + 1) + 2) as i32;
                pos += z.clone() * difference(&n, a, e) * &half_inv * n.int(2);
            }
            for (e, c) in &power_terms {
                pos += c.clone() * n.powi(-e);
            }
            (pos, neg)
        })
        .collect();
    let cot = pi_cot_pi(a, ctx)?;
    let (pole_at_a, series_bound) = if m == 0 {
        let gamma2 = T::euler_gamma(bits) * T::from_i64(2, bits);
        let psi_pos = if a.clone() > T::zero(bits) {
            digamma(a, ctx)?
        } else {
            polygamma_reflected(0, &-a.clone(), ctx)?
        };
        let psi_neg = polygamma_reflected(0, a, ctx)?;
        ((psi_pos + psi_neg + gamma2) * &cot * &half_inv, T::zero(bits))
    } else {
        let aa = a.clone();
        let e = (2 * m + 1) as i32;
        let series = sum_series(
            SmoothTerm::new(f64::from(2 * m + 1), move |t: &T| {
                (t.clone() - &aa).powi(-e) + (t.clone() + &aa).powi(-e)
            }),
            ctx,
        )?;
        let coeff = -(cot * &half_inv);
        (series.value * &coeff, series.tail_bound * coeff.abs())
    };
    let mut pole_at_zero = T::zero(bits);
    for k in 1..=s + 1 {
        let c = binom::<T>(2 * m + 2 * k - 2, 2 * k - 2, bits);
        pole_at_zero += c * zeta(2 * m + 2 * k - 1)? * a_pow((2 * s + 4 - 2 * k) as i32);
    }
    for n in 1..=s {
        for k in 1..=n {
            let c = match variant {
                LedgerVariant::Printed => binom::<T>(2 * m + 2 * k - 1, 2 * k - 1, bits),
                LedgerVariant::Corrected => binom::<T>(2 * m + 2 * k - 2, 2 * k - 2, bits),
            };
            let term = c * zeta(2 * m + 2 * k - 1)? * zeta(2 * n - 2 * k + 2)? * a_pow((2 * s + 2 - 2 * n) as i32);
            pole_at_zero -= term * T::from_i64(2, bits);
        }
    }
    let (positive_residues, negative_residues) = pairs.into_iter().unzip();
    Ok(ResidueLedger {
        positive_residues,
        negative_residues,
        pole_at_a,
        pole_at_zero,
        series_bound,
    })
}

/// `|Σ all contributions|` truncated at the ledger's `N`.
pub fn residue_sum_check<T: Real>(ledger: &ResidueLedger<T>) -> T {
    ledger.truncated_total(ledger.n_max()).abs()
}
