use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LocalExpansion;
use crate::error::{Error, Result};
use crate::exact::harmonic;
use crate::precision::PrecisionContext;
use crate::scalar::Real;
use crate::special::{digamma, pi_cot_pi, polygamma, riemann_zeta};

/// Default truncation order of the expansions.
pub const DEFAULT_ORDER: u32 = 6;
/// Default sample radii for truncation-error fits.
pub const DEFAULT_RADII: [f64; 3] = [0.05, 0.1, 0.2];

/// One of the five basic kernels, expanded either at a non-negative integer
/// `n` (`*Pos`) or at `−n` (`*Neg`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// `π·cot(πs)` at `s = n`.
    Cot,
    /// `ψ(−s) + γ` at `s = n ≥ 0`.
    PsiPos,
    /// `ψ(−s) + γ` at `s = −n`, `n ≥ 1`.
    PsiNeg,
    /// `ψ^(p−1)(−s)/(p−1)!` at `s = n ≥ 0`.
    PolygammaPos,
    /// `ψ^(p−1)(−s)/(p−1)!` at `s = −n`, `n ≥ 1`.
    PolygammaNeg,
}

impl KernelKind {
    pub const ALL: [KernelKind; 5] = [
        KernelKind::Cot,
        KernelKind::PsiPos,
        KernelKind::PsiNeg,
        KernelKind::PolygammaPos,
        KernelKind::PolygammaNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Cot => "cot",
            KernelKind::PsiPos => "psi_pos",
            KernelKind::PsiNeg => "psi_neg",
            KernelKind::PolygammaPos => "polygamma_pos",
            KernelKind::PolygammaNeg => "polygamma_neg",
        }
    }

    /// Whether the polygamma order `p` is read.
    pub fn uses_order(self) -> bool {
        matches!(self, KernelKind::PolygammaPos | KernelKind::PolygammaNeg)
    }

    fn negative_side(self) -> bool {
        matches!(self, KernelKind::PsiNeg | KernelKind::PolygammaNeg)
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> i64 {
        if self.negative_side() {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown kernel `{s}`")))
    }
}

fn zeta<T: Real>(k: u32, ctx: &PrecisionContext) -> Result<T> {
    riemann_zeta(i64::from(k), ctx, false)
}

fn partial_zeta<T: Real>(n: i64, k: u32, ctx: &PrecisionContext) -> Result<T> {
    let q = harmonic(n.max(0) as u64, k)?;
    Ok(T::from_big_rational(&q, ctx.bits()))
}

fn binom<T: Real>(n: u32, k: u32, bits: u32) -> T {
    let mut v = T::one(bits);
    for j in 1..=k {
        v = v * T::from_i64(i64::from(n - k + j), bits) / T::from_i64(i64::from(j), bits);
    }
    v
}

/// Truncated Laurent expansion of `kind` about `n` (or `−n`) through the
/// power `order`.
pub fn expand_kernel<T: Real>(
    kind: KernelKind,
    n: i64,
    p: u32,
    order: u32,
    ctx: &PrecisionContext,
) -> Result<LocalExpansion<T>> {
    let bits = ctx.bits();
    if order < 1 {
        return Err(Error::domain("expand_kernel", "truncation order K must be at least 1"));
    }
    if n < kind.min_n() {
        return Err(Error::domain("expand_kernel", format!("{kind} needs n ≥ {}", kind.min_n())));
    }
    if kind.uses_order() && p < 2 {
        return Err(Error::domain("expand_kernel", format!("{kind} needs p ≥ 2")));
    }
    let k_max = order as i32;
    let (lowest, center) = match kind {
        KernelKind::Cot | KernelKind::PsiPos => (-1, n),
        KernelKind::PolygammaPos => (-(p as i32), n),
        KernelKind::PsiNeg | KernelKind::PolygammaNeg => (0, -n),
    };
    let mut coeffs = vec![T::zero(bits); (k_max - lowest + 1) as usize];
    let mut set = |power: i32, v: T| coeffs[(power - lowest) as usize] = v;
    match kind {
        KernelKind::Cot => {
            set(-1, T::one(bits));
            for k in 1..=((k_max + 1) / 2) as u32 {
                set(2 * k as i32 - 1, zeta::<T>(2 * k, ctx)? * T::from_i64(-2, bits));
            }
        }
        KernelKind::PsiPos => {
            set(-1, T::one(bits));
            set(0, partial_zeta(n, 1, ctx)?);
            for k in 1..=order {
                let zn = partial_zeta::<T>(n, k + 1, ctx)?;
                let signed = if k % 2 == 0 { zn } else { -zn };
                set(k as i32, signed - zeta::<T>(k + 1, ctx)?);
            }
        }
        KernelKind::PsiNeg => {
            set(0, partial_zeta(n - 1, 1, ctx)?);
            for k in 1..=order {
                set(k as i32, partial_zeta::<T>(n - 1, k + 1, ctx)? - zeta::<T>(k + 1, ctx)?);
            }
        }
        KernelKind::PolygammaPos => {
            set(-(p as i32), T::one(bits));
            let outer = if p % 2 == 0 { 1 } else { -1 };
            for i in p..=order + p {
                let zn = partial_zeta::<T>(n, i, ctx)?;
                let inner = if i % 2 == 0 { zeta::<T>(i, ctx)? + zn } else { zeta::<T>(i, ctx)? - zn };
                let c = binom::<T>(i - 1, p - 1, bits) * inner * T::from_i64(outer, bits);
                set(i as i32 - p as i32, c);
            }
        }
        KernelKind::PolygammaNeg => {
            let outer = if p % 2 == 0 { 1 } else { -1 };
            for i in 0..=order {
                let diff = zeta::<T>(p + i, ctx)? - partial_zeta::<T>(n - 1, p + i, ctx)?;
                set(i as i32, binom::<T>(p - 1 + i, p - 1, bits) * diff * T::from_i64(outer, bits));
            }
        }
    }
    Ok(LocalExpansion {
        kind,
        center,
        p: if kind.uses_order() { p } else { 0 },
        lowest_order: lowest,
        order,
        coefficients: coeffs,
    })
}

/// Coefficients of `d^k/du^k cot u` as a polynomial in `cot u`.
fn cot_derivative_poly(k: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(), BigInt::one()];
    for _ in 0..k {
        // −(1 + c²) P'(c)
        let deriv: Vec<BigInt> = poly.iter().enumerate().skip(1).map(|(j, c)| c * j).collect();
        let mut next = vec![BigInt::zero(); deriv.len() + 2];
        for (j, c) in deriv.iter().enumerate() {
            next[j] -= c;
            next[j + 2] -= c;
        }
        poly = next;
    }
    poly
}

/// `ψ^(k)(−s)` for real non-integer `s`, from positive arguments only.
pub fn polygamma_reflected<T: Real>(k: u32, s: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    let neg = -s.clone();
    if neg.clone() > T::zero(bits) {
        return polygamma(k, &neg, ctx);
    }
    // ψ^(k)(−z) = (−1)^k [ψ^(k)(z) + (−1)^k k!/z^(k+1) + π^(k+1) cot^(k)(πz)]
    let pi = T::pi(bits);
    let cot = pi_cot_pi(s, ctx)? / &pi;
    let mut acc = T::zero(bits);
    for c in cot_derivative_poly(k).iter().rev() {
        acc = acc * &cot + T::from_big_rational(&c.clone().into(), bits);
    }
    let mut fact = T::one(bits);
    for j in 2..=i64::from(k) {
        fact *= T::from_i64(j, bits);
    }
    let pole = fact / s.powi(k as i32 + 1);
    let sign = if k % 2 == 0 { T::one(bits) } else { -T::one(bits) };
    let inner = polygamma(k, s, ctx)? + pole * &sign + pi.powi(k as i32 + 1) * acc;
    Ok(inner * sign)
}

/// Direct value of the kernel at `s`.
pub fn eval_kernel<T: Real>(kind: KernelKind, p: u32, s: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    match kind {
        KernelKind::Cot => pi_cot_pi(s, ctx),
        KernelKind::PsiPos | KernelKind::PsiNeg => {
            let neg = -s.clone();
            let psi = if neg.clone() > T::zero(bits) {
                digamma(&neg, ctx)?
            } else {
                polygamma_reflected(0, s, ctx)?
            };
            Ok(psi + T::euler_gamma(bits))
        }
        KernelKind::PolygammaPos | KernelKind::PolygammaNeg => {
            let mut fact = T::one(bits);
            for j in 2..i64::from(p) {
                fact *= T::from_i64(j, bits);
            }
            Ok(polygamma_reflected(p - 1, s, ctx)? / fact)
        }
    }
}

/// Largest `|kernel − expansion|` over `center ± r` for each radius.
pub fn truncation_errors<T: Real>(exp: &LocalExpansion<T>, radii: &[f64], ctx: &PrecisionContext) -> Result<Vec<T>> {
    let bits = ctx.bits();
    radii
        .iter()
        .map(|&r| {
            if !(r > 0.0 && r < 0.5) {
                return Err(Error::domain(
                    "validate_expansion",
                    format!("radius {r} reaches another pole; use 0 < r < 1/2"),
                ));
            }
            let rr = T::from_f64(r, bits);
            let mut worst = T::zero(bits);
            for offset in [rr.clone(), -rr.clone()] {
                let s = T::from_i64(exp.center, bits) + &offset;
                let err = (eval_kernel(exp.kind, exp.p, &s, ctx)? - exp.eval(&offset)).abs();
                worst = worst.max_of(err);
            }
            Ok(worst)
        })
        .collect()
}

/// Largest truncation error over all radii.
pub fn validate_expansion<T: Real>(exp: &LocalExpansion<T>, radii: &[f64], ctx: &PrecisionContext) -> Result<T> {
    let errs = truncation_errors(exp, radii, ctx)?;
    Ok(errs.into_iter().fold(T::zero(ctx.bits()), |a, b| a.max_of(b)))
}

/// Least-squares slope of `ln error` against `ln r`.
pub fn loglog_slope(radii: &[f64], errors: &[f64]) -> f64 {
    let xs: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}
