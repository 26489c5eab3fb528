//! Registry of parametric Euler-sum identities.
//!
//! Each [`IdentityEntry`] pairs a left-hand evaluator, which sums the Euler
//! sum itself (accelerated through smooth extensions of the harmonic-type
//! prefixes), with a right-hand evaluator built from special values and
//! auxiliary rational series. Both sides return certified [`SeriesValue`]s;
//! [`verify_identity`] compares them.
//!
//! Notation: `ζ_n(p, a+1) = Σ_{k≤n} 1/(k+a)^p`, `H_n = ζ_n(1, 1)`,
//! `L_n(1) = Σ_{k≤n} (−1)^(k−1)/k`, `Li_s(a, x) = Σ xⁿ/(n+a)^s` and
//! `H_m(x, a) = x^a Li_m(a, x)`.

mod integrals;
mod kit;
mod linear;
mod nonlinear;
mod point;
mod registry;
mod series;

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::precision::{PrecisionContext, SeriesValue};
use crate::scalar::Real;

pub use kit::{harmonic_ext, partial_hurwitz_ext};
pub use point::{parse_rational, Param, ParamPoint};
pub use registry::registry;

/// Evaluator signature shared by both sides of every identity.
pub type Evaluator<T> = fn(&ParamPoint, &PrecisionContext) -> Result<SeriesValue<T>>;

/// Canonical grid values of the real parameters `a` and `b`.
pub const GRID_AB: [(i64, i64); 5] = [(-2, 5), (1, 4), (1, 3), (1, 2), (3, 2)];
/// Canonical grid values of the power-series arguments `x` and `y`.
pub const GRID_XY: [(i64, i64); 4] = [(-9, 10), (-1, 2), (1, 2), (9, 10)];
/// Canonical grid values of `s` and `p`.
pub const GRID_SP: [u32; 3] = [2, 3, 4];
/// Canonical grid values of `m`.
pub const GRID_M: [u32; 3] = [0, 1, 2];
/// Canonical grid values of the free integer `n_small`.
pub const GRID_N: [u32; 3] = [1, 2, 5];

/// A domain restriction on one identity's parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `param > num/den`.
    Above(Param, i64, i64),
    /// `param < num/den`.
    Below(Param, i64, i64),
    /// `param ≥ v` for an integer slot.
    AtLeast(Param, u32),
    /// `|param| < 1`.
    InsideUnit(Param),
    /// Not within the pole guard of an integer.
    NonInteger(Param),
    /// `a + b > −1`.
    SumAboveMinusOne(Param, Param),
    /// Applied to the default grid only.
    GridOnly(&'static Constraint),
}

impl Constraint {
    /// Checks `pt`; `guard` is the exclusion radius around integers.
    fn check(&self, pt: &ParamPoint, guard: Option<Rational64>) -> std::result::Result<(), String> {
        let get = |p: Param| pt.value(p).ok_or_else(|| format!("missing parameter {p}"));
        let ok = match *self {
            Constraint::Above(p, n, d) => get(p)? > Rational64::new(n, d),
            Constraint::Below(p, n, d) => get(p)? < Rational64::new(n, d),
            Constraint::AtLeast(p, v) => pt.int_slot(p).ok_or_else(|| format!("missing parameter {p}"))? >= v,
            Constraint::InsideUnit(p) => get(p)?.abs() < Rational64::from_integer(1),
            Constraint::NonInteger(p) => {
                let dist = point::distance_to_integer(get(p)?);
                match guard {
                    Some(g) => dist >= g,
                    None => !dist.is_zero(),
                }
            }
            Constraint::SumAboveMinusOne(p, q) => get(p)? + get(q)? > Rational64::from_integer(-1),
            Constraint::GridOnly(_) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("violates {self}"))
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constraint::Above(p, n, d) => write!(f, "{p} > {}", Rational64::new(n, d)),
            Constraint::Below(p, n, d) => write!(f, "{p} < {}", Rational64::new(n, d)),
            Constraint::AtLeast(p, v) => write!(f, "{p} ≥ {v}"),
            Constraint::InsideUnit(p) => write!(f, "|{p}| < 1"),
            Constraint::NonInteger(p) => write!(f, "{p} ∉ ℤ"),
            Constraint::SumAboveMinusOne(p, q) => write!(f, "{p}+{q} > -1"),
            Constraint::GridOnly(c) => write!(f, "grid: {c}"),
        }
    }
}

/// One identity of the registry.
pub struct IdentityEntry<T> {
    /// Short token such as `E2.13`.
    pub id: &'static str,
    /// Equation label.
    pub equation: &'static str,
    /// Short description of the identity.
    pub quote: &'static str,
    /// Parameters the identity reads.
    pub params: &'static [Param],
    /// Domain restrictions beyond the parameter ranges.
    pub constraints: &'static [Constraint],
    pub lhs: Evaluator<T>,
    pub rhs: Evaluator<T>,
    /// Amended right-hand side for displays that fail as printed, with the
    /// nature of the amendment.
    pub corrected: Option<(Evaluator<T>, &'static str)>,
    /// Extra grid points beyond the canonical product.
    pub extra_points: fn() -> Vec<ParamPoint>,
    /// Thins the canonical product (e.g. to one ordering of a symmetric pair).
    pub grid_filter: fn(&ParamPoint) -> bool,
}

impl<T> Clone for IdentityEntry<T> {
    fn clone(&self) -> Self {
        Self { ..*self }
    }
}

impl<T> fmt::Debug for IdentityEntry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("equation", &self.equation)
            .finish()
    }
}

impl<T: Real> IdentityEntry<T> {
    /// Human-readable parameter domain.
    pub fn domain(&self) -> String {
        let mut parts: Vec<String> = self
            .params
            .iter()
            .map(|p| match p {
                Param::A | Param::B => format!("{p} > -1"),
                Param::X | Param::Y => format!("{p} ∈ [-1, 1)"),
                _ => format!("{p} ≥ 0"),
            })
            .filter(|text| {
                !self.constraints.iter().any(|c| match c {
                    Constraint::AtLeast(q, _) => text.as_str() == format!("{q} ≥ 0"),
                    _ => false,
                })
            })
            .collect();
        for c in self.constraints {
            if let Constraint::GridOnly(_) = c {
                continue;
            }
            parts.push(c.to_string());
        }
        parts.join(", ")
    }

    /// Validates `pt` against the signature at the guard radius of `ctx`.
    pub fn validate(&self, pt: &ParamPoint, ctx: &PrecisionContext) -> Result<()> {
        let guard = Rational64::new(1, 10i64.pow((ctx.decimal_digits() / 2).min(18)));
        self.check(pt, Some(guard)).map_err(|reason| Error::Domain { op: "validate", reason })
    }

    fn check(&self, pt: &ParamPoint, guard: Option<Rational64>) -> std::result::Result<(), String> {
        for p in Param::ALL {
            let used = self.params.contains(&p);
            if used != pt.has(p) {
                return Err(if used {
                    format!("{} needs parameter {p}", self.id)
                } else {
                    format!("{} does not use parameter {p}", self.id)
                });
            }
        }
        let minus_one = Rational64::from_integer(-1);
        let one = Rational64::from_integer(1);
        for &p in self.params {
            match p {
                Param::A | Param::B => {
                    if pt.real(p).map_err(|e| e.to_string())? <= minus_one {
                        return Err(format!("{p} must exceed -1"));
                    }
                }
                Param::X | Param::Y => {
                    let v = pt.real(p).map_err(|e| e.to_string())?;
                    if v < minus_one || v >= one {
                        return Err(format!("{p} must lie in [-1, 1)"));
                    }
                }
                _ => {}
            }
        }
        for c in self.constraints {
            c.check(pt, guard)?;
        }
        Ok(())
    }

    /// Canonical test grid intersected with the identity's domain.
    pub fn default_grid(&self) -> Vec<ParamPoint> {
        let mut points = vec![ParamPoint::new()];
        for &p in self.params {
            let mut next = Vec::new();
            for base in &points {
                match p {
                    Param::A | Param::B => {
                        for (n, d) in GRID_AB {
                            next.push(base.clone().with_ratio(p, n, d));
                        }
                    }
                    Param::X | Param::Y => {
                        for (n, d) in GRID_XY {
                            next.push(base.clone().with_ratio(p, n, d));
                        }
                    }
                    Param::S | Param::P => {
                        for v in GRID_SP {
                            next.push(base.clone().with_int(p, v));
                        }
                    }
                    Param::M => {
                        for v in GRID_M {
                            next.push(base.clone().with_int(p, v));
                        }
                    }
                    Param::NSmall => {
                        for v in GRID_N {
                            next.push(base.clone().with_int(p, v));
                        }
                    }
                }
            }
            points = next;
        }
        let grid_only: Vec<Constraint> = self
            .constraints
            .iter()
            .filter_map(|c| match c {
                Constraint::GridOnly(inner) => Some(**inner),
                _ => None,
            })
            .collect();
        points.retain(|pt| {
            self.check(pt, None).is_ok()
                && grid_only.iter().all(|c| c.check(pt, None).is_ok())
                && (self.grid_filter)(pt)
        });
        for pt in (self.extra_points)() {
            if self.check(&pt, None).is_ok() && !points.contains(&pt) {
                points.push(pt);
            }
        }
        points.sort();
        points
    }

    /// Left-hand side at `pt`.
    pub fn brute_lhs(&self, pt: &ParamPoint, ctx: &PrecisionContext) -> Result<SeriesValue<T>> {
        self.validate(pt, ctx).map_err(|e| self.wrap(pt, e))?;
        (self.lhs)(pt, ctx).map_err(|e| self.wrap(pt, e))
    }

    /// Right-hand side at `pt`, as printed.
    pub fn closed_rhs(&self, pt: &ParamPoint, ctx: &PrecisionContext) -> Result<SeriesValue<T>> {
        self.validate(pt, ctx).map_err(|e| self.wrap(pt, e))?;
        (self.rhs)(pt, ctx).map_err(|e| self.wrap(pt, e))
    }

    fn wrap(&self, pt: &ParamPoint, e: Error) -> Error {
        Error::Identity {
            id: self.id.to_string(),
            point: pt.to_string(),
            source: Box::new(e),
        }
    }
}

/// Outcome of comparing an amended right-hand side with the left side.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectedCheck<T> {
    pub note: &'static str,
    pub rhs: SeriesValue<T>,
    pub residual: T,
    pub pass: bool,
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult<T> {
    pub lhs: SeriesValue<T>,
    pub rhs: SeriesValue<T>,
    pub residual: T,
    pub budget: T,
    pub pass: bool,
    /// Present when the identity has an amended form.
    pub corrected: Option<CorrectedCheck<T>>,
}

/// Residual, budget and pass flag for a pair of sides.
fn compare<T: Real>(lhs: &SeriesValue<T>, rhs: &SeriesValue<T>, ctx: &PrecisionContext) -> (T, T, bool) {
    let bits = ctx.bits();
    let residual = (lhs.value.clone() - &rhs.value).abs();
    let scale = lhs.value.abs().max_of(rhs.value.abs()).max_of(T::one(bits));
    let rounding = ctx.rounding::<T>() * scale * T::from_i64(64, bits);
    let budget = lhs.tail_bound.clone() + &rhs.tail_bound + rounding;
    let threshold = budget.clone().max_of(ctx.pass_floor());
    let pass = residual <= threshold;
    (residual, budget, pass)
}

/// Evaluates both sides of `entry` at `pt` and compares them.
pub fn verify_identity<T: Real>(
    entry: &IdentityEntry<T>,
    pt: &ParamPoint,
    ctx: &PrecisionContext,
) -> Result<VerificationResult<T>> {
    let lhs = entry.brute_lhs(pt, ctx)?;
    let rhs = entry.closed_rhs(pt, ctx)?;
    let (residual, budget, pass) = compare(&lhs, &rhs, ctx);
    let corrected = match entry.corrected {
        Some((eval, note)) => {
            let alt = eval(pt, ctx).map_err(|e| entry.wrap(pt, e))?;
            let (res, _, ok) = compare(&lhs, &alt, ctx);
            Some(CorrectedCheck {
                note,
                rhs: alt,
                residual: res,
                pass: ok,
            })
        }
        None => None,
    };
    Ok(VerificationResult {
        lhs,
        rhs,
        residual,
        budget,
        pass,
        corrected,
    })
}

/// Left side of the identity `id`.
pub fn brute_lhs<T: Real>(id: &str, pt: &ParamPoint, ctx: &PrecisionContext) -> Result<SeriesValue<T>> {
    find::<T>(id)?.brute_lhs(pt, ctx)
}

/// Right side of the identity `id`.
pub fn closed_rhs<T: Real>(id: &str, pt: &ParamPoint, ctx: &PrecisionContext) -> Result<SeriesValue<T>> {
    find::<T>(id)?.closed_rhs(pt, ctx)
}

/// Canonical grid of the identity `id`.
pub fn default_grid(id: &str) -> Result<Vec<ParamPoint>> {
    Ok(find::<f64>(id)?.default_grid())
}

/// Registry entry by id.
pub fn find<T: Real>(id: &str) -> Result<IdentityEntry<T>> {
    registry::<T>()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Config(format!("unknown identity `{id}`")))
}

/// Ids of every registry entry, in registry order.
pub fn identity_ids() -> Vec<&'static str> {
    registry::<f64>().iter().map(|e| e.id).collect()
}

#[cfg(test)]
mod tests;
