//! Precision context, certified series values, summation and quadrature.

mod bernoulli;
mod fd;
mod quadrature;
mod series;

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use bernoulli::{bernoulli, bernoulli_table, BernoulliTable};
pub use fd::fd_weights;
pub use quadrature::{integrate_adaptive, integrate_to_infinity};
pub use series::{sum_geometric, sum_series, SmoothTerm};

/// Binary precision granule: MPFR stores significands in 64-bit limbs.
const PRECISION_GRANULE: u32 = 64;

/// Requested accuracy and the derived working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    decimal_digits: u32,
    guard_digits: u32,
    em_order: u32,
    max_terms: u64,
}

/// Builds a context with the default guard digits, Euler–Maclaurin order and
/// term cap.
pub fn make_context(decimal_digits: u32) -> Result<PrecisionContext> {
    PrecisionContext::new(decimal_digits)
}

impl PrecisionContext {
    pub fn new(decimal_digits: u32) -> Result<Self> {
        if decimal_digits < 10 {
            return Err(Error::Precision(format!(
                "decimal_digits must be at least 10, got {decimal_digits}"
            )));
        }
        Ok(Self {
            decimal_digits,
            guard_digits: (decimal_digits / 5).max(10),
            em_order: 8,
            max_terms: 1_000_000,
        })
    }

    pub fn with_guard_digits(mut self, guard_digits: u32) -> Result<Self> {
        if guard_digits < 10 {
            return Err(Error::Precision(format!(
                "guard_digits must be at least 10, got {guard_digits}"
            )));
        }
        self.guard_digits = guard_digits;
        Ok(self)
    }

    pub fn with_em_order(mut self, em_order: u32) -> Result<Self> {
        if !(2..=64).contains(&em_order) {
            return Err(Error::Precision(format!(
                "em_order must lie in 2..=64, got {em_order}"
            )));
        }
        self.em_order = em_order;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: u64) -> Result<Self> {
        if max_terms < 1000 {
            return Err(Error::Precision(format!(
                "max_terms must be at least 1000, got {max_terms}"
            )));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn em_order(&self) -> u32 {
        self.em_order
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    /// Decimal digits carried internally.
    pub fn working_digits(&self) -> u32 {
        self.decimal_digits + self.guard_digits
    }

    /// Working precision in bits, rounded up to the limb granule.
    pub fn bits(&self) -> u32 {
        let raw = (f64::from(self.working_digits()) * std::f64::consts::LOG2_10).ceil() as u32;
        raw.div_ceil(PRECISION_GRANULE) * PRECISION_GRANULE
    }

    /// First index handed to the Euler–Maclaurin completion.
    pub fn crossover(&self) -> u64 {
        let d = u64::from(self.decimal_digits);
        (d * d / 4).max(64)
    }

    /// Absolute error target `10^-(digits+5)`, floored at what the scalar
    /// type can resolve.
    pub fn target<T: Real>(&self) -> T {
        let bits = self.bits();
        let t = T::pow10(-(self.decimal_digits as i32 + 5), bits);
        let slack = if T::native_bits().is_some() { 4096 } else { 64 };
        let floor = T::epsilon(bits) * T::from_i64(slack, bits);
        t.max_of(floor)
    }

    /// Pass threshold floor `10^-(digits-10)` used by identity verification.
    pub fn pass_floor<T: Real>(&self) -> T {
        T::pow10(-(self.decimal_digits as i32 - 10), self.bits())
    }

    /// Guard radius `10^-(digits/2)` around excluded parameter values.
    pub fn pole_guard<T: Real>(&self) -> T {
        T::pow10(-(self.decimal_digits as i32 / 2), self.bits())
    }

    /// Relative rounding level of the working precision.
    pub fn rounding<T: Real>(&self) -> T {
        let bits = self.bits();
        T::epsilon(bits) * T::from_i64(16, bits)
    }

    pub fn num<T: Real>(&self, v: i64) -> T {
        T::from_i64(v, self.bits())
    }

    pub fn ratio<T: Real>(&self, num: i64, den: i64) -> T {
        let bits = self.bits();
        T::from_i64(num, bits) / T::from_i64(den, bits)
    }
}

/// A value with a certified bound on its absolute error.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesValue<T> {
    pub value: T,
    pub tail_bound: T,
    pub terms_used: u64,
}

impl<T: Real> SeriesValue<T> {
    pub fn new(value: T, tail_bound: T, terms_used: u64) -> Self {
        Self {
            value,
            tail_bound,
            terms_used,
        }
    }

    /// A value known to working precision (no truncation error).
    pub fn exact(value: T) -> Self {
        let zero = T::zero(value.precision());
        Self::new(value, zero, 0)
    }

    /// Multiplies by an exact scalar.
    pub fn scale(self, c: &T) -> Self {
        Self::new(self.value * c, self.tail_bound * &c.abs(), self.terms_used)
    }

    /// Widens the error bound by `extra`.
    pub fn widen(mut self, extra: &T) -> Self {
        self.tail_bound += extra;
        self
    }

    pub fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl<T: Real> Add for SeriesValue<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.value + rhs.value,
            self.tail_bound + rhs.tail_bound,
            self.terms_used + rhs.terms_used,
        )
    }
}

impl<T: Real> Sub for SeriesValue<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.value - rhs.value,
            self.tail_bound + rhs.tail_bound,
            self.terms_used + rhs.terms_used,
        )
    }
}

impl<T: Real> Neg for SeriesValue<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, self.tail_bound, self.terms_used)
    }
}

impl<T: Real> Mul for SeriesValue<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let bound = self.value.abs() * &rhs.tail_bound
            + rhs.value.abs() * &self.tail_bound
            + self.tail_bound.clone() * &rhs.tail_bound;
        Self::new(
            self.value * rhs.value,
            bound,
            self.terms_used + rhs.terms_used,
        )
    }
}

impl<T: Real> Mul<T> for SeriesValue<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        self.scale(&rhs)
    }
}

impl<T: Real> std::iter::Sum for SeriesValue<T>
where
    T: Real,
{
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of at least one series value");
        iter.fold(first, |acc, v| acc + v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Mp;

    #[test]
    fn context_defaults() {
        let c = make_context(50).unwrap();
        assert_eq!(c.guard_digits(), 10);
        assert_eq!(c.em_order(), 8);
        assert_eq!(c.max_terms(), 1_000_000);
        assert!(c.working_digits() >= 60);
        assert_eq!(c.bits() % 64, 0);
        assert!(f64::from(c.bits()) >= 60.0 * std::f64::consts::LOG2_10);

        let c = make_context(10).unwrap();
        assert!(c.working_digits() >= 20);
        assert_eq!(make_context(200).unwrap().guard_digits(), 40);
        assert!(make_context(5).is_err());
    }

    #[test]
    fn context_builders_validate() {
        let c = make_context(20).unwrap();
        assert!(c.with_guard_digits(9).is_err());
        assert!(c.with_em_order(1).is_err());
        assert!(c.with_max_terms(999).is_err());
        assert_eq!(c.with_em_order(16).unwrap().em_order(), 16);
    }

    #[test]
    fn crossover_rule() {
        assert_eq!(make_context(10).unwrap().crossover(), 64);
        assert_eq!(make_context(40).unwrap().crossover(), 400);
    }

    #[test]
    fn target_is_floored_for_f64() {
        let c = make_context(40).unwrap();
        let t: f64 = c.target();
        assert!(t > 1e-15 && t < 1e-12);
        let t: Mp = c.target();
        assert!(t.to_f64() <= 1.0001e-45);
    }

    #[test]
    fn series_value_propagates_bounds() {
        let a = SeriesValue::new(2.0_f64, 0.1, 3);
        let b = SeriesValue::new(-3.0_f64, 0.2, 4);
        let p = a.clone() * b.clone();
        assert_eq!(p.value, -6.0);
        assert!((p.tail_bound - (2.0 * 0.2 + 3.0 * 0.1 + 0.02)).abs() < 1e-15);
        let s = a.clone() - b;
        assert_eq!(s.value, 5.0);
        assert!((s.tail_bound - 0.3).abs() < 1e-15);
        assert_eq!(s.terms_used, 7);
        assert!((a.scale(&-2.0).tail_bound - 0.2).abs() < 1e-15);
    }
}
