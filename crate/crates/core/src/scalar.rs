//! Scalar abstraction shared by every numeric routine.
//!
//! `num_traits::Float` assumes a `Copy` type of fixed width, which an MPFR
//! value with per-value precision cannot satisfy, so the library works over
//! its own [`Real`] trait. Every constructor takes the binary precision to use;
//! `f64` ignores it.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::Float;

/// Real scalar with owned and by-reference arithmetic.
pub trait Real:
    Sized
    + Clone
    + Debug
    + Display
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    /// Fixed significand width of the type, or `None` when it follows the
    /// requested precision.
    fn native_bits() -> Option<u32>;

    /// Binary precision carried by this value.
    fn precision(&self) -> u32;

    fn from_i64(v: i64, bits: u32) -> Self;
    fn from_f64(v: f64, bits: u32) -> Self;

    /// Parses a decimal literal such as `"-1.25e-3"`.
    fn parse_decimal(s: &str, bits: u32) -> Option<Self>;

    fn pi(bits: u32) -> Self;
    fn ln2(bits: u32) -> Self;
    fn euler_gamma(bits: u32) -> Self;

    /// Unit roundoff `2^(1-bits)` of the representation.
    fn epsilon(bits: u32) -> Self;

    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn tan(&self) -> Self;
    fn sinh(&self) -> Self;
    fn cosh(&self) -> Self;
    fn powi(&self, n: i32) -> Self;
    fn powf(&self, e: &Self) -> Self;
    /// Nearest integer, ties away from zero.
    fn round(&self) -> Self;
    fn floor(&self) -> Self;

    fn to_f64(&self) -> f64;
    fn is_finite(&self) -> bool;
    fn is_zero(&self) -> bool;

    /// Scientific notation with `digits` significant digits.
    fn to_sci_string(&self, digits: usize) -> String;

    /// Integer at this value's precision.
    fn int(&self, v: i64) -> Self {
        Self::from_i64(v, self.precision())
    }

    /// Ratio `num/den` at this value's precision.
    fn ratio(&self, num: i64, den: i64) -> Self {
        Self::from_i64(num, self.precision()) / Self::from_i64(den, self.precision())
    }

    fn zero(bits: u32) -> Self {
        Self::from_i64(0, bits)
    }

    fn one(bits: u32) -> Self {
        Self::from_i64(1, bits)
    }

    /// `10^e`.
    fn pow10(e: i32, bits: u32) -> Self {
        Self::parse_decimal(&format!("1e{e}"), bits).expect("valid literal")
    }

    /// Nearest representable value of an exact rational.
    fn from_big_rational(q: &BigRational, bits: u32) -> Self {
        let num = Self::parse_decimal(&q.numer().to_string(), bits).expect("integer literal");
        let den = Self::parse_decimal(&q.denom().to_string(), bits).expect("integer literal");
        num / den
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero(self.precision())
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

impl Real for f64 {
    fn native_bits() -> Option<u32> {
        Some(53)
    }
    fn precision(&self) -> u32 {
        53
    }
    fn from_i64(v: i64, _bits: u32) -> Self {
        v as f64
    }
    fn from_f64(v: f64, _bits: u32) -> Self {
        v
    }
    fn parse_decimal(s: &str, _bits: u32) -> Option<Self> {
        s.trim().parse().ok()
    }
    fn pi(_bits: u32) -> Self {
        std::f64::consts::PI
    }
    fn ln2(_bits: u32) -> Self {
        std::f64::consts::LN_2
    }
    fn euler_gamma(_bits: u32) -> Self {
        0.577_215_664_901_532_9
    }
    fn epsilon(_bits: u32) -> Self {
        f64::EPSILON
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn tan(&self) -> Self {
        f64::tan(*self)
    }
    fn sinh(&self) -> Self {
        f64::sinh(*self)
    }
    fn cosh(&self) -> Self {
        f64::cosh(*self)
    }
    fn powi(&self, n: i32) -> Self {
        f64::powi(*self, n)
    }
    fn powf(&self, e: &Self) -> Self {
        f64::powf(*self, *e)
    }
    fn round(&self) -> Self {
        f64::round(*self)
    }
    fn floor(&self) -> Self {
        f64::floor(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_sci_string(&self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1).min(16), self)
    }
    fn from_big_rational(q: &BigRational, _bits: u32) -> Self {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for Float {
    fn native_bits() -> Option<u32> {
        None
    }
    fn precision(&self) -> u32 {
        self.prec()
    }
    fn from_i64(v: i64, bits: u32) -> Self {
        Float::with_val(bits, v)
    }
    fn from_f64(v: f64, bits: u32) -> Self {
        Float::with_val(bits, v)
    }
    fn parse_decimal(s: &str, bits: u32) -> Option<Self> {
        Float::parse(s.trim()).ok().map(|p| Float::with_val(bits, p))
    }
    fn pi(bits: u32) -> Self {
        Float::with_val(bits, Constant::Pi)
    }
    fn ln2(bits: u32) -> Self {
        Float::with_val(bits, Constant::Log2)
    }
    fn euler_gamma(bits: u32) -> Self {
        Float::with_val(bits, Constant::Euler)
    }
    fn epsilon(bits: u32) -> Self {
        Float::with_val(bits, 1) >> (bits - 1)
    }
    fn abs(&self) -> Self {
        Float::with_val(self.prec(), self.abs_ref())
    }
    fn sqrt(&self) -> Self {
        Float::with_val(self.prec(), self.sqrt_ref())
    }
    fn ln(&self) -> Self {
        Float::with_val(self.prec(), self.ln_ref())
    }
    fn exp(&self) -> Self {
        Float::with_val(self.prec(), self.exp_ref())
    }
    fn sin(&self) -> Self {
        Float::with_val(self.prec(), self.sin_ref())
    }
    fn cos(&self) -> Self {
        Float::with_val(self.prec(), self.cos_ref())
    }
    fn tan(&self) -> Self {
        Float::with_val(self.prec(), self.tan_ref())
    }
    fn sinh(&self) -> Self {
        Float::with_val(self.prec(), self.sinh_ref())
    }
    fn cosh(&self) -> Self {
        Float::with_val(self.prec(), self.cosh_ref())
    }
    fn powi(&self, n: i32) -> Self {
        Float::with_val(self.prec(), self.pow(n))
    }
    fn powf(&self, e: &Self) -> Self {
        Float::with_val(self.prec(), self.pow(e))
    }
    fn round(&self) -> Self {
        Float::with_val(self.prec(), self.round_ref())
    }
    fn floor(&self) -> Self {
        Float::with_val(self.prec(), self.floor_ref())
    }
    fn to_f64(&self) -> f64 {
        Float::to_f64_round(self, Round::Nearest)
    }
    fn is_finite(&self) -> bool {
        Float::is_finite(self)
    }
    fn is_zero(&self) -> bool {
        Float::is_zero(self)
    }
    fn to_sci_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.to_string_radix(10, Some(digits.max(1)))
    }
    fn is_negative(&self) -> bool {
        self.is_sign_negative() && !self.is_zero()
    }
}

/// Decimal digits represented by `bits` binary digits.
pub fn bits_to_digits(bits: u32) -> f64 {
    f64::from(bits) * std::f64::consts::LOG10_2
}
