//! Parameter points: exact rational values for the real parameters and small
//! integers for the discrete ones.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameter slots an identity may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    A,
    B,
    X,
    Y,
    S,
    M,
    P,
    NSmall,
}

impl Param {
    pub const ALL: [Param; 8] = [
        Param::A,
        Param::B,
        Param::X,
        Param::Y,
        Param::S,
        Param::M,
        Param::P,
        Param::NSmall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::X => "x",
            Param::Y => "y",
            Param::S => "s",
            Param::M => "m",
            Param::P => "p",
            Param::NSmall => "n_small",
        }
    }

    pub fn is_integer(self) -> bool {
        matches!(self, Param::S | Param::M | Param::P | Param::NSmall)
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "n" => Some(Param::NSmall),
            _ => Param::ALL.into_iter().find(|p| p.name() == name),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A point in parameter space. Unused slots stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPoint {
    pub a: Option<Rational64>,
    pub b: Option<Rational64>,
    pub x: Option<Rational64>,
    pub y: Option<Rational64>,
    pub s: Option<u32>,
    pub m: Option<u32>,
    pub p: Option<u32>,
    pub n_small: Option<u32>,
}

impl ParamPoint {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets a real slot from `num/den`.
    pub fn with_ratio(mut self, param: Param, num: i64, den: i64) -> Self {
        self.set_real(param, Rational64::new(num, den));
        self
    }

    /// Sets an integer slot.
    pub fn with_int(mut self, param: Param, v: u32) -> Self {
        self.set_int(param, v);
        self
    }

    pub fn set_real(&mut self, param: Param, v: Rational64) {
        match param {
            Param::A => self.a = Some(v),
            Param::B => self.b = Some(v),
            Param::X => self.x = Some(v),
            Param::Y => self.y = Some(v),
            _ => panic!("{param} is an integer parameter"),
        }
    }

    pub fn set_int(&mut self, param: Param, v: u32) {
        match param {
            Param::S => self.s = Some(v),
            Param::M => self.m = Some(v),
            Param::P => self.p = Some(v),
            Param::NSmall => self.n_small = Some(v),
            _ => panic!("{param} is a real parameter"),
        }
    }

    pub fn real_slot(&self, param: Param) -> Option<Rational64> {
        match param {
            Param::A => self.a,
            Param::B => self.b,
            Param::X => self.x,
            Param::Y => self.y,
            _ => None,
        }
    }

    pub fn int_slot(&self, param: Param) -> Option<u32> {
        match param {
            Param::S => self.s,
            Param::M => self.m,
            Param::P => self.p,
            Param::NSmall => self.n_small,
            _ => None,
        }
    }

    pub fn has(&self, param: Param) -> bool {
        self.real_slot(param).is_some() || self.int_slot(param).is_some()
    }

    /// Value of a real slot, as a rational.
    pub fn real(&self, param: Param) -> Result<Rational64> {
        self.real_slot(param)
            .ok_or_else(|| Error::domain("parameter", format!("missing real parameter {param}")))
    }

    /// Value of an integer slot.
    pub fn int(&self, param: Param) -> Result<u32> {
        self.int_slot(param)
            .ok_or_else(|| Error::domain("parameter", format!("missing integer parameter {param}")))
    }

    /// Value of any slot as a rational.
    pub fn value(&self, param: Param) -> Option<Rational64> {
        self.real_slot(param)
            .or_else(|| self.int_slot(param).map(|v| Rational64::from_integer(i64::from(v))))
    }

    /// Parses `k=v[,k=v…]`; real values accept decimals (`0.25`, `-1e-6`)
    /// and fractions (`1/3`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut pt = Self::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value, got `{item}`")))?;
            pt.assign(k.trim(), v.trim())?;
        }
        Ok(pt)
    }

    fn assign(&mut self, key: &str, value: &str) -> Result<()> {
        let param = Param::from_name(key).ok_or_else(|| Error::Config(format!("unknown parameter `{key}`")))?;
        if self.has(param) {
            return Err(Error::Config(format!("parameter `{key}` given twice")));
        }
        let q = parse_rational(value)?;
        if param.is_integer() {
            if !q.is_integer() || q.is_negative() || *q.numer() > i64::from(u32::MAX) {
                return Err(Error::Config(format!("{key} must be a non-negative integer, got `{value}`")));
            }
            self.set_int(param, *q.numer() as u32);
        } else {
            self.set_real(param, q);
        }
        Ok(())
    }

    /// Present parameters in canonical order.
    pub fn entries(&self) -> Vec<(Param, Rational64)> {
        Param::ALL
            .into_iter()
            .filter_map(|p| self.value(p).map(|v| (p, v)))
            .collect()
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .into_iter()
            .map(|(p, v)| format!("{}={}", p.name(), v))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ParamPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Exact rational from a decimal literal or a fraction `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational64> {
    let bad = || Error::Config(format!("cannot read `{text}` as an exact number"));
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut num: i64 = if all.is_empty() { 0 } else { all.parse().map_err(|_| bad())? };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let pow = |e: i32| 10i64.checked_pow(e.unsigned_abs()).ok_or_else(bad);
    let q = if scale >= 0 {
        Rational64::from_integer(num.checked_mul(pow(scale)?).ok_or_else(bad)?)
    } else {
        Rational64::new(num, pow(scale)?)
    };
    Ok(q)
}

/// JSON form: a map from parameter name to a number or a string holding a
/// decimal or fraction.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawValue {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Serialize for ParamPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<&str, RawValue> = self
            .entries()
            .into_iter()
            .map(|(p, v)| {
                let raw = if p.is_integer() {
                    RawValue::Int(*v.numer())
                } else {
                    RawValue::Text(v.to_string())
                };
                (p.name(), raw)
            })
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ParamPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, RawValue>::deserialize(deserializer)?;
        let mut pt = ParamPoint::new();
        for (k, v) in map {
            let text = match v {
                RawValue::Int(i) => i.to_string(),
                RawValue::Float(f) => format!("{f:e}"),
                RawValue::Text(s) => s,
            };
            pt.assign(&k, &text).map_err(serde::de::Error::custom)?;
        }
        Ok(pt)
    }
}

/// `|q − round(q)|` as a rational.
pub(crate) fn distance_to_integer(q: Rational64) -> Rational64 {
    let r = q.round();
    let d = q - r;
    if d < Rational64::zero() {
        -d
    } else {
        d
    }
}
