use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer};

/// An arbitrary-precision real tagged with the number of decimal digits of
/// the working precision that produced it.
///
/// Arithmetic between two `Real`s runs at the smaller of the two binary
/// precisions and carries the smaller digit tag.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Real {
    value: Float,
    digits: u32,
}

impl Real {
    pub fn new(value: Float, produced_at_digits: u32) -> Self {
        Real { value, digits: produced_at_digits }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn into_float(self) -> Float {
        self.value
    }

    pub fn produced_at_digits(&self) -> u32 {
        self.digits
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Digits of agreement with `other`; see [`agree_digits`].
    pub fn agree_digits(&self, other: &Real) -> i64 {
        agree_digits(&self.value, &other.value, self.digits.min(other.digits))
    }

    /// Fixed-point decimal rendering with exactly `places` digits after the
    /// point, rounded to nearest.
    pub fn to_fixed(&self, places: usize) -> String {
        format_fixed(&self.value, places)
    }

    fn binary<F>(&self, rhs: &Real, op: F) -> Real
    where
        F: FnOnce(&mut Float, &Float, &Float),
    {
        let prec = self.value.prec().min(rhs.value.prec());
        let mut out = Float::new(prec);
        op(&mut out, &self.value, &rhs.value);
        Real::new(out, self.digits.min(rhs.digits))
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.binary(rhs, |out, a, b| {
                    out.assign_round(a $op b, Round::Nearest);
                })
            }
        }

        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
    };
}

use rug::ops::AssignRound;

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::new(-self.value, self.digits)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::new(Float::with_val(self.value.prec(), -&self.value), self.digits)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().unwrap_or(self.digits as usize);
        f.write_str(&format_fixed(&self.value, places))
    }
}

/// `floor(-log10 |a - b|)`, capped at `cap` (used when the difference is
/// zero or below the resolution of the working precision).
///
/// Absolute, not relative: every quantity this crate compares is of order
/// one.
pub fn agree_digits(a: &Float, b: &Float, cap: u32) -> i64 {
    let prec = a.prec().max(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    if diff.is_zero() {
        return i64::from(cap);
    }
    if !diff.is_finite() {
        return i64::MIN;
    }
    let lg = Float::with_val(64, diff.log10());
    let digits = (-lg).floor().to_f64() as i64;
    digits.min(i64::from(cap))
}

/// Fixed-point rendering of `x` with `places` decimals.
pub fn format_fixed(x: &Float, places: usize) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf" } else { "inf" }.to_string();
    }
    let extra = (places as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64;
    let scale = Float::with_val(x.prec() + extra, 10).pow(places as u32);
    let scaled = Float::with_val(x.prec() + extra, x * &scale);
    let (int, _) = scaled.to_integer_round(Round::Nearest).expect("finite value");
    let negative = int < 0;
    let mut digits = Integer::from(int.abs_ref()).to_string();
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let split = digits.len() - places;
    let mut out = String::with_capacity(digits.len() + 2);
    if negative {
        out.push('-');
    }
    out.push_str(&digits[..split]);
    if places > 0 {
        out.push('.');
        out.push_str(&digits[split..]);
    }
    out
}
