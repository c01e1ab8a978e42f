//! Discriminants and the Kronecker symbol `(d/n)`.

use std::fmt;

use crate::error::{Error, Result};

/// A non-square integer `d ≡ 0, 1 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Argument("discriminant must be non-zero".into()));
        }
        if !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(Error::Argument(format!("discriminant {d} is not 0 or 1 mod 4")));
        }
        if d > 0 && is_square(d as u64) {
            return Err(Error::Argument(format!("discriminant {d} is a perfect square")));
        }
        Ok(Discriminant(d))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// `|d|`, the period of `n ↦ (d/n)`.
    pub fn modulus(self) -> u64 {
        self.0.unsigned_abs()
    }

    /// Whether `d` is the discriminant of a quadratic field, so that
    /// `n ↦ (d/n)` is a primitive character mod `|d|`.
    pub fn is_fundamental(self) -> bool {
        let d = self.0;
        if d.rem_euclid(4) == 1 {
            return is_squarefree(d.unsigned_abs());
        }
        let m = d / 4;
        matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
    }
}

impl TryFrom<i64> for Discriminant {
    type Error = Error;
    fn try_from(d: i64) -> Result<Self> {
        Discriminant::new(d)
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|c| c.checked_mul(c) == Some(n))
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// `(d/n)` for `n ≥ 1`.
///
/// Splits `n = 2^v · m` with `m` odd, uses `(d/2) = 0` for even `d`, `+1` for
/// `d ≡ ±1 (mod 8)` and `-1` for `d ≡ ±3 (mod 8)`, and the Jacobi symbol
/// `(d/m)` computed by quadratic reciprocity.
pub fn kronecker(d: Discriminant, n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::Argument("kronecker symbol needs n >= 1".into()));
    }
    let d = d.value();
    let v = n.trailing_zeros();
    let odd = n >> v;
    let mut sign = 1i8;
    if v > 0 {
        let two = match d.rem_euclid(8) {
            0 | 2 | 4 | 6 => 0,
            1 | 7 => 1,
            _ => -1,
        };
        if two == 0 {
            return Ok(0);
        }
        if two == -1 && v % 2 == 1 {
            sign = -1;
        }
    }
    Ok(sign * jacobi(d, odd))
}

/// Jacobi symbol `(a/n)` for odd `n ≥ 1`.
fn jacobi(a: i64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut n = n as u128;
    let mut a = (a as i128).rem_euclid(n as i128) as u128;
    let mut result = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            result = -result;
        }
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}
