//! Hurwitz zeta `ζ(s, a) = Σ_{m≥0} (m + a)^(-s)` by Euler–Maclaurin summation.
//!
//! With shift `N` and `x = N + a`,
//!
//! ```text
//! ζ(s, a) = Σ_{m<N} (m+a)^(-s) + x^(1-s)/(s-1) + x^(-s)/2
//!         + Σ_{j≥1} B_2j/(2j)! · s(s+1)…(s+2j-2) · x^(-s-2j+1)
//! ```
//!
//! `N` is chosen so that `2πx` exceeds the working digits times `ln 10`; the
//! correction terms then shrink below `10^-working_digits` before they start
//! to grow again.

use std::ops::Neg;

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::mpcontext::{PrecisionContext, Real};

/// `ζ(s, a)` for real `s > 1` and `0 < a ≤ 1`.
pub fn hurwitz_zeta(s: &Float, a: &Float, ctx: &PrecisionContext) -> Result<Real> {
    hurwitz_zeta_float(s, a, ctx).map(|v| ctx.real(v))
}

pub(crate) fn hurwitz_zeta_float(s: &Float, a: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !(s.is_finite() && *s > 1) {
        return Err(Error::Domain(format!("hurwitz_zeta needs s > 1, got {}", s.to_string_radix(10, Some(20)))));
    }
    if !(a.is_finite() && *a > 0 && *a <= 1) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta needs 0 < a <= 1, got {}",
            a.to_string_radix(10, Some(20))
        )));
    }
    let prec = ctx.prec();
    let work = prec + 32;
    let s = Float::with_val(work, s);
    let a = Float::with_val(work, a);
    let integer_s = s.is_integer().then(|| s.to_i32_saturating().unwrap_or(i32::MAX)).filter(|&v| v < i32::MAX);

    let pow_neg_s = |x: &Float| -> Float {
        match integer_s {
            Some(k) => Float::with_val(work, x.pow(-k)),
            None => (Float::with_val(work, x.ln_ref()) * &s).neg().exp(),
        }
    };

    let digits = f64::from(ctx.working_digits()) + 5.0;
    let two_pi = 2.0 * std::f64::consts::PI;
    let shift = (digits * std::f64::consts::LN_10 / two_pi).max(s.to_f64()).ceil() as u64 + 2;

    let mut sum = Float::new(work);
    for m in 0..shift {
        let base = Float::with_val(work, &a + m);
        sum += pow_neg_s(&base);
    }

    let x = Float::with_val(work, &a + shift);
    let x_neg_s = pow_neg_s(&x);
    let s_minus_1 = Float::with_val(work, &s - 1u32);
    sum += Float::with_val(work, &x * &x_neg_s) / &s_minus_1;
    sum += Float::with_val(work, &x_neg_s / 2u32);

    // B_2j/(2j)! = (-1)^(j+1) · 2 · ζ(2j)/(2π)^(2j)
    let x_inv2 = Float::with_val(work, x.square_ref()).recip();
    let mut rising = s.clone(); // s(s+1)…(s+2j-2)
    let mut x_pow = Float::with_val(work, &x_neg_s / &x); // x^(-s-2j+1)
    let cutoff = Float::with_val(work, Float::with_val(work, &*sum.as_abs()) >> (prec + 8));
    let expected_terms = (std::f64::consts::PI * x.to_f64()).ceil() as usize + 8;
    let mut coeffs = ctx.zeta_coefficients(expected_terms);
    let mut previous_size: Option<Float> = None;
    let mut j = 1usize;
    loop {
        if j >= coeffs.len() {
            coeffs = ctx.zeta_coefficients(j * 3 / 2 + 8);
        }
        let mut term = Float::with_val(work, &coeffs[j] * &rising);
        term *= &x_pow;
        term *= 2u32;
        let size = Float::with_val(work, &*term.as_abs());
        if j % 2 == 0 {
            sum -= &term;
        } else {
            sum += &term;
        }
        if size < cutoff {
            break;
        }
        if let Some(prev) = previous_size.as_ref() {
            if size > *prev {
                return Err(Error::Domain(format!(
                    "Euler-Maclaurin tail diverged before reaching working precision (s = {})",
                    s.to_string_radix(10, Some(20))
                )));
            }
        }
        previous_size = Some(size);
        let k = 2 * j as u32;
        rising *= Float::with_val(work, &s + (k - 1));
        rising *= Float::with_val(work, &s + k);
        x_pow *= &x_inv2;
        j += 1;
    }
    Ok(Float::with_val(prec, sum))
}
