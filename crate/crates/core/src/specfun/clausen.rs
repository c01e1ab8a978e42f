//! Clausen function `Cl₂(θ) = Σ sin(mθ)/m² = -∫₀^θ ln|2 sin(t/2)| dt`.
//!
//! Evaluation reduces `θ` into `[0, π]` using oddness and `2π`-periodicity and
//! then sums the ascending series
//!
//! ```text
//! Cl₂(θ) = θ - θ ln θ + Σ_{n≥1} ζ(2n)/(2π)^(2n) · θ^(2n+1) / (n(2n+1))
//! ```
//!
//! whose coefficients come from exact Bernoulli numbers. At `θ = π` the term
//! ratio is at most 1/4, so the truncation error after stopping is below 4/3
//! of the first omitted term.

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::mpcontext::{PrecisionContext, Real};
use crate::quadrature::{Abscissa, TanhSinh};

/// `Cl₂(θ)` at working precision.
pub fn clausen2(theta: &Float, ctx: &PrecisionContext) -> Real {
    ctx.real(clausen2_float(theta, ctx))
}

pub(crate) fn clausen2_float(theta: &Float, ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec();
    if theta.is_zero() {
        return Float::new(prec);
    }
    let (negate, r) = reduce(theta, ctx);
    let value = series(&r, ctx);
    if negate {
        -value
    } else {
        value
    }
}

/// `θ ↦ (negate, r)` with `r ∈ [0, π]` and `Cl₂(θ) = ±Cl₂(r)`.
fn reduce(theta: &Float, ctx: &PrecisionContext) -> (bool, Float) {
    let prec = ctx.prec();
    let pi_ref = ctx.pi();
    if *theta.as_abs() <= *pi_ref {
        return (theta.is_sign_negative(), Float::with_val(prec, &*theta.as_abs()));
    }
    // Extra bits for k·2π with large k.
    let extra = theta.get_exp().unwrap_or(0).max(0) as u32 + 16;
    let work = prec + extra;
    let two_pi = Float::with_val(work, Constant::Pi) * 2u32;
    let k = Float::with_val(work, theta / &two_pi).round();
    let r = Float::with_val(work, theta - k * &two_pi);
    (r.is_sign_negative(), Float::with_val(prec, &*r.as_abs()))
}

fn series(r: &Float, ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec();
    if r.is_zero() {
        return Float::new(prec);
    }
    let work = prec + 16;
    let r = Float::with_val(work, r);

    // Terms fall like (r/2π)^(2n); size the coefficient table up front.
    let two_pi = Float::with_val(64, Constant::Pi) * 2u32;
    let ratio_bits = 2.0 * (two_pi.to_f64() / r.to_f64()).log2();
    let mut coeffs = ctx.zeta_coefficients(((f64::from(work) + 8.0) / ratio_bits).ceil() as usize + 4);

    let ln_r = Float::with_val(work, r.ln_ref());
    let mut sum = Float::with_val(work, &r - Float::with_val(work, &r * &ln_r));
    let r2 = Float::with_val(work, r.square_ref());
    let mut power = Float::with_val(work, &r * &r2);
    let cutoff = Float::with_val(work, &r >> (work + 4));

    let mut n = 1usize;
    loop {
        if n >= coeffs.len() {
            coeffs = ctx.zeta_coefficients(n * 3 / 2 + 8);
        }
        let mut term = Float::with_val(work, &coeffs[n] * &power);
        term /= (n * (2 * n + 1)) as u64;
        sum += &term;
        if term < cutoff {
            break;
        }
        power *= &r2;
        n += 1;
    }
    Float::with_val(prec, sum)
}

/// `Cl₂(θ)` by tanh-sinh quadrature of `-∫₀^θ ln|2 sin(t/2)| dt`, for
/// `0 ≤ θ ≤ 2π`. Shares nothing with [`clausen2`] beyond the context.
pub fn clausen2_integral(theta: &Float, ctx: &PrecisionContext, digits: u32) -> Result<Real> {
    let prec = ctx.prec();
    let two_pi = Float::with_val(prec, ctx.pi() * 2u32);
    if theta.is_sign_negative() && !theta.is_zero() || *theta > two_pi {
        return Err(Error::Domain(format!(
            "clausen2_integral needs 0 <= theta <= 2pi, got {}",
            theta.to_string_radix(10, Some(20))
        )));
    }
    let zero = Float::new(prec);
    let gap_to_2pi = Float::with_val(prec, &two_pi - theta);
    let pi = ctx.pi().clone();
    let integrand = |p: &Abscissa| {
        // Distance of t to the nearer zero of sin(t/2) (0 or 2π).
        let near_zero = if p.x <= pi {
            p.from_left.clone()
        } else {
            Float::with_val(prec, &gap_to_2pi + &p.from_right)
        };
        let half = Float::with_val(prec, &near_zero / 2u32);
        let s = Float::with_val(prec, half.sin_ref()) * 2u32;
        -s.abs().ln()
    };
    let result = TanhSinh::new(ctx).target_digits(digits).integrate(integrand, &zero, theta)?;
    Ok(result.value)
}
