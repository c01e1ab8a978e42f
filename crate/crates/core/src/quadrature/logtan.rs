//! The log-tan integrals behind `I₇`.
//!
//! `ln|(tan θ + tan φ)/(tan θ - tan φ)|` equals `ln|sin(θ+φ)/sin(θ-φ)|` after
//! multiplying through by `cos θ cos φ`. The sine form has no pole at
//! `θ = π/2`, and with `θ - φ` taken from the exact endpoint distance it
//! keeps full accuracy next to the logarithmic singularity at `θ = φ`.

use rug::Float;

use super::engine::{Abscissa, QuadratureError, QuadratureResult, TanhSinh};
use crate::error::{Error, Result};
use crate::mpcontext::{PrecisionContext, Real};
use crate::specfun::clausen2_float;

/// Which endpoint of the integration interval is the singular point `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SingularEnd {
    Left,
    Right,
}

/// `θ ↦ ln|sin(θ+φ)/sin(θ-φ)|` with `φ` at the given endpoint.
pub(crate) fn log_tan_ratio(phi: &Float, end: SingularEnd) -> impl Fn(&Abscissa) -> Float + Sync + '_ {
    move |p: &Abscissa| {
        let prec = p.x.prec();
        let offset = match end {
            SingularEnd::Left => p.from_left.clone(),
            SingularEnd::Right => Float::with_val(prec, -&p.from_right),
        };
        let num = Float::with_val(prec, &p.x + phi).sin();
        let den = offset.sin();
        Float::with_val(prec, num / den).abs().ln()
    }
}

/// `I₇ = 24/(7√7) · ∫_{π/3}^{π/2} ln|(tan θ + √7)/(tan θ - √7)| dθ`, split at
/// `φ₇ = arctan √7`.
#[derive(Clone, Debug)]
pub struct I7Evaluation {
    pub value: Real,
    /// `∫_{π/3}^{φ₇}`
    pub lower: QuadratureResult,
    /// `∫_{φ₇}^{π/2}`
    pub upper: QuadratureResult,
}

pub fn integrate_i7(ctx: &PrecisionContext, target_digits: u32) -> Result<I7Evaluation> {
    let prec = ctx.prec();
    let phi = ctx.phi7();
    let third = Float::with_val(prec, ctx.pi() / 3u32);
    let half = Float::with_val(prec, ctx.pi() / 2u32);
    let engine = TanhSinh::new(ctx).target_digits(target_digits);

    let lower = engine
        .integrate(log_tan_ratio(phi, SingularEnd::Right), &third, phi)
        .map_err(|e| e.in_piece("lower"))?;
    let upper = engine
        .integrate(log_tan_ratio(phi, SingularEnd::Left), phi, &half)
        .map_err(|e| e.in_piece("upper"))?;

    let prefactor = Float::with_val(prec, 24u32 / Float::with_val(prec, ctx.sqrt7() * 7u32));
    let sum = Float::with_val(prec, lower.value.value() + upper.value.value());
    Ok(I7Evaluation { value: ctx.real(sum * prefactor), lower, upper })
}

/// Which of the two log-tan closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogTanPart {
    /// `∫_φ^x ln[(tan θ + tan φ)/(tan θ - tan φ)] dθ`, `φ ≤ x ≤ π/2`.
    A,
    /// `∫_x^φ ln[(tan φ + tan θ)/(tan φ - tan θ)] dθ`, `0 ≤ x ≤ φ`.
    B,
}

fn check_log_tan_args(x: &Float, phi: &Float, part: LogTanPart, ctx: &PrecisionContext) -> Result<()> {
    let half = Float::with_val(ctx.prec(), ctx.pi() / 2u32);
    if !(*phi > 0 && *phi < half) {
        return Err(Error::Domain(format!("phi must lie in (0, pi/2), got {}", phi.to_f64())));
    }
    let ok = match part {
        LogTanPart::A => x >= phi && *x <= half,
        LogTanPart::B => *x >= 0 && x <= phi,
    };
    if !ok {
        return Err(Error::Domain(format!(
            "argument ordering violated for part {:?}: x = {}, phi = {}",
            part,
            x.to_f64(),
            phi.to_f64()
        )));
    }
    Ok(())
}

/// Closed form of the log-tan integral in terms of `Cl₂`:
/// part A gives `½Cl₂(4φ) - ½Cl₂(2x+2φ) + ½Cl₂(2x-2φ)`, part B its negation.
pub fn lemma3_closed_form(x: &Float, phi: &Float, part: LogTanPart, ctx: &PrecisionContext) -> Result<Real> {
    check_log_tan_args(x, phi, part, ctx)?;
    let prec = ctx.prec();
    let cl = |v: Float| clausen2_float(&v, ctx);
    let four_phi = cl(Float::with_val(prec, phi * 4u32));
    let sum = cl(Float::with_val(prec, x + phi) * 2u32);
    let diff = cl(Float::with_val(prec, x - phi) * 2u32);
    let a_value = (four_phi - sum + diff) / 2u32;
    Ok(ctx.real(match part {
        LogTanPart::A => a_value,
        LogTanPart::B => -a_value,
    }))
}

/// The same integral by tanh-sinh.
pub fn lemma3_quadrature(
    x: &Float,
    phi: &Float,
    part: LogTanPart,
    ctx: &PrecisionContext,
    digits: u32,
) -> Result<QuadratureResult> {
    check_log_tan_args(x, phi, part, ctx)?;
    let engine = TanhSinh::new(ctx).target_digits(digits);
    let result: Result<QuadratureResult, QuadratureError> = match part {
        LogTanPart::A => engine.integrate(log_tan_ratio(phi, SingularEnd::Left), phi, x),
        // ln[(tan φ + tan θ)/(tan φ - tan θ)] = ln|sin(θ+φ)/sin(θ-φ)| on θ < φ
        LogTanPart::B => engine.integrate(log_tan_ratio(phi, SingularEnd::Right), x, phi),
    };
    Ok(result?)
}
