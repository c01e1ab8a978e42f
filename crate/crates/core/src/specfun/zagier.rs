//! `A(x) = ∫₀^x (1+t²)^(-1) ln(4/(1+t²)) dt`, and the arccotangent branch
//! it is expressed through.
//!
//! Differentiating `Cl₂(2 arccot x)` reproduces the integrand, so
//! `A(x) = Cl₂(2 arccot x)`; that is the primary route. The direct quadrature
//! is kept as an independent cross-check.

use rug::Float;

use super::clausen::clausen2_float;
use crate::error::Result;
use crate::mpcontext::{PrecisionContext, Real};
use crate::quadrature::{Abscissa, TanhSinh};

/// Principal arccotangent `arctan(1/x)`, with values in `(-π/2, π/2]` and
/// `arccot 0 = π/2`. For `x ≥ 0` this is `π/2 - arctan x`.
pub fn arccot(x: &Float, ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec();
    if x.is_zero() {
        return Float::with_val(prec, ctx.pi() / 2u32);
    }
    Float::with_val(prec, Float::with_val(prec + 16, x).recip().atan())
}

/// `A(x) = Cl₂(2 arccot x)`. Any real `x`: the two arccotangent branches
/// differ by `π`, which `Cl₂`'s `2π`-periodicity absorbs.
pub fn zagier_a(x: &Float, ctx: &PrecisionContext) -> Real {
    let angle = Float::with_val(ctx.prec(), arccot(x, ctx) * 2u32);
    ctx.real(clausen2_float(&angle, ctx))
}

/// `A(x)` by tanh-sinh quadrature of its defining integral.
pub fn zagier_a_quadrature(x: &Float, ctx: &PrecisionContext, digits: u32) -> Result<Real> {
    let prec = ctx.prec();
    let zero = Float::new(prec);
    let integrand = |p: &Abscissa| {
        let one_plus = Float::with_val(prec, p.x.square_ref()) + 1u32;
        let log = Float::with_val(prec, Float::with_val(prec, 4u32 / &one_plus).ln());
        log / one_plus
    };
    let engine = TanhSinh::new(ctx).target_digits(digits);
    if x.is_sign_negative() && !x.is_zero() {
        let result = engine.integrate(integrand, x, &zero)?;
        Ok(-result.value)
    } else {
        Ok(engine.integrate(integrand, &zero, x)?.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpcontext::make_context;

    #[test]
    fn zero_is_zero() {
        let ctx = make_context(30).unwrap();
        // A(0) = Cl₂(π), which vanishes up to the rounding of π.
        let v = zagier_a(&ctx.float(0), &ctx);
        assert!(v.agree_digits(&ctx.real(ctx.float(0))) >= 49);
    }

    #[test]
    fn arccot_branch() {
        let ctx = make_context(30).unwrap();
        let half_pi = Float::with_val(ctx.prec(), ctx.pi() / 2u32);
        let at_root7 = arccot(ctx.sqrt7(), &ctx);
        let expect = Float::with_val(ctx.prec(), &half_pi - ctx.phi7());
        assert!(ctx.real(at_root7).agree_digits(&ctx.real(expect)) >= 49);
        assert!(arccot(&ctx.float(-1), &ctx) < 0);
        assert_eq!(arccot(&ctx.float(0), &ctx), half_pi);
    }

    #[test]
    fn odd_in_x() {
        let ctx = make_context(30).unwrap();
        for x in [0.25, 1.0, 3.5] {
            let pos = zagier_a(&ctx.float(x), &ctx);
            let neg = zagier_a(&ctx.float(-x), &ctx);
            assert!(pos.agree_digits(&(-neg)) >= 48);
        }
    }

    #[test]
    fn quadrature_cross_check() {
        let ctx = make_context(50).unwrap();
        let cot_pi_7 = Float::with_val(ctx.prec(), ctx.pi() / 7u32).cot();
        let mut xs = vec![ctx.float(0.5), ctx.float(1), ctx.sqrt7().clone(), cot_pi_7];
        xs.push(Float::with_val(ctx.prec(), ctx.sqrt7() - Float::with_val(ctx.prec(), ctx.sqrt3() * 2u32)));
        for x in &xs {
            let series = zagier_a(x, &ctx);
            let quad = zagier_a_quadrature(x, &ctx, 50).unwrap();
            assert!(series.agree_digits(&quad) >= 48, "x = {}", x.to_f64());
        }
    }
}
