//! Double-exponential quadrature and the split evaluation of `I₇`.
//!
//! The engine never looks for interior singularities; callers split the
//! interval so that each singular point sits at an endpoint.

mod engine;
mod logtan;

pub(crate) use self::engine::NodeCache;
pub use self::engine::{tanh_sinh, Abscissa, QuadratureError, QuadratureResult, TanhSinh, DEFAULT_MAX_LEVELS};
pub use self::logtan::{integrate_i7, lemma3_closed_form, lemma3_quadrature, I7Evaluation, LogTanPart};

#[cfg(test)]
mod tests {
    use rug::ops::Pow;
    use rug::Float;

    use super::*;
    use crate::mpcontext::{agree_digits, make_context, PrecisionContext};
    use crate::specfun::zagier_a;

    #[test]
    fn four_over_one_plus_t_squared_is_pi() {
        let ctx = make_context(60).unwrap();
        let f = |p: &Abscissa| Float::with_val(p.x.prec(), 4u32 / (Float::with_val(p.x.prec(), p.x.square_ref()) + 1u32));
        let r = tanh_sinh(f, &ctx.float(0), &ctx.float(1), &ctx, 60).unwrap();
        assert!(agree_digits(r.value.value(), ctx.pi(), ctx.working_digits()) >= 60);
        assert!(r.error_estimate < Float::with_val(64, 10).pow(-60i32));
        assert!(r.levels_used >= 2);
    }

    #[test]
    fn log_endpoint_singularity() {
        let ctx = make_context(50).unwrap();
        let f = |p: &Abscissa| Float::with_val(p.x.prec(), p.from_left.ln_ref());
        let r = tanh_sinh(f, &ctx.float(0), &ctx.float(1), &ctx, 50).unwrap();
        assert!(agree_digits(r.value.value(), &ctx.float(-1), ctx.working_digits()) >= 50);
    }

    #[test]
    fn zagier_integral_at_root_seven() {
        let ctx = make_context(40).unwrap();
        let f = |p: &Abscissa| {
            let prec = p.x.prec();
            let one_plus = Float::with_val(prec, p.x.square_ref()) + 1u32;
            Float::with_val(prec, 4u32 / &one_plus).ln() / one_plus
        };
        let r = tanh_sinh(f, &ctx.float(0), ctx.sqrt7(), &ctx, 40).unwrap();
        assert!(r.value.agree_digits(&zagier_a(ctx.sqrt7(), &ctx)) >= 40);
    }

    #[test]
    fn odd_integrand_split_at_interior_singularity() {
        let ctx = make_context(40).unwrap();
        let left = |p: &Abscissa| {
            let prec = p.x.prec();
            // t ln|t| on [-1, 0] with |t| = distance to 0
            let t = Float::with_val(prec, -&p.from_right);
            let l = Float::with_val(prec, p.from_right.ln_ref());
            t * l
        };
        let right = |p: &Abscissa| {
            let prec = p.x.prec();
            Float::with_val(prec, &p.from_left * Float::with_val(prec, p.from_left.ln_ref()))
        };
        let a = tanh_sinh(left, &ctx.float(-1), &ctx.float(0), &ctx, 40).unwrap();
        let b = tanh_sinh(right, &ctx.float(0), &ctx.float(1), &ctx, 40).unwrap();
        let total = &a.value + &b.value;
        assert!(agree_digits(total.value(), &ctx.float(0), ctx.working_digits()) >= 40);
        assert!(agree_digits(b.value.value(), &ctx.float(-0.25), ctx.working_digits()) >= 40);
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let ctx = make_context(20).unwrap();
        let f = |p: &Abscissa| Float::with_val(p.x.prec(), p.x.ln_ref());
        let err = tanh_sinh(f, &ctx.float(-1), &ctx.float(1), &ctx, 20).unwrap_err();
        assert!(matches!(err, QuadratureError::NonFinite { .. }), "{err}");
    }

    #[test]
    fn non_convergence_carries_estimates() {
        let ctx = make_context(40).unwrap();
        let f = |p: &Abscissa| Float::with_val(p.x.prec(), p.from_left.ln_ref()).abs().sqrt();
        let err = TanhSinh::new(&ctx).max_levels(3).integrate(f, &ctx.float(0), &ctx.float(1)).unwrap_err();
        match err {
            QuadratureError::NonConvergence { levels, last, previous } => {
                assert_eq!(levels, 3);
                assert!(!last.is_empty() && !previous.is_empty());
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn empty_and_reversed_intervals() {
        let ctx = make_context(20).unwrap();
        let f = |p: &Abscissa| p.x.clone();
        let r = tanh_sinh(f, &ctx.float(1), &ctx.float(1), &ctx, 20).unwrap();
        assert!(r.value.value().is_zero());
        assert!(tanh_sinh(f, &ctx.float(2), &ctx.float(1), &ctx, 20).is_err());
    }

    #[test]
    fn evaluations_grow_geometrically() {
        let ctx = make_context(80).unwrap();
        let f = |p: &Abscissa| Float::with_val(p.x.prec(), p.x.exp_ref());
        let r = tanh_sinh(f, &ctx.float(0), &ctx.float(1), &ctx, 80).unwrap();
        let bound = (2 * ctx.nodes_for_test(0) as u64) << r.levels_used;
        assert!(r.evaluations <= bound);
    }

    fn i7_pieces_deterministic(workers: usize) -> (Float, Float) {
        let ctx = PrecisionContext::builder(60).workers(workers).build().unwrap();
        let r = integrate_i7(&ctx, 60).unwrap();
        (r.lower.value.into_float(), r.upper.value.into_float())
    }

    #[test]
    fn worker_count_does_not_change_bits() {
        let one = i7_pieces_deterministic(1);
        assert_eq!(one, i7_pieces_deterministic(2));
        assert_eq!(one, i7_pieces_deterministic(8));
    }

    #[test]
    fn i7_matches_reference_digits() {
        let ctx = make_context(30).unwrap();
        let r = integrate_i7(&ctx, 30).unwrap();
        assert_eq!(&r.value.to_fixed(15), "1.151925470544491");
    }

    #[test]
    fn i7_pieces_match_closed_forms() {
        let ctx = make_context(50).unwrap();
        let r = integrate_i7(&ctx, 50).unwrap();
        let third = Float::with_val(ctx.prec(), ctx.pi() / 3u32);
        let half = Float::with_val(ctx.prec(), ctx.pi() / 2u32);
        let lower = lemma3_closed_form(&third, ctx.phi7(), LogTanPart::B, &ctx).unwrap();
        let upper = lemma3_closed_form(&half, ctx.phi7(), LogTanPart::A, &ctx).unwrap();
        assert!(r.lower.value.agree_digits(&lower) >= 50);
        assert!(r.upper.value.agree_digits(&upper) >= 50);
    }

    #[test]
    fn log_tan_part_a_at_eighth_pi() {
        let ctx = make_context(40).unwrap();
        let phi = Float::with_val(ctx.prec(), ctx.pi() / 8u32);
        let x = Float::with_val(ctx.prec(), ctx.pi() / 4u32);
        let closed = lemma3_closed_form(&x, &phi, LogTanPart::A, &ctx).unwrap();
        let quad = lemma3_quadrature(&x, &phi, LogTanPart::A, &ctx, 40).unwrap();
        assert!(closed.agree_digits(&quad.value) >= 40);
    }

    #[test]
    fn log_tan_empty_interval_and_domain() {
        let ctx = make_context(20).unwrap();
        let phi = ctx.float(0.7);
        let closed = lemma3_closed_form(&phi, &phi, LogTanPart::B, &ctx).unwrap();
        assert!(agree_digits(closed.value(), &ctx.float(0), ctx.working_digits()) >= 38);
        assert!(lemma3_closed_form(&ctx.float(0.5), &phi, LogTanPart::A, &ctx).is_err());
        assert!(lemma3_closed_form(&ctx.float(0.9), &phi, LogTanPart::B, &ctx).is_err());
        assert!(lemma3_closed_form(&ctx.float(0.9), &ctx.float(1.6), LogTanPart::A, &ctx).is_err());
    }
}
