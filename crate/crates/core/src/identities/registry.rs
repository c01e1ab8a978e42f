use rand::Rng;
use rug::Float;

use super::{Env, IdentitySpec};
use crate::error::Result;
use crate::mpcontext::PrecisionContext;
use crate::quadrature::{lemma3_closed_form, lemma3_quadrature, LogTanPart};
use crate::specfun::{
    arccot, clausen2_float, dirichlet_l, dirichlet_l_clausen, hurwitz_zeta, zagier_a, zagier_a_quadrature,
    Discriminant, LSeriesPoint,
};

const SAMPLED_ANGLES: usize = 200;
const LOG_TAN_PAIRS: usize = 10;
const MULTIPLIERS: [u32; 5] = [2, 3, 4, 5, 7];

/// Every identity, in a fixed order.
pub fn registry() -> Vec<IdentitySpec> {
    fn entry(id: &'static str, description: &'static str, lhs: super::Evaluator, rhs: super::Evaluator) -> IdentitySpec {
        IdentitySpec { id, description, lhs, rhs, default_digits: 50, sampled: false }
    }
    fn sampled(spec: IdentitySpec) -> IdentitySpec {
        IdentitySpec { sampled: true, ..spec }
    }
    vec![
        entry("eq2", "I7 by quadrature equals L_{-7}(2) by Hurwitz zeta", i7_quadrature, l_hurwitz),
        entry(
            "eq4",
            "I7 by quadrature equals (4/(7 sqrt7))[3Cl2(2phi7) - 3Cl2(4phi7) + Cl2(6phi7)]",
            i7_quadrature,
            phi7_clausen_form,
        ),
        entry(
            "eq5",
            "L_{-7}(2) by Hurwitz zeta equals (2/sqrt7)[Cl2(2pi/7) + Cl2(4pi/7) - Cl2(6pi/7)]",
            l_hurwitz,
            seventh_clausen_form,
        ),
        entry(
            "eq6",
            "2[3Cl2(2phi7) - 3Cl2(4phi7) + Cl2(6phi7)] = 7[Cl2(2pi/7) + Cl2(4pi/7) - Cl2(6pi/7)]",
            six_term_lhs,
            six_term_rhs,
        ),
        entry(
            "eq9",
            "(7 sqrt7/24) I7 equals -Cl2(pi + 2phi7) + [Cl2(2phi7 + 2pi/3) + Cl2(2phi7 - 2pi/3)]/2",
            scaled_i7,
            log_tan_clausen_form,
        ),
        entry(
            "eq10a",
            "(2/sqrt7)[A(cot pi/7) + A(cot 2pi/7) + A(cot 4pi/7)] equals L_{-7}(2)",
            zagier_cot_form,
            l_hurwitz,
        ),
        entry(
            "eq10b",
            "(12/(7 sqrt7))[2A(sqrt7) + A(sqrt7 + 2sqrt3) + A(sqrt7 - 2sqrt3)] equals L_{-7}(2)",
            zagier_root_form,
            l_hurwitz,
        ),
        entry(
            "eq11",
            "A(x) = Cl2(2 arccot x) against quadrature of the defining integral",
            zagier_series_points,
            zagier_quadrature_points,
        ),
        entry(
            "eq12",
            "L_{-7}(2) by Hurwitz zeta equals (4/(7 sqrt7))[3Cl2(2phi7) - 3Cl2(4phi7) + Cl2(6phi7)]",
            l_hurwitz,
            phi7_clausen_form,
        ),
        sampled(entry("lemma1a", "Cl2(-theta) = -Cl2(theta)", odd_lhs, odd_rhs)),
        sampled(entry("lemma1b", "Cl2(theta + 2m pi) = Cl2(theta), m in {-2, -1, 1, 2}", periodic_lhs, periodic_rhs)),
        sampled(entry("lemma1c", "Cl2(pi + theta) = -Cl2(pi - theta)", reflection_lhs, reflection_rhs)),
        entry("lemma1d", "Cl2(m pi) = 0 for m = -3..3", multiples_of_pi, zeros_for_multiples_of_pi),
        sampled(entry(
            "lemma2",
            "Cl2(m theta) = m sum_l Cl2(theta + 2 pi l/m), m in {2, 3, 4, 5, 7}",
            multiplication_lhs,
            multiplication_rhs,
        )),
        sampled(entry("lemma3a", "log-tan integral from phi to x in closed form", log_tan_a_closed, log_tan_a_quadrature)),
        sampled(entry("lemma3b", "log-tan integral from x to phi in closed form", log_tan_b_closed, log_tan_b_quadrature)),
        entry("lemma4a", "arccot(sqrt7) = pi/2 - arctan(sqrt7)", arccot_root7, half_pi_minus_phi7),
        entry("lemma4b", "arccot(sqrt7 + 2sqrt3) = arctan(sqrt7) - pi/3", arccot_sum, phi7_minus_third),
        entry("lemma4c", "arccot(sqrt7 - 2sqrt3) = arctan(sqrt7) - 2pi/3", arccot_difference, phi7_minus_two_thirds),
        entry(
            "hurwitz_route",
            "(1/49)[z(1/7) + z(2/7) - z(3/7) + z(4/7) - z(5/7) - z(6/7)], z(a) = zeta(2, a), equals L_{-7}(2) by Clausen values",
            explicit_hurwitz_sum,
            l_clausen,
        ),
        entry("dup_phi7", "Cl2(pi + 2phi7) = Cl2(4phi7)/2 - Cl2(2phi7)", duplication_lhs, duplication_rhs),
        entry(
            "trip_phi7",
            "Cl2(2phi7 + 2pi/3) + Cl2(2phi7 - 2pi/3) = Cl2(6phi7)/3 - Cl2(2phi7)",
            triplication_lhs,
            triplication_rhs,
        ),
    ]
}

fn one(v: Float) -> Result<Vec<Float>> {
    Ok(vec![v])
}

fn cl(theta: Float, ctx: &PrecisionContext) -> Float {
    clausen2_float(&theta, ctx)
}

/// `num·π/den`.
fn pi_frac(num: i32, den: u32, ctx: &PrecisionContext) -> Float {
    Float::with_val(ctx.prec(), ctx.pi() * num) / den
}

/// `k·φ₇`.
fn phi_times(k: u32, ctx: &PrecisionContext) -> Float {
    Float::with_val(ctx.prec(), ctx.phi7() * k)
}

fn sum(ctx: &PrecisionContext, a: &Float, b: &Float) -> Float {
    Float::with_val(ctx.prec(), a + b)
}

/// `(X, Y)` with `X = 3Cl₂(2φ₇) - 3Cl₂(4φ₇) + Cl₂(6φ₇)` and
/// `Y = Cl₂(2π/7) + Cl₂(4π/7) - Cl₂(6π/7)`.
pub(super) fn six_term_sides(ctx: &PrecisionContext) -> (Float, Float) {
    let prec = ctx.prec();
    let c2 = cl(phi_times(2, ctx), ctx);
    let c4 = cl(phi_times(4, ctx), ctx);
    let c6 = cl(phi_times(6, ctx), ctx);
    let x = Float::with_val(prec, &c2 - &c4) * 3u32 + c6;
    let s2 = cl(pi_frac(2, 7, ctx), ctx);
    let s4 = cl(pi_frac(4, 7, ctx), ctx);
    let s6 = cl(pi_frac(6, 7, ctx), ctx);
    let y = Float::with_val(prec, &s2 + &s4) - s6;
    (x, y)
}

pub(super) fn l_minus_seven_hurwitz(ctx: &PrecisionContext) -> Result<Float> {
    let point = LSeriesPoint::new(Discriminant::new(-7)?, ctx.float(2))?;
    Ok(dirichlet_l(&point, ctx)?.into_float())
}

fn l_hurwitz(env: &Env<'_>) -> Result<Vec<Float>> {
    one(l_minus_seven_hurwitz(env.ctx())?)
}

fn l_clausen(env: &Env<'_>) -> Result<Vec<Float>> {
    one(dirichlet_l_clausen(Discriminant::new(-7)?, env.ctx())?.into_float())
}

fn i7_quadrature(env: &Env<'_>) -> Result<Vec<Float>> {
    one(env.i7()?)
}

fn scaled_i7(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let prec = ctx.prec();
    let factor = Float::with_val(prec, ctx.sqrt7() * 7u32) / 24u32;
    one(env.i7()? * factor)
}

fn phi7_clausen_form(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let prec = ctx.prec();
    let (x, _) = six_term_sides(ctx);
    let den = Float::with_val(prec, ctx.sqrt7() * 7u32);
    one(Float::with_val(prec, x * 4u32) / den)
}

fn seventh_clausen_form(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let (_, y) = six_term_sides(ctx);
    one(Float::with_val(ctx.prec(), y * 2u32) / ctx.sqrt7())
}

fn six_term_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let (x, _) = six_term_sides(env.ctx());
    one(x * 2u32)
}

fn six_term_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let (_, y) = six_term_sides(env.ctx());
    one(y * 7u32)
}

fn log_tan_clausen_form(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let two_phi = phi_times(2, ctx);
    let pole = cl(sum(ctx, &pi_frac(1, 1, ctx), &two_phi), ctx);
    let third = pi_frac(2, 3, ctx);
    let plus = cl(sum(ctx, &two_phi, &third), ctx);
    let minus = cl(Float::with_val(ctx.prec(), &two_phi - &third), ctx);
    one((plus + minus) / 2u32 - pole)
}

fn cot(theta: Float) -> Float {
    theta.tan().recip()
}

fn zagier_cot_form(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let mut total = Float::new(ctx.prec());
    for k in [1, 2, 4] {
        total += zagier_a(&cot(pi_frac(k, 7, ctx)), ctx).into_float();
    }
    one(total * 2u32 / ctx.sqrt7())
}

fn root_arguments(ctx: &PrecisionContext) -> (Float, Float) {
    let two_root3 = Float::with_val(ctx.prec(), ctx.sqrt3() * 2u32);
    (sum(ctx, ctx.sqrt7(), &two_root3), Float::with_val(ctx.prec(), ctx.sqrt7() - &two_root3))
}

fn zagier_root_form(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let prec = ctx.prec();
    let (plus, minus) = root_arguments(ctx);
    let mut total = zagier_a(ctx.sqrt7(), ctx).into_float() * 2u32;
    total += zagier_a(&plus, ctx).into_float();
    total += zagier_a(&minus, ctx).into_float();
    let den = Float::with_val(prec, ctx.sqrt7() * 7u32);
    one(total * 12u32 / den)
}

fn zagier_points(ctx: &PrecisionContext) -> Vec<Float> {
    let (_, minus) = root_arguments(ctx);
    vec![ctx.float(0.5), ctx.float(1), ctx.sqrt7().clone(), cot(pi_frac(1, 7, ctx)), minus]
}

fn zagier_series_points(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    Ok(zagier_points(ctx).iter().map(|x| zagier_a(x, ctx).into_float()).collect())
}

fn zagier_quadrature_points(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    zagier_points(ctx)
        .iter()
        .map(|x| Ok(zagier_a_quadrature(x, ctx, ctx.target_digits())?.into_float()))
        .collect()
}

/// Seeded angles in `(-4π, 4π)`.
fn sampled_angles(env: &Env<'_>) -> Vec<Float> {
    let ctx = env.ctx();
    let span = 4.0 * std::f64::consts::PI;
    let mut rng = env.rng();
    (0..SAMPLED_ANGLES).map(|_| ctx.float(rng.gen_range(-span..span))).collect()
}

fn odd_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    Ok(sampled_angles(env).into_iter().map(|t| cl(-t, ctx)).collect())
}

fn odd_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    Ok(sampled_angles(env).into_iter().map(|t| -cl(t, ctx)).collect())
}

const SHIFTS: [i32; 4] = [-2, -1, 1, 2];

fn periodic_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let mut out = Vec::new();
    for t in sampled_angles(env) {
        for m in SHIFTS {
            out.push(cl(sum(ctx, &t, &pi_frac(2 * m, 1, ctx)), ctx));
        }
    }
    Ok(out)
}

fn periodic_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let mut out = Vec::new();
    for t in sampled_angles(env) {
        let v = cl(t, ctx);
        out.extend(std::iter::repeat_n(v, SHIFTS.len()));
    }
    Ok(out)
}

fn reflection_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    Ok(sampled_angles(env).into_iter().map(|t| cl(sum(ctx, ctx.pi(), &t), ctx)).collect())
}

fn reflection_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    Ok(sampled_angles(env)
        .into_iter()
        .map(|t| -cl(Float::with_val(ctx.prec(), ctx.pi() - &t), ctx))
        .collect())
}

fn multiples_of_pi(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    Ok((-3..=3).map(|m| cl(pi_frac(m, 1, ctx), ctx)).collect())
}

fn zeros_for_multiples_of_pi(env: &Env<'_>) -> Result<Vec<Float>> {
    Ok((-3..=3).map(|_| Float::new(env.ctx().prec())).collect())
}

/// Angles for the multiplication formula, in `(0, 2π)`.
fn multiplication_angles(env: &Env<'_>) -> Vec<Float> {
    let ctx = env.ctx();
    let mut rng = env.rng();
    (0..SAMPLED_ANGLES)
        .map(|_| ctx.float(rng.gen_range(0.0..2.0 * std::f64::consts::PI)))
        .collect()
}

fn multiplication_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let mut out = Vec::new();
    for t in multiplication_angles(env) {
        for m in MULTIPLIERS {
            out.push(cl(Float::with_val(ctx.prec(), &t * m), ctx));
        }
    }
    Ok(out)
}

fn multiplication_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let prec = ctx.prec();
    let mut out = Vec::new();
    for t in multiplication_angles(env) {
        for m in MULTIPLIERS {
            let mut acc = Float::new(prec);
            for l in 0..m {
                acc += cl(sum(ctx, &t, &pi_frac(2 * l as i32, m, ctx)), ctx);
            }
            out.push(acc * m);
        }
    }
    Ok(out)
}

/// Seeded `(x, φ)` pairs valid for the given part.
fn log_tan_pairs(env: &Env<'_>, part: LogTanPart) -> Vec<(Float, Float)> {
    let ctx = env.ctx();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut rng = env.rng();
    (0..LOG_TAN_PAIRS)
        .map(|_| {
            let phi = rng.gen_range(0.15..half_pi - 0.15);
            let u: f64 = rng.gen_range(0.0..1.0);
            let x = match part {
                LogTanPart::A => phi + u * (half_pi - phi),
                LogTanPart::B => u * phi,
            };
            (ctx.float(x), ctx.float(phi))
        })
        .collect()
}

fn log_tan_closed(env: &Env<'_>, part: LogTanPart) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    log_tan_pairs(env, part)
        .iter()
        .map(|(x, phi)| Ok(lemma3_closed_form(x, phi, part, ctx)?.into_float()))
        .collect()
}

fn log_tan_quadrature(env: &Env<'_>, part: LogTanPart) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    log_tan_pairs(env, part)
        .iter()
        .map(|(x, phi)| Ok(lemma3_quadrature(x, phi, part, ctx, ctx.target_digits())?.value.into_float()))
        .collect()
}

fn log_tan_a_closed(env: &Env<'_>) -> Result<Vec<Float>> {
    log_tan_closed(env, LogTanPart::A)
}

fn log_tan_a_quadrature(env: &Env<'_>) -> Result<Vec<Float>> {
    log_tan_quadrature(env, LogTanPart::A)
}

fn log_tan_b_closed(env: &Env<'_>) -> Result<Vec<Float>> {
    log_tan_closed(env, LogTanPart::B)
}

fn log_tan_b_quadrature(env: &Env<'_>) -> Result<Vec<Float>> {
    log_tan_quadrature(env, LogTanPart::B)
}

fn arccot_root7(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(arccot(ctx.sqrt7(), ctx))
}

fn half_pi_minus_phi7(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    // arctan √7 recomputed here rather than read from the cached φ₇
    let atan = Float::with_val(ctx.prec(), ctx.sqrt7().atan_ref());
    one(pi_frac(1, 2, ctx) - atan)
}

fn arccot_sum(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(arccot(&root_arguments(ctx).0, ctx))
}

fn arccot_difference(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(arccot(&root_arguments(ctx).1, ctx))
}

fn phi7_minus_third(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(Float::with_val(ctx.prec(), ctx.phi7() - pi_frac(1, 3, ctx)))
}

fn phi7_minus_two_thirds(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(Float::with_val(ctx.prec(), ctx.phi7() - pi_frac(2, 3, ctx)))
}

fn explicit_hurwitz_sum(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let prec = ctx.prec();
    let two = ctx.float(2);
    let mut total = Float::new(prec);
    for (l, sign) in [(1u32, 1i32), (2, 1), (3, -1), (4, 1), (5, -1), (6, -1)] {
        let a = Float::with_val(prec, l) / 7u32;
        let z = hurwitz_zeta(&two, &a, ctx)?.into_float();
        total += z * sign;
    }
    one(total / 49u32)
}

fn duplication_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(cl(sum(ctx, ctx.pi(), &phi_times(2, ctx)), ctx))
}

fn duplication_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(cl(phi_times(4, ctx), ctx) / 2u32 - cl(phi_times(2, ctx), ctx))
}

fn triplication_lhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    let two_phi = phi_times(2, ctx);
    let third = pi_frac(2, 3, ctx);
    one(cl(sum(ctx, &two_phi, &third), ctx) + cl(Float::with_val(ctx.prec(), &two_phi - &third), ctx))
}

fn triplication_rhs(env: &Env<'_>) -> Result<Vec<Float>> {
    let ctx = env.ctx();
    one(cl(phi_times(6, ctx), ctx) / 3u32 - cl(phi_times(2, ctx), ctx))
}
