use std::path::PathBuf;

use rug::Float;
use serde_json::{json, Value};
use thiserror::Error;

use dilogint::identities::{self, Verifier};
use dilogint::quadrature::{integrate_i7, QuadratureResult, TanhSinh};
use dilogint::relations::{self, IntegerRelation};
use dilogint::specfun::{self, Discriminant, LSeriesPoint};
use dilogint::{PrecisionContext, Real};

use crate::expr::{Expr, ExprError};
use crate::{Cli, Command, EvalTarget, IntegrateTarget};

/// Half-width of the band around φ₇ that `sample` keeps clear of.
pub const SAMPLE_GUARD: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] dilogint::Error),
    #[error("cannot parse expression: {0}")]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// 1 for a failed check, 2 for bad input, 3 when quadrature does not
    /// converge.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(dilogint::Error::Quadrature(_)) => 3,
            CliError::Lib(dilogint::Error::RelationNotFound { .. }) => 1,
            CliError::Io { .. } => 1,
            _ => 2,
        }
    }

    pub fn hint(&self) -> Option<String> {
        match self {
            CliError::Lib(dilogint::Error::InsufficientPrecision { need, .. }) => {
                Some(format!("rerun with --digits {need} or more"))
            }
            CliError::Lib(dilogint::Error::RelationNotFound { .. }) => {
                Some("raise --digits; the search was exhausted at this precision".into())
            }
            CliError::Lib(dilogint::Error::Quadrature(_)) => {
                Some("the integrand may have an interior singularity; split the interval there".into())
            }
            _ => None,
        }
    }
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// False when a requested check failed.
    pub success: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, success: true }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = PrecisionContext::builder(cli.digits).workers(cli.workers as usize).build()?;
    match &cli.command {
        Command::Eval(target) => eval(target, &ctx),
        Command::Integrate(target) => integrate(target, &ctx),
        Command::Verify { id } => verify(id, cli.seed, &ctx),
        Command::Discover => discover(&ctx),
        Command::Sample { points } => sample(*points),
        Command::Constants => Ok(constants(&ctx)),
    }
}

fn fixed(v: &Real, ctx: &PrecisionContext) -> String {
    v.to_fixed(ctx.target_digits() as usize)
}

fn short(v: &Float) -> String {
    if v.is_zero() {
        "0".into()
    } else {
        v.to_string_radix(10, Some(3))
    }
}

fn eval(target: &EvalTarget, ctx: &PrecisionContext) -> Result<Outcome, CliError> {
    let (name, args, value) = match target {
        EvalTarget::Cl2 { theta } => {
            let t = Expr::constant(theta, ctx)?;
            ("cl2", json!({ "theta": theta }), specfun::clausen2(&t, ctx))
        }
        EvalTarget::L { d, s } => {
            let point = LSeriesPoint::new(Discriminant::new(*d)?, Expr::constant(s, ctx)?)?;
            ("L", json!({ "d": d.to_string(), "s": s }), specfun::dirichlet_l(&point, ctx)?)
        }
        EvalTarget::Hurwitz { s, a } => {
            let v = specfun::hurwitz_zeta(&Expr::constant(s, ctx)?, &Expr::constant(a, ctx)?, ctx)?;
            ("hurwitz", json!({ "s": s, "a": a }), v)
        }
        EvalTarget::A { x } => {
            let v = specfun::zagier_a(&Expr::constant(x, ctx)?, ctx);
            ("A", json!({ "x": x }), v)
        }
        EvalTarget::Kronecker { d, n } => {
            if *n == 0 {
                return Err(CliError::Usage("kronecker needs n >= 1".into()));
            }
            let k = specfun::kronecker(Discriminant::new(*d)?, *n)?;
            let json = json!({
                "function": "kronecker",
                "arguments": { "d": d.to_string(), "n": n.to_string() },
                "value": k.to_string(),
            });
            return Ok(Outcome::ok(format!("{k}\n"), json));
        }
    };
    let text = fixed(&value, ctx);
    let json = json!({
        "function": name,
        "arguments": args,
        "digits": ctx.target_digits(),
        "value": text,
    });
    Ok(Outcome::ok(format!("{text}\n"), json))
}

fn piece_json(name: &str, r: &QuadratureResult, ctx: &PrecisionContext) -> Value {
    json!({
        "piece": name,
        "value": fixed(&r.value, ctx),
        "error_estimate": short(&r.error_estimate),
        "levels_used": r.levels_used,
        "evaluations": r.evaluations,
    })
}

fn integrate(target: &IntegrateTarget, ctx: &PrecisionContext) -> Result<Outcome, CliError> {
    let digits = ctx.target_digits();
    match target {
        IntegrateTarget::I7 => {
            let r = integrate_i7(ctx, digits)?;
            let value = fixed(&r.value, ctx);
            let error = Float::with_val(64, &r.lower.error_estimate).max(&r.upper.error_estimate);
            let evaluations = r.lower.evaluations + r.upper.evaluations;
            let text = format!(
                "value           {value}\nerror_estimate  {}\nlevels          {} (lower), {} (upper)\nevaluations     {evaluations}\n",
                short(&error),
                r.lower.levels_used,
                r.upper.levels_used,
            );
            let json = json!({
                "integral": "i7",
                "digits": digits,
                "value": value,
                "error_estimate": short(&error),
                "pieces": [piece_json("lower", &r.lower, ctx), piece_json("upper", &r.upper, ctx)],
                "evaluations": evaluations,
            });
            Ok(Outcome::ok(text, json))
        }
        IntegrateTarget::Custom { a, b, expr } => {
            let lo = Expr::constant(a, ctx)?;
            let hi = Expr::constant(b, ctx)?;
            let f = Expr::parse(expr, ctx)?;
            let (lo_ord, hi_ord, flip) = if lo <= hi { (&lo, &hi, false) } else { (&hi, &lo, true) };
            let mut r = TanhSinh::new(ctx)
                .target_digits(digits)
                .integrate(|p| f.eval(&p.x, ctx), lo_ord, hi_ord)
                .map_err(dilogint::Error::from)?;
            if flip {
                r.value = -r.value;
            }
            let value = fixed(&r.value, ctx);
            let text = format!(
                "value           {value}\nerror_estimate  {}\nlevels          {}\nevaluations     {}\n",
                short(&r.error_estimate),
                r.levels_used,
                r.evaluations,
            );
            let json = json!({
                "integral": "custom",
                "expression": expr,
                "a": a,
                "b": b,
                "digits": digits,
                "value": value,
                "error_estimate": short(&r.error_estimate),
                "levels_used": r.levels_used,
                "evaluations": r.evaluations,
            });
            Ok(Outcome::ok(text, json))
        }
    }
}

fn verify(id: &str, seed: Option<u64>, ctx: &PrecisionContext) -> Result<Outcome, CliError> {
    let mut verifier = Verifier::new(ctx);
    if let Some(seed) = seed {
        verifier = verifier.seed(seed);
    }
    let reports = if id == "all" { verifier.verify_all() } else { vec![verifier.verify(id)?] };
    let success = reports.iter().all(|r| r.passed);
    Ok(Outcome { text: identities::render_text(&reports), json: identities::render_json(&reports), success })
}

fn relation_text(r: &IntegerRelation) -> String {
    let coeffs: Vec<String> = r.coefficients.iter().map(ToString::to_string).collect();
    format!(
        "{}\nresidual        {}\nnorm_bound      {}\nprecision_used  {} digits\n",
        coeffs.join(" "),
        short(&r.residual),
        r.norm_bound,
        r.precision_used
    )
}

fn discover(ctx: &PrecisionContext) -> Result<Outcome, CliError> {
    let r = relations::rediscover_eq6(ctx)?;
    let json = json!({
        "values": ["Cl2(2phi7)", "Cl2(4phi7)", "Cl2(6phi7)", "Cl2(2pi/7)", "Cl2(4pi/7)", "Cl2(6pi/7)"],
        "coefficients": r.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "residual": short(&r.residual),
        "norm_bound": r.norm_bound.to_string(),
        "precision_used": r.precision_used,
    });
    Ok(Outcome::ok(relation_text(&r), json))
}

/// `ln|sin(θ+φ₇)/sin(θ-φ₇)|`, equal to the `I₇` integrand
/// `ln|(tan θ + √7)/(tan θ - √7)|` and finite at `θ = π/2`.
pub fn integrand_f64(theta: f64) -> f64 {
    let phi = 7f64.sqrt().atan();
    ((theta + phi).sin() / (theta - phi).sin()).abs().ln()
}

/// Evenly spaced points on `[π/3, π/2]`, endpoints nudged inside and points
/// within [`SAMPLE_GUARD`] of `φ₇` pushed to the edge of the band.
pub fn sample_points(points: usize) -> Vec<f64> {
    let lo = std::f64::consts::FRAC_PI_3;
    let hi = std::f64::consts::FRAC_PI_2;
    let nudge = (hi - lo) * 1e-9;
    let phi = 7f64.sqrt().atan();
    let edge = SAMPLE_GUARD * 1.001;
    (0..points)
        .map(|i| {
            let f = i as f64 / (points - 1) as f64;
            let t = (lo + nudge) + f * ((hi - nudge) - (lo + nudge));
            if (t - phi).abs() <= edge {
                if t < phi {
                    phi - edge
                } else {
                    phi + edge
                }
            } else {
                t
            }
        })
        .collect()
}

fn sample(points: usize) -> Result<Outcome, CliError> {
    if points < 2 {
        return Err(CliError::Usage(format!("sample needs at least 2 points, got {points}")));
    }
    let rows: Vec<(f64, f64)> = sample_points(points).into_iter().map(|t| (t, integrand_f64(t))).collect();
    let mut text = String::from("theta,value\n");
    for (t, v) in &rows {
        text.push_str(&format!("{t},{v}\n"));
    }
    let json = json!({
        "header": ["theta", "value"],
        "rows": rows.iter().map(|(t, v)| [t.to_string(), v.to_string()]).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json))
}

fn constants(ctx: &PrecisionContext) -> Outcome {
    let entries = [
        ("pi", ctx.pi()),
        ("ln2", ctx.ln2()),
        ("sqrt3", ctx.sqrt3()),
        ("sqrt7", ctx.sqrt7()),
        ("phi7", ctx.phi7()),
    ];
    let mut text = String::new();
    let mut map = serde_json::Map::new();
    for (name, v) in entries {
        let s = ctx.real(v.clone()).to_fixed(ctx.target_digits() as usize);
        text.push_str(&format!("{name:<6} {s}\n"));
        map.insert(name.into(), Value::String(s));
    }
    map.insert("digits".into(), json!(ctx.target_digits()));
    Outcome::ok(text, Value::Object(map))
}
