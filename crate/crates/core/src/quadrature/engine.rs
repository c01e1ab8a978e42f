//! Tanh-sinh quadrature at arbitrary precision.
//!
//! The substitution `x = mid + half·tanh((π/2)·sinh t)` turns `∫_a^b f` into a
//! doubly-exponentially decaying integral over the real line, on which the
//! trapezoid rule converges exponentially in `1/h`. Integrable endpoint
//! singularities are harmless because the abscissas never reach the
//! endpoints and the weights there are tiny.
//!
//! Every abscissa is handed to the integrand together with its exact
//! distance to each endpoint. Near an endpoint `x` itself rounds to the
//! endpoint long before the distance loses accuracy, so integrands with a
//! singularity at an endpoint should use the distance, not `x`.
//!
//! Level `k` uses step `h = 2^-k`; the grid of level `k` contains the grid of
//! level `k-1`, so each level only evaluates the new (odd) nodes.

use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use thiserror::Error;

use crate::mpcontext::{PrecisionContext, Real};

pub const DEFAULT_MAX_LEVELS: u32 = 12;

#[derive(Debug, Error)]
pub enum QuadratureError {
    #[error("tanh-sinh did not converge after {levels} levels (last two estimates {last} and {previous})")]
    NonConvergence { levels: u32, last: String, previous: String },

    #[error("integrand is not finite at abscissa {abscissa}")]
    NonFinite { abscissa: String },

    #[error("invalid interval: {0}")]
    Interval(String),

    #[error("{piece} piece: {source}")]
    Piece {
        piece: &'static str,
        #[source]
        source: Box<QuadratureError>,
    },
}

impl QuadratureError {
    pub fn in_piece(self, piece: &'static str) -> Self {
        QuadratureError::Piece { piece, source: Box::new(self) }
    }
}

/// A point of the tanh-sinh grid mapped into `[a, b]`.
#[derive(Clone, Debug)]
pub struct Abscissa {
    pub x: Float,
    /// `x - a`, computed without cancellation.
    pub from_left: Float,
    /// `b - x`, computed without cancellation.
    pub from_right: Float,
}

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: Real,
    /// `|I_k - I_{k-1}|` for the final level.
    pub error_estimate: Float,
    pub levels_used: u32,
    pub evaluations: u64,
}

/// One node on the positive half of the `t` axis.
#[derive(Debug)]
pub(crate) struct Node {
    /// `(π/2)·cosh t / cosh²((π/2)·sinh t)`
    weight: Float,
    /// `1 - tanh((π/2)·sinh t)`, the scaled distance to the nearer endpoint.
    delta: Float,
    /// Only the `t = 0` node of level 0.
    center: bool,
}

/// Per-context cache of node tables, one entry per level.
pub(crate) struct NodeCache {
    prec: u32,
    t_max: f64,
    levels: Mutex<Vec<Arc<Vec<Node>>>>,
}

impl NodeCache {
    pub(crate) fn new(prec: u32) -> Self {
        NodeCache { prec, t_max: truncation_point(prec), levels: Mutex::new(Vec::new()) }
    }

    fn level(&self, ctx: &PrecisionContext, level: u32) -> Arc<Vec<Node>> {
        let level = level as usize;
        {
            let levels = self.levels.lock().expect("node cache poisoned");
            if let Some(nodes) = levels.get(level) {
                return Arc::clone(nodes);
            }
        }
        // Build outside the lock; a concurrent builder produces identical
        // tables, and the first one stored wins.
        let mut built = Vec::new();
        let start = self.levels.lock().expect("node cache poisoned").len();
        for l in start..=level {
            built.push(Arc::new(self.build_level(ctx, l as u32)));
        }
        let mut levels = self.levels.lock().expect("node cache poisoned");
        for (offset, nodes) in built.into_iter().enumerate() {
            if levels.len() == start + offset {
                levels.push(nodes);
            }
        }
        Arc::clone(&levels[level])
    }

    #[cfg(test)]
    pub(crate) fn level_len(&self, ctx: &PrecisionContext, level: u32) -> usize {
        self.level(ctx, level).len()
    }

    fn build_level(&self, ctx: &PrecisionContext, level: u32) -> Vec<Node> {
        let prec = self.prec;
        let scale = f64::from(1u32 << level);
        let ts: Vec<(u64, bool)> = if level == 0 {
            (0..).take_while(|&k| k as f64 <= self.t_max).map(|k| (k, k == 0)).collect()
        } else {
            (0..)
                .map(|j| 2 * j + 1)
                .take_while(|&k| k as f64 / scale <= self.t_max)
                .map(|k| (k, false))
                .collect()
        };
        ctx.install(|| {
            ts.par_iter()
                .map(|&(k, center)| {
                    let mut t = Float::with_val(prec, k);
                    t >>= level;
                    node_at(prec, &t, center)
                })
                .collect()
        })
    }
}

fn node_at(prec: u32, t: &Float, center: bool) -> Node {
    let work = prec + 32;
    let half_pi = Float::with_val(work, Constant::Pi) / 2u32;
    let (sinh, cosh) = Float::with_val(work, t).sinh_cosh(Float::new(work));
    let u = Float::with_val(work, &half_pi * &sinh);
    // E = e^{2u}: delta = 2/(1+E), weight = (π/2)·cosh t · 4E/(1+E)²
    let e2u = Float::with_val(work, &u * 2u32).exp();
    let one_plus = Float::with_val(work, &e2u + 1u32);
    let delta = Float::with_val(prec, 2u32 / Float::with_val(work, &one_plus));
    let weight = half_pi * cosh * 4u32 * e2u / one_plus.square();
    Node { weight: Float::with_val(prec, weight), delta, center }
}

/// Smallest `t` beyond which `weight(t) < 2^-(2·prec+24)`. The weight is
/// about the distance to the endpoint, so the squared tolerance keeps full
/// accuracy for integrands that blow up like an inverse square root there.
fn truncation_point(prec: u32) -> f64 {
    let target = -(2.0 * f64::from(prec) + 24.0) * std::f64::consts::LN_2;
    let mut t = 0.0f64;
    loop {
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        // ln((π/2)·cosh t) − 2·ln cosh u, with ln cosh u ≈ u − ln 2 for large u
        let ln_cosh_u = if u > 20.0 { u - std::f64::consts::LN_2 } else { u.cosh().ln() };
        let lnw = (std::f64::consts::FRAC_PI_2 * t.cosh()).ln() - 2.0 * ln_cosh_u;
        if lnw < target {
            return t;
        }
        t += 1.0 / 64.0;
    }
}

/// Tanh-sinh integrator bound to a precision context.
#[derive(Clone, Copy, Debug)]
pub struct TanhSinh<'c> {
    ctx: &'c PrecisionContext,
    target_digits: u32,
    max_levels: u32,
}

impl<'c> TanhSinh<'c> {
    pub fn new(ctx: &'c PrecisionContext) -> Self {
        TanhSinh { ctx, target_digits: ctx.target_digits(), max_levels: DEFAULT_MAX_LEVELS }
    }

    pub fn target_digits(mut self, digits: u32) -> Self {
        self.target_digits = digits;
        self
    }

    pub fn max_levels(mut self, levels: u32) -> Self {
        self.max_levels = levels.max(2);
        self
    }

    /// `∫_a^b f`. Converged once two successive level differences are both
    /// below `10^-target_digits`.
    pub fn integrate<F>(&self, f: F, a: &Float, b: &Float) -> Result<QuadratureResult, QuadratureError>
    where
        F: Fn(&Abscissa) -> Float + Sync,
    {
        let ctx = self.ctx;
        let prec = ctx.prec();
        if !a.is_finite() || !b.is_finite() {
            return Err(QuadratureError::Interval("endpoints must be finite".into()));
        }
        if a > b {
            return Err(QuadratureError::Interval(format!(
                "lower endpoint {} exceeds upper endpoint {}",
                a.to_string_radix(10, Some(20)),
                b.to_string_radix(10, Some(20))
            )));
        }
        if a == b {
            return Ok(QuadratureResult {
                value: ctx.real(Float::new(prec)),
                error_estimate: Float::new(prec),
                levels_used: 1,
                evaluations: 0,
            });
        }

        let half = Float::with_val(prec, b - a) / 2u32;
        let mid = Float::with_val(prec, a + &half);
        let tolerance = Float::with_val(prec, 10).pow(-(self.target_digits as i32));

        let mut total = Float::new(prec);
        let mut previous: Option<Float> = None;
        let mut older: Option<Float> = None;
        let mut confirmed_once = false;
        let mut evaluations = 0u64;

        for level in 0..self.max_levels {
            let nodes = ctx.nodes.level(ctx, level);
            let abscissas: Vec<(usize, Abscissa)> = nodes
                .iter()
                .enumerate()
                .flat_map(|(i, node)| points(node, a, b, &mid, &half).into_iter().map(move |p| (i, p)))
                .collect();
            evaluations += abscissas.len() as u64;

            let values: Vec<Float> = ctx.install(|| abscissas.par_iter().map(|(_, p)| f(p)).collect());

            // Fixed-order reduction: identical for any worker count.
            let mut level_sum = Float::new(prec);
            for ((i, p), v) in abscissas.iter().zip(&values) {
                if !v.is_finite() {
                    return Err(QuadratureError::NonFinite { abscissa: p.x.to_string_radix(10, Some(40)) });
                }
                level_sum += Float::with_val(prec, &nodes[*i].weight * v);
            }
            total += level_sum;

            let mut estimate = Float::with_val(prec, &total * &half);
            estimate >>= level;

            if let Some(prev) = previous.as_ref() {
                let last_diff = Float::with_val(prec, &estimate - prev).abs();
                if last_diff < tolerance {
                    if confirmed_once {
                        return Ok(QuadratureResult {
                            value: ctx.real(estimate),
                            error_estimate: last_diff,
                            levels_used: level + 1,
                            evaluations,
                        });
                    }
                    confirmed_once = true;
                } else {
                    confirmed_once = false;
                }
            }
            older = previous.replace(estimate);
        }

        let show = |v: Option<Float>| v.map_or_else(String::new, |v| v.to_string_radix(10, Some(30)));
        Err(QuadratureError::NonConvergence {
            levels: self.max_levels,
            last: show(previous),
            previous: show(older),
        })
    }
}

fn points(node: &Node, a: &Float, b: &Float, mid: &Float, half: &Float) -> Vec<Abscissa> {
    let prec = mid.prec();
    if node.center {
        let from_left = half.clone();
        return vec![Abscissa { x: mid.clone(), from_left: from_left.clone(), from_right: from_left }];
    }
    let near = Float::with_val(prec, half * &node.delta);
    let far = Float::with_val(prec, half * 2u32) - &near;
    let right = Abscissa { x: Float::with_val(prec, b - &near), from_left: far.clone(), from_right: near.clone() };
    let left = Abscissa { x: Float::with_val(prec, a + &near), from_left: near, from_right: far };
    vec![left, right]
}

/// Convenience wrapper: [`TanhSinh`] with default level cap.
pub fn tanh_sinh<F>(
    f: F,
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
    target_digits: u32,
) -> Result<QuadratureResult, QuadratureError>
where
    F: Fn(&Abscissa) -> Float + Sync,
{
    TanhSinh::new(ctx).target_digits(target_digits).integrate(f, a, b)
}
