//! Dirichlet L-series `L_d(s) = Σ (d/n) n^(-s)` by two independent routes.
//!
//! * [`dirichlet_l`] splits the sum into residue classes mod `|d|`:
//!   `L_d(s) = |d|^(-s) Σ_{ℓ=1}^{|d|-1} (d/ℓ) ζ(s, ℓ/|d|)`.
//! * [`dirichlet_l_clausen`] (negative `d`, `s = 2`) expands `(d/n)` as a
//!   finite sine series and sums against `1/n²`, which yields
//!   `L_d(2) = |d|^(-1/2) Σ_{ℓ=1}^{|d|-1} (d/ℓ) Cl₂(2πℓ/|d|)`.
//!
//! The sine expansion sums `ℓ` up to `|d| - 1`; the `ℓ = |d|` term vanishes
//! because `(d/|d|) = 0`.

use rug::Float;

use super::clausen::clausen2_float;
use super::hurwitz::hurwitz_zeta_float;
use super::kronecker::{kronecker, Discriminant};
use crate::error::{Error, Result};
use crate::mpcontext::{PrecisionContext, Real};

/// A point `(d, s)` with `s > 1`, inside the half-plane of absolute
/// convergence.
#[derive(Clone, Debug)]
pub struct LSeriesPoint {
    d: Discriminant,
    s: Float,
}

impl LSeriesPoint {
    pub fn new(d: Discriminant, s: Float) -> Result<Self> {
        if !(s.is_finite() && s > 1) {
            return Err(Error::Domain(format!(
                "L-series needs s > 1, got {}",
                s.to_string_radix(10, Some(20))
            )));
        }
        Ok(LSeriesPoint { d, s })
    }

    pub fn discriminant(&self) -> Discriminant {
        self.d
    }

    pub fn s(&self) -> &Float {
        &self.s
    }
}

/// `L_d(s)` through Hurwitz zeta values.
pub fn dirichlet_l(point: &LSeriesPoint, ctx: &PrecisionContext) -> Result<Real> {
    let prec = ctx.prec();
    let q = point.d.modulus();
    let s = &point.s;
    let mut sum = Float::new(prec);
    for l in 1..q {
        let chi = kronecker(point.d, l)?;
        if chi == 0 {
            continue;
        }
        let a = Float::with_val(prec, l) / q;
        let z = hurwitz_zeta_float(s, &a, ctx)?;
        if chi > 0 {
            sum += z;
        } else {
            sum -= z;
        }
    }
    let scale = Float::with_val(prec, -Float::with_val(prec, s) * Float::with_val(prec, q).ln()).exp();
    Ok(ctx.real(sum * scale))
}

/// `L_d(2)` for negative fundamental `d` through Clausen values.
pub fn dirichlet_l_clausen(d: Discriminant, ctx: &PrecisionContext) -> Result<Real> {
    if d.value() > 0 {
        return Err(Error::Domain(format!(
            "the sine expansion of (d/n) needs d < 0, got {d}"
        )));
    }
    if !d.is_fundamental() {
        return Err(Error::Domain(format!(
            "the sine expansion of (d/n) needs a fundamental discriminant, got {d}"
        )));
    }
    let prec = ctx.prec();
    let q = d.modulus();
    let two_pi = Float::with_val(prec, ctx.pi() * 2u32);
    let mut sum = Float::new(prec);
    for l in 1..q {
        let chi = kronecker(d, l)?;
        if chi == 0 {
            continue;
        }
        let theta = Float::with_val(prec, &two_pi * l) / q;
        let c = clausen2_float(&theta, ctx);
        if chi > 0 {
            sum += c;
        } else {
            sum -= c;
        }
    }
    let root = Float::with_val(prec, q).sqrt();
    Ok(ctx.real(sum / root))
}
