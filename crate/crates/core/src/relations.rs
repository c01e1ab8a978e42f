//! Integer-relation detection by PSLQ.
//!
//! Given reals `x₁..xₙ`, [`pslq`] looks for integers `c₁..cₙ`, not all zero,
//! with `Σ cᵢxᵢ ≈ 0`. Each iteration maintains a lower-trapezoidal matrix `H`
//! whose diagonal bounds the size of any relation: once `1/max|H_jj|`
//! exceeds the caller's norm bound, no relation with `max|cᵢ|` below that
//! bound exists at this precision and the search stops.
//!
//! ```
//! use dilogint::{make_context, relations};
//!
//! let ctx = make_context(50).unwrap();
//! let ln2 = ctx.real(ctx.ln2().clone());
//! let ln4 = ctx.real(ctx.float(4).ln());
//! let found = relations::pslq(&[ln2, ln4], &ctx, 1e6).unwrap();
//! let rel = found.relation().unwrap();
//! assert_eq!(rel.coefficients_i64(), vec![2, -1]);
//! ```

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::mpcontext::{PrecisionContext, Real};
use crate::specfun::clausen2_float;

/// Digits of the working precision held back when judging a residual.
pub const SAFETY_DIGITS: u32 = 10;

/// Norm bound used to rediscover the six-term Clausen relation.
pub const EQ6_NORM_BOUND: f64 = 1e4;

/// Least target digits accepted by [`rediscover_eq6`].
pub const EQ6_MIN_DIGITS: u32 = 100;

/// `γ` of the PSLQ row selection; any value above `√(4/3)` works.
const GAMMA: f64 = 1.154_700_538_379_251_5;

/// A normalized integer relation.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegerRelation {
    /// Divided by their gcd, first nonzero entry positive.
    pub coefficients: Vec<Integer>,
    /// `|Σ cᵢxᵢ|` at the inputs' precision.
    pub residual: Float,
    pub norm_bound: f64,
    /// Digits carried by the inputs.
    pub precision_used: u32,
}

impl IntegerRelation {
    /// Coefficients as `i64`; panics if one does not fit.
    pub fn coefficients_i64(&self) -> Vec<i64> {
        self.coefficients.iter().map(|c| c.to_i64().expect("coefficient fits in i64")).collect()
    }
}

/// How a PSLQ run ended.
#[derive(Clone, Debug, PartialEq)]
pub enum PslqOutcome {
    Found(IntegerRelation),
    /// Every relation with `max|cᵢ| ≤ norm_bound` is ruled out.
    Excluded { iterations: usize },
    /// The iteration cap was hit before either conclusion.
    IterationLimit { iterations: usize },
}

impl PslqOutcome {
    pub fn relation(&self) -> Option<&IntegerRelation> {
        match self {
            PslqOutcome::Found(r) => Some(r),
            _ => None,
        }
    }

    pub fn into_relation(self) -> Option<IntegerRelation> {
        match self {
            PslqOutcome::Found(r) => Some(r),
            _ => None,
        }
    }
}

/// Least input precision for a search with `n` values up to `norm_bound`.
pub fn min_digits(n: usize, norm_bound: f64) -> u32 {
    (2.0 * n as f64 * norm_bound.log10().max(0.0)).ceil() as u32 + 20
}

/// Runs PSLQ on `values`. The precision is the smallest tag among the
/// inputs.
pub fn pslq(values: &[Real], ctx: &PrecisionContext, norm_bound: f64) -> Result<PslqOutcome> {
    let n = values.len();
    if n < 2 {
        return Err(Error::Argument(format!("pslq needs at least two values, got {n}")));
    }
    if !(norm_bound.is_finite() && norm_bound >= 1.0) {
        return Err(Error::Argument(format!("norm bound must be finite and at least 1, got {norm_bound}")));
    }
    let digits = values.iter().map(Real::produced_at_digits).min().expect("non-empty");
    let need = min_digits(n, norm_bound);
    if digits < need {
        return Err(Error::InsufficientPrecision { have: digits, need });
    }
    if values.iter().any(|v| !v.value().is_finite()) {
        return Err(Error::Argument("pslq inputs must be finite".into()));
    }
    let prec = ctx.prec();
    let x: Vec<Float> = values.iter().map(|v| Float::with_val(prec, v.value())).collect();
    Ok(Pslq::new(&x, prec, digits, norm_bound).run())
}

struct Pslq<'a> {
    x: &'a [Float],
    prec: u32,
    digits: u32,
    norm_bound: f64,
    y: Vec<Float>,
    /// `n × (n-1)`, row-major.
    h: Vec<Vec<Float>>,
    /// Columns of `b` are candidate relations.
    b: Vec<Vec<Integer>>,
    detect: Float,
}

impl<'a> Pslq<'a> {
    fn new(x: &'a [Float], prec: u32, digits: u32, norm_bound: f64) -> Self {
        let n = x.len();
        // Partial norms s_k = sqrt(Σ_{j≥k} x_j²).
        let mut s = vec![Float::new(prec); n];
        let mut acc = Float::new(prec);
        for k in (0..n).rev() {
            acc += Float::with_val(prec, x[k].square_ref());
            s[k] = Float::with_val(prec, acc.sqrt_ref());
        }
        let norm = s[0].clone();
        let y: Vec<Float> = x.iter().map(|v| Float::with_val(prec, v / &norm)).collect();
        for v in &mut s {
            *v /= &norm;
        }

        let mut h = vec![vec![Float::new(prec); n - 1]; n];
        for i in 0..n {
            for j in 0..(n - 1).min(i + 1) {
                if i == j {
                    h[i][j] = Float::with_val(prec, &s[j + 1] / &s[j]);
                } else {
                    let den = Float::with_val(prec, &s[j] * &s[j + 1]);
                    let num = Float::with_val(prec, &y[i] * &y[j]);
                    h[i][j] = -(num / den);
                }
            }
        }

        let mut b = vec![vec![Integer::new(); n]; n];
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = Integer::from(1);
        }
        let detect = Float::with_val(prec, 10u32).pow(-((digits - SAFETY_DIGITS) as i32));
        Pslq { x, prec, digits, norm_bound, y, h, b, detect }
    }

    fn n(&self) -> usize {
        self.x.len()
    }

    fn run(mut self) -> PslqOutcome {
        let n = self.n();
        for i in 1..n {
            self.reduce_row(i, i);
        }
        if let Some(found) = self.check() {
            return PslqOutcome::Found(found);
        }
        let cap = n * n * self.digits as usize;
        let gamma = Float::with_val(self.prec, GAMMA);
        for iteration in 1..=cap {
            // Row with the largest γ^i |H_ii|.
            let mut best = 0;
            let mut best_val = Float::new(self.prec);
            let mut weight = Float::with_val(self.prec, &gamma);
            for i in 0..n - 1 {
                let v = Float::with_val(self.prec, self.h[i][i].abs_ref()) * &weight;
                if v > best_val {
                    best_val = v;
                    best = i;
                }
                weight *= &gamma;
            }
            let m = best;
            self.y.swap(m, m + 1);
            self.h.swap(m, m + 1);
            for row in &mut self.b {
                row.swap(m, m + 1);
            }
            if m + 2 < n {
                self.corner(m);
            }
            for i in m + 1..n {
                self.reduce_row(i, (i).min(m + 2));
            }
            if let Some(found) = self.check() {
                return PslqOutcome::Found(found);
            }
            if self.exceeds_bound() {
                return PslqOutcome::Excluded { iterations: iteration };
            }
        }
        PslqOutcome::IterationLimit { iterations: cap }
    }

    /// Restores the lower-trapezoidal shape after swapping rows `m, m+1`.
    fn corner(&mut self, m: usize) {
        let prec = self.prec;
        let a = self.h[m][m].clone();
        let c = self.h[m][m + 1].clone();
        let t0 = Float::with_val(prec, a.hypot_ref(&c));
        let t1 = Float::with_val(prec, &a / &t0);
        let t2 = Float::with_val(prec, &c / &t0);
        for i in m..self.n() {
            let t3 = self.h[i][m].clone();
            let t4 = self.h[i][m + 1].clone();
            self.h[i][m] = Float::with_val(prec, &t1 * &t3) + Float::with_val(prec, &t2 * &t4);
            self.h[i][m + 1] = Float::with_val(prec, &t1 * &t4) - Float::with_val(prec, &t2 * &t3);
        }
    }

    /// Hermite reduction of row `i` against columns `upto-1` down to 0.
    fn reduce_row(&mut self, i: usize, upto: usize) {
        let prec = self.prec;
        for j in (0..upto.min(i)).rev() {
            let q = Float::with_val(prec, &self.h[i][j] / &self.h[j][j]).round();
            if q.is_zero() {
                continue;
            }
            let t = q.to_integer().expect("finite reduction factor");
            let ty = Float::with_val(prec, &self.y[i] * &t);
            self.y[j] += ty;
            for k in 0..=j {
                let d = Float::with_val(prec, &self.h[j][k] * &t);
                self.h[i][k] -= d;
            }
            for row in &mut self.b {
                let add = Integer::from(&row[i] * &t);
                row[j] += add;
            }
        }
    }

    fn exceeds_bound(&self) -> bool {
        let max = self
            .h
            .iter()
            .enumerate()
            .take(self.n() - 1)
            .map(|(j, row)| Float::with_val(self.prec, row[j].abs_ref()))
            .fold(Float::new(self.prec), |a, b| if b > a { b } else { a });
        if max.is_zero() {
            return false;
        }
        max.recip() > self.norm_bound
    }

    fn check(&self) -> Option<IntegerRelation> {
        let n = self.n();
        let mut best: Option<(usize, Float)> = None;
        for (i, yi) in self.y.iter().enumerate() {
            let a = Float::with_val(self.prec, yi.abs_ref());
            if a < self.detect && best.as_ref().is_none_or(|(_, v)| a < *v) {
                best = Some((i, a));
            }
        }
        let (col, _) = best?;
        let coefficients: Vec<Integer> = (0..n).map(|r| self.b[r][col].clone()).collect();
        let coefficients = normalize(coefficients)?;
        let residual = residual(self.x, &coefficients, self.prec);
        if residual >= self.detect {
            return None;
        }
        Some(IntegerRelation { coefficients, residual, norm_bound: self.norm_bound, precision_used: self.digits })
    }
}

/// Divides by the gcd and makes the first nonzero entry positive.
fn normalize(mut c: Vec<Integer>) -> Option<Vec<Integer>> {
    let g = c.iter().fold(Integer::new(), |g, v| g.gcd(v));
    if g == 0 {
        return None;
    }
    let first_negative = c.iter().find(|v| **v != 0).is_some_and(|v| *v < 0);
    for v in &mut c {
        *v /= &g;
        if first_negative {
            *v = -v.clone();
        }
    }
    Some(c)
}

/// `|Σ cᵢxᵢ|`, with enough extra bits beyond `prec` that the products and
/// the sum are exact for inputs held at `prec` bits.
pub fn residual(x: &[Float], c: &[Integer], prec: u32) -> Float {
    let coeff_bits = c.iter().map(|v| v.significant_bits()).max().unwrap_or(0);
    let exact = prec + coeff_bits + 32 + (x.len() as u32).next_power_of_two().trailing_zeros();
    let mut s = Float::new(exact);
    for (xi, ci) in x.iter().zip(c) {
        s += Float::with_val(exact, xi * ci);
    }
    Float::with_val(prec, s.abs())
}

/// The six Clausen values whose relation is sought, in the order
/// `Cl₂(2φ₇), Cl₂(4φ₇), Cl₂(6φ₇), Cl₂(2π/7), Cl₂(4π/7), Cl₂(6π/7)`.
pub fn eq6_values(ctx: &PrecisionContext) -> Vec<Real> {
    let prec = ctx.prec();
    let phi = [2u32, 4, 6].map(|k| Float::with_val(prec, ctx.phi7() * k));
    let seventh = [2u32, 4, 6].map(|k| Float::with_val(prec, ctx.pi() * k) / 7u32);
    phi.iter().chain(seventh.iter()).map(|t| ctx.real(clausen2_float(t, ctx))).collect()
}

/// The relation `(6, -6, 2, -7, -7, 7)` among [`eq6_values`].
pub const EQ6_COEFFICIENTS: [i64; 6] = [6, -6, 2, -7, -7, 7];

/// Finds the integer relation among the six Clausen values from scratch.
///
/// Needs at least [`EQ6_MIN_DIGITS`] target digits. Fails if the search ends
/// without a relation, or finds one other than [`EQ6_COEFFICIENTS`].
pub fn rediscover_eq6(ctx: &PrecisionContext) -> Result<IntegerRelation> {
    if ctx.target_digits() < EQ6_MIN_DIGITS {
        return Err(Error::InsufficientPrecision { have: ctx.target_digits(), need: EQ6_MIN_DIGITS });
    }
    let values = eq6_values(ctx);
    let not_found = || Error::RelationNotFound { digits: ctx.working_digits(), norm_bound: EQ6_NORM_BOUND };
    let relation = pslq(&values, ctx, EQ6_NORM_BOUND)?.into_relation().ok_or_else(not_found)?;
    if relation.coefficients_i64() != EQ6_COEFFICIENTS {
        return Err(Error::Domain(format!(
            "found unexpected relation {:?} among the six Clausen values",
            relation.coefficients_i64()
        )));
    }
    Ok(relation)
}
