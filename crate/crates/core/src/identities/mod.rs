//! Executable checklist of the identities behind `I₇ = L₋₇(2)`.
//!
//! Every entry pairs two evaluators that reach the same quantity by
//! different machinery (quadrature against Hurwitz zeta, Hurwitz zeta against
//! Clausen values, closed form against quadrature, ...). A [`Verifier`] runs
//! both sides at the context's working precision and reports the digits of
//! agreement.
//!
//! Agreement is absolute: `floor(-log10 |lhs - rhs|)`. All registry
//! quantities are of order one, so this matches relative agreement to within
//! a digit.
//!
//! ```
//! use dilogint::{identities, make_context};
//!
//! let ctx = make_context(30).unwrap();
//! let report = identities::verify("lemma4b", &ctx).unwrap();
//! assert!(report.passed);
//! assert!(report.agree_digits >= 40);
//! ```

mod registry;
mod report;

use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use rug::Float;

pub use self::registry::registry;
pub use self::report::{render_json, render_text, Summary};
use crate::error::{Error, Result};
use crate::mpcontext::{agree_digits, PrecisionContext, Real};
use crate::quadrature::integrate_i7;

/// Seed for the sampled identities when none is given.
pub const DEFAULT_SEED: u64 = 20_070_207;

/// One side of an identity: a list of values, paired index by index with the
/// other side.
pub type Evaluator = fn(&Env<'_>) -> Result<Vec<Float>>;

/// A registry entry.
#[derive(Clone, Copy)]
pub struct IdentitySpec {
    /// Stable key, e.g. `"eq6"` or `"lemma2"`.
    pub id: &'static str,
    pub description: &'static str,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    /// Precision at which the entry is cheap to check.
    pub default_digits: u32,
    /// Whether the entry draws sample points from the seeded generator.
    pub sampled: bool,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("description", &self.description)
            .field("default_digits", &self.default_digits)
            .field("sampled", &self.sampled)
            .finish_non_exhaustive()
    }
}

/// Outcome of checking one identity.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    /// Left side of the worst-agreeing pair.
    pub lhs_value: Real,
    /// Right side of the worst-agreeing pair.
    pub rhs_value: Real,
    pub agree_digits: i64,
    pub threshold: i64,
    pub passed: bool,
    pub elapsed: Duration,
    /// Seed used for sampled identities.
    pub seed: Option<u64>,
    /// Evaluator failure, if any; such a report never passes.
    pub error: Option<String>,
    /// Digits the values were requested at.
    pub target_digits: u32,
}

/// What the evaluators see: the context, the seed and shared expensive
/// intermediates.
pub struct Env<'c> {
    ctx: &'c PrecisionContext,
    seed: u64,
    i7: &'c Mutex<Option<Float>>,
}

impl<'c> Env<'c> {
    pub fn ctx(&self) -> &'c PrecisionContext {
        self.ctx
    }

    /// A fresh generator; every sampled identity sees the same stream for a
    /// given seed.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// `I₇` by quadrature at the target digits, computed once per verifier.
    pub fn i7(&self) -> Result<Float> {
        let mut slot = self.i7.lock().expect("I7 cache poisoned");
        if let Some(v) = slot.as_ref() {
            return Ok(v.clone());
        }
        let value = integrate_i7(self.ctx, self.ctx.target_digits())?.value.into_float();
        *slot = Some(value.clone());
        Ok(value)
    }
}

/// Runs registry entries against one context.
pub struct Verifier<'c> {
    ctx: &'c PrecisionContext,
    seed: u64,
    threshold: Option<i64>,
    i7: Mutex<Option<Float>>,
}

impl<'c> Verifier<'c> {
    pub fn new(ctx: &'c PrecisionContext) -> Self {
        Verifier { ctx, seed: DEFAULT_SEED, threshold: None, i7: Mutex::new(None) }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Overrides the pass threshold, otherwise `target - guard/2`.
    pub fn threshold(mut self, digits: i64) -> Self {
        self.threshold = Some(digits);
        self
    }

    pub fn default_threshold(ctx: &PrecisionContext) -> i64 {
        i64::from(ctx.target_digits()) - i64::from(ctx.guard_digits() / 2)
    }

    pub fn verify(&self, id: &str) -> Result<IdentityReport> {
        let spec = registry().into_iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownIdentity {
            id: id.to_string(),
            known: registry().iter().map(|s| s.id).collect(),
        })?;
        Ok(self.run(&spec))
    }

    /// Every registry entry in registry order. Failures are reported, not
    /// propagated.
    pub fn verify_all(&self) -> Vec<IdentityReport> {
        registry().iter().map(|spec| self.run(spec)).collect()
    }

    fn run(&self, spec: &IdentitySpec) -> IdentityReport {
        let ctx = self.ctx;
        let env = Env { ctx, seed: self.seed, i7: &self.i7 };
        let threshold = self.threshold.unwrap_or_else(|| Self::default_threshold(ctx));
        let start = Instant::now();
        let outcome = (spec.lhs)(&env).and_then(|l| (spec.rhs)(&env).map(|r| (l, r)));
        let elapsed = start.elapsed();
        let seed = spec.sampled.then_some(self.seed);
        let nan = || ctx.real(Float::with_val(ctx.prec(), rug::float::Special::Nan));

        let failed = |message: String| IdentityReport {
            id: spec.id.to_string(),
            lhs_value: nan(),
            rhs_value: nan(),
            agree_digits: i64::MIN,
            threshold,
            passed: false,
            elapsed,
            seed,
            error: Some(message),
            target_digits: ctx.target_digits(),
        };

        let (lhs, rhs) = match outcome {
            Ok(pair) => pair,
            Err(e) => return failed(e.to_string()),
        };
        if lhs.len() != rhs.len() || lhs.is_empty() {
            return failed(format!("evaluators returned {} and {} values", lhs.len(), rhs.len()));
        }
        let cap = ctx.working_digits();
        let (worst, digits) = lhs
            .iter()
            .zip(&rhs)
            .map(|(l, r)| agree_digits(l, r, cap))
            .enumerate()
            .fold((0, i64::MAX), |best, (i, d)| if d < best.1 { (i, d) } else { best });
        IdentityReport {
            id: spec.id.to_string(),
            lhs_value: ctx.real(lhs[worst].clone()),
            rhs_value: ctx.real(rhs[worst].clone()),
            agree_digits: digits,
            threshold,
            passed: digits >= threshold,
            elapsed,
            seed,
            error: None,
            target_digits: ctx.target_digits(),
        }
    }
}

/// Checks one identity with the default seed and threshold.
pub fn verify(id: &str, ctx: &PrecisionContext) -> Result<IdentityReport> {
    Verifier::new(ctx).verify(id)
}

/// Checks every identity with the default seed and threshold.
pub fn verify_all(ctx: &PrecisionContext) -> Vec<IdentityReport> {
    Verifier::new(ctx).verify_all()
}

/// Residuals of the three-way consistency between the Hurwitz value of
/// `L₋₇(2)`, its two Clausen forms, and the six-term relation.
///
/// With `X = 3Cl₂(2φ₇) - 3Cl₂(4φ₇) + Cl₂(6φ₇)` and
/// `Y = Cl₂(2π/7) + Cl₂(4π/7) - Cl₂(6π/7)`:
///
/// * `r_y = L - (2/√7) Y`
/// * `r_x = L - (4/(7√7)) X`
/// * `r_six = 2X - 7Y = (7√7/2)(r_y - r_x)`
///
/// so `|r_six| ≤ (7√7/2)(|r_y| + |r_x|)` up to rounding.
#[derive(Clone, Debug)]
pub struct ChainCheck {
    pub r_y: Float,
    pub r_x: Float,
    pub r_six: Float,
    pub bound: Float,
}

impl ChainCheck {
    pub fn holds(&self) -> bool {
        Float::with_val(self.r_six.prec(), self.r_six.abs_ref()) <= self.bound
    }
}

pub fn chain_check(ctx: &PrecisionContext) -> Result<ChainCheck> {
    let prec = ctx.prec();
    let (x, y) = registry::six_term_sides(ctx);
    let l = registry::l_minus_seven_hurwitz(ctx)?;
    let sqrt7 = ctx.sqrt7();
    let r_y = Float::with_val(prec, &l - Float::with_val(prec, &y * 2u32) / sqrt7);
    let r_x = Float::with_val(prec, &l - Float::with_val(prec, &x * 4u32) / Float::with_val(prec, sqrt7 * 7u32));
    let r_six = Float::with_val(prec, Float::with_val(prec, &x * 2u32) - Float::with_val(prec, &y * 7u32));
    let scale = Float::with_val(prec, sqrt7 * 7u32) / 2u32;
    let rounding = Float::with_val(prec, 10u32).pow(-(ctx.working_digits() as i32 - 3));
    let sum = Float::with_val(prec, r_y.abs_ref()) + Float::with_val(prec, r_x.abs_ref());
    let bound = Float::with_val(prec, &scale * &sum) + rounding;
    Ok(ChainCheck { r_y, r_x, r_six, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpcontext::make_context;

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let specs = registry();
        assert!(specs.len() >= 18);
        let mut ids: Vec<_> = specs.iter().map(|s| s.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), specs.len());
        for id in ["eq2", "eq4", "eq5", "eq6", "eq9", "eq10a", "eq10b", "eq11", "eq12", "lemma2", "lemma4b"] {
            assert!(ids.contains(&id), "{id}");
        }
    }

    #[test]
    fn unknown_id_lists_known_ids() {
        let ctx = make_context(20).unwrap();
        match verify("nope", &ctx) {
            Err(Error::UnknownIdentity { id, known }) => {
                assert_eq!(id, "nope");
                assert!(known.contains(&"eq2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lemma1d_sides_vanish() {
        let ctx = make_context(50).unwrap();
        let r = verify("lemma1d", &ctx).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.lhs_value.to_fixed(50), format!("0.{}", "0".repeat(50)));
        assert!(r.rhs_value.value().is_zero());
    }

    #[test]
    fn threshold_defaults_to_target_minus_half_guard() {
        let ctx = make_context(40).unwrap();
        let r = verify("lemma4a", &ctx).unwrap();
        assert_eq!(r.threshold, 30);
        assert_eq!(r.passed, r.agree_digits >= r.threshold);
        let strict = Verifier::new(&ctx).threshold(1000).verify("lemma4a").unwrap();
        assert!(!strict.passed);
    }

    #[test]
    fn seed_is_recorded_only_for_sampled_entries() {
        let ctx = make_context(20).unwrap();
        let v = Verifier::new(&ctx).seed(99);
        assert_eq!(v.verify("lemma2").unwrap().seed, Some(99));
        assert_eq!(v.verify("eq5").unwrap().seed, None);
    }

    #[test]
    fn sampled_reports_are_reproducible() {
        let ctx = make_context(30).unwrap();
        let a = Verifier::new(&ctx).seed(5).verify("lemma2").unwrap();
        let b = Verifier::new(&ctx).seed(5).verify("lemma2").unwrap();
        assert_eq!(a.lhs_value.value(), b.lhs_value.value());
        assert_eq!(a.agree_digits, b.agree_digits);
    }

    #[test]
    fn chain_bound_holds() {
        let ctx = make_context(60).unwrap();
        let chain = chain_check(&ctx).unwrap();
        assert!(chain.holds(), "{chain:?}");
    }

    #[test]
    fn verify_all_covers_registry_in_order() {
        let ctx = make_context(20).unwrap();
        let reports = verify_all(&ctx);
        let ids: Vec<_> = reports.iter().map(|r| r.id.as_str()).collect();
        let expected: Vec<_> = registry().iter().map(|s| s.id).collect();
        assert_eq!(ids, expected);
        for r in &reports {
            assert!(r.passed, "{} failed: {:?}", r.id, r.error);
        }
    }
}
