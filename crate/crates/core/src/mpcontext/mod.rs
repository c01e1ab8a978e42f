//! Working precision, cached constants and exact series coefficients.
//!
//! A [`PrecisionContext`] is built once per requested accuracy and shared by
//! every evaluator. It carries `target_digits` (what the caller asked for)
//! plus `guard_digits` of headroom; all arithmetic runs at
//! `working_digits = target_digits + guard_digits`.
//!
//! The context is immutable after construction apart from three caches that
//! fill lazily and idempotently: the tangent-number table behind the
//! Bernoulli numbers, the derived `ζ(2n)/(2π)^(2n)` coefficients, and the
//! tanh-sinh node tables. Concurrent readers always observe either the old
//! or the new complete table.

mod bernoulli;
mod real;

use std::sync::{Arc, OnceLock, RwLock};

use rug::float::Constant;
use rug::{Assign, Float, Integer, Rational};

pub use self::real::{agree_digits, format_fixed, Real};
use crate::error::{Error, Result};
use crate::quadrature::NodeCache;

pub const DEFAULT_GUARD_DIGITS: u32 = 20;
pub const MIN_GUARD_DIGITS: u32 = 10;
pub const MIN_TARGET_DIGITS: u32 = 10;
pub const MAX_TARGET_DIGITS: u32 = 10_000_000;

/// Bits needed to hold `digits` decimal digits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32
}

/// Validated construction of a [`PrecisionContext`].
#[derive(Clone, Debug)]
pub struct ContextBuilder {
    target_digits: u32,
    guard_digits: u32,
    workers: usize,
}

impl ContextBuilder {
    pub fn guard_digits(mut self, guard: u32) -> Self {
        self.guard_digits = guard;
        self
    }

    /// Number of threads the quadrature engine may use for integrand
    /// evaluation. Never changes a computed value.
    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn build(self) -> Result<PrecisionContext> {
        let ContextBuilder { target_digits, guard_digits, workers } = self;
        if target_digits < MIN_TARGET_DIGITS {
            return Err(Error::Config(format!(
                "target digits must be at least {MIN_TARGET_DIGITS}, got {target_digits}"
            )));
        }
        if target_digits > MAX_TARGET_DIGITS {
            return Err(Error::Config(format!(
                "target digits must not exceed {MAX_TARGET_DIGITS}, got {target_digits}"
            )));
        }
        if guard_digits < MIN_GUARD_DIGITS {
            return Err(Error::Config(format!(
                "guard digits must be at least {MIN_GUARD_DIGITS}, got {guard_digits}"
            )));
        }
        if workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        let working_digits = target_digits + guard_digits;
        let prec = digits_to_bits(working_digits);

        let pi = Float::with_val(prec, Constant::Pi);
        let ln2 = Float::with_val(prec, Constant::Log2);
        let sqrt3 = Float::with_val(prec, 3).sqrt();
        let sqrt7 = Float::with_val(prec, 7).sqrt();
        let phi7 = Float::with_val(prec, sqrt7.atan_ref());

        Ok(PrecisionContext {
            target_digits,
            guard_digits,
            prec,
            workers,
            pi,
            ln2,
            sqrt3,
            sqrt7,
            phi7,
            series: RwLock::new(SeriesTables::default()),
            nodes: NodeCache::new(prec),
            pool: OnceLock::new(),
        })
    }
}

#[derive(Default)]
struct SeriesTables {
    /// Tangent numbers `T_1..`; entry `i` holds `T_{i+1}`.
    tangent: Arc<Vec<Integer>>,
    /// `ζ(2n)/(2π)^(2n)` at working precision; entry 0 is unused.
    zeta_even: Arc<Vec<Float>>,
}

/// Precision configuration plus constants shared by every evaluator.
pub struct PrecisionContext {
    target_digits: u32,
    guard_digits: u32,
    prec: u32,
    workers: usize,
    pi: Float,
    ln2: Float,
    sqrt3: Float,
    sqrt7: Float,
    phi7: Float,
    series: RwLock<SeriesTables>,
    pub(crate) nodes: NodeCache,
    pool: OnceLock<rayon::ThreadPool>,
}

impl std::fmt::Debug for PrecisionContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PrecisionContext")
            .field("target_digits", &self.target_digits)
            .field("guard_digits", &self.guard_digits)
            .field("prec", &self.prec)
            .field("workers", &self.workers)
            .finish_non_exhaustive()
    }
}

/// Context with the default guard digits and a single worker.
pub fn make_context(target_digits: u32) -> Result<PrecisionContext> {
    PrecisionContext::builder(target_digits).build()
}

impl PrecisionContext {
    pub fn builder(target_digits: u32) -> ContextBuilder {
        ContextBuilder { target_digits, guard_digits: DEFAULT_GUARD_DIGITS, workers: 1 }
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    /// Working precision in bits.
    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn pi(&self) -> &Float {
        &self.pi
    }

    pub fn ln2(&self) -> &Float {
        &self.ln2
    }

    pub fn sqrt3(&self) -> &Float {
        &self.sqrt3
    }

    pub fn sqrt7(&self) -> &Float {
        &self.sqrt7
    }

    /// `arctan(√7)`, the interior singularity of the `I₇` integrand.
    pub fn phi7(&self) -> &Float {
        &self.phi7
    }

    /// A float at working precision.
    pub fn float<T>(&self, value: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.prec, value)
    }

    /// Wraps a float as a [`Real`] tagged with this context's working digits.
    pub fn real(&self, value: Float) -> Real {
        Real::new(value, self.working_digits())
    }

    /// Exact Bernoulli number `B_n` (`B_1 = -1/2`).
    pub fn bernoulli(&self, n: usize) -> Result<Rational> {
        match n {
            0 => Ok(Rational::from(1)),
            1 => Ok(Rational::from((-1, 2))),
            _ if n % 2 == 1 => Err(Error::Argument(format!(
                "odd Bernoulli index {n} requested; only B_0, B_1 and even indices are supported"
            ))),
            _ => {
                let k = n / 2;
                let tangent = self.tangent_numbers(k);
                Ok(bernoulli::bernoulli_from_tangent(k, &tangent[k - 1]))
            }
        }
    }

    /// `ζ(2n)/(2π)^(2n) = |B_2n| / (2 (2n)!)` at working precision.
    pub fn zeta_even(&self, n: usize) -> Result<Real> {
        if n == 0 {
            return Err(Error::Argument("zeta_even requires n >= 1".into()));
        }
        let table = self.zeta_coefficients(n);
        Ok(self.real(table[n].clone()))
    }

    /// Table of `ζ(2k)/(2π)^(2k)` covering at least `k = 1..=n`.
    pub(crate) fn zeta_coefficients(&self, n: usize) -> Arc<Vec<Float>> {
        {
            let tables = self.series.read().expect("series cache poisoned");
            if tables.zeta_even.len() > n {
                return Arc::clone(&tables.zeta_even);
            }
        }
        let mut tables = self.series.write().expect("series cache poisoned");
        if tables.zeta_even.len() <= n {
            let tangent = self.grow_tangent(&mut tables, n);
            let mut zeta = Vec::with_capacity(tangent.len() + 1);
            zeta.push(Float::new(self.prec));
            let mut odd_factorial = Integer::from(1);
            for (i, t) in tangent.iter().enumerate() {
                let k = i + 1;
                if k > 1 {
                    odd_factorial *= ((2 * k - 2) * (2 * k - 1)) as u64;
                }
                if let Some(existing) = tables.zeta_even.get(k) {
                    zeta.push(existing.clone());
                    continue;
                }
                let (num, den) = bernoulli::zeta_even_parts(k, t, &odd_factorial);
                zeta.push(self.float(&Rational::from((num, den))));
            }
            tables.zeta_even = Arc::new(zeta);
        }
        Arc::clone(&tables.zeta_even)
    }

    fn tangent_numbers(&self, k: usize) -> Arc<Vec<Integer>> {
        {
            let tables = self.series.read().expect("series cache poisoned");
            if tables.tangent.len() >= k {
                return Arc::clone(&tables.tangent);
            }
        }
        let mut tables = self.series.write().expect("series cache poisoned");
        self.grow_tangent(&mut tables, k)
    }

    fn grow_tangent(&self, tables: &mut SeriesTables, k: usize) -> Arc<Vec<Integer>> {
        if tables.tangent.len() < k {
            let len = k.max(tables.tangent.len() * 3 / 2).max(32);
            tables.tangent = Arc::new(bernoulli::tangent_numbers(len));
        }
        Arc::clone(&tables.tangent)
    }

    #[cfg(test)]
    pub(crate) fn nodes_for_test(&self, level: u32) -> usize {
        self.nodes.level_len(self, level)
    }

    /// Runs `op` inside the context's worker pool (or inline for one worker).
    pub(crate) fn install<R, F>(&self, op: F) -> R
    where
        F: FnOnce() -> R + Send,
        R: Send,
    {
        if self.workers <= 1 {
            return op();
        }
        let pool = self.pool.get_or_init(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers)
                .build()
                .expect("failed to build worker pool")
        });
        pool.install(op)
    }
}
