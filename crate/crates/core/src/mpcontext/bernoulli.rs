//! Exact Bernoulli numbers via tangent numbers.
//!
//! The tangent numbers `T_k` (`tan x = Σ T_k x^(2k-1)/(2k-1)!`) are integers
//! and satisfy a short in-place recurrence, so the whole table up to `T_n`
//! costs `O(n²)` small-multiplier big-integer operations. Even Bernoulli
//! numbers follow from
//!
//! ```text
//! B_2k = (-1)^(k-1) · 2k · T_k / (4^k (4^k - 1))
//! ```

use rug::{Integer, Rational};

/// Tangent numbers `T_1..=T_n`; entry `i` holds `T_{i+1}`.
pub(crate) fn tangent_numbers(n: usize) -> Vec<Integer> {
    let mut t = vec![Integer::new(); n];
    if n == 0 {
        return t;
    }
    t[0] = Integer::from(1);
    for i in 1..n {
        let prev = Integer::from(&t[i - 1] * i as u64);
        t[i] = prev;
    }
    for k in 2..=n {
        for j in k..=n {
            let (lo, hi) = t.split_at_mut(j - 1);
            hi[0] *= (j - k + 2) as u64;
            if j > k {
                hi[0] += Integer::from(&lo[j - 2] * (j - k) as u64);
            }
        }
    }
    t
}

/// `B_2k` from the tangent number `T_k` (`k ≥ 1`).
pub(crate) fn bernoulli_from_tangent(k: usize, tangent: &Integer) -> Rational {
    let four_k = Integer::from(1) << (2 * k as u32);
    let den = Integer::from(&four_k - 1u32) * four_k;
    let mut num = Integer::from(tangent * (2 * k) as u64);
    if k % 2 == 0 {
        num = -num;
    }
    Rational::from((num, den))
}

/// `T_k / (2 · 4^k (4^k - 1) (2k-1)!)`, which equals `|B_2k| / (2 (2k)!)`,
/// as an exact numerator/denominator pair.
pub(crate) fn zeta_even_parts(k: usize, tangent: &Integer, odd_factorial: &Integer) -> (Integer, Integer) {
    let four_k = Integer::from(1) << (2 * k as u32);
    let den = Integer::from(&four_k - 1u32) * four_k * odd_factorial * 2u32;
    (tangent.clone(), den)
}
