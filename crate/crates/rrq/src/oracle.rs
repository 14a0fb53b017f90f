//! Definition-level combinatorial computations, independent of the series
//! engine. These provide the ground truth the generating-function machinery
//! is validated against: partition enumeration and hook numbers, t-core /
//! regular / colored partition counts, and the coefficients of the mock theta
//! function `beta(q)` from its defining sum.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::{ModSeries, Series, SeriesError};

/// A partition as a non-increasing sequence of positive parts.
pub type PartitionShape = Vec<usize>;

/// Every partition of `n`, each exactly once.
pub fn enumerate_partitions(n: usize) -> Vec<PartitionShape> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<PartitionShape>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// The multiset of hook numbers `H(i,j) = lambda_i + lambda'_j - i - j + 1`
/// over all nodes of the Ferrers–Young diagram.
pub fn hook_profile(shape: &[usize]) -> Vec<usize> {
    let conj = conjugate(shape);
    let mut hooks = Vec::with_capacity(shape.iter().sum());
    for (i, &row) in shape.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            hooks.push(row + col - i - j - 1);
        }
    }
    hooks
}

fn conjugate(shape: &[usize]) -> Vec<usize> {
    let cols = shape.first().copied().unwrap_or(0);
    (0..cols)
        .map(|j| shape.iter().filter(|&&row| row > j).count())
        .collect()
}

/// Number of partitions of `n` with no hook number divisible by `t`.
/// Enumeration-based by design (meant for small `n` cross-checks).
pub fn count_t_cores(n: usize, t: usize) -> u64 {
    assert!(t >= 2, "t must be at least 2");
    enumerate_partitions(n)
        .iter()
        .filter(|shape| hook_profile(shape).iter().all(|h| h % t != 0))
        .count() as u64
}

/// Number of partitions of `n` with no part divisible by `ell` (DP).
pub fn count_regular(n: usize, ell: usize) -> BigInt {
    assert!(ell >= 2, "ell must be at least 2");
    let mut dp = vec![BigInt::zero(); n + 1];
    dp[0] = BigInt::from(1);
    for p in 1..=n {
        if p % ell == 0 {
            continue;
        }
        for j in p..=n {
            let t = dp[j - p].clone();
            dp[j] += t;
        }
    }
    dp[n].clone()
}

/// Number of colored partitions of `n` where every part comes in `base`
/// colors and multiples of `r` in `base + extra` colors (DP; each color of
/// each part size is an independent unbounded part type).
pub fn count_colored(n: usize, r: usize, base: usize, extra: usize) -> BigInt {
    assert!(r >= 2 && base >= 1, "need r >= 2 and base >= 1");
    let mut dp = vec![BigInt::zero(); n + 1];
    dp[0] = BigInt::from(1);
    for p in 1..=n {
        let colors = if p % r == 0 { base + extra } else { base };
        for _ in 0..colors {
            for j in p..=n {
                let t = dp[j - p].clone();
                dp[j] += t;
            }
        }
    }
    dp[n].clone()
}

/// Ordinary partition numbers `p(0..order)` (DP, exact).
pub fn partition_counts(order: usize) -> Vec<BigInt> {
    let mut dp = vec![BigInt::zero(); order];
    dp[0] = BigInt::from(1);
    for p in 1..order {
        for j in p..order {
            let t = dp[j - p].clone();
            dp[j] += t;
        }
    }
    dp
}

/// Coefficients of the defining sum
/// `beta(q) = sum_{j>=0} q^{3j^2+3j+1} / ((q;q^3)_{j+1} (q^2;q^3)_{j+1})`
/// with the finite Pochhammer factors expanded exactly.
///
/// The summands are built incrementally: each step multiplies by `q^{6j}` and
/// divides by the two new factors `(1 - q^{3j+1})(1 - q^{3j+2})`, each an
/// O(order) running sum. Summation stops once the leading exponent
/// `3j^2+3j+1` reaches the truncation order, beyond which summands cannot
/// touch the window.
pub fn beta_coefficients(order: usize) -> Series {
    let mut total = vec![BigInt::zero(); order];
    // summand_0 = q / ((1-q)(1-q^2))
    let mut s = vec![BigInt::zero(); order];
    if order > 1 {
        s[1] = BigInt::from(1);
    }
    divide_one_minus_q_pow(&mut s, 1);
    divide_one_minus_q_pow(&mut s, 2);
    let mut j = 0usize;
    loop {
        for i in 0..order {
            let t = s[i].clone();
            total[i] += t;
        }
        j += 1;
        if 3 * j * j + 3 * j + 1 >= order {
            break;
        }
        // multiply by q^{6j}
        for i in (6 * j..order).rev() {
            s[i] = s[i - 6 * j].clone();
        }
        for c in s.iter_mut().take(6 * j) {
            *c = BigInt::zero();
        }
        divide_one_minus_q_pow(&mut s, 3 * j + 1);
        divide_one_minus_q_pow(&mut s, 3 * j + 2);
    }
    Series::from_coeffs(total)
}

fn divide_one_minus_q_pow(coeffs: &mut [BigInt], a: usize) {
    for i in a..coeffs.len() {
        let t = coeffs[i - a].clone();
        coeffs[i] += t;
    }
}

/// [`beta_coefficients`] on the fixed-modulus kernel, for deep congruence
/// checks.
pub fn beta_coefficients_mod(order: usize, modulus: u64) -> Result<ModSeries, SeriesError> {
    // Validate the modulus through the kernel's own constructor.
    let probe = ModSeries::zero(order, modulus)?;
    drop(probe);
    let mut total = vec![0u64; order];
    let mut s = vec![0u64; order];
    if order > 1 {
        s[1] = 1 % modulus;
    }
    divide_one_minus_q_pow_mod(&mut s, 1, modulus);
    divide_one_minus_q_pow_mod(&mut s, 2, modulus);
    let mut j = 0usize;
    loop {
        for i in 0..order {
            total[i] = (total[i] + s[i]) % modulus;
        }
        j += 1;
        if 3 * j * j + 3 * j + 1 >= order {
            break;
        }
        for i in (6 * j..order).rev() {
            s[i] = s[i - 6 * j];
        }
        for c in s.iter_mut().take(6 * j) {
            *c = 0;
        }
        divide_one_minus_q_pow_mod(&mut s, 3 * j + 1, modulus);
        divide_one_minus_q_pow_mod(&mut s, 3 * j + 2, modulus);
    }
    ModSeries::from_series(
        &Series::from_coeffs(total.into_iter().map(BigInt::from).collect()),
        modulus,
    )
}

fn divide_one_minus_q_pow_mod(coeffs: &mut [u64], a: usize, modulus: u64) {
    for i in a..coeffs.len() {
        coeffs[i] = (coeffs[i] + coeffs[i - a]) % modulus;
    }
}
