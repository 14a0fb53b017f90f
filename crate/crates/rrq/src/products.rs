//! Expansions of the named q-product building blocks.
//!
//! * `E_n = (q^n; q^n)_inf` via the pentagonal-number sparse form (fast path)
//!   or factor-by-factor products (naive path, kept for cross-checking).
//! * General Pochhammer products `(q^a; q^m)_inf`.
//! * Eta quotients `prod E_n^{e_n}`.
//! * `psi(q) = sum q^{j(j+1)/2}` and its `q -> -q` twist.
//! * `(-q^n; -q^n)_inf` for odd `n`.
//! * The Rogers–Ramanujan quotient `R(q^k)` with unit constant term.
//!
//! `E_n` and `R(q^k)` expansions are memoized per `(n, order)` since the
//! verification workload reuses them heavily.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::{ModSeries, Series, SeriesError};

/// The infinite product `(q^a; q^m)_inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochhammerSpec {
    /// Exponent offset; must be at least 1 so the product is regular at 0.
    pub a: usize,
    /// Exponent step; must be at least 1.
    pub m: usize,
}

impl PochhammerSpec {
    pub fn new(a: usize, m: usize) -> PochhammerSpec {
        assert!(a >= 1 && m >= 1, "Pochhammer offset and step must be >= 1");
        PochhammerSpec { a, m }
    }
}

/// A finite product `prod E_n^{e_n}`, keyed by `n` with nonzero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EtaExponentMap {
    entries: BTreeMap<usize, i64>,
}

impl EtaExponentMap {
    pub fn new(pairs: &[(usize, i64)]) -> EtaExponentMap {
        let mut entries = BTreeMap::new();
        for &(n, e) in pairs {
            assert!(n >= 1, "E-index must be positive");
            if e != 0 {
                *entries.entry(n).or_insert(0) += e;
            }
        }
        entries.retain(|_, e| *e != 0);
        EtaExponentMap { entries }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries.iter().map(|(&n, &e)| (n, e))
    }
}

/// `(q^a; q^m)_inf` truncated to the given order, by multiplying the two-term
/// factors `1 - q^{a+km}` in place (each factor costs O(order)).
pub fn expand_pochhammer(spec: PochhammerSpec, order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order];
    coeffs[0] = BigInt::from(1);
    let mut d = spec.a;
    while d < order {
        for i in (d..order).rev() {
            let t = coeffs[i - d].clone();
            coeffs[i] -= t;
        }
        d += spec.m;
    }
    Series::from_coeffs(coeffs)
}

fn pentagonal_coeffs(n: usize, order: usize) -> Vec<(usize, i64)> {
    // Exponents n*k(3k-1)/2 for k = ..., -2, -1, 0, 1, 2, ... with sign (-1)^k.
    let mut out = vec![(0usize, 1i64)];
    let mut k = 1usize;
    loop {
        let e1 = n * k * (3 * k - 1) / 2;
        let e2 = n * k * (3 * k + 1) / 2;
        if e1 >= order {
            break;
        }
        let sign = if k % 2 == 1 { -1 } else { 1 };
        out.push((e1, sign));
        if e2 < order {
            out.push((e2, sign));
        }
        k += 1;
    }
    out
}

/// The nonconstant terms of the pentagonal form of `E_n` below `order`,
/// as `(exponent, ±1)` pairs. `E_n` has O(sqrt(order/n)) such terms, which
/// makes multiplying or dividing by `E_n` cheap even at very large orders.
pub fn e_sparse_terms(n: usize, order: usize) -> Vec<(usize, i64)> {
    pentagonal_coeffs(n, order)
        .into_iter()
        .filter(|&(e, _)| e > 0)
        .collect()
}

fn e_cache() -> &'static Mutex<HashMap<(usize, usize), Series>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Series>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `E_n = (q^n; q^n)_inf` via the pentagonal-number theorem (memoized).
pub fn expand_e(n: usize, order: usize) -> Series {
    assert!(n >= 1, "E-index must be positive");
    if let Some(s) = e_cache().lock().unwrap().get(&(n, order)) {
        return s.clone();
    }
    let mut coeffs = vec![BigInt::zero(); order];
    for (e, sign) in pentagonal_coeffs(n, order) {
        coeffs[e] += BigInt::from(sign);
    }
    let s = Series::from_coeffs(coeffs);
    e_cache().lock().unwrap().insert((n, order), s.clone());
    s
}

/// `E_n` by the naive factor product; used to cross-check the fast path.
pub fn expand_e_naive(n: usize, order: usize) -> Series {
    expand_pochhammer(PochhammerSpec::new(n, n), order)
}

/// `E_n` in the fixed-modulus kernel, directly from the pentagonal form.
pub fn expand_e_mod(n: usize, order: usize, modulus: u64) -> Result<ModSeries, SeriesError> {
    let mut s = ModSeries::zero(order, modulus)?;
    let mut coeffs = vec![0i64; order];
    for (e, sign) in pentagonal_coeffs(n, order) {
        coeffs[e] += sign;
    }
    for (e, c) in coeffs.into_iter().enumerate() {
        if c != 0 {
            s = s.add(&ModSeries::monomial(c, e, order, modulus)?);
        }
    }
    Ok(s)
}

/// `prod E_n^{e_n}` with exact integer coefficients.
pub fn expand_eta_quotient(map: &EtaExponentMap, order: usize) -> Result<Series, SeriesError> {
    let mut num = Series::one(order);
    let mut den = Series::one(order);
    for (n, e) in map.entries() {
        let base = expand_e(n, order);
        if e > 0 {
            num = num.mul(&base.pow(e)?);
        } else {
            den = den.mul(&base.pow(-e)?);
        }
    }
    Ok(num.mul(&den.invert()?))
}

/// `psi(q) = sum_{j>=0} q^{j(j+1)/2}`.
pub fn psi(order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order];
    let mut j = 0usize;
    loop {
        let e = j * (j + 1) / 2;
        if e >= order {
            break;
        }
        coeffs[e] = BigInt::from(1);
        j += 1;
    }
    Series::from_coeffs(coeffs)
}

/// `psi(-q)`: sign-flip the odd-exponent coefficients of `psi`.
pub fn psi_neg(order: usize) -> Series {
    negate_odd_exponents(&psi(order))
}

/// Substitute `q -> -q` coefficientwise.
pub fn negate_odd_exponents(s: &Series) -> Series {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    Series::from_coeffs(coeffs)
}

/// `(-q^n; -q^n)_inf` for odd `n`, by direct factor products: the factor at
/// index `k` is `1 - (-1)^k q^{nk}`.
pub fn expand_e_negative(n: usize, order: usize) -> Result<Series, SeriesError> {
    if n.is_multiple_of(2) {
        return Err(SeriesError::EvenNegativeIndex(n));
    }
    let mut coeffs = vec![BigInt::zero(); order];
    coeffs[0] = BigInt::from(1);
    let mut k = 1usize;
    while n * k < order {
        let d = n * k;
        if k % 2 == 1 {
            // factor (1 + q^d)
            for i in (d..order).rev() {
                let t = coeffs[i - d].clone();
                coeffs[i] += t;
            }
        } else {
            // factor (1 - q^d)
            for i in (d..order).rev() {
                let t = coeffs[i - d].clone();
                coeffs[i] -= t;
            }
        }
        k += 1;
    }
    Ok(Series::from_coeffs(coeffs))
}

fn r_cache() -> &'static Mutex<HashMap<(usize, usize), Series>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Series>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Rogers–Ramanujan quotient
/// `R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5))` (all `(.;.)_inf`),
/// inflated to `R(q^k)`; memoized per `(k, order)`.
pub fn expand_r(k: usize, order: usize) -> Series {
    assert!(k >= 1, "inflation step must be positive");
    if let Some(s) = r_cache().lock().unwrap().get(&(k, order)) {
        return s.clone();
    }
    let s = if k == 1 {
        let num = expand_pochhammer(PochhammerSpec::new(2, 5), order)
            .mul(&expand_pochhammer(PochhammerSpec::new(3, 5), order));
        let den = expand_pochhammer(PochhammerSpec::new(1, 5), order)
            .mul(&expand_pochhammer(PochhammerSpec::new(4, 5), order));
        num.mul(&den.invert().expect("unit constant term"))
    } else {
        let base = expand_r(1, order.div_ceil(k));
        base.inflate(k).truncate(order)
    };
    r_cache().lock().unwrap().insert((k, order), s.clone());
    s
}
