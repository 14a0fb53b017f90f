//! Truncated formal power series with exact integer coefficients.
//!
//! A [`Series`] stores coefficients for exponents `0..order` and guarantees
//! that every stored coefficient is exact. Binary operations truncate to the
//! minimum of the operand orders, so exactness is never overstated.
//!
//! [`ModSeries`] is a fixed-modulus kernel over machine integers used for
//! deep congruence checks, where arbitrary-precision coefficients would be
//! needlessly slow. Its operations mirror `Series` and are cross-checked
//! against it in the test suite.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from series construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exponent beyond truncation: exponent {exponent} >= order {order}")]
    ExponentBeyondTruncation { exponent: usize, order: usize },
    #[error("series not invertible over the integers: constant term {constant}")]
    NotInvertible { constant: BigInt },
    #[error("empty extraction window: residue {residue} >= order {order}")]
    EmptyExtractionWindow { residue: usize, order: usize },
    #[error("modulus must be at least 2 (got {0})")]
    BadModulus(u64),
    #[error("modulus too large for the fixed-width kernel: {0} > {max}", max = ModSeries::MAX_MODULUS)]
    ModulusTooLarge(u64),
    #[error("coefficient index out of range: index {index} >= order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("constant term not invertible mod {modulus}: {constant}")]
    NotInvertibleMod { constant: u64, modulus: u64 },
    #[error("(-q^n; -q^n) expansion requires odd n (got {0})")]
    EvenNegativeIndex(usize),
}

/// A truncated power series in `q` with exact `BigInt` coefficients.
///
/// The order `N` means: all coefficients for exponents `< N` are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Series {
        assert!(order > 0, "order must be positive");
        Series {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Series {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `c * q^e` at the given order.
    pub fn monomial(
        c: impl Into<BigInt>,
        e: usize,
        order: usize,
    ) -> Result<Series, SeriesError> {
        if e >= order {
            return Err(SeriesError::ExponentBeyondTruncation { exponent: e, order });
        }
        let mut s = Series::zero(order);
        s.coeffs[e] = c.into();
        Ok(s)
    }

    /// Build a series from explicit coefficients (order = length).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Series {
        assert!(!coeffs.is_empty(), "order must be positive");
        Series { coeffs }
    }

    /// Number of exact coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// All coefficients, indexed by exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The exact coefficient of `q^n`.
    pub fn coeff(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// Truncate to a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order > 0, "order must be positive");
        let n = order.min(self.order());
        Series {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Coefficientwise sum; order = min of operand orders.
    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    /// Coefficientwise difference; order = min of operand orders.
    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    /// Coefficientwise negation.
    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by the integer `c`.
    pub fn scalar_mul(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Cauchy product truncated to the minimum order. Zero coefficients of
    /// the sparser operand are skipped, which matters for the two-term
    /// Pochhammer factors that dominate product expansion.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let (a, b) = if count_nonzero(&self.coeffs[..n]) <= count_nonzero(&other.coeffs[..n]) {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut out = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate().take(n) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n - i) {
                if !bj.is_zero() {
                    out[i + j] += ai * bj;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse to the series' own order. The constant term
    /// must be +1 or -1 for the inverse to have integer coefficients.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        let a0 = &self.coeffs[0];
        if !a0.is_one() && *a0 != BigInt::from(-1) {
            return Err(SeriesError::NotInvertible {
                constant: a0.clone(),
            });
        }
        let n = self.order();
        let nz: Vec<usize> = (1..n).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut out = vec![BigInt::zero(); n];
        out[0] = a0.clone();
        for m in 1..n {
            let mut acc = BigInt::zero();
            for &k in &nz {
                if k > m {
                    break;
                }
                if !out[m - k].is_zero() {
                    acc += &self.coeffs[k] * &out[m - k];
                }
            }
            // a0 is its own inverse (+-1), so c[m] = -a0 * sum.
            out[m] = -(a0 * acc);
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power by repeated squaring; negative powers go through
    /// [`Series::invert`].
    pub fn pow(&self, k: i64) -> Result<Series, SeriesError> {
        if k < 0 {
            return self.invert()?.pow(-k);
        }
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Substitute `q -> q^k`. The result order is `k * order`, since every
    /// coefficient below that bound is determined by the inputs.
    pub fn inflate(&self, k: usize) -> Series {
        assert!(k > 0, "inflation step must be positive");
        let n = self.order() * k;
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Series { coeffs: out }
    }

    /// Extraction operator: result coefficient at `n` is this series'
    /// coefficient at `m*n + r`. Result order is `ceil((order - r) / m)`.
    pub fn dissect(&self, m: usize, r: usize) -> Result<Series, SeriesError> {
        assert!(m > 0, "dissection step must be positive");
        assert!(r < m, "residue must be smaller than the step");
        let order = self.order();
        if r >= order {
            return Err(SeriesError::EmptyExtractionWindow { residue: r, order });
        }
        let n = (order - r).div_ceil(m);
        Ok(Series {
            coeffs: (0..n).map(|i| self.coeffs[m * i + r].clone()).collect(),
        })
    }

    /// Coefficientwise canonical residues in `[0, M)`.
    pub fn reduce_mod(&self, modulus: u64) -> Result<Series, SeriesError> {
        if modulus < 2 {
            return Err(SeriesError::BadModulus(modulus));
        }
        let m = BigInt::from(modulus);
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let r = c % &m;
                    if r.is_negative() {
                        r + &m
                    } else {
                        r
                    }
                })
                .collect(),
        })
    }

    /// Compare the first `n` coefficients. Returns `None` on agreement, or
    /// `Some(k)` with the earliest disagreeing exponent.
    pub fn equal_up_to(&self, other: &Series, n: usize) -> Result<Option<usize>, SeriesError> {
        let avail = self.order().min(other.order());
        if n > avail {
            return Err(SeriesError::IndexOutOfRange {
                index: n,
                order: avail,
            });
        }
        Ok((0..n).find(|&k| self.coeffs[k] != other.coeffs[k]))
    }

    /// True when every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

fn count_nonzero(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

/// Optional-modulus context: with a modulus present, coefficients are kept as
/// canonical residues in `[0, M)`; without one, arithmetic is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionContext {
    modulus: Option<u64>,
}

impl ReductionContext {
    /// Exact (unreduced) context.
    pub fn exact() -> ReductionContext {
        ReductionContext { modulus: None }
    }

    /// Context reducing mod `m` (`2 <= m <= ModSeries::MAX_MODULUS`, since
    /// modular evaluation runs on the fixed-width kernel).
    pub fn modulo(m: u64) -> Result<ReductionContext, SeriesError> {
        if m < 2 {
            return Err(SeriesError::BadModulus(m));
        }
        if m > ModSeries::MAX_MODULUS {
            return Err(SeriesError::ModulusTooLarge(m));
        }
        Ok(ReductionContext { modulus: Some(m) })
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    /// Canonicalize a series under this context (identity when exact).
    pub fn reduce(&self, s: &Series) -> Series {
        match self.modulus {
            None => s.clone(),
            Some(m) => s.reduce_mod(m).expect("modulus validated at construction"),
        }
    }
}

/// A truncated power series with coefficients in `Z/M` for a small fixed
/// modulus, stored as canonical residues in machine words.
///
/// Products are accumulated without intermediate reduction: with residues
/// below 2^15 and orders below 2^20 the accumulator stays far below 2^64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModSeries {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl ModSeries {
    /// Largest modulus the delayed-reduction accumulator supports.
    pub const MAX_MODULUS: u64 = 32768;

    fn check_modulus(modulus: u64) -> Result<(), SeriesError> {
        if modulus < 2 {
            return Err(SeriesError::BadModulus(modulus));
        }
        if modulus > Self::MAX_MODULUS {
            return Err(SeriesError::ModulusTooLarge(modulus));
        }
        Ok(())
    }

    pub fn zero(order: usize, modulus: u64) -> Result<ModSeries, SeriesError> {
        assert!(order > 0, "order must be positive");
        Self::check_modulus(modulus)?;
        Ok(ModSeries {
            coeffs: vec![0; order],
            modulus,
        })
    }

    pub fn one(order: usize, modulus: u64) -> Result<ModSeries, SeriesError> {
        let mut s = Self::zero(order, modulus)?;
        s.coeffs[0] = 1 % modulus;
        Ok(s)
    }

    pub fn monomial(c: i64, e: usize, order: usize, modulus: u64) -> Result<ModSeries, SeriesError> {
        if e >= order {
            return Err(SeriesError::ExponentBeyondTruncation { exponent: e, order });
        }
        let mut s = Self::zero(order, modulus)?;
        s.coeffs[e] = c.rem_euclid(modulus as i64) as u64;
        Ok(s)
    }

    /// Reduce an exact series into this kernel's representation.
    pub fn from_series(s: &Series, modulus: u64) -> Result<ModSeries, SeriesError> {
        Self::check_modulus(modulus)?;
        let m = BigInt::from(modulus);
        let coeffs = s
            .coeffs()
            .iter()
            .map(|c| {
                let r = c % &m;
                let r = if r.is_negative() { r + &m } else { r };
                // residue < modulus <= 2^15, so this cannot fail
                u64::try_from(r).expect("canonical residue fits in u64")
            })
            .collect();
        Ok(ModSeries { coeffs, modulus })
    }

    /// View as an exact series of canonical residues.
    pub fn to_series(&self) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<u64, SeriesError> {
        self.coeffs
            .get(n)
            .copied()
            .ok_or(SeriesError::IndexOutOfRange {
                index: n,
                order: self.order(),
            })
    }

    fn assert_same_modulus(&self, other: &ModSeries) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in modular arithmetic"
        );
    }

    pub fn add(&self, other: &ModSeries) -> ModSeries {
        self.assert_same_modulus(other);
        let n = self.order().min(other.order());
        ModSeries {
            coeffs: (0..n)
                .map(|i| (self.coeffs[i] + other.coeffs[i]) % self.modulus)
                .collect(),
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &ModSeries) -> ModSeries {
        self.assert_same_modulus(other);
        let n = self.order().min(other.order());
        ModSeries {
            coeffs: (0..n)
                .map(|i| (self.modulus + self.coeffs[i] - other.coeffs[i]) % self.modulus)
                .collect(),
            modulus: self.modulus,
        }
    }

    pub fn scalar_mul(&self, c: i64) -> ModSeries {
        let c = c.rem_euclid(self.modulus as i64) as u64;
        ModSeries {
            coeffs: self.coeffs.iter().map(|&x| x * c % self.modulus).collect(),
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: &ModSeries) -> ModSeries {
        self.assert_same_modulus(other);
        let n = self.order().min(other.order());
        let (a, b) = if count_nonzero_u64(&self.coeffs[..n]) <= count_nonzero_u64(&other.coeffs[..n])
        {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut out = vec![0u64; n];
        for (i, &ai) in a.iter().enumerate().take(n) {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(n - i) {
                out[i + j] += ai * bj;
            }
        }
        for c in &mut out {
            *c %= self.modulus;
        }
        ModSeries {
            coeffs: out,
            modulus: self.modulus,
        }
    }

    /// Multiply by the sparse unit polynomial `1 + sum c_e q^e` given as
    /// `(e, c_e)` pairs with `e >= 1`. Costs O(order * pairs), which keeps
    /// products with pentagonal-form factors cheap at large orders.
    pub fn mul_sparse_unit(&self, terms: &[(usize, i64)]) -> ModSeries {
        let m = self.modulus;
        let reduced = Self::reduce_sparse_terms(terms, m);
        let n = self.order();
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = self.coeffs[i];
            for &(e, c) in &reduced {
                if e > i {
                    break;
                }
                acc += c * self.coeffs[i - e];
            }
            *slot = acc % m;
        }
        ModSeries { coeffs: out, modulus: m }
    }

    /// Divide by the sparse unit polynomial `1 + sum c_e q^e` (forward
    /// substitution). Same cost profile as [`ModSeries::mul_sparse_unit`].
    pub fn div_sparse_unit(&self, terms: &[(usize, i64)]) -> ModSeries {
        let m = self.modulus;
        let reduced = Self::reduce_sparse_terms(terms, m);
        let n = self.order();
        let mut out = vec![0u64; n];
        for i in 0..n {
            // out[i] = a[i] - sum c_e * out[i-e]; add (m - c) copies instead
            // of subtracting so the u64 accumulator never underflows.
            let mut acc = self.coeffs[i];
            for &(e, c) in &reduced {
                if e > i {
                    break;
                }
                acc += (m - c) * out[i - e];
            }
            out[i] = acc % m;
        }
        ModSeries { coeffs: out, modulus: m }
    }

    fn reduce_sparse_terms(terms: &[(usize, i64)], modulus: u64) -> Vec<(usize, u64)> {
        // Accumulator safety: each addend is < M^2 <= 2^30 and the number of
        // sparse terms stays far below 2^34.
        assert!(terms.len() < (1 << 30), "sparse factor too large");
        let mut reduced: Vec<(usize, u64)> = terms
            .iter()
            .filter(|&&(e, c)| {
                assert!(e >= 1, "sparse unit terms must have exponent >= 1");
                c.rem_euclid(modulus as i64) != 0
            })
            .map(|&(e, c)| (e, c.rem_euclid(modulus as i64) as u64))
            .collect();
        reduced.sort_unstable();
        reduced
    }

    /// Inverse to full order; the constant term must be a unit mod M.
    pub fn invert(&self) -> Result<ModSeries, SeriesError> {
        let a0_inv = mod_inverse(self.coeffs[0], self.modulus).ok_or(
            SeriesError::NotInvertibleMod {
                constant: self.coeffs[0],
                modulus: self.modulus,
            },
        )?;
        let n = self.order();
        let m = self.modulus;
        let nz: Vec<usize> = (1..n).filter(|&k| self.coeffs[k] != 0).collect();
        let mut out = vec![0u64; n];
        out[0] = a0_inv;
        for i in 1..n {
            let mut acc: u64 = 0;
            for &k in &nz {
                if k > i {
                    break;
                }
                acc += self.coeffs[k] * out[i - k];
            }
            out[i] = (m - acc % m) % m * a0_inv % m;
        }
        Ok(ModSeries {
            coeffs: out,
            modulus: m,
        })
    }

    pub fn pow(&self, k: i64) -> Result<ModSeries, SeriesError> {
        if k < 0 {
            return self.invert()?.pow(-k);
        }
        let mut result = ModSeries::one(self.order(), self.modulus)?;
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    pub fn inflate(&self, k: usize) -> ModSeries {
        assert!(k > 0, "inflation step must be positive");
        let n = self.order() * k;
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i * k] = c;
        }
        ModSeries {
            coeffs: out,
            modulus: self.modulus,
        }
    }

    pub fn dissect(&self, m: usize, r: usize) -> Result<ModSeries, SeriesError> {
        assert!(m > 0, "dissection step must be positive");
        assert!(r < m, "residue must be smaller than the step");
        let order = self.order();
        if r >= order {
            return Err(SeriesError::EmptyExtractionWindow { residue: r, order });
        }
        let n = (order - r).div_ceil(m);
        Ok(ModSeries {
            coeffs: (0..n).map(|i| self.coeffs[m * i + r]).collect(),
            modulus: self.modulus,
        })
    }

    pub fn equal_up_to(&self, other: &ModSeries, n: usize) -> Result<Option<usize>, SeriesError> {
        self.assert_same_modulus(other);
        let avail = self.order().min(other.order());
        if n > avail {
            return Err(SeriesError::IndexOutOfRange {
                index: n,
                order: avail,
            });
        }
        Ok((0..n).find(|&k| self.coeffs[k] != other.coeffs[k]))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

fn count_nonzero_u64(coeffs: &[u64]) -> usize {
    coeffs.iter().filter(|&&c| c != 0).count()
}

/// Inverse of `a` mod `m` via the extended Euclidean algorithm.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
