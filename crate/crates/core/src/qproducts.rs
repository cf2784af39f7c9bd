//! q-Pochhammer products and Euler products f_k.
//!
//! Every factor (q^a; q^m)_inf has constant term 1, so any product of such
//! factors raised to integer powers has integer coefficients. Products are
//! expanded one linear factor (1 - q^n) at a time directly on the truncated
//! coefficient vector: multiplying is a descending in-place difference and
//! dividing is an ascending in-place running sum.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::Series;

/// One factor `(q^offset; q^modulus)_inf ^ exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    offset: usize,
    modulus: usize,
    exponent: i64,
}

impl Factor {
    pub fn new(offset: usize, modulus: usize, exponent: i64) -> Result<Self> {
        if offset == 0 || modulus == 0 || exponent == 0 {
            return Err(Error::InvalidFactor {
                offset,
                modulus,
                exponent,
            });
        }
        Ok(Factor {
            offset,
            modulus,
            exponent,
        })
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Exponents n of the linear factors (1 - q^n) that matter below `prec`.
    fn linear_exponents(&self, prec: usize) -> impl Iterator<Item = usize> {
        (self.offset..prec).step_by(self.modulus)
    }
}

/// A finite product of Pochhammer factors. The empty product is 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        ProductSpec::default()
    }

    /// Builds a spec from `(offset, modulus, exponent)` triples.
    pub fn from_triples(triples: &[(usize, usize, i64)]) -> Result<Self> {
        let factors = triples
            .iter()
            .map(|&(a, m, e)| Factor::new(a, m, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductSpec { factors })
    }

    pub fn with(mut self, offset: usize, modulus: usize, exponent: i64) -> Result<Self> {
        self.factors.push(Factor::new(offset, modulus, exponent)?);
        Ok(self)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Every exponent multiplied by `k`; `k = 0` gives the empty product.
    pub fn powered(&self, k: i64) -> ProductSpec {
        if k == 0 {
            return ProductSpec::new();
        }
        ProductSpec {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    exponent: f.exponent * k,
                    ..*f
                })
                .collect(),
        }
    }

    /// The product with q replaced by q^m.
    pub fn substituted(&self, m: usize) -> ProductSpec {
        assert!(m >= 1, "substitution exponent must be positive");
        ProductSpec {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    offset: f.offset * m,
                    modulus: f.modulus * m,
                    exponent: f.exponent,
                })
                .collect(),
        }
    }

    pub fn times(&self, other: &ProductSpec) -> ProductSpec {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        ProductSpec { factors }
    }
}

fn mul_one_minus_qn(coeffs: &mut [BigInt], n: usize) {
    for i in (n..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] -= &lo[i - n];
    }
}

fn div_one_minus_qn(coeffs: &mut [BigInt], n: usize) {
    for i in n..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] += &lo[i - n];
    }
}

fn apply_factor(coeffs: &mut [BigInt], factor: &Factor) {
    let prec = coeffs.len();
    for n in factor.linear_exponents(prec) {
        for _ in 0..factor.exponent.unsigned_abs() {
            if factor.exponent > 0 {
                mul_one_minus_qn(coeffs, n);
            } else {
                div_one_minus_qn(coeffs, n);
            }
        }
    }
}

/// `prod_{k>=0} (1 - q^(a + k m))` to precision `prec`.
///
/// # Panics
/// If `a` or `m` is zero.
pub fn pochhammer_inf(a: usize, m: usize, prec: usize) -> Series {
    let factor = Factor::new(a, m, 1).expect("offset and modulus must be positive");
    let mut coeffs = Series::one(prec).into_coeffs();
    apply_factor(&mut coeffs, &factor);
    Series::new(coeffs)
}

/// The finite product `(q; q)_n = (1 - q)(1 - q^2)...(1 - q^n)` to precision `prec`.
pub fn pochhammer_finite(n: usize, prec: usize) -> Series {
    let mut coeffs = Series::one(prec).into_coeffs();
    for k in 1..=n.min(prec.saturating_sub(1)) {
        mul_one_minus_qn(&mut coeffs, k);
    }
    Series::new(coeffs)
}

/// f_k = (q^k; q^k)_inf, through Euler's pentagonal number theorem:
/// `sum_j (-1)^j q^(k j (3j - 1) / 2)` over all integers j.
///
/// # Panics
/// If `k` is zero.
pub fn euler_f(k: usize, prec: usize) -> Series {
    assert!(k >= 1, "f_k needs k >= 1");
    let mut coeffs = Series::zero(prec).into_coeffs();
    if prec == 0 {
        return Series::new(coeffs);
    }
    coeffs[0] = BigInt::from(1);
    for j in 1usize.. {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        // generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2
        let lo = k * (j * (3 * j - 1) / 2);
        if lo >= prec {
            break;
        }
        coeffs[lo] = BigInt::from(sign);
        let hi = k * (j * (3 * j + 1) / 2);
        if hi < prec {
            coeffs[hi] = BigInt::from(sign);
        }
    }
    Series::new(coeffs)
}

/// f_k as the plain product of its linear factors.
pub fn euler_f_naive(k: usize, prec: usize) -> Series {
    pochhammer_inf(k, k, prec)
}

/// Expands a product spec factor by factor, truncating as it goes.
pub fn expand_product(spec: &ProductSpec, prec: usize) -> Series {
    let mut coeffs = Series::one(prec).into_coeffs();
    for factor in spec.factors() {
        apply_factor(&mut coeffs, factor);
    }
    Series::new(coeffs)
}
