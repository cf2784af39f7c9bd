//! Truncated power series in q with exact integer coefficients.
//!
//! A [`Series`] of precision `p` stores the coefficients of q^0 .. q^(p-1);
//! everything from q^p on is unknown. Binary operations truncate to the
//! smaller precision of their operands, and shifts and dissections adjust
//! the precision as described on each method. No valuation-based precision
//! gains are ever taken.

pub mod convolution;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Wraps a coefficient vector; the precision is its length.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(prec: usize) -> Self {
        Series::new(vec![BigInt::zero(); prec])
    }

    pub fn one(prec: usize) -> Self {
        Series::monomial(1, 0, prec)
    }

    /// `c * q^k` to precision `prec` (zero if `k >= prec`).
    pub fn monomial(c: impl Into<BigInt>, k: usize, prec: usize) -> Self {
        let mut s = Series::zero(prec);
        if k < prec {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// Number of exactly known leading coefficients.
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of q^n, or `None` when n is at or beyond the precision.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// Index of the lowest nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops every coefficient from q^prec on. Never raises the precision.
    pub fn truncate(&self, prec: usize) -> Series {
        Series::new(self.coeffs[..prec.min(self.prec())].to_vec())
    }

    pub fn add(&self, other: &Series) -> Series {
        let prec = self.prec().min(other.prec());
        Series::new(
            (0..prec)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Series) -> Series {
        let prec = self.prec().min(other.prec());
        Series::new(
            (0..prec)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        )
    }

    pub fn neg(&self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Series {
        let prec = self.prec().min(other.prec());
        Series::new(convolution::truncated_product(
            &self.coeffs,
            &other.coeffs,
            prec,
        ))
    }

    /// Multiplicative inverse of a series whose constant term is +1 or -1.
    ///
    /// Uses Newton iteration `b <- b + b (1 - a b)`, doubling the number of
    /// correct coefficients each round.
    pub fn inverse(&self) -> Result<Series> {
        let prec = self.prec();
        if prec == 0 {
            return Ok(Series::zero(0));
        }
        let c0 = &self.coeffs[0];
        if !is_unit(c0) {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        // 1/c0 = c0 for c0 = +-1.
        let mut inv = Series::new(vec![c0.clone()]);
        let mut known = 1;
        while known < prec {
            let next = (2 * known).min(prec);
            let residual = Series::one(next).sub(&self.truncate(next).mul(&inv.extend(next)));
            inv = inv.extend(next).add(&inv.extend(next).mul(&residual));
            known = next;
        }
        Ok(inv)
    }

    /// Zero-pads to `prec`; used where the padded tail is known to be irrelevant.
    fn extend(&self, prec: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(prec.max(self.prec()), BigInt::zero());
        Series::new(coeffs)
    }

    /// `self / divisor` with the divisor's q-power cancelled.
    ///
    /// With `v` the divisor's valuation, the result has precision
    /// `min(self.prec, divisor.prec) - v`.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        let v = divisor.valuation().ok_or(Error::ZeroDivisor)?;
        let lead = &divisor.coeffs[v];
        if !is_unit(lead) {
            return Err(Error::NonUnitLeadingCoefficient(lead.to_string()));
        }
        if let Some(va) = self.valuation() {
            if va < v {
                return Err(Error::ValuationMismatch {
                    dividend: va,
                    divisor: v,
                });
            }
        }
        let prec = self.prec().min(divisor.prec()).saturating_sub(v);
        let num = Series::new(self.coeffs[v.min(self.prec())..].to_vec()).truncate(prec);
        let den = Series::new(divisor.coeffs[v..].to_vec()).truncate(prec);
        Ok(num.mul(&den.inverse()?))
    }

    /// `self^k` by repeated squaring; `k = 0` gives the one-series.
    pub fn pow(&self, k: u32) -> Series {
        let mut result = Series::one(self.prec());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The series in q^m: `a(q) -> a(q^m)`. Precision becomes `prec * m`.
    ///
    /// # Panics
    /// If `m == 0`.
    pub fn substitute_qm(&self, m: usize) -> Series {
        assert!(m >= 1, "substitution exponent must be positive");
        let mut out = Series::zero(self.prec() * m);
        for (n, c) in self.coeffs.iter().enumerate() {
            out.coeffs[n * m] = c.clone();
        }
        out
    }

    /// `sum_n a(m n + j) q^n`, keeping only fully known coefficients.
    ///
    /// # Panics
    /// If `m == 0` or `j >= m`.
    pub fn dissect(&self, m: usize, j: usize) -> Series {
        assert!(m >= 1, "dissection modulus must be positive");
        assert!(j < m, "residue {j} out of range for modulus {m}");
        Series::new(self.coeffs.iter().skip(j).step_by(m).cloned().collect())
    }

    /// Multiplies by q^k. Negative `k` divides by q^|k| and requires the
    /// dropped low coefficients to be zero.
    pub fn shift(&self, k: i64) -> Result<Series> {
        let by = k.unsigned_abs() as usize;
        if k >= 0 {
            let mut coeffs = vec![BigInt::zero(); by];
            coeffs.extend_from_slice(&self.coeffs);
            return Ok(Series::new(coeffs));
        }
        if let Some(index) = self.coeffs.iter().take(by).position(|c| !c.is_zero()) {
            return Err(Error::NegativeShiftNonzeroLowTerms { shift: by, index });
        }
        Ok(Series::new(self.coeffs[by.min(self.prec())..].to_vec()))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series::new(self.coeffs.iter().map(|x| x * &c).collect())
    }
}

fn is_unit(c: &BigInt) -> bool {
    c.abs().is_one()
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (prec {})", self.prec())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}
