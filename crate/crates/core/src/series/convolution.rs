//! Truncated convolution of integer coefficient vectors.
//!
//! Two routes produce identical output: a schoolbook double loop, and
//! Kronecker substitution, which packs each operand into one big integer,
//! multiplies once (num-bigint switches to Karatsuba/Toom-3 internally) and
//! unpacks the signed digits. The public entry point picks by size.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

/// Below this length the schoolbook loop wins.
const KRONECKER_THRESHOLD: usize = 24;

/// First `len` coefficients of the product of `a` and `b`.
pub fn truncated_product(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    if a.len().min(b.len()) < KRONECKER_THRESHOLD {
        schoolbook(a, b, len)
    } else {
        kronecker(a, b, len)
    }
}

/// Direct O(len^2) convolution.
pub fn schoolbook(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Convolution through a single big-integer multiplication.
pub fn kronecker(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    let bits_a = max_bits(a);
    let bits_b = max_bits(b);
    if bits_a == 0 || bits_b == 0 {
        return vec![BigInt::zero(); len];
    }
    // |c_k| <= min(len_a, len_b) * 2^(bits_a + bits_b) must sit below 2^(width - 1).
    let terms = a.len().min(b.len()) as u64;
    let width = bits_a + bits_b + (64 - terms.leading_zeros() as u64) + 2;

    let product = pack(a, width) * pack(b, width);
    let digits = a.len() + b.len() - 1;
    let half = BigUint::one() << (width - 1);

    // Adding half to every digit makes all digits nonnegative, so the base-2^width
    // expansion of the sum can be read off directly.
    let offset = offset_digits(digits, width);
    let biased = product + BigInt::from_biguint(Sign::Plus, offset);
    let (sign, magnitude) = biased.into_parts();
    debug_assert!(sign != Sign::Minus);
    let words = magnitude.to_u32_digits();

    let half = BigInt::from_biguint(Sign::Plus, half);
    (0..len)
        .map(|k| {
            if k >= digits {
                return BigInt::zero();
            }
            let digit = read_bits(&words, k as u64 * width, width);
            BigInt::from_biguint(Sign::Plus, digit) - &half
        })
        .collect()
}

fn max_bits(xs: &[BigInt]) -> u64 {
    xs.iter().map(|x| x.bits()).max().unwrap_or(0)
}

fn word_count(slots: usize, width: u64) -> usize {
    (slots as u64 * width / 32) as usize + 2
}

fn pack(xs: &[BigInt], width: u64) -> BigInt {
    let words = word_count(xs.len(), width);
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    let mut any_neg = false;
    for (i, x) in xs.iter().enumerate() {
        match x.sign() {
            Sign::NoSign => {}
            Sign::Plus => write_bits(&mut pos, i as u64 * width, x.magnitude()),
            Sign::Minus => {
                any_neg = true;
                write_bits(&mut neg, i as u64 * width, x.magnitude());
            }
        }
    }
    let pos = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if any_neg {
        pos - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        pos
    }
}

fn offset_digits(slots: usize, width: u64) -> BigUint {
    let mut words = vec![0u32; word_count(slots, width)];
    for k in 0..slots as u64 {
        let bit = k * width + width - 1;
        words[(bit / 32) as usize] |= 1 << (bit % 32);
    }
    BigUint::new(words)
}

/// ORs `value` into `words` starting at bit `offset`. The slot must be empty.
fn write_bits(words: &mut [u32], offset: u64, value: &BigUint) {
    let base = (offset / 32) as usize;
    let shift = (offset % 32) as u32;
    for (j, digit) in value.iter_u32_digits().enumerate() {
        let shifted = (digit as u64) << shift;
        words[base + j] |= shifted as u32;
        let high = (shifted >> 32) as u32;
        if high != 0 {
            words[base + j + 1] |= high;
        }
    }
}

fn read_bits(words: &[u32], offset: u64, width: u64) -> BigUint {
    let count = width.div_ceil(32) as usize;
    let mut out = Vec::with_capacity(count);
    for j in 0..count as u64 {
        let pos = offset + 32 * j;
        let idx = (pos / 32) as usize;
        let lo = words.get(idx).copied().unwrap_or(0) as u64;
        let hi = words.get(idx + 1).copied().unwrap_or(0) as u64;
        let mut chunk = (((hi << 32) | lo) >> (pos % 32)) as u32;
        let remaining = width - 32 * j;
        if remaining < 32 {
            chunk &= (1u32 << remaining) - 1;
        }
        out.push(chunk);
    }
    BigUint::new(out)
}
