//! Words as base-`b` digit strings with arbitrary-precision values.
//!
//! Digits are least-significant first: `A^0, .., A^(l-1)` with value
//! `sum A^i * b^i`. Trailing (most-significant) zeros are kept, they count
//! toward the word length.
//!
//! When `b = 2^(l^2)` and a length-`l` word is rebased to binary, the result
//! is padded to exactly `l^3` digits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadixError {
    #[error("base {0} is too small, need b >= 2")]
    BadBase(u64),
    #[error("digit {digit} at position {position} is not below base {base}")]
    DigitOutOfRange { position: usize, digit: u64, base: u64 },
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error("position {index} is out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("shift {shift} is out of range for base {base}")]
    ShiftOutOfRange { shift: u64, base: u64 },
    #[error("modulus must be at least 2")]
    BadModulus,
    #[error("length overflow")]
    Overflow,
}

/// Malformed `b:<base>|<d0>,<d1>,..` text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse word `{text}`: {reason}")]
pub struct WordSyntaxError {
    pub text: String,
    pub reason: String,
}

/// A word over `{0, .., b-1}`, least-significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct RadixWord {
    base: u64,
    digits: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    base: u64,
    digits: Vec<u64>,
}

impl TryFrom<RawWord> for RadixWord {
    type Error = RadixError;

    fn try_from(raw: RawWord) -> Result<Self, RadixError> {
        RadixWord::new(raw.base, raw.digits)
    }
}

impl From<RadixWord> for RawWord {
    fn from(w: RadixWord) -> Self {
        RawWord {
            base: w.base,
            digits: w.digits,
        }
    }
}

impl RadixWord {
    pub fn new(base: u64, digits: Vec<u64>) -> Result<Self, RadixError> {
        if base < 2 {
            return Err(RadixError::BadBase(base));
        }
        if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &d)| d >= base) {
            return Err(RadixError::DigitOutOfRange {
                position,
                digit,
                base,
            });
        }
        Ok(RadixWord { base, digits })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Parses the text form, then checks digits against the base. Syntax
    /// problems and domain problems are reported separately.
    pub fn parse(text: &str) -> Result<Result<Self, RadixError>, WordSyntaxError> {
        let bad = |reason: &str| WordSyntaxError {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let rest = text
            .trim()
            .strip_prefix("b:")
            .ok_or_else(|| bad("expected `b:<base>|<digits>`"))?;
        let (base, digits) = rest
            .split_once('|')
            .ok_or_else(|| bad("missing `|` between base and digits"))?;
        let base: u64 = base.trim().parse().map_err(|_| bad("base is not a decimal integer"))?;
        let digits = if digits.trim().is_empty() {
            Vec::new()
        } else {
            digits
                .split(',')
                .map(|d| d.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad("digits must be comma separated decimal integers"))?
        };
        Ok(RadixWord::new(base, digits))
    }
}

impl fmt::Display for RadixWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits.iter().map(u64::to_string).collect();
        write!(f, "b:{}|{}", self.base, digits.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWordError {
    Syntax(WordSyntaxError),
    Domain(RadixError),
}

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWordError::Syntax(e) => e.fmt(f),
            ParseWordError::Domain(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ParseWordError {}

impl FromStr for RadixWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RadixWord::parse(s)
            .map_err(ParseWordError::Syntax)?
            .map_err(ParseWordError::Domain)
    }
}

/// `base^0 .. base^(count-1)`, built by repeated multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTable {
    base: BigUint,
    powers: Vec<BigUint>,
}

impl PowerTable {
    pub fn base(&self) -> &BigUint {
        &self.base
    }

    pub fn powers(&self) -> &[BigUint] {
        &self.powers
    }

    pub fn get(&self, i: usize) -> Option<&BigUint> {
        self.powers.get(i)
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }
}

pub fn make_power_table(base: u64, count: usize) -> Result<PowerTable, RadixError> {
    if base < 2 {
        return Err(RadixError::BadBase(base));
    }
    let b = BigUint::from(base);
    let mut powers = Vec::with_capacity(count);
    let mut cur = BigUint::one();
    for _ in 0..count {
        let next = &cur * &b;
        powers.push(cur);
        cur = next;
    }
    Ok(PowerTable { base: b, powers })
}

/// `sum digits[i] * base^i`.
pub fn word_value(w: &RadixWord) -> BigUint {
    let table = make_power_table(w.base, w.digits.len()).expect("word bases are >= 2");
    word_value_with(w, &table)
}

/// Same as [`word_value`] with a precomputed table. The table must have the
/// word's base and at least `len(w)` entries.
pub fn word_value_with(w: &RadixWord, table: &PowerTable) -> BigUint {
    assert_eq!(table.base, BigUint::from(w.base), "power table base mismatch");
    w.digits
        .iter()
        .zip(&table.powers)
        .filter(|(&d, _)| d != 0)
        .map(|(&d, p)| p * d)
        .sum()
}

/// Exact `log2(b)` when `b` is a power of two.
fn log2_exact(b: u64) -> Option<u32> {
    (b >= 1 && b.is_power_of_two()).then(|| b.trailing_zeros())
}

/// Is `base == 2^(len^2)`?
fn is_cube_law_base(base: u64, len: usize) -> bool {
    let Some(bits) = log2_exact(base) else {
        return false;
    };
    len > 0 && (len as u64).checked_mul(len as u64) == Some(bits as u64)
}

/// Digits of `value` in `base`, least significant first, no padding.
fn digits_of(value: &BigUint, base: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if let Some(bits) = log2_exact(base) {
        // power-of-two bases: read bit groups directly
        let total = value.bits();
        let mut pos = 0u64;
        while pos < total {
            let mut d = 0u64;
            for k in 0..bits as u64 {
                if value.bit(pos + k) {
                    d |= 1 << k;
                }
            }
            out.push(d);
            pos += bits as u64;
        }
    } else {
        let b = BigUint::from(base);
        let mut v = value.clone();
        while !v.is_zero() {
            let r = &v % &b;
            out.push(r.to_u64().expect("remainder below a u64 base"));
            v /= &b;
        }
    }
    out
}

/// Re-expresses `w` in `new_base` with the same value.
///
/// * same base: returned unchanged;
/// * `w.base == 2^(l^2)` with `l = len(w)` and `new_base == 2`: padded to
///   exactly `l^3` digits;
/// * otherwise the minimal digit count, with one digit for a zero-valued
///   nonempty word and none for the empty word.
pub fn rebase(w: &RadixWord, new_base: u64) -> Result<RadixWord, RadixError> {
    if new_base < 2 {
        return Err(RadixError::BadBase(new_base));
    }
    if new_base == w.base {
        return Ok(w.clone());
    }
    let mut digits = digits_of(&word_value(w), new_base);
    if new_base == 2 && is_cube_law_base(w.base, w.len()) {
        let l = w.len();
        digits.resize(l * l * l, 0);
    } else if digits.is_empty() && !w.is_empty() {
        digits.push(0);
    }
    Ok(RadixWord {
        base: new_base,
        digits,
    })
}

/// Binary length of a length-`l` word over base `b`: `log2(b) * l`.
/// Equals `l^3` when `b = 2^(l^2)`.
pub fn rebased_length(l: u64, b: u64) -> Result<u64, RadixError> {
    let bits = log2_exact(b).filter(|_| b >= 2).ok_or(RadixError::NotPowerOfTwo(b))?;
    (bits as u64).checked_mul(l).ok_or(RadixError::Overflow)
}

/// True iff both words denote the same root of unity `z_n^value`, i.e. their
/// values agree modulo `n`.
pub fn exponent_identity_check(
    w1: &RadixWord,
    w2: &RadixWord,
    n: &BigUint,
) -> Result<bool, RadixError> {
    if *n < BigUint::from(2u32) {
        return Err(RadixError::BadModulus);
    }
    Ok(word_value(w1) % n == word_value(w2) % n)
}

/// Applies the cyclic shift `g_k` to digit `i`: `(A^i + k) mod b`.
pub fn symbol_shift(w: &RadixWord, i: usize, k: u64) -> Result<RadixWord, RadixError> {
    if i >= w.len() {
        return Err(RadixError::IndexOutOfRange {
            index: i,
            len: w.len(),
        });
    }
    if k >= w.base {
        return Err(RadixError::ShiftOutOfRange {
            shift: k,
            base: w.base,
        });
    }
    let mut out = w.clone();
    // d < b and k < b, so d + k < 2b fits unless b is near u64::MAX
    let d = out.digits[i] as u128 + k as u128;
    out.digits[i] = (d % w.base as u128) as u64;
    Ok(out)
}

/// `2^(l^2)`, if it fits in a `u64`.
pub fn cube_law_base(l: u32) -> Option<u64> {
    let bits = l.checked_mul(l)?;
    1u64.checked_shl(bits).filter(|_| bits < 64)
}
