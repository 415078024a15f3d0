//! Exact rational scalars and small vector helpers.
//!
//! [`Rational`] is `num_rational::BigRational`: arbitrary-precision numerator
//! and denominator, always reduced to lowest terms with a positive
//! denominator. Every quantity handled by this crate is one of these.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

/// Shorthand for an integer-valued rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for `numer / denom`. Panics if `denom == 0`.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zeros(len: usize) -> Vec<Rational> {
    vec![Rational::zero(); len]
}

pub fn dot(lhs: &[Rational], rhs: &[Rational]) -> Rational {
    debug_assert_eq!(lhs.len(), rhs.len());
    lhs.iter()
        .zip(rhs)
        .fold(Rational::zero(), |acc, (l, r)| acc + l * r)
}

/// `lhs - rhs` componentwise.
pub fn sub(lhs: &[Rational], rhs: &[Rational]) -> Vec<Rational> {
    lhs.iter().zip(rhs).map(|(l, r)| l - r).collect()
}

/// `matrix * x` for a row-major matrix.
pub fn mat_vec(matrix: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    matrix.iter().map(|row| dot(row, x)).collect()
}

/// `matrix^T * y` for a row-major matrix with `cols` columns.
pub fn mat_t_vec(matrix: &[Vec<Rational>], y: &[Rational], cols: usize) -> Vec<Rational> {
    let mut out = zeros(cols);
    for (row, weight) in matrix.iter().zip(y) {
        if weight.is_zero() {
            continue;
        }
        for (acc, entry) in out.iter_mut().zip(row) {
            *acc += entry * weight;
        }
    }
    out
}

/// Lossy conversion used only for reporting and float cross-checks.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Renders a slice as `[p/q, ...]`.
pub fn display_vec(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid rational literal {:?}: {}",
            self.input, self.reason
        )
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses an exact rational from one of:
///
/// * an integer: `-3`
/// * a fraction: `7/4`, `-1/3`
/// * a decimal, optionally with an exponent: `0.25`, `-1.5e-2`
///
/// Decimals are converted exactly (`"0.1"` is `1/10`, never a binary float).
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: input.to_string(),
        reason,
    };
    let text = input.trim();
    if text.is_empty() {
        return Err(err("empty"));
    }

    if let Some((numer, denom)) = text.split_once('/') {
        let numer = parse_integer(numer.trim()).ok_or_else(|| err("bad numerator"))?;
        let denom = parse_integer(denom.trim()).ok_or_else(|| err("bad denominator"))?;
        if denom.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Rational::new(numer, denom));
    }

    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = text[pos + 1..].parse().map_err(|_| err("bad exponent"))?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };

    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err("no digits"));
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(err("unexpected character"));
    }
    if exponent.unsigned_abs() > 10_000 {
        return Err(err("exponent out of range"));
    }

    let all_digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(if all_digits.is_empty() {
        "0"
    } else {
        &all_digits
    })
    .map_err(|_| err("bad digits"))?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let body = text.strip_prefix(['-', '+']).unwrap_or(text);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text.strip_prefix('+').unwrap_or(text)).ok()
}
