//! Exact rational arithmetic for field ratios, weights and densities.

use num::integer::Integer;
use num::rational::Ratio;
use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Parses `"8/9"`, `"0.889"`, `"3"`, `"1e-2"` or `"-0.5"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::parse("empty number"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad numerator in {s:?}")))?;
        let den: i128 = den
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad denominator in {s:?}")))?;
        if den == 0 {
            return Err(Error::parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::parse(format!("not a decimal number: {s:?}"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = digits.trim_start_matches('0');
    let mut numer: i128 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| Error::Overflow(format!("too many digits in {s:?}")))?
    };
    let scale = exponent - frac_part.len() as i32;
    let pow = |k: u32| {
        10i128
            .checked_pow(k)
            .ok_or_else(|| Error::Overflow(format!("exponent out of range in {s:?}")))
    };
    let mut denom = 1i128;
    if scale >= 0 {
        numer = numer
            .checked_mul(pow(scale as u32)?)
            .ok_or_else(|| Error::Overflow(format!("{s:?} too large")))?;
    } else {
        denom = pow(scale.unsigned_abs())?;
    }
    if negative {
        numer = -numer;
    }
    Ok(Rational::new(numer, denom))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `"p/q"`, or just `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators, with overflow reported as an error.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Result<i128> {
    let mut lcm: i128 = 1;
    for v in values {
        let d = *v.denom();
        let g = lcm.gcd(&d);
        lcm = (lcm / g)
            .checked_mul(d)
            .ok_or_else(|| Error::Overflow("common denominator exceeds 128 bits".into()))?;
    }
    Ok(lcm)
}

/// `value * scale` as an exact integer; `scale` must be a multiple of the denominator.
pub fn scale_to_integer(value: &Rational, scale: i128) -> Result<i128> {
    let factor = scale / value.denom();
    if factor.is_zero() || scale % value.denom() != 0 {
        return Err(Error::Internal(format!(
            "scale {scale} is not a multiple of {}",
            value.denom()
        )));
    }
    value
        .numer()
        .checked_mul(factor)
        .ok_or_else(|| Error::Overflow("scaled capacity exceeds 128 bits".into()))
}

/// Reads a rational out of a JSON string or number. Numbers are converted
/// through their decimal text so `0.05` becomes exactly `1/20`.
pub fn from_json(value: &serde_json::Value) -> Result<Rational> {
    match value {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::parse(format!("expected a number, got {other}"))),
    }
}
