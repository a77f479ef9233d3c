//! Exact rational arithmetic helpers.
//!
//! Every payoff, probability, and belief weight in this crate is a
//! [`Rational`] (arbitrary-precision `num_rational::BigRational`).
//! Parsing accepts `p/q`, integer, and decimal literals; formatting is
//! canonical: lowest terms, `p/q` or a bare integer, leading `-` only.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational literal: `p/q`, an integer, or a decimal string, all
/// converted exactly (`0.5` becomes `1/2`).
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .parse()
            .map_err(|_| format!("bad numerator in rational literal '{s}'"))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| format!("bad denominator in rational literal '{s}'"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in rational literal '{s}'"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal literal '{s}'"));
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) || int_digits.is_empty() {
            return Err(format!("bad decimal literal '{s}'"));
        }
        let whole: BigInt = int_digits.parse().unwrap();
        let frac: BigInt = frac_part.parse().unwrap();
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = Rational::new(whole * &scale + frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| format!("bad rational literal '{s}'"))?;
    Ok(Rational::from_integer(n))
}

/// Canonical text form: lowest terms, `p/q` or bare integer.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` lies in `[0, 1]`.
pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational("10.50").unwrap(), ratio(21, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&ratio(2, 4)), "1/2");
        assert_eq!(format_rational(&ratio(-8, 2)), "-4");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn round_trips_canonical_form() {
        for text in ["1/2", "-3/7", "4", "0", "-11"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
    }
}
