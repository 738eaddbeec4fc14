//! Exact rational scalars.

use alloc::string::String;
use core::str::FromStr;

/// All coordinates and lengths are exact rationals.
pub type Rational = num_rational::Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Parses `"7"`, `"-3/2"` or `" 5 / 10 "`. Zero denominators are rejected.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n = i128::from_str(n.trim()).ok()?;
            let d = i128::from_str(d.trim()).ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => i128::from_str(text).ok().map(Rational::from_integer),
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format(value: &Rational) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    if value.is_integer() {
        let _ = write!(out, "{}", value.numer());
    } else {
        let _ = write!(out, "{}/{}", value.numer(), value.denom());
    }
    out
}

/// Rational approximation of `value` as an `f64`, for rendering only.
pub fn to_f64(value: &Rational) -> f64 {
    *value.numer() as f64 / *value.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3"), Some(int(3)));
        assert_eq!(parse("-3/6"), Some(frac(-1, 2)));
        assert_eq!(parse(" 5 / 10 "), Some(frac(1, 2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn format_is_reduced() {
        assert_eq!(format(&frac(4, 8)), "1/2");
        assert_eq!(format(&int(-7)), "-7");
    }
}
