//! Exact rationals. Everything is `num`'s arbitrary-precision `BigRational`,
//! which is kept in lowest terms with a positive denominator.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn uint(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// ⌊s⌋ as a rational.
pub fn floor(s: &Rational) -> Rational {
    s.floor()
}

/// {s} = s − ⌊s⌋, always in [0, 1).
pub fn fract_part(s: &Rational) -> Rational {
    s - s.floor()
}

/// Converts an integral, non-negative rational to `u64`.
pub fn to_u64(s: &Rational) -> Option<u64> {
    if s.is_integer() && !s.is_negative() {
        s.to_integer().to_u64()
    } else {
        None
    }
}

/// Lowest-terms rendering: `"p/q"`, or `"p"` for integers.
pub fn render(s: &Rational) -> String {
    s.to_string()
}

pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    let r: Rational = text.parse().ok()?;
    // `Ratio::from_str` rejects zero denominators but accepts negative ones;
    // construction normalises the sign either way.
    Some(r)
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> Rational {
    items.into_iter().fold(zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_rendering() {
        assert_eq!(render(&ratio(6, 4)), "3/2");
        assert_eq!(render(&ratio(4, 2)), "2");
        assert_eq!(render(&ratio(-1, -3)), "1/3");
        assert_eq!(render(&ratio(1, -3)), "-1/3");
        assert_eq!(render(&zero()), "0");
    }

    #[test]
    fn floors_and_fractions() {
        assert_eq!(floor(&ratio(7, 2)), int(3));
        assert_eq!(fract_part(&ratio(7, 2)), ratio(1, 2));
        assert_eq!(fract_part(&int(5)), zero());
        assert_eq!(floor(&ratio(-1, 2)), int(-1));
        assert_eq!(fract_part(&ratio(-1, 2)), ratio(1, 2));
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse(" 2 "), Some(int(2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(to_u64(&int(4)), Some(4));
        assert_eq!(to_u64(&ratio(1, 2)), None);
        assert_eq!(to_u64(&int(-1)), None);
    }
}
