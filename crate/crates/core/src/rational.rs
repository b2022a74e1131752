//! Exact rationals. Everything numeric in the crate goes through [`Rational`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
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

/// Parses `p`, `-p` or `p/q`. Rejects a zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_drops_unit_denominator() {
        assert_eq!(int(3).to_string(), "3");
        assert_eq!(ratio(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-3"), Some(int(-3)));
        assert_eq!(parse_rational(" 6/4 "), Some(ratio(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
