//! Exact scalar substrate: arbitrary-precision rationals, multivariate
//! polynomials over them, and the fraction field of those polynomials.

mod poly;
mod ratfun;

pub use poly::Poly;
pub use ratfun::RatFun;

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational number, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point")]
    Pole,
    #[error("variable index {0} out of range (nvars = {1})")]
    VarOutOfRange(usize, usize),
    #[error("operands live over different variable sets ({0} vs {1} variables)")]
    NvarsMismatch(usize, usize),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction p/q.
pub fn ratio(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p", "-p" or "p/q" into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ArithError::ParseRational(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den == BigInt::from(0) {
                return Err(ArithError::DivisionByZero);
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Renders a rational as "p" or "p/q".
pub fn rational_string(x: &Rational) -> String {
    use num_traits::One;
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["3", "-7", "22/7", "-5/3", "0"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(rational_string(&x), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
