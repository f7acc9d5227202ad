//! Arbitrary-precision rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator after each operation. Its
//! `Display` form is the canonical text form used throughout: `p/q`, or just
//! `p` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den` in lowest terms. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses the canonical `p/q` (or bare integer `p`) form.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidInput(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        None => Ok(Rational::from_integer(
            text.parse::<BigInt>().map_err(|_| bad())?,
        )),
        Some((n, d)) => {
            let n = n.parse::<BigInt>().map_err(|_| bad())?;
            let d = d.parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// True if `q` is in canonical form: positive denominator, coprime parts.
pub fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer;
    q.denom().is_positive() && q.numer().abs().gcd(q.denom()).is_one()
}
