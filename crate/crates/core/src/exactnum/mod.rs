//! Exact rational arithmetic, interval enclosures of infinite products, and
//! exact randomized decisions against them.
//!
//! Everything the rest of the crate treats as a number is either a
//! [`Rational`] (arbitrary precision, always reduced) or an
//! [`IntervalEnclosure`] bracketing an irrational limit between two
//! rationals. No floating point is used anywhere.

mod interval;
mod products;
mod random;

pub use interval::IntervalEnclosure;
pub use products::{
    euler_prefactor, signed_prefactor, stong_term, EulerProduct, ExactValue, ProductKind, Refinable,
};
pub use random::{exact_bernoulli, BitSource, LazyUniform, DEFAULT_REFINEMENT_CAP_BITS};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, reduced to lowest terms with a
/// positive denominator (maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer power with negative exponents allowed (base must be nonzero for
/// negative exponents).
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mag = base.pow(exp.unsigned_abs().try_into().expect("exponent too large"));
    if exp < 0 {
        assert!(!mag.is_zero(), "negative power of zero");
        mag.recip()
    } else {
        mag
    }
}

/// Parses an exact rational from any of the accepted spellings: `p/q`,
/// integers, decimals (`0.5`), and scientific shorthand (`1e-9`, `2.5e3`).
/// Decimal forms are normalized exactly (no rounding).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("cannot parse `{s}` as a rational"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "zero denominator in `{s}`"
            )));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let mantissa = mantissa.trim();
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i64;
    let ten = rat_int(10);
    Ok(Rational::from_integer(n) * rat_pow(&ten, scale))
}

/// Signum as a tiny helper for sign-aware interval scaling.
pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_all_spellings() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert_eq!(parse_rational("1e-9").unwrap(), rat(1, 1_000_000_000));
        assert_eq!(parse_rational("2.5e3").unwrap(), rat_int(2500));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn rat_pow_handles_negative_exponents() {
        assert_eq!(rat_pow(&rat_int(2), -3), rat(1, 8));
        assert_eq!(rat_pow(&rat(2, 3), 0), Rational::one());
        assert_eq!(rat_pow(&rat(-2, 1), 2), rat_int(4));
        assert_eq!(rat_pow(&rat(-2, 1), 3), rat_int(-8));
    }
}
