//! Exact rational scalars.
//!
//! Every computation in this crate is an identity check over the rationals, so
//! the scalar type is an arbitrary-precision fraction kept in lowest terms with
//! a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den`, reduced. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p`, `-p`, or `p/q` with integer `p`, `q` and `q != 0`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Uniform random rational with numerator and denominator drawn from `[-9, 9]`
/// (denominator nonzero).
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let num = rng.gen_range(-9i64..=9);
    let mut den = 0;
    while den == 0 {
        den = rng.gen_range(-9i64..=9);
    }
    rat(num, den)
}

/// Like [`random_scalar`] but never zero.
pub fn random_nonzero_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let s = rat(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(rat(0, -7), zero());
        assert_eq!(rat(0, -7).denom(), &BigInt::from(1));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_scalar("3"), Some(int(3)));
        assert_eq!(parse_scalar(" -2/6 "), Some(rat(-1, 3)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }

    #[test]
    fn random_range() {
        let mut rng = rand::thread_rng();
        for _ in 0..200 {
            let s = random_scalar(&mut rng);
            assert!(s.numer().abs() <= BigInt::from(9));
            assert!(s.denom() <= &BigInt::from(9));
        }
    }
}
