//! Exact rational scalars.
//!
//! The ground field is ℚ, represented by arbitrary-precision rationals that
//! are always stored in lowest terms with a positive denominator (this is an
//! invariant of [`num_rational::BigRational`] itself). Every operation in the
//! crate is exact; nothing ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

/// The rational `n`.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Renders as `p` for integers and `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(fmt_rat(&r), "-2/3");
        assert_eq!(fmt_rat(&rat(8, 4)), "2");
    }

    #[test]
    fn arithmetic_is_exact() {
        // 1/3 + 1/6 = 1/2 exactly.
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        // (2/3) * (9/4) = 3/2 exactly.
        assert_eq!(rat(2, 3) * rat(9, 4), rat(3, 2));
    }
}
