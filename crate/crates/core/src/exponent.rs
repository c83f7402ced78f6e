//! Exact nonnegative rational exponents.
//!
//! Truncation decisions compare exponent sums against 1, so everything here
//! is arbitrary-precision rational arithmetic; no floating point.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, Signed, ToPrimitive, Zero};

/// A nonnegative rational, stored in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(Ratio<BigInt>);

impl Exponent {
    /// Builds `num/den`. Panics if `den == 0`; callers validating user input
    /// check first.
    pub fn new(num: u64, den: u64) -> Exponent {
        assert!(den != 0, "zero denominator");
        Exponent(Ratio::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: u64) -> Exponent {
        Exponent(Ratio::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Exponent {
        Exponent(Ratio::zero())
    }

    pub fn one() -> Exponent {
        Exponent(Ratio::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn plus(&self, other: &Exponent) -> Exponent {
        Exponent(&self.0 + &other.0)
    }

    /// `self - other`, or `None` if the difference would be negative.
    pub fn minus(&self, other: &Exponent) -> Option<Exponent> {
        let d = &self.0 - &other.0;
        if d.is_negative() {
            None
        } else {
            Some(Exponent(d))
        }
    }

    pub fn div_nat(&self, n: u64) -> Exponent {
        assert!(n != 0);
        Exponent(&self.0 / BigInt::from(n))
    }

    pub fn times_nat(&self, n: u64) -> Exponent {
        Exponent(&self.0 * BigInt::from(n))
    }

    /// True iff the value is strictly greater than 1 (the truncation test).
    pub fn exceeds_one(&self) -> bool {
        self.0 > Ratio::one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Denominator as u64. Panics beyond desk scale.
    pub fn denom_u64(&self) -> u64 {
        self.0
            .denom()
            .to_u64()
            .expect("exponent denominator exceeds desk scale")
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Exponent) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Exponent) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Exponent {
    /// Always `num/den` in lowest terms, e.g. `1/2`, `0/1`, `1/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_exact_compare() {
        assert_eq!(Exponent::new(2, 4), Exponent::new(1, 2));
        assert!(Exponent::new(1, 2) < Exponent::new(2, 3));
        assert!(Exponent::new(1, 3) < Exponent::new(1, 2));
        assert!(!Exponent::new(1, 1).exceeds_one());
        assert!(Exponent::new(3, 2).exceeds_one());
    }

    #[test]
    fn arithmetic() {
        let half = Exponent::new(1, 2);
        let third = Exponent::new(1, 3);
        assert_eq!(half.plus(&third), Exponent::new(5, 6));
        assert_eq!(half.minus(&third), Some(Exponent::new(1, 6)));
        assert_eq!(third.minus(&half), None);
        assert_eq!(half.div_nat(2), Exponent::new(1, 4));
        assert_eq!(half.times_nat(2), Exponent::one());
    }

    #[test]
    fn display_is_num_slash_den() {
        assert_eq!(Exponent::new(1, 2).to_string(), "1/2");
        assert_eq!(Exponent::zero().to_string(), "0/1");
        assert_eq!(Exponent::integer(1).to_string(), "1/1");
    }
}
