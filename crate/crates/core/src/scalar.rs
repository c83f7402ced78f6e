//! Prime moduli and exact arithmetic in the prime field F_p.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("modulus {0} is not prime")]
pub struct NonPrimeModulus(pub u64);

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime, NonPrimeModulus> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(NonPrimeModulus(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue in [0, p). The modulus travels with the value; mixing moduli is
/// a programming error and panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u64,
    modulus: Prime,
}

impl FieldScalar {
    pub fn new(value: u64, modulus: Prime) -> FieldScalar {
        FieldScalar {
            value: value % modulus.value(),
            modulus,
        }
        .normalized()
    }

    pub fn zero(modulus: Prime) -> FieldScalar {
        FieldScalar::new(0, modulus)
    }

    pub fn one(modulus: Prime) -> FieldScalar {
        FieldScalar::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: FieldScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli: {} vs {}",
            self.modulus, other.modulus
        );
    }

    pub fn add(self, other: FieldScalar) -> FieldScalar {
        self.check(other);
        FieldScalar::new(self.value + other.value, self.modulus)
    }

    pub fn sub(self, other: FieldScalar) -> FieldScalar {
        self.check(other);
        let p = self.modulus.value();
        FieldScalar::new(self.value + p - other.value, self.modulus)
    }

    pub fn neg(self) -> FieldScalar {
        FieldScalar::zero(self.modulus).sub(self)
    }

    pub fn mul(self, other: FieldScalar) -> FieldScalar {
        self.check(other);
        FieldScalar::new(self.value * other.value, self.modulus)
    }

    pub fn pow(self, mut e: u64) -> FieldScalar {
        let mut base = self;
        let mut acc = FieldScalar::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(self) -> FieldScalar {
        assert!(!self.is_zero(), "inverse of zero");
        self.pow(self.modulus.value() - 2)
    }

    /// Frobenius a -> a^p, the identity map on F_p.
    pub fn frobenius(self) -> FieldScalar {
        self
    }

    /// p-th root; the inverse Frobenius, also the identity on F_p.
    pub fn proot(self) -> FieldScalar {
        self
    }
}

// `new` reduces, so the struct never holds an unreduced value.
impl FieldScalar {
    fn normalized(self) -> FieldScalar {
        debug_assert!(self.value < self.modulus.value());
        self
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
