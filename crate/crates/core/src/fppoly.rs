//! Univariate polynomials over F_p: gcd, Bezout, irreducibility, and full
//! factorization by trial division.
//!
//! Trial division is deliberately the factorizer here. At desk scale it is
//! exhaustive, and these factorizations anchor strong-atom certificates, so
//! transparency beats speed.

use std::fmt;

use thiserror::Error;

use crate::ring::RingElem;
use crate::rpoly::RPoly;
use crate::scalar::{FieldScalar, Prime};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum FpPolyError {
    #[error("both arguments are zero")]
    BothZero,
    #[error("degree must be at least 1")]
    DegreeZero,
}

/// Coefficients ascending by degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpPoly {
    prime: Prime,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn zero(p: Prime) -> FpPoly {
        FpPoly {
            prime: p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: Prime) -> FpPoly {
        FpPoly::from_coeffs(p, vec![1])
    }

    /// The polynomial t.
    pub fn t(p: Prime) -> FpPoly {
        FpPoly::from_coeffs(p, vec![0, 1])
    }

    pub fn from_coeffs(p: Prime, coeffs: Vec<u64>) -> FpPoly {
        let mut out = FpPoly {
            prime: p,
            coeffs: coeffs.into_iter().map(|c| c % p.value()).collect(),
        };
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.prime, other.prime);
        let p = self.prime.value();
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::from_coeffs(
            self.prime,
            (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % p).collect(),
        )
    }

    pub fn neg(&self) -> FpPoly {
        let p = self.prime.value();
        FpPoly::from_coeffs(
            self.prime,
            self.coeffs.iter().map(|c| (p - c) % p).collect(),
        )
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.prime, other.prime);
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.prime);
        }
        let p = self.prime.value();
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % p;
            }
        }
        FpPoly::from_coeffs(self.prime, coeffs)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let p = self.prime.value();
        FpPoly::from_coeffs(self.prime, self.coeffs.iter().map(|a| a * c % p).collect())
    }

    pub fn pow(&self, k: u32) -> FpPoly {
        let mut acc = FpPoly::one(self.prime);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn divrem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!divisor.is_zero(), "division by zero");
        let p = self.prime.value();
        let d = divisor.degree().expect("nonzero");
        let lead_inv = FieldScalar::new(divisor.leading_coeff(), self.prime)
            .inverse()
            .value();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = *rem.last().expect("nonempty");
            let shift = rem.len() - 1 - d;
            let q = lead * lead_inv % p;
            if q != 0 {
                quot[shift] = q;
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let sub = q * b % p;
                    rem[shift + i] = (rem[shift + i] + p - sub) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (
            FpPoly::from_coeffs(self.prime, quot),
            FpPoly::from_coeffs(self.prime, rem),
        )
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        !self.is_zero() && other.divrem(self).1.is_zero()
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = FieldScalar::new(self.leading_coeff(), self.prime)
            .inverse()
            .value();
        self.scale(inv)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &FpPoly) -> Result<FpPoly, FpPolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(FpPolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Bezout coefficients: `u*self + v*other` equals the monic gcd.
    pub fn bezout(&self, other: &FpPoly) -> Result<(FpPoly, FpPoly), FpPolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(FpPolyError::BothZero);
        }
        let p = self.prime;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut v0, mut v1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            (r0, r1) = (r1, r);
            (u0, u1) = (u1.clone(), u0.sub(&q.mul(&u1)));
            (v0, v1) = (v1.clone(), v0.sub(&q.mul(&v1)));
        }
        // Normalize so the combination yields the monic gcd.
        let scale = FieldScalar::new(r0.leading_coeff(), p).inverse().value();
        let (u, v, g) = (u0.scale(scale), v0.scale(scale), r0.monic());
        debug_assert_eq!(u.mul(self).add(&v.mul(other)), g);
        Ok((u, v))
    }

    /// No monic divisor of degree between 1 and deg/2.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        for q in monic_polys_up_to(self.prime, d / 2) {
            if q.degree() == Some(0) {
                continue;
            }
            if q.divides(self) {
                return false;
            }
        }
        true
    }

    /// Complete factorization: a scalar times monic irreducibles with
    /// multiplicities, by trial division in canonical order. The product
    /// reconstructs the input exactly.
    pub fn factor(&self) -> Result<(FieldScalar, Vec<(FpPoly, u32)>), FpPolyError> {
        let Some(d) = self.degree() else {
            return Err(FpPolyError::DegreeZero);
        };
        if d == 0 {
            return Err(FpPolyError::DegreeZero);
        }
        let scalar = FieldScalar::new(self.leading_coeff(), self.prime);
        let mut rest = self.monic();
        let mut factors: Vec<(FpPoly, u32)> = Vec::new();
        let mut deg = 1usize;
        while rest.degree().is_some_and(|rd| rd >= 1) {
            let rd = rest.degree().expect("nonzero");
            if deg > rd / 2 {
                // What remains is irreducible.
                factors.push((rest.clone(), 1));
                break;
            }
            for q in monic_polys_of_degree(self.prime, deg) {
                let mut mult = 0u32;
                while q.divides(&rest) {
                    rest = rest.divrem(&q).0;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((q, mult));
                }
            }
            deg += 1;
        }
        debug_assert_eq!(
            factors
                .iter()
                .fold(FpPoly::one(self.prime), |acc, (q, m)| acc.mul(&q.pow(*m)))
                .scale(scalar.value()),
            *self
        );
        Ok((scalar, factors))
    }

    /// Monic proper divisors (degree strictly between 0 and deg), in
    /// canonical order.
    pub fn monic_proper_divisors(&self) -> Result<Vec<FpPoly>, FpPolyError> {
        let (_, factors) = self.factor()?;
        let mut divisors = vec![FpPoly::one(self.prime)];
        for (q, mult) in &factors {
            let mut next = Vec::new();
            for d in &divisors {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..*mult {
                    acc = acc.mul(q);
                    next.push(acc.clone());
                }
            }
            divisors = next;
        }
        let full = self.degree();
        let mut proper: Vec<FpPoly> = divisors
            .into_iter()
            .filter(|d| d.degree() != Some(0) && d.degree() != full)
            .collect();
        proper.sort_by_key(|d| (d.degree(), d.coeffs.clone()));
        proper.dedup();
        Ok(proper)
    }

    /// Lift into R[t] with constant coefficients.
    pub fn lift(&self) -> RPoly {
        RPoly::from_coeffs(
            self.prime,
            self.coeffs
                .iter()
                .map(|c| RingElem::scalar(FieldScalar::new(*c, self.prime)))
                .collect(),
        )
    }
}

/// All monic polynomials of exactly the given degree, lower coefficients
/// counting little-endian.
pub fn monic_polys_of_degree(p: Prime, degree: usize) -> Vec<FpPoly> {
    let q = p.value();
    let mut out = Vec::new();
    let count = q.pow(degree as u32);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rem = idx;
        for _ in 0..degree {
            coeffs.push(rem % q);
            rem /= q;
        }
        coeffs.push(1);
        out.push(FpPoly::from_coeffs(p, coeffs));
    }
    out
}

fn monic_polys_up_to(p: Prime, max_degree: usize) -> Vec<FpPoly> {
    (0..=max_degree)
        .flat_map(|d| monic_polys_of_degree(p, d))
        .collect()
}

impl fmt::Display for FpPoly {
    /// Descending degree: `t^2 + 2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}
