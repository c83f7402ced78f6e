//! Polynomials over R in the indeterminate t, the reduction homomorphisms,
//! and the surviving-monomial witness.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exponent::Exponent;
use crate::fppoly::FpPoly;
use crate::monomial::Monomial;
use crate::ring::RingElem;
use crate::scalar::Prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("product is zero")]
    ZeroProduct,
    #[error("zero input")]
    ZeroInput,
}

/// Dense coefficient sequence indexed by degree in t; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPoly {
    prime: Prime,
    coeffs: Vec<RingElem>,
}

impl RPoly {
    pub fn zero(p: Prime) -> RPoly {
        RPoly {
            prime: p,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(p: Prime, coeffs: Vec<RingElem>) -> RPoly {
        for c in &coeffs {
            assert_eq!(c.prime(), p, "mixed moduli");
        }
        let mut out = RPoly { prime: p, coeffs };
        out.trim();
        out
    }

    pub fn constant(c: RingElem) -> RPoly {
        RPoly::from_coeffs(c.prime(), vec![c])
    }

    /// `c * t^k`.
    pub fn term(c: RingElem, k: usize) -> RPoly {
        let p = c.prime();
        let mut coeffs = vec![RingElem::zero(p); k];
        coeffs.push(c);
        RPoly::from_coeffs(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(RingElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in t; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of t^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| RingElem::zero(self.prime))
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn add(&self, other: &RPoly) -> RPoly {
        assert_eq!(self.prime, other.prime, "mixed moduli");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        RPoly::from_coeffs(self.prime, coeffs)
    }

    pub fn neg(&self) -> RPoly {
        RPoly::from_coeffs(self.prime, self.coeffs.iter().map(RingElem::neg).collect())
    }

    pub fn sub(&self, other: &RPoly) -> RPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RPoly) -> RPoly {
        assert_eq!(self.prime, other.prime, "mixed moduli");
        if self.is_zero() || other.is_zero() {
            return RPoly::zero(self.prime);
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![RingElem::zero(self.prime); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        RPoly::from_coeffs(self.prime, coeffs)
    }

    pub fn scale(&self, c: &RingElem) -> RPoly {
        self.mul(&RPoly::constant(c.clone()))
    }

    pub fn pow(&self, k: u64) -> RPoly {
        let mut acc = RPoly::constant(RingElem::one(self.prime));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Image in F_p[t] under the quotient by the maximal ideal: each
    /// coefficient maps to its constant term.
    pub fn reduce_mod_m(&self) -> FpPoly {
        FpPoly::from_coeffs(
            self.prime,
            self.coeffs.iter().map(|c| c.constant().value()).collect(),
        )
    }

    /// Image in the quotient by the ideal generated by all positive rational
    /// powers of the variables outside `keep`.
    pub fn kill_variables(&self, keep: &BTreeSet<u32>) -> RPoly {
        RPoly::from_coeffs(
            self.prime,
            self.coeffs.iter().map(|c| c.kill_variables(keep)).collect(),
        )
    }

    /// Largest degree with a unit coefficient; `None` when every coefficient
    /// lies in the maximal ideal.
    pub fn unit_coeff_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .find(|(_, c)| c.is_unit())
            .map(|(i, _)| i)
    }

    /// A polynomial is a unit of R[t] iff its constant coefficient is a unit
    /// and every higher coefficient is nilpotent.
    pub fn is_unit(&self) -> bool {
        !self.is_zero()
            && self.coeffs[0].is_unit()
            && self.coeffs[1..].iter().all(RingElem::in_maximal_ideal)
    }

    /// Every coefficient in the maximal ideal.
    pub fn in_m(&self) -> bool {
        self.coeffs.iter().all(RingElem::in_maximal_ideal)
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for c in &self.coeffs {
            out.append(&mut c.vars());
        }
        out
    }

    pub fn denominator_lcm(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(1u64, |acc, c| num::integer::lcm(acc, c.denominator_lcm()))
    }

    /// Global minimal potential over all coefficients (units count as
    /// potential 0), together with the largest degree attaining it.
    pub fn min_potential(&self) -> Option<(Exponent, usize)> {
        let mut best: Option<(Exponent, usize)> = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            let Some(m) = c.min_potential() else { continue };
            best = Some(match best.take() {
                Some((bm, bj)) if m > bm => (bm, bj),
                Some((bm, _)) if m == bm => (bm, i),
                _ => (m, i),
            });
        }
        best
    }

    /// Quotient and remainder by a divisor whose leading coefficient is 1.
    pub fn divrem_monic(&self, divisor: &RPoly) -> (RPoly, RPoly) {
        let d = divisor.degree().expect("divisor must be nonzero");
        assert!(
            divisor.coeff(d) == RingElem::one(self.prime),
            "divisor must be monic"
        );
        let mut rem = self.clone();
        let mut quot = vec![RingElem::zero(self.prime); self.coeffs.len()];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let lead = rem.coeff(rd);
            quot[rd - d] = quot[rd - d].add(&lead);
            rem = rem.sub(&RPoly::term(lead, rd - d).mul(divisor));
        }
        (RPoly::from_coeffs(self.prime, quot), rem)
    }
}

/// The surviving product monomial of the two tie-broken minimal-potential
/// monomials, with its location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurviveWitness {
    pub j: usize,
    pub j_prime: usize,
    pub z1: Monomial,
    pub z2: Monomial,
    pub product_monomial: Monomial,
    pub total_potential: Exponent,
}

/// Locates the witness monomial of `f * g`: for each input, the minimal
/// potential is attained at a maximal degree j, the tie-broken monomial z is
/// selected there, and z1 * z2 is checked to appear with nonzero coefficient
/// at degree j + j'.
pub fn survive_witness(f: &RPoly, g: &RPoly) -> Result<SurviveWitness, PolyError> {
    let product = f.mul(g);
    if product.is_zero() {
        return Err(PolyError::ZeroProduct);
    }
    let (_, j) = f.min_potential().expect("nonzero factor");
    let (_, j_prime) = g.min_potential().expect("nonzero factor");
    let (m1, z1) = f.coeff(j).min_potential_witness().expect("nonzero coeff");
    let (m2, z2) = g
        .coeff(j_prime)
        .min_potential_witness()
        .expect("nonzero coeff");
    let product_monomial = z1.mul(&z2).expect("witness product survives truncation");
    let total_potential = m1.plus(&m2);

    let target = product.coeff(j + j_prime);
    let survives = if product_monomial.is_one() {
        target.constant().value() != 0
    } else {
        target.terms().any(|(m, _)| *m == product_monomial)
    };
    assert!(survives, "witness monomial cancelled unexpectedly");
    Ok(SurviveWitness {
        j,
        j_prime,
        z1,
        z2,
        product_monomial,
        total_potential,
    })
}

impl fmt::Display for RPoly {
    /// Ascending degree with parenthesized coefficients:
    /// `(x1^(1/2)) + (x2 + 1)t + (x3)t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}
