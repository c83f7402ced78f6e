//! Canonical-form arithmetic in the truncated quotient ring R.
//!
//! Elements are finite F_p-linear combinations of monomials of potential at
//! most 1 plus a constant term. Truncated monomials are dropped at
//! construction time, so structural equality is ring equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::BigUint;
use thiserror::Error;

use crate::exponent::Exponent;
use crate::monomial::Monomial;
use crate::scalar::{FieldScalar, Prime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("zero input")]
    ZeroInput,
    #[error("unit input")]
    UnitInput,
}

/// An element of R in canonical form: a constant plus finitely many terms
/// with nonzero coefficients on monomials of potential in (0, 1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElem {
    constant: FieldScalar,
    terms: BTreeMap<Monomial, FieldScalar>,
}

impl RingElem {
    pub fn zero(p: Prime) -> RingElem {
        RingElem {
            constant: FieldScalar::zero(p),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(p: Prime) -> RingElem {
        RingElem::scalar(FieldScalar::one(p))
    }

    pub fn scalar(c: FieldScalar) -> RingElem {
        RingElem {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    /// Single variable with exponent 1.
    pub fn var(i: u32, p: Prime) -> RingElem {
        RingElem::from_monomial(Monomial::var(i), FieldScalar::one(p))
    }

    pub fn from_monomial(m: Monomial, c: FieldScalar) -> RingElem {
        let mut e = RingElem::zero(c.modulus());
        e.add_term(m, c);
        e
    }

    /// Adds `c * m`, truncating monomials of potential above 1 and merging
    /// coefficients mod p.
    pub fn add_term(&mut self, m: Monomial, c: FieldScalar) {
        assert_eq!(self.prime(), c.modulus(), "mixed moduli");
        if c.is_zero() {
            return;
        }
        if m.is_one() {
            self.constant = self.constant.add(c);
            return;
        }
        if m.potential().exceeds_one() {
            return;
        }
        let merged = match self.terms.remove(&m) {
            Some(old) => old.add(c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(m, merged);
        }
    }

    pub fn prime(&self) -> Prime {
        self.constant.modulus()
    }

    pub fn constant(&self) -> FieldScalar {
        self.constant
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldScalar)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    /// By the unit/nilpotent dichotomy, an element is a unit exactly when its
    /// constant term is nonzero.
    pub fn is_unit(&self) -> bool {
        !self.constant.is_zero()
    }

    /// Membership in the maximal ideal generated by all positive-potential
    /// monomials; equivalent to being nilpotent.
    pub fn in_maximal_ideal(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        let mut out = self.clone();
        out.constant = out.constant.add(other.constant);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> RingElem {
        let mut out = RingElem::scalar(self.constant.neg());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElem) -> RingElem {
        assert_eq!(self.prime(), other.prime(), "mixed moduli");
        let mut out = RingElem::scalar(self.constant.mul(other.constant));
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(other.constant));
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.mul(self.constant));
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(m) = ma.mul(mb) {
                    out.add_term(m, ca.mul(*cb));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: FieldScalar) -> RingElem {
        self.mul(&RingElem::scalar(c))
    }

    pub fn pow(&self, k: u64) -> RingElem {
        let mut acc = RingElem::one(self.prime());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// a^p computed termwise; cross terms carry coefficient p = 0.
    pub fn frobenius(&self) -> RingElem {
        let p = self.prime().value();
        let mut out = RingElem::scalar(self.constant.frobenius());
        for (m, c) in &self.terms {
            if let Some(mp) = m.pow(p) {
                out.add_term(mp, c.frobenius());
            }
        }
        out
    }

    /// Inverse of a unit, by the finite geometric series over the nilpotent
    /// part.
    pub fn inverse(&self) -> Result<RingElem, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotAUnit);
        }
        let u_inv = RingElem::scalar(self.constant.inverse());
        let nil = self.sub(&RingElem::scalar(self.constant));
        let x = nil.mul(&u_inv).neg();
        let mut sum = RingElem::one(self.prime());
        let mut term = RingElem::one(self.prime());
        loop {
            term = term.mul(&x);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
        }
        let inv = u_inv.mul(&sum);
        debug_assert!(self.mul(&inv) == RingElem::one(self.prime()));
        Ok(inv)
    }

    /// Smallest potential among the stored terms; `None` for elements with
    /// no terms.
    pub fn min_term_potential(&self) -> Option<Exponent> {
        // Terms are deglex-sorted, so the first key has minimal potential.
        self.terms.keys().next().map(|m| m.potential())
    }

    /// Minimal potential counting a nonzero constant as the potential-0
    /// monomial 1.
    pub fn min_potential(&self) -> Option<Exponent> {
        if self.is_unit() {
            Some(Exponent::zero())
        } else {
            self.min_term_potential()
        }
    }

    /// The minimal potential together with its tie-broken witness monomial:
    /// among the minimal-potential monomials, exponents are maximized
    /// variable by variable in ascending index order until unique. For
    /// elements with a unit part the witness is the constant monomial 1.
    pub fn min_potential_witness(&self) -> Result<(Exponent, Monomial), RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroInput);
        }
        if self.is_unit() {
            return Ok((Exponent::zero(), Monomial::one()));
        }
        // Sequential exponent maximization picks the deglex-largest among the
        // equal-potential candidates, i.e. the last key in the minimal group.
        let min = self.min_term_potential().expect("nonzero nonunit has terms");
        let witness = self
            .terms
            .keys()
            .take_while(|m| m.potential() == min)
            .last()
            .expect("minimal group is nonempty")
            .clone();
        Ok((min, witness))
    }

    pub fn nil_certificate(&self) -> Result<NilCertificate, RingError> {
        if self.is_zero() || self.is_unit() {
            return Err(RingError::NotNilpotent);
        }
        let p = self.prime().value();
        let min_potential = self.min_term_potential().expect("nonunit has terms");

        // Minimal N with p^N * m > 1, i.e. bound * num > den.
        let mut bound = BigUint::from(1u32);
        let mut n = 0u32;
        let num = min_potential.numer().to_biguint().expect("nonnegative");
        let den = min_potential.denom().to_biguint().expect("positive");
        while &bound * &num <= den {
            bound *= BigUint::from(p);
            n += 1;
        }

        // a^(p^N) = 0, checked by N applications of the termwise Frobenius.
        let mut fr = self.clone();
        for _ in 0..n {
            fr = fr.frobenius();
        }
        assert!(fr.is_zero(), "Frobenius bound check failed");

        // Exact index by iterated multiplication.
        let mut pow = self.clone();
        let mut exact_index = 1u64;
        while !pow.is_zero() {
            pow = pow.mul(self);
            exact_index += 1;
        }
        assert!(BigUint::from(exact_index) <= bound);
        Ok(NilCertificate {
            min_potential,
            n,
            bound,
            exact_index,
        })
    }

    /// Termwise p-th root: the identity on scalars, exponents divided by p.
    /// The p-th power of the result is exactly `self`.
    pub fn proot(&self) -> Result<RingElem, RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroInput);
        }
        let p = self.prime().value();
        let mut out = RingElem::scalar(self.constant.proot());
        for (m, c) in &self.terms {
            out.add_term(m.proot(p), c.proot());
        }
        debug_assert!(out.pow(p) == *self);
        Ok(out)
    }

    /// The chain a, a^(1/p), a^(1/p^2), ... of length k+1; each entry is the
    /// p-th power of the next, with strictly decreasing minimal potential.
    pub fn divisor_chain(&self, k: u64) -> Result<Vec<RingElem>, RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroInput);
        }
        if self.is_unit() {
            return Err(RingError::UnitInput);
        }
        let mut chain = vec![self.clone()];
        for _ in 0..k {
            let next = chain.last().expect("nonempty").proot()?;
            chain.push(next);
        }
        Ok(chain)
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            out.extend(m.vars());
        }
        out
    }

    /// lcm of the exponent denominators over all terms (1 for constants).
    pub fn denominator_lcm(&self) -> u64 {
        self.terms
            .keys()
            .fold(1u64, |acc, m| num::integer::lcm(acc, m.denominator_lcm()))
    }

    /// Deletes every term containing a variable outside `keep`.
    pub fn kill_variables(&self, keep: &BTreeSet<u32>) -> RingElem {
        let mut out = RingElem::scalar(self.constant);
        for (m, c) in &self.terms {
            if !m.contains_any_var_outside(keep) {
                out.add_term(m.clone(), *c);
            }
        }
        out
    }
}

/// Replayable evidence of nilpotency: the minimal term potential m, the
/// minimal N with p^N * m > 1, the bound p^N itself, and the exact
/// nilpotency index found by iterated multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilCertificate {
    pub min_potential: Exponent,
    pub n: u32,
    pub bound: BigUint,
    pub exact_index: u64,
}

impl NilCertificate {
    /// The lemma's estimate: the exact index never exceeds p^N.
    pub fn index_within_bound(&self) -> bool {
        BigUint::from(self.exact_index) <= self.bound
    }
}

impl fmt::Display for RingElem {
    /// Terms in descending deglex order, constant last: `x1 + 2*x2^(1/2) + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.value() == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        if !self.constant.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}
