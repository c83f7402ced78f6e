//! Finite truncated subrings A(vars, d, p): the F_p-span of monomials over a
//! fixed variable set with exponents in (1/d)Z and potential at most 1.
//!
//! These are the spaces every exhaustive search and every certificate is
//! scoped to. Elements are handled both as `RingElem`s and as dense
//! coefficient vectors over the deglex-sorted monomial basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::exponent::Exponent;
use crate::monomial::Monomial;
use crate::ring::RingElem;
use crate::rpoly::RPoly;
use crate::scalar::{FieldScalar, Prime};

/// Denotes the subring spanned by monomials over `variables` with exponents
/// that are positive multiples of `1/denominator`, potential at most 1. Its
/// maximal ideal is nilpotent of index at most `denominator + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubringSpec {
    pub p: Prime,
    pub variables: BTreeSet<u32>,
    pub denominator: u64,
}

impl SubringSpec {
    pub fn new(p: Prime, variables: BTreeSet<u32>, denominator: u64) -> SubringSpec {
        assert!(denominator >= 1);
        SubringSpec {
            p,
            variables,
            denominator,
        }
    }
}

impl fmt::Display for SubringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.variables.iter().map(|v| format!("x{v}")).collect();
        write!(
            f,
            "A(p={}, vars={{{}}}, d={})",
            self.p,
            vars.join(","),
            self.denominator
        )
    }
}

/// The materialized basis of a subring: deglex-ascending monomials (index 0
/// is the monomial 1), a multiplication table, and the potentials.
pub struct SubringBasis {
    spec: SubringSpec,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    /// `mult[a][b]` is the basis index of the product, `None` if truncated.
    mult: Vec<Vec<Option<usize>>>,
    potentials: Vec<Exponent>,
}

impl SubringBasis {
    pub fn build(spec: &SubringSpec) -> SubringBasis {
        let vars: Vec<u32> = spec.variables.iter().copied().collect();
        let d = spec.denominator;
        let mut monomials = Vec::new();
        let mut stack: Vec<(usize, Vec<(u32, u64)>, u64)> = vec![(0, Vec::new(), 0)];
        while let Some((i, partial, used)) = stack.pop() {
            if i == vars.len() {
                monomials.push(Monomial::from_pairs(
                    partial
                        .iter()
                        .map(|(v, n)| (*v, Exponent::new(*n, d))),
                ));
                continue;
            }
            for n in 0..=(d - used) {
                let mut next = partial.clone();
                if n > 0 {
                    next.push((vars[i], n));
                }
                stack.push((i + 1, next, used + n));
            }
        }
        monomials.sort();
        let index: BTreeMap<Monomial, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mult = monomials
            .iter()
            .map(|a| {
                monomials
                    .iter()
                    .map(|b| a.mul(b).map(|m| index[&m]))
                    .collect()
            })
            .collect();
        let potentials = monomials.iter().map(Monomial::potential).collect();
        SubringBasis {
            spec: spec.clone(),
            monomials,
            index,
            mult,
            potentials,
        }
    }

    pub fn spec(&self) -> &SubringSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn potential(&self, i: usize) -> &Exponent {
        &self.potentials[i]
    }

    /// Number of elements p^k, or `None` on overflow.
    pub fn element_count(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..self.len() {
            acc = acc.checked_mul(self.spec.p.value())?;
        }
        Some(acc)
    }

    pub fn exceeds(&self, cap: u64) -> bool {
        match self.element_count() {
            Some(n) => n > cap,
            None => true,
        }
    }

    /// Dense coefficient vector of an element, or `None` if it lies outside
    /// the subring.
    pub fn elem_to_vec(&self, e: &RingElem) -> Option<Vec<u64>> {
        let mut vec = vec![0u64; self.len()];
        vec[0] = e.constant().value();
        for (m, c) in e.terms() {
            let i = *self.index.get(m)?;
            vec[i] = c.value();
        }
        Some(vec)
    }

    pub fn vec_to_elem(&self, vec: &[u64]) -> RingElem {
        let p = self.spec.p;
        let mut out = RingElem::scalar(FieldScalar::new(vec[0], p));
        for (i, c) in vec.iter().enumerate().skip(1) {
            if *c != 0 {
                out.add_term(self.monomials[i].clone(), FieldScalar::new(*c, p));
            }
        }
        out
    }

    /// Coefficient vectors of a polynomial padded to `len` coefficients, or
    /// `None` if any coefficient lies outside the subring.
    pub fn poly_to_vecs(&self, f: &RPoly, len: usize) -> Option<Vec<Vec<u64>>> {
        assert!(len > f.degree().map_or(0, |d| d));
        (0..len).map(|i| self.elem_to_vec(&f.coeff(i))).collect()
    }

    pub fn vecs_to_poly(&self, vecs: &[Vec<u64>]) -> RPoly {
        RPoly::from_coeffs(
            self.spec.p,
            vecs.iter().map(|v| self.vec_to_elem(v)).collect(),
        )
    }

    pub fn contains_poly(&self, f: &RPoly) -> bool {
        f.coeffs().iter().all(|c| self.elem_to_vec(c).is_some())
    }

    pub fn mul_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.spec.p.value();
        let mut out = vec![0u64; self.len()];
        for (i, ca) in a.iter().enumerate() {
            if *ca == 0 {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if *cb == 0 {
                    continue;
                }
                if let Some(k) = self.mult[i][j] {
                    out[k] = (out[k] + ca * cb) % p;
                }
            }
        }
        out
    }

    /// The k x k matrix of multiplication by `a` (columns indexed by basis).
    pub fn mul_matrix(&self, a: &[u64]) -> Vec<Vec<u64>> {
        let p = self.spec.p.value();
        let k = self.len();
        let mut m = vec![vec![0u64; k]; k];
        for (i, ca) in a.iter().enumerate() {
            if *ca == 0 {
                continue;
            }
            for col in 0..k {
                if let Some(row) = self.mult[i][col] {
                    m[row][col] = (m[row][col] + ca) % p;
                }
            }
        }
        m
    }

    /// Minimal potential of the monomials supporting `vec` (basis order is
    /// deglex-ascending, so the first nonzero digit decides). `None` for the
    /// zero vector; potential 0 for vectors with a constant part.
    pub fn min_potential_of_vec(&self, vec: &[u64]) -> Option<&Exponent> {
        vec.iter()
            .position(|c| *c != 0)
            .map(|i| &self.potentials[i])
    }

    /// All elements in canonical order: digit counting over the basis, base
    /// p, with the constant digit varying fastest.
    pub fn iter_elements(&self) -> ElementIter<'_> {
        ElementIter {
            basis: self,
            digits: vec![0; self.len()],
            done: false,
        }
    }
}

pub struct ElementIter<'a> {
    basis: &'a SubringBasis,
    digits: Vec<u64>,
    done: bool,
}

impl<'a> Iterator for ElementIter<'a> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.digits.clone();
        let p = self.basis.spec.p.value();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < p {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}
