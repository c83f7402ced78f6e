//! Exhaustive, certificate-producing search over finite truncated subrings:
//! element enumeration, associateness scans, bounded factorization search,
//! and bounded strong-atom certification.
//!
//! Search scope. A factorization of f over any enlarged variable set
//! projects, by deleting every term containing a foreign variable, to a
//! factorization over the variables of f: the projection is a ring
//! homomorphism that preserves constants exactly, hence preserves
//! unit-coefficient structure and membership in the maximal ideal on both
//! sides. Searches therefore run over the variables of f at the refined
//! denominator; `fresh_variables` is recorded in certificates but cannot
//! change a verdict.
//!
//! Left factors are normalized to monic images (a factorization survives
//! scalar adjustment by a unit), and for each left candidate the right
//! factor is solved for exactly: multiplication by a fixed element is
//! F_p-linear, so the right side is a linear system, not a second
//! enumeration. Every hit is re-verified by full ring multiplication.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::exponent::Exponent;
use crate::fppoly::{monic_polys_of_degree, FpPoly};
use crate::hensel::ambient_subring;
use crate::linalg::{solve_affine, AffineSolution};
use crate::ring::RingElem;
use crate::rpoly::RPoly;
use crate::subring::{SubringBasis, SubringSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search space too large: {examined} candidates exceed the cap of {cap}")]
    TooLarge { examined: u64, cap: u64 },
    #[error("subject is zero or a unit, not a candidate atom")]
    NotACandidate,
    #[error("element lies outside the given subring")]
    OutsideSubring,
}

/// Bounds on a factorization search. Certificates record the budget so a
/// claim is never stronger than the search performed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_factor_degree: usize,
    pub fresh_variables: u32,
    pub refine_denominator: u64,
    pub max_candidates: u64,
}

impl SearchBudget {
    pub fn new(
        max_factor_degree: usize,
        fresh_variables: u32,
        refine_denominator: u64,
        max_candidates: u64,
    ) -> SearchBudget {
        assert!(refine_denominator >= 1);
        SearchBudget {
            max_factor_degree,
            fresh_variables,
            refine_denominator,
            max_candidates,
        }
    }
}

/// Constraint on the two sides of a sought factorization f = g * h.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitConstraint {
    /// Both factors nonunits of R[t].
    BothNonunit,
    /// Both factors with every coefficient in the maximal ideal.
    BothInM,
    /// g carries a unit coefficient (but is not a unit), h lies in M[t].
    UnitTimesM,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: Option<(RPoly, RPoly)>,
    pub enumerated: u64,
    pub space: SubringSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomVerdict {
    /// No factorization into two nonunits exists within the enumerated
    /// space. A bounded claim, not a statement about all of R[t].
    CertifiedWithinBudget,
    FactorFound(RPoly, RPoly),
    /// The budget was exhausted before the space could be covered.
    Uncertified,
}

/// Machine-checkable record of a bounded strong-atom certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomCertificate {
    pub subject: RPoly,
    pub budget: SearchBudget,
    /// The space actually searched (variables of the searched subject at the
    /// refined denominator).
    pub space: SubringSpec,
    pub verdict: AtomVerdict,
    pub enumerated: u64,
    /// When the subject was certified through its image under a variable
    /// deletion (the kernel is generated by nilpotents, so units lift), the
    /// image that was actually searched.
    pub reduced_subject: Option<RPoly>,
    pub replay_seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Associateness {
    StrongAssociate,
    AssociateOnly,
    NotAssociate,
}

/// Streams every element of the subring exactly once, in canonical order
/// (digit counting over the deglex-sorted basis, constant digit fastest).
pub fn enumerate_elements(
    spec: &SubringSpec,
    max_candidates: u64,
) -> Result<ElementStream, OracleError> {
    let basis = SubringBasis::build(spec);
    if basis.exceeds(max_candidates) {
        return Err(OracleError::TooLarge {
            examined: 0,
            cap: max_candidates,
        });
    }
    Ok(ElementStream {
        digits: vec![0; basis.len()],
        basis,
        done: false,
    })
}

pub struct ElementStream {
    basis: SubringBasis,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for ElementStream {
    type Item = RingElem;

    fn next(&mut self) -> Option<RingElem> {
        if self.done {
            return None;
        }
        let out = self.basis.vec_to_elem(&self.digits);
        let p = self.basis.spec().p.value();
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

/// Associateness by exhaustive scan: a unit-multiplier scan decides strong
/// associateness, full multiplier scans in both directions decide mutual
/// divisibility.
pub fn are_associate(
    a: &RingElem,
    b: &RingElem,
    spec: &SubringSpec,
    max_candidates: u64,
) -> Result<Associateness, OracleError> {
    let basis = SubringBasis::build(spec);
    if basis.exceeds(max_candidates) {
        return Err(OracleError::TooLarge {
            examined: 0,
            cap: max_candidates,
        });
    }
    let va = basis.elem_to_vec(a).ok_or(OracleError::OutsideSubring)?;
    let vb = basis.elem_to_vec(b).ok_or(OracleError::OutsideSubring)?;

    let ma = basis.mul_matrix(&va);
    let mb = basis.mul_matrix(&vb);
    let apply = |m: &Vec<Vec<u64>>, x: &[u64]| -> Vec<u64> {
        let p = spec.p.value();
        m.iter()
            .map(|row| row.iter().zip(x).fold(0u64, |acc, (c, v)| (acc + c * v) % p))
            .collect()
    };

    let mut divides_ab = false; // some c with c * a = b
    let mut divides_ba = false; // some c with c * b = a
    for c in basis.iter_elements() {
        // Keep scanning the a-side even after a nonunit multiplier is found:
        // a unit multiplier may come later and upgrades the verdict.
        if apply(&ma, &c) == vb {
            if c[0] != 0 {
                return Ok(Associateness::StrongAssociate);
            }
            divides_ab = true;
        }
        if !divides_ba && apply(&mb, &c) == va {
            divides_ba = true;
        }
    }
    if divides_ab && divides_ba {
        Ok(Associateness::AssociateOnly)
    } else {
        Ok(Associateness::NotAssociate)
    }
}

/// Searches for f = g * h meeting the constraint, over all coefficient
/// choices from the refined ambient subring and all degrees up to the
/// budget's bound, in canonical order. `found: None` with an `Ok` return is
/// an exhaustive-emptiness certificate for that space.
pub fn find_factorization(
    f: &RPoly,
    budget: &SearchBudget,
    constraint: SplitConstraint,
) -> Result<SearchOutcome, OracleError> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let spec = ambient_subring(f, 0, budget.refine_denominator).expect("nonzero");
    let mut search = Search::new(f, &spec, budget);
    let found = match constraint {
        SplitConstraint::BothNonunit => search.both_nonunit()?,
        SplitConstraint::BothInM => search.both_in_m()?,
        SplitConstraint::UnitTimesM => search.unit_times_m(None)?,
    };
    Ok(SearchOutcome {
        found,
        enumerated: search.enumerated,
        space: spec,
    })
}

/// Case-3 helper: a UnitTimesM search restricted to left factors whose
/// highest unit coefficient sits exactly at `unit_degree`.
pub(crate) fn find_unit_split_at_degree(
    f: &RPoly,
    budget: &SearchBudget,
    unit_degree: usize,
) -> Result<SearchOutcome, OracleError> {
    assert!(!f.is_zero());
    assert!(unit_degree >= 1);
    let spec = ambient_subring(f, 0, budget.refine_denominator).expect("nonzero");
    let mut search = Search::new(f, &spec, budget);
    let found = search.unit_times_m(Some(unit_degree))?;
    Ok(SearchOutcome {
        found,
        enumerated: search.enumerated,
        space: spec,
    })
}

/// Bounded strong-atom certification: an exhaustive BothNonunit search that
/// comes back empty.
pub fn certify_strong_atom(
    f: &RPoly,
    budget: &SearchBudget,
    seed: u64,
) -> Result<AtomCertificate, OracleError> {
    if f.is_zero() || f.is_unit() {
        return Err(OracleError::NotACandidate);
    }
    let outcome = find_factorization(f, budget, SplitConstraint::BothNonunit)?;
    Ok(AtomCertificate {
        subject: f.clone(),
        budget: budget.clone(),
        space: outcome.space,
        verdict: match outcome.found {
            Some((g, h)) => AtomVerdict::FactorFound(g, h),
            None => AtomVerdict::CertifiedWithinBudget,
        },
        enumerated: outcome.enumerated,
        reduced_subject: None,
        replay_seed: seed,
    })
}

/// Certifies `f` through its image under deletion of all variables outside
/// `keep`. Any factorization of f maps to one of the image; the deleted
/// variables generate an ideal of nilpotents, so a unit image factor lifts
/// to a unit factor. A certified image therefore certifies f. If the image
/// search finds a factor (which says nothing about f), falls back to direct
/// certification.
pub fn certify_strong_atom_via_kill(
    f: &RPoly,
    keep: &BTreeSet<u32>,
    budget: &SearchBudget,
    seed: u64,
) -> Result<AtomCertificate, OracleError> {
    if f.is_zero() || f.is_unit() {
        return Err(OracleError::NotACandidate);
    }
    let image = f.kill_variables(keep);
    if image.is_zero() || image.is_unit() {
        return certify_strong_atom(f, budget, seed);
    }
    let inner = certify_strong_atom(&image, budget, seed)?;
    match inner.verdict {
        AtomVerdict::CertifiedWithinBudget => Ok(AtomCertificate {
            subject: f.clone(),
            budget: budget.clone(),
            space: inner.space,
            verdict: AtomVerdict::CertifiedWithinBudget,
            enumerated: inner.enumerated,
            reduced_subject: Some(image),
            replay_seed: seed,
        }),
        _ => certify_strong_atom(f, budget, seed),
    }
}

struct Search<'a> {
    f: &'a RPoly,
    basis: SubringBasis,
    budget: &'a SearchBudget,
    enumerated: u64,
    f_min: Option<Exponent>,
    /// Potential floor for nonzero M-elements in this subring, 1/d.
    m_floor: Exponent,
}

impl<'a> Search<'a> {
    fn new(f: &'a RPoly, spec: &SubringSpec, budget: &'a SearchBudget) -> Search<'a> {
        Search {
            f,
            basis: SubringBasis::build(spec),
            budget,
            enumerated: 0,
            f_min: f.min_potential().map(|(m, _)| m),
            m_floor: Exponent::new(1, spec.denominator),
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.enumerated += 1;
        if self.enumerated > self.budget.max_candidates {
            Err(OracleError::TooLarge {
                examined: self.enumerated,
                cap: self.budget.max_candidates,
            })
        } else {
            Ok(())
        }
    }

    fn degrees_feasible(&self) -> bool {
        let deg_f = self.f.degree().expect("nonzero");
        deg_f <= 2 * self.budget.max_factor_degree
    }

    fn both_nonunit(&mut self) -> Result<Option<(RPoly, RPoly)>, OracleError> {
        if !self.degrees_feasible() {
            return Ok(None);
        }
        let f_bar = self.f.reduce_mod_m();
        if !f_bar.is_zero() {
            // Both images are forced to positive degree: the left image runs
            // over monic proper divisors, the right image is the cofactor
            // and makes h a nonunit automatically.
            let divisors = match f_bar.monic_proper_divisors() {
                Ok(d) => d,
                Err(_) => Vec::new(), // constant image: f is a unit, no splits
            };
            let images: Vec<FpPoly> = divisors
                .into_iter()
                .filter(|q| q.degree().expect("positive") <= self.budget.max_factor_degree)
                .collect();
            return self.image_side(&images, HSide::Any);
        }
        // f in M[t]: either g in M[t] (h then only needs to be a nonunit),
        // or g has a monic-normalized image of positive degree, forcing h
        // into M[t].
        if let Some(hit) = self.m_side(HSide::Nonunit)? {
            return Ok(Some(hit));
        }
        let images: Vec<FpPoly> = (1..=self.budget.max_factor_degree)
            .flat_map(|d| monic_polys_of_degree(self.f.prime(), d))
            .collect();
        self.image_side(&images, HSide::InM)
    }

    fn both_in_m(&mut self) -> Result<Option<(RPoly, RPoly)>, OracleError> {
        // A product of two M[t] polynomials lies in M[t].
        if !self.f.in_m() || !self.degrees_feasible() {
            return Ok(None);
        }
        self.m_side(HSide::InM)
    }

    fn unit_times_m(
        &mut self,
        unit_degree: Option<usize>,
    ) -> Result<Option<(RPoly, RPoly)>, OracleError> {
        if !self.degrees_feasible() {
            return Ok(None);
        }
        let degrees: Vec<usize> = match unit_degree {
            Some(u) => vec![u],
            None => (1..=self.budget.max_factor_degree).collect(),
        };
        for u in degrees {
            if u > self.budget.max_factor_degree {
                continue;
            }
            let images = monic_polys_of_degree(self.f.prime(), u);
            if let Some(hit) = self.image_side(&images, HSide::InM)? {
                return Ok(Some(hit));
            }
        }
        Ok(None)
    }

    /// Left factors from M[t]: all nonzero coefficient tuples over the
    /// M-part of the basis, constant coefficient fastest.
    fn m_side(&mut self, h_side: HSide) -> Result<Option<(RPoly, RPoly)>, OracleError> {
        let k = self.basis.len();
        let m_dim = k - 1;
        let positions = self.budget.max_factor_degree + 1;
        let p = self.basis.spec().p.value();
        let mut m_count: u64 = 1;
        for _ in 0..m_dim {
            m_count = match m_count.checked_mul(p) {
                Some(n) => n,
                None => u64::MAX,
            };
        }

        let mut digits: Vec<u64> = vec![0; positions]; // M-element indices
        loop {
            // Advance the odometer; index 0 is the all-zero left factor.
            let mut i = 0;
            loop {
                if i == positions {
                    return Ok(None);
                }
                digits[i] += 1;
                if digits[i] < m_count {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            self.tick()?;

            let g_vecs: Vec<Vec<u64>> = digits
                .iter()
                .map(|ix| m_index_to_vec(*ix, k, p))
                .collect();
            // Survive-lemma filter: minimal potentials add along products.
            let g_min = g_vecs
                .iter()
                .filter_map(|v| self.basis.min_potential_of_vec(v))
                .min();
            let Some(g_min) = g_min else { continue };
            let Some(f_min) = &self.f_min else { continue };
            let Some(h_min) = f_min.minus(g_min) else { continue };
            if h_side == HSide::InM && h_min < self.m_floor {
                continue;
            }
            if let Some(hit) = self.try_candidate(&g_vecs, h_side)? {
                return Ok(Some(hit));
            }
        }
    }

    /// Left factors with a prescribed monic image: lift each image and add
    /// every M[t] perturbation up to the degree bound.
    fn image_side(
        &mut self,
        images: &[FpPoly],
        h_side: HSide,
    ) -> Result<Option<(RPoly, RPoly)>, OracleError> {
        let k = self.basis.len();
        let positions = self.budget.max_factor_degree + 1;
        let p = self.basis.spec().p.value();
        let mut m_count: u64 = 1;
        for _ in 0..(k - 1) {
            m_count = match m_count.checked_mul(p) {
                Some(n) => n,
                None => u64::MAX,
            };
        }

        for image in images {
            let base: Vec<Vec<u64>> = (0..positions)
                .map(|i| {
                    let mut v = vec![0u64; k];
                    v[0] = image.coeff(i);
                    v
                })
                .collect();
            let mut digits: Vec<u64> = vec![0; positions];
            'outer: loop {
                self.tick()?;
                let mut g_vecs = base.clone();
                for (pos, ix) in digits.iter().enumerate() {
                    let delta = m_index_to_vec(*ix, k, p);
                    for (a, b) in g_vecs[pos].iter_mut().zip(&delta) {
                        *a = (*a + b) % p;
                    }
                }
                if let Some(hit) = self.try_candidate(&g_vecs, h_side)? {
                    return Ok(Some(hit));
                }
                let mut i = 0;
                loop {
                    if i == positions {
                        break 'outer;
                    }
                    digits[i] += 1;
                    if digits[i] < m_count {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
            }
        }
        Ok(None)
    }

    /// Solves g * h = f for h and checks the h-side constraint; verifies any
    /// hit by full ring multiplication.
    fn try_candidate(
        &mut self,
        g_vecs: &[Vec<u64>],
        h_side: HSide,
    ) -> Result<Option<(RPoly, RPoly)>, OracleError> {
        let k = self.basis.len();
        let p = self.basis.spec().p;
        let h_positions = self.budget.max_factor_degree + 1;
        let out_len = g_vecs.len() + h_positions - 1;
        if self.f.degree().expect("nonzero") >= out_len {
            return Ok(None);
        }
        let f_vecs = self
            .basis
            .poly_to_vecs(self.f, out_len)
            .expect("f lies in its ambient subring");

        let g_mats: Vec<Vec<Vec<u64>>> = g_vecs.iter().map(|v| self.basis.mul_matrix(v)).collect();
        let width = h_positions * k;
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(out_len * k + h_positions);
        let mut rhs: Vec<u64> = Vec::with_capacity(out_len * k + h_positions);
        for s in 0..out_len {
            for b in 0..k {
                let mut row = vec![0u64; width];
                for (i, mat) in g_mats.iter().enumerate() {
                    if i > s || s - i >= h_positions {
                        continue;
                    }
                    let j = s - i;
                    for c in 0..k {
                        row[j * k + c] = (row[j * k + c] + mat[b][c]) % p.value();
                    }
                }
                rows.push(row);
                rhs.push(f_vecs[s][b]);
            }
        }
        if h_side == HSide::InM {
            for j in 0..h_positions {
                let mut row = vec![0u64; width];
                row[j * k] = 1;
                rows.push(row);
                rhs.push(0);
            }
        }
        let Some(solution) = solve_affine(p, rows, rhs, width) else {
            return Ok(None);
        };

        let h_digits = match h_side {
            HSide::Any | HSide::InM => Some(solution.particular.clone()),
            HSide::Nonunit => pick_nonunit_member(&solution, k, h_positions, p.value()),
        };
        let Some(h_digits) = h_digits else {
            return Ok(None);
        };
        let h_vecs: Vec<Vec<u64>> = h_digits.chunks(k).map(|c| c.to_vec()).collect();
        let g = self.basis.vecs_to_poly(g_vecs);
        let h = self.basis.vecs_to_poly(&h_vecs);
        // The solver is exact, but the certificate-bearing check is a full
        // remultiplication.
        assert_eq!(g.mul(&h), *self.f, "solver produced a non-factorization");
        debug_assert!(match h_side {
            HSide::Any => !h.is_unit(),
            HSide::InM => h.in_m(),
            HSide::Nonunit => !h.is_unit(),
        });
        Ok(Some((g, h)))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum HSide {
    /// No explicit constraint: the image structure already forces h to be a
    /// nonunit.
    Any,
    /// h in M[t], imposed as linear rows.
    InM,
    /// h an arbitrary nonunit, located inside the affine solution set.
    Nonunit,
}

/// Expands an index over the M-part of the basis (all digits except the
/// constant) into a coefficient vector.
fn m_index_to_vec(mut ix: u64, k: usize, p: u64) -> Vec<u64> {
    let mut v = vec![0u64; k];
    for slot in v.iter_mut().take(k).skip(1) {
        *slot = ix % p;
        ix /= p;
    }
    v
}

/// A nonunit member of the solution set: constant digit of h_0 zero, or a
/// unit constant somewhere above degree 0.
fn pick_nonunit_member(
    solution: &AffineSolution,
    k: usize,
    positions: usize,
    p: u64,
) -> Option<Vec<u64>> {
    if let Some(member) = solution.member_with_zero_coord(0, p) {
        return Some(member);
    }
    for j in 1..positions {
        if let Some(member) = solution.member_with_nonzero_coord(j * k, p) {
            return Some(member);
        }
    }
    None
}
