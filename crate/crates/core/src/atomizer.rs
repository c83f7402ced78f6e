//! Strong-atom factorization in R[t] with verified length bounds.
//!
//! A nonzero nonunit f is dispatched on three cases: a unit coefficient
//! somewhere (factor the image in F_p[t] and lift), a split into two factors
//! with all coefficients in the maximal ideal (pad both sides with fresh
//! variables), or neither (bounded mixed search). Factor counts are bounded
//! by the highest unit-coefficient degree in the first case and by
//! deg(f) + 2 otherwise. Every emitted factor is re-verified and carries a
//! bounded atom certificate.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::fppoly::FpPoly;
use crate::hensel::{ambient_subring, hensel_split};
use crate::oracle::{
    certify_strong_atom, certify_strong_atom_via_kill, find_factorization,
    find_unit_split_at_degree, AtomCertificate, AtomVerdict, OracleError, SearchBudget,
    SplitConstraint,
};
use crate::ring::RingElem;
use crate::rpoly::RPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AtomizeError {
    #[error("input is zero or a unit")]
    ZeroOrUnit,
    #[error("input has no unit coefficient")]
    NoUnitCoeff,
    #[error("input is not in M[t]")]
    NotInM,
    #[error("search space too large for the budget")]
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// A unit coefficient exists: at most n factors, n its highest degree.
    UnitCoeff,
    /// f in M[t] with a split into two M[t] factors: exactly two padded
    /// strong atoms.
    MSplit,
    /// f in M[t] without such a split: at most deg(f) + 2 factors.
    MNoSplit,
    AlreadyUnit,
    Zero,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::UnitCoeff => "UnitCoeff",
            CaseTag::MSplit => "MSplit",
            CaseTag::MNoSplit => "MNoSplit",
            CaseTag::AlreadyUnit => "AlreadyUnit",
            CaseTag::Zero => "Zero",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Atomization {
    pub input: RPoly,
    pub case: CaseTag,
    pub factors: Vec<RPoly>,
    pub bound: usize,
    pub certificates: Vec<AtomCertificate>,
    pub budget: SearchBudget,
    pub replay_seed: u64,
}

/// A factor together with how it should be certified.
#[derive(Clone)]
enum Emitted {
    Plain(RPoly),
    /// A padded factor g + yt + z; certification goes through the image
    /// under deletion of everything but {y, z}.
    Padded { factor: RPoly, keep: BTreeSet<u32> },
}

impl Emitted {
    fn poly(&self) -> &RPoly {
        match self {
            Emitted::Plain(f) => f,
            Emitted::Padded { factor, .. } => factor,
        }
    }
}

pub fn atomize(f: &RPoly, budget: &SearchBudget, seed: u64) -> Result<Atomization, AtomizeError> {
    if f.is_zero() || f.is_unit() {
        return Err(AtomizeError::ZeroOrUnit);
    }
    let (case, emitted, bound) = if f.unit_coeff_degree().is_some() {
        let n = f.unit_coeff_degree().expect("checked");
        let factors = case1_emit(f, budget)?;
        debug_assert!(factors.len() <= n.max(1));
        (CaseTag::UnitCoeff, factors, n)
    } else {
        let in_m_split = match find_factorization(f, budget, SplitConstraint::BothInM) {
            Ok(out) => out.found,
            Err(OracleError::TooLarge { .. }) => None,
            Err(_) => unreachable!("BothInM search cannot reject its input"),
        };
        match in_m_split {
            Some((g, h)) => {
                let (pair, keep) = pad_with_fresh(&g, &h);
                let emitted = vec![
                    Emitted::Padded {
                        factor: pair.0,
                        keep: keep.clone(),
                    },
                    Emitted::Padded {
                        factor: pair.1,
                        keep,
                    },
                ];
                (CaseTag::MSplit, emitted, 2)
            }
            None => {
                let deg = f.degree().expect("nonzero");
                // A blown budget degrades to a partial result: the input is
                // emitted whole and certification flags it.
                let factors = match case3_emit(f, budget) {
                    Ok(fs) => fs,
                    Err(AtomizeError::BudgetExceeded) => vec![Emitted::Plain(f.clone())],
                    Err(e) => return Err(e),
                };
                debug_assert!(factors.len() <= deg + 2);
                (CaseTag::MNoSplit, factors, deg + 2)
            }
        }
    };

    // Soundness anchor: the factors must reproduce the input bit-exactly.
    let product = emitted
        .iter()
        .fold(RPoly::constant(RingElem::one(f.prime())), |acc, e| {
            acc.mul(e.poly())
        });
    debug_assert_eq!(product, *f, "factor product mismatch");

    // Factors are certified without fresh variables: a factorization over an
    // enlarged variable set projects onto one over the factor's own
    // variables, so fresh variables cannot change the verdict.
    let cert_budget = SearchBudget {
        fresh_variables: 0,
        ..budget.clone()
    };
    let mut memo: Vec<(RPoly, bool, AtomCertificate)> = Vec::new();
    let mut certificates = Vec::with_capacity(emitted.len());
    for e in &emitted {
        let padded = matches!(e, Emitted::Padded { .. });
        if let Some((_, _, cert)) = memo
            .iter()
            .find(|(f0, p0, _)| f0 == e.poly() && *p0 == padded)
        {
            certificates.push(cert.clone());
            continue;
        }
        let result = match e {
            Emitted::Plain(factor) => certify_strong_atom(factor, &cert_budget, seed),
            Emitted::Padded { factor, keep } => {
                certify_strong_atom_via_kill(factor, keep, &cert_budget, seed)
            }
        };
        let cert = match result {
            Ok(cert) => cert,
            Err(OracleError::TooLarge { examined, .. }) => AtomCertificate {
                subject: e.poly().clone(),
                budget: cert_budget.clone(),
                space: ambient_subring(e.poly(), 0, cert_budget.refine_denominator)
                    .expect("factor is nonzero"),
                verdict: AtomVerdict::Uncertified,
                enumerated: examined,
                reduced_subject: None,
                replay_seed: seed,
            },
            Err(e) => unreachable!("emitted factors are nonzero nonunits: {e}"),
        };
        memo.push((e.poly().clone(), padded, cert.clone()));
        certificates.push(cert);
    }

    Ok(Atomization {
        input: f.clone(),
        case,
        factors: emitted.into_iter().map(|e| e.poly().clone()).collect(),
        bound,
        certificates,
        budget: budget.clone(),
        replay_seed: seed,
    })
}

/// Case 1: f carries a unit coefficient at some degree n >= 1. The image in
/// F_p[t] factors completely; coprime groupings lift exactly, prime-power
/// images fall to the characteristic-p pattern or to bounded search.
pub fn case1_unit_coeff(f: &RPoly, budget: &SearchBudget) -> Result<Vec<RPoly>, AtomizeError> {
    Ok(case1_emit(f, budget)?
        .into_iter()
        .map(|e| e.poly().clone())
        .collect())
}

fn case1_emit(f: &RPoly, budget: &SearchBudget) -> Result<Vec<Emitted>, AtomizeError> {
    if f.unit_coeff_degree().map_or(true, |n| n == 0) {
        return Err(AtomizeError::NoUnitCoeff);
    }
    let mut out = Vec::new();
    case1_rec(f, budget, &mut out);
    Ok(out)
}

fn case1_rec(f: &RPoly, budget: &SearchBudget, out: &mut Vec<Emitted>) {
    let f_bar = f.reduce_mod_m();
    let (_, powers) = f_bar.factor().expect("image has positive degree");

    if powers.len() >= 2 {
        // Split off the first prime power; the cofactor is coprime to it.
        let (q, e) = &powers[0];
        let u_bar = q.pow(*e);
        let v_bar = powers[1..]
            .iter()
            .fold(FpPoly::one(f.prime()), |acc, (r, m)| acc.mul(&r.pow(*m)));
        let spec = ambient_subring(f, 0, 1).expect("nonzero");
        let (u, v) = hensel_split(f, &u_bar, &v_bar, &spec)
            .expect("coprime image split lifts within the ambient subring");
        case1_rec(&u, budget, out);
        case1_rec(&v, budget, out);
        return;
    }

    let (_, e) = &powers[0];
    if *e == 1 {
        // Irreducible image: any two-nonunit split would force a
        // positive-degree split of the image.
        out.push(Emitted::Plain(f.clone()));
        return;
    }

    // Prime-power image. When the coefficient support sits on multiples of
    // p the polynomial is an exact p-th power of its termwise root.
    if let Some(root) = try_pth_root(f) {
        let p = f.prime().value();
        let mut inner = Vec::new();
        case1_rec(&root, budget, &mut inner);
        for _ in 0..p {
            out.extend(inner.iter().cloned());
        }
        return;
    }

    // Otherwise: bounded search for a two-nonunit split.
    match find_factorization(f, budget, SplitConstraint::BothNonunit) {
        Ok(outcome) => match outcome.found {
            Some((g, h)) => {
                case1_rec(&g, budget, out);
                case1_rec(&h, budget, out);
            }
            None => out.push(Emitted::Plain(f.clone())),
        },
        // Budget exhausted: emit unsplit; certification will flag it.
        Err(OracleError::TooLarge { .. }) => out.push(Emitted::Plain(f.clone())),
        Err(e) => unreachable!("search rejected a nonzero input: {e}"),
    }
}

/// The termwise p-th root when the coefficient support is compatible:
/// nonzero coefficients only at degrees divisible by p.
fn try_pth_root(f: &RPoly) -> Option<RPoly> {
    let p = f.prime().value() as usize;
    let deg = f.degree()?;
    for i in 0..=deg {
        if i % p != 0 && !f.coeff(i).is_zero() {
            return None;
        }
    }
    if deg % p != 0 {
        return None;
    }
    let coeffs: Vec<RingElem> = (0..=deg / p)
        .map(|j| {
            let c = f.coeff(j * p);
            if c.is_zero() {
                c
            } else {
                c.proot().expect("nonzero coefficient")
            }
        })
        .collect();
    let root = RPoly::from_coeffs(f.prime(), coeffs);
    assert_eq!(root.pow(p as u64), *f, "termwise root failed to re-power");
    Some(root)
}

/// Case 2: pads an M[t] x M[t] split with two fresh variables. The fresh
/// variables annihilate the maximal ideal and square to zero, so the product
/// is unchanged.
pub fn case2_pad(g: &RPoly, h: &RPoly) -> Result<(RPoly, RPoly), AtomizeError> {
    if !g.in_m() || !h.in_m() {
        return Err(AtomizeError::NotInM);
    }
    let (pair, _) = pad_with_fresh(g, h);
    Ok(pair)
}

fn pad_with_fresh(g: &RPoly, h: &RPoly) -> ((RPoly, RPoly), BTreeSet<u32>) {
    let p = g.prime();
    let mut used = g.vars();
    used.append(&mut h.vars());
    let mut fresh = Vec::new();
    let mut candidate = 1u32;
    while fresh.len() < 2 {
        if !used.contains(&candidate) {
            fresh.push(candidate);
        }
        candidate += 1;
    }
    let (y, z) = (fresh[0], fresh[1]);
    let pad = RPoly::from_coeffs(p, vec![RingElem::var(z, p), RingElem::var(y, p)]);
    let padded_g = g.add(&pad);
    let padded_h = h.add(&pad);
    debug_assert_eq!(padded_g.mul(&padded_h), g.mul(h));
    ((padded_g, padded_h), [y, z].into())
}

/// Case 3: f in M[t] with no split into two M[t] factors within budget.
/// Searches for f = g * h with h in M[t] and g carrying a unit coefficient
/// at the largest possible degree, then atomizes g and pads h if it splits.
pub fn case3_mixed(f: &RPoly, budget: &SearchBudget) -> Result<Vec<RPoly>, AtomizeError> {
    if !f.in_m() {
        return Err(AtomizeError::NotInM);
    }
    Ok(case3_emit(f, budget)?
        .into_iter()
        .map(|e| e.poly().clone())
        .collect())
}

fn case3_emit(f: &RPoly, budget: &SearchBudget) -> Result<Vec<Emitted>, AtomizeError> {
    let deg = f.degree().expect("nonzero");
    let u_max = deg.min(budget.max_factor_degree);
    for u in (1..=u_max).rev() {
        let outcome = match find_unit_split_at_degree(f, budget, u) {
            Ok(out) => out,
            Err(OracleError::TooLarge { .. }) => return Err(AtomizeError::BudgetExceeded),
            Err(e) => unreachable!("search rejected a nonzero input: {e}"),
        };
        let Some((g, h)) = outcome.found else { continue };
        let mut out = case1_emit(&g, budget)?;
        let h_split = match find_factorization(&h, budget, SplitConstraint::BothInM) {
            Ok(o) => o.found,
            Err(OracleError::TooLarge { .. }) => None,
            Err(e) => unreachable!("search rejected a nonzero input: {e}"),
        };
        match h_split {
            Some((h1, h2)) => {
                let (pair, keep) = pad_with_fresh(&h1, &h2);
                out.push(Emitted::Padded {
                    factor: pair.0,
                    keep: keep.clone(),
                });
                out.push(Emitted::Padded {
                    factor: pair.1,
                    keep,
                });
            }
            None => out.push(Emitted::Plain(h)),
        }
        return Ok(out);
    }
    // No mixed split found: f stands as its own (budget-certified) atom.
    Ok(vec![Emitted::Plain(f.clone())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::monomial::Monomial;
    use crate::scalar::{FieldScalar, Prime};

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn budget(deg: usize, refine: u64) -> SearchBudget {
        SearchBudget::new(deg, 2, refine, 100_000_000)
    }

    fn half(i: u32) -> RingElem {
        RingElem::from_monomial(
            Monomial::from_pairs([(i, Exponent::new(1, 2))]),
            FieldScalar::one(p2()),
        )
    }

    fn one() -> RingElem {
        RingElem::one(p2())
    }

    #[test]
    fn atomize_constant_x_pads() {
        let f = RPoly::constant(RingElem::var(1, p2()));
        let a = atomize(&f, &budget(2, 2), 0).unwrap();
        assert_eq!(a.case, CaseTag::MSplit);
        assert_eq!(a.factors.len(), 2);
        // Expected shape: x^(1/2) + yt + z with fresh y = 2, z = 3.
        let expected = RPoly::from_coeffs(
            p2(),
            vec![half(1).add(&RingElem::var(3, p2())), RingElem::var(2, p2())],
        );
        assert_eq!(a.factors[0], expected);
        assert_eq!(a.factors[1], expected);
        assert_eq!(a.factors[0].mul(&a.factors[1]), f);
        for cert in &a.certificates {
            assert_eq!(cert.verdict, AtomVerdict::CertifiedWithinBudget);
            assert!(cert.reduced_subject.is_some());
        }
    }

    #[test]
    fn atomize_t_plus_x_is_atomic() {
        let f = RPoly::from_coeffs(p2(), vec![RingElem::var(1, p2()), one()]);
        let a = atomize(&f, &budget(2, 2), 0).unwrap();
        assert_eq!(a.case, CaseTag::UnitCoeff);
        assert_eq!(a.factors, vec![f.clone()]);
        assert_eq!(a.bound, 1);
        assert_eq!(a.certificates[0].verdict, AtomVerdict::CertifiedWithinBudget);
    }

    #[test]
    fn atomize_t_squared_plus_x_via_pth_power() {
        let f = RPoly::from_coeffs(p2(), vec![RingElem::var(1, p2()), RingElem::zero(p2()), one()]);
        let a = atomize(&f, &budget(2, 2), 0).unwrap();
        assert_eq!(a.case, CaseTag::UnitCoeff);
        let t_plus_root = RPoly::from_coeffs(p2(), vec![half(1), one()]);
        assert_eq!(a.factors, vec![t_plus_root.clone(), t_plus_root]);
        assert_eq!(a.factors[0].mul(&a.factors[1]), f);
        assert!(a.factors.len() <= a.bound);
    }

    #[test]
    fn case1_hensel_example() {
        // t^2 + t + x1 -> (t + x1)(t + 1 + x1).
        let f = RPoly::from_coeffs(p2(), vec![RingElem::var(1, p2()), one(), one()]);
        let factors = case1_unit_coeff(&f, &budget(2, 2)).unwrap();
        assert_eq!(
            factors,
            vec![
                RPoly::from_coeffs(p2(), vec![RingElem::var(1, p2()), one()]),
                RPoly::from_coeffs(p2(), vec![one().add(&RingElem::var(1, p2())), one()]),
            ]
        );
    }

    #[test]
    fn case1_irreducible_image_is_terminal() {
        let t = RPoly::term(one(), 1);
        assert_eq!(case1_unit_coeff(&t, &budget(2, 2)).unwrap(), vec![t.clone()]);
    }

    #[test]
    fn case1_rejects_m_polys() {
        let f = RPoly::constant(RingElem::var(1, p2()));
        assert_eq!(
            case1_unit_coeff(&f, &budget(2, 2)),
            Err(AtomizeError::NoUnitCoeff)
        );
    }

    #[test]
    fn case2_examples() {
        let g = RPoly::constant(half(1));
        let (a, b) = case2_pad(&g, &g).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mul(&b), RPoly::constant(RingElem::var(1, p2())));

        // g = x^(1/2), h = x^(1/3) t: the product x^(5/6) t survives padding.
        let third = RPoly::term(
            RingElem::from_monomial(
                Monomial::from_pairs([(1, Exponent::new(1, 3))]),
                FieldScalar::one(p2()),
            ),
            1,
        );
        let (a, b) = case2_pad(&g, &third).unwrap();
        assert_eq!(a.mul(&b), g.mul(&third));

        let not_in_m = RPoly::constant(one());
        assert_eq!(case2_pad(&not_in_m, &g), Err(AtomizeError::NotInM));
    }

    #[test]
    fn case3_splits_xt_plus_x_at_coarse_budget() {
        // At refine = 1 there is no M[t] x M[t] split of x t + x, but
        // (t + 1) * x works and t + 1 is an atom; x is atomic at this budget.
        let x = RingElem::var(1, p2());
        let f = RPoly::from_coeffs(p2(), vec![x.clone(), x.clone()]);
        let factors = case3_mixed(&f, &budget(2, 1)).unwrap();
        assert_eq!(
            factors,
            vec![
                RPoly::from_coeffs(p2(), vec![one(), one()]),
                RPoly::constant(x),
            ]
        );
        let product = factors
            .iter()
            .fold(RPoly::constant(one()), |acc, g| acc.mul(g));
        assert_eq!(product, f);
        assert!(factors.len() <= f.degree().unwrap() + 2);
    }

    #[test]
    fn case3_strong_atom_stays_whole() {
        // x1 + x2 t admits no split at all; case 3 returns it unchanged.
        let f = RPoly::from_coeffs(p2(), vec![RingElem::var(1, p2()), RingElem::var(2, p2())]);
        let factors = case3_mixed(&f, &budget(2, 2)).unwrap();
        assert_eq!(factors, vec![f]);
    }

    #[test]
    fn atomize_dispatches_x1_plus_x2t_to_case3() {
        let f = RPoly::from_coeffs(p2(), vec![RingElem::var(1, p2()), RingElem::var(2, p2())]);
        let a = atomize(&f, &budget(2, 2), 0).unwrap();
        assert_eq!(a.case, CaseTag::MNoSplit);
        assert_eq!(a.factors, vec![f]);
        assert_eq!(a.certificates[0].verdict, AtomVerdict::CertifiedWithinBudget);
    }

    #[test]
    fn atomize_rejects_zero_and_units() {
        assert_eq!(
            atomize(&RPoly::zero(p2()), &budget(2, 2), 0).unwrap_err(),
            AtomizeError::ZeroOrUnit
        );
        let unit = RPoly::from_coeffs(p2(), vec![one(), RingElem::var(1, p2())]);
        assert_eq!(
            atomize(&unit, &budget(2, 2), 0).unwrap_err(),
            AtomizeError::ZeroOrUnit
        );
    }
}
