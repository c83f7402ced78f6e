//! Lifting coprime factorizations from F_p[t] to R[t].
//!
//! Within a truncated subring the maximal ideal is nilpotent of index at
//! most d + 1, so the classical Bezout correction step, applied one
//! filtration level per round, terminates in at most d + 1 rounds. The
//! lifting is linear rather than quadratic on purpose: the round count is
//! tiny at desk scale and each step is easy to audit.

use thiserror::Error;

use crate::fppoly::FpPoly;
use crate::ring::RingElem;
use crate::rpoly::RPoly;
use crate::scalar::FieldScalar;
use crate::subring::{SubringBasis, SubringSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HenselError {
    #[error("zero input")]
    ZeroInput,
    #[error("target images are not coprime")]
    NotCoprime,
    #[error("input does not reduce to the given image factorization")]
    ReductionMismatch,
    #[error("input has coefficients outside the given subring")]
    OutsideSubring,
}

/// The smallest subring spec containing every monomial of `f`, enlarged by
/// `extra_vars` fresh variables (smallest indices not occurring in `f`) and
/// with the denominator multiplied by `refine`.
pub fn ambient_subring(f: &RPoly, extra_vars: u32, refine: u64) -> Result<SubringSpec, HenselError> {
    if f.is_zero() {
        return Err(HenselError::ZeroInput);
    }
    assert!(refine >= 1);
    let mut variables = f.vars();
    let mut candidate = 1u32;
    for _ in 0..extra_vars {
        while variables.contains(&candidate) {
            candidate += 1;
        }
        variables.insert(candidate);
    }
    Ok(SubringSpec::new(
        f.prime(),
        variables,
        f.denominator_lcm() * refine,
    ))
}

/// Lifts `f = u_bar * v_bar` (an equality in F_p[t] up to a scalar, with
/// coprime factors) to an exact factorization `f = u * v` in R[t], where
/// `reduce_mod_m(u)` is associate to `u_bar` and `reduce_mod_m(v)` to
/// `v_bar`. `v`'s image is kept monic.
pub fn hensel_split(
    f: &RPoly,
    u_bar: &FpPoly,
    v_bar: &FpPoly,
    spec: &SubringSpec,
) -> Result<(RPoly, RPoly), HenselError> {
    if u_bar.gcd(v_bar).map_err(|_| HenselError::NotCoprime)? != FpPoly::one(f.prime()) {
        return Err(HenselError::NotCoprime);
    }
    let reduced = f.reduce_mod_m();
    let target = u_bar.mul(v_bar);
    if reduced.is_zero() || target.is_zero() {
        return Err(HenselError::ReductionMismatch);
    }
    // Up to a scalar: compare monic normalizations.
    if reduced.monic() != target.monic() {
        return Err(HenselError::ReductionMismatch);
    }
    let basis = SubringBasis::build(spec);
    if !basis.contains_poly(f) {
        return Err(HenselError::OutsideSubring);
    }

    // Normalize: h's image is monic(v_bar); g's image absorbs the scalar.
    let u_monic = u_bar.monic();
    let v_monic = v_bar.monic();
    let scalar = FieldScalar::new(reduced.leading_coeff(), f.prime());
    let mut g = u_monic.scale(scalar.value()).lift();
    let mut h = v_monic.lift();

    // Bezout pair adjusted for the scalar: sigma*g_bar + tau*h_bar = 1.
    let (s, r) = u_monic
        .bezout(&v_monic)
        .map_err(|_| HenselError::NotCoprime)?;
    let sigma = s.scale(scalar.inverse().value()).lift();
    let tau = r.lift();

    // Each round pushes the error one nilpotency level deeper; the maximal
    // ideal of the subring vanishes at level d + 1.
    let rounds = spec.denominator + 1;
    for _ in 0..=rounds {
        let e = f.sub(&g.mul(&h));
        if e.is_zero() {
            let one = RingElem::one(f.prime());
            debug_assert!(h.coeff(h.degree().expect("monic image")) == one);
            return Ok((g, h));
        }
        let (q, rho) = sigma.mul(&e).divrem_monic(&h);
        g = g.add(&tau.mul(&e)).add(&q.mul(&g));
        h = h.add(&rho);
    }
    unreachable!("lift failed to converge within the nilpotency bound");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::monomial::Monomial;
    use crate::scalar::Prime;
    use std::collections::BTreeSet;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn x1(p: Prime) -> RingElem {
        RingElem::var(1, p)
    }

    #[test]
    fn ambient_examples() {
        // x1^(1/2) + t: vars {1}, d = 2.
        let f = RPoly::from_coeffs(
            p2(),
            vec![
                RingElem::from_monomial(
                    Monomial::from_pairs([(1, Exponent::new(1, 2))]),
                    FieldScalar::one(p2()),
                ),
                RingElem::one(p2()),
            ],
        );
        let spec = ambient_subring(&f, 0, 1).unwrap();
        assert_eq!(spec.variables, BTreeSet::from([1]));
        assert_eq!(spec.denominator, 2);

        // x1 + x2^(1/3) t with two extras: vars {1,2,3,4}, d = 3.
        let g = RPoly::from_coeffs(
            p2(),
            vec![
                x1(p2()),
                RingElem::from_monomial(
                    Monomial::from_pairs([(2, Exponent::new(1, 3))]),
                    FieldScalar::one(p2()),
                ),
            ],
        );
        let spec = ambient_subring(&g, 2, 1).unwrap();
        assert_eq!(spec.variables, BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(spec.denominator, 3);

        // refine doubles d.
        let spec = ambient_subring(&f, 0, 2).unwrap();
        assert_eq!(spec.denominator, 4);

        assert_eq!(
            ambient_subring(&RPoly::zero(p2()), 0, 1),
            Err(HenselError::ZeroInput)
        );
    }

    #[test]
    fn lifts_quadratic_with_nilpotent_constant() {
        // f = t^2 + t + x1 over the images (t, t + 1):
        // expect (t + x1, t + 1 + x1).
        let f = RPoly::from_coeffs(
            p2(),
            vec![x1(p2()), RingElem::one(p2()), RingElem::one(p2())],
        );
        let spec = ambient_subring(&f, 0, 1).unwrap();
        let t = FpPoly::t(p2());
        let t1 = FpPoly::from_coeffs(p2(), vec![1, 1]);
        let (u, v) = hensel_split(&f, &t, &t1, &spec).unwrap();
        assert_eq!(
            u,
            RPoly::from_coeffs(p2(), vec![x1(p2()), RingElem::one(p2())])
        );
        assert_eq!(
            v,
            RPoly::from_coeffs(
                p2(),
                vec![RingElem::one(p2()).add(&x1(p2())), RingElem::one(p2())]
            )
        );
        assert_eq!(u.mul(&v), f);
    }

    #[test]
    fn lift_with_nothing_to_correct() {
        let t = FpPoly::t(p2());
        let t1 = FpPoly::from_coeffs(p2(), vec![1, 1]);
        let f = t.mul(&t1).lift();
        let spec = ambient_subring(&f, 0, 1).unwrap();
        let (u, v) = hensel_split(&f, &t, &t1, &spec).unwrap();
        assert_eq!(u, t.lift());
        assert_eq!(v, t1.lift());
    }

    #[test]
    fn rejects_non_coprime_images() {
        let f = RPoly::from_coeffs(
            p2(),
            vec![RingElem::zero(p2()), x1(p2()), RingElem::one(p2())],
        );
        let spec = ambient_subring(&f, 0, 1).unwrap();
        let t = FpPoly::t(p2());
        assert_eq!(
            hensel_split(&f, &t, &t, &spec),
            Err(HenselError::NotCoprime)
        );
    }

    #[test]
    fn rejects_mismatched_reduction() {
        let f = RPoly::from_coeffs(p2(), vec![RingElem::one(p2()), RingElem::one(p2())]);
        let spec = ambient_subring(&f, 0, 1).unwrap();
        let t = FpPoly::t(p2());
        let t1 = FpPoly::from_coeffs(p2(), vec![1, 1]);
        assert_eq!(
            hensel_split(&f, &t, &t1, &spec),
            Err(HenselError::ReductionMismatch)
        );
    }

    #[test]
    fn lift_idempotent_at_fixed_point() {
        // Split a known product u*v: the result re-multiplies to it and the
        // images stay associate to the inputs.
        let u = RPoly::from_coeffs(p2(), vec![x1(p2()), RingElem::one(p2())]);
        let v = RPoly::from_coeffs(
            p2(),
            vec![RingElem::one(p2()).add(&x1(p2())), RingElem::one(p2())],
        );
        let f = u.mul(&v);
        let spec = ambient_subring(&f, 0, 1).unwrap();
        let (a, b) = hensel_split(&f, &u.reduce_mod_m(), &v.reduce_mod_m(), &spec).unwrap();
        assert_eq!(a.mul(&b), f);
        assert_eq!(a.reduce_mod_m().monic(), u.reduce_mod_m().monic());
        assert_eq!(b.reduce_mod_m().monic(), v.reduce_mod_m().monic());
    }
}
