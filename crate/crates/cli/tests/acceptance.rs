//! Acceptance suite. Each test is one release criterion and prints a
//! PASS line with its measured runtime; criteria with hard runtime limits
//! assert them.
//!
//! Run with `cargo test -p antimatter-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use antimatter_core::*;

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn pass(criterion: &str, started: Instant, detail: &str) {
    println!(
        "PASS {criterion} ({:.2}s): {detail}",
        started.elapsed().as_secs_f64()
    );
}

/// Criterion 1: unit/nilpotent dichotomy, exhaustive over the 64-element
/// subring A(vars={1,2}, d=2, p=2), with verified inverses and nilpotency
/// certificates, and exact_index <= p^N throughout. Runtime < 1 s.
#[test]
fn criterion_1_dichotomy_exhaustive() {
    let started = Instant::now();
    let p = prime(2);
    let spec = SubringSpec::new(p, [1, 2].into(), 2);
    let mut units = 0u32;
    let mut nilpotents = 0u32;
    let mut zeros = 0u32;
    for e in enumerate_elements(&spec, 1 << 20).unwrap() {
        let is_zero = e.is_zero();
        let is_unit = e.is_unit();
        let flags = [is_zero, is_unit, !is_zero && !is_unit];
        assert_eq!(flags.iter().filter(|f| **f).count(), 1, "dichotomy: {e}");
        if is_zero {
            zeros += 1;
        } else if is_unit {
            units += 1;
            let inv = e.inverse().unwrap();
            assert_eq!(e.mul(&inv), RingElem::one(p), "inverse failed for {e}");
        } else {
            nilpotents += 1;
            let cert = e.nil_certificate().unwrap();
            assert!(e.pow(cert.exact_index).is_zero());
            assert!(!e.pow(cert.exact_index - 1).is_zero());
            assert!(cert.index_within_bound(), "exact index above p^N for {e}");
        }
    }
    assert_eq!((zeros, units, nilpotents), (1, 32, 31));
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "criterion 1 exceeded 1 s: {elapsed:?}"
    );
    pass(
        "criterion 1 (dichotomy)",
        started,
        "64 elements: 1 zero, 32 verified units, 31 certified nilpotents",
    );
}

/// Criterion 2: antimatterness. For 100 random nonzero nonunits across
/// subrings with d in {2,3,4} and p in {2,3}: the p-th root re-powers
/// exactly, and the element is NotAssociate to its root by exhaustive
/// multiplier scan in the ambient subring. Runtime < 10 s.
#[test]
fn criterion_2_proot_nonassociate_sampled() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    // (p, d, vars, samples); heavier scans get fewer samples, 100 total.
    let cells: [(u64, u64, &[u32], usize); 7] = [
        (2, 2, &[1], 10),
        (2, 2, &[1, 2], 10),
        (3, 2, &[1], 20),
        (2, 3, &[1], 20),
        (3, 3, &[1], 20),
        (2, 4, &[1], 16),
        (3, 4, &[1], 4),
    ];
    let mut total = 0usize;
    for (p_val, d, vars, samples) in cells {
        let p = prime(p_val);
        let spec = SubringSpec::new(p, vars.iter().copied().collect(), d);
        let basis = SubringBasis::build(&spec);
        let ambient = SubringSpec::new(p, vars.iter().copied().collect(), d * p_val);
        for _ in 0..samples {
            let z = loop {
                let mut digits: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..p_val)).collect();
                digits[0] = 0; // nonunit
                let z = basis.vec_to_elem(&digits);
                if !z.is_zero() {
                    break z;
                }
            };
            let root = z.proot().unwrap();
            assert_eq!(root.pow(p_val), z, "re-powering failed for {z}");
            assert_eq!(
                are_associate(&z, &root, &ambient, 1 << 30).unwrap(),
                Associateness::NotAssociate,
                "{z} associate to its root"
            );
            total += 1;
        }
    }
    assert_eq!(total, 100);
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 2 exceeded 10 s: {elapsed:?}"
    );
    pass(
        "criterion 2 (no irreducibles)",
        started,
        "100 sampled nonunits: exact p-th roots, all NotAssociate by scan",
    );
}

/// Criterion 3: surviving monomial, fuzzed. 500 random pairs of degree <= 3
/// with nonzero product: the witness appears at degree j + j' with total
/// potential equal to the sum of the two minimal potentials, and nothing in
/// the product has smaller potential. Exact arithmetic, zero tolerance.
/// Runtime < 10 s.
#[test]
fn criterion_3_survive_witness_fuzzed() {
    let started = Instant::now();
    let p = prime(2);
    let spec = SubringSpec::new(p, [1, 2].into(), 2);
    let basis = SubringBasis::build(&spec);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let deg = rng.gen_range(0..=3usize);
        let coeffs: Vec<RingElem> = (0..=deg)
            .map(|_| {
                let digits: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..2)).collect();
                basis.vec_to_elem(&digits)
            })
            .collect();
        RPoly::from_coeffs(p, coeffs)
    };
    let mut checked = 0usize;
    while checked < 500 {
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let product = f.mul(&g);
        if product.is_zero() {
            continue;
        }
        let w = survive_witness(&f, &g).unwrap();
        let (f_min, _) = f.min_potential().unwrap();
        let (g_min, _) = g.min_potential().unwrap();
        assert_eq!(w.total_potential, f_min.plus(&g_min));
        // The witness monomial really sits in the product at degree j + j'.
        let coeff = product.coeff(w.j + w.j_prime);
        let present = if w.product_monomial.is_one() {
            coeff.is_unit()
        } else {
            coeff.terms().any(|(m, _)| *m == w.product_monomial)
        };
        assert!(present, "witness missing in {f} * {g}");
        // No monomial anywhere in the product has smaller potential.
        let (product_min, _) = product.min_potential().unwrap();
        assert_eq!(product_min, w.total_potential);
        checked += 1;
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 3 exceeded 10 s: {elapsed:?}"
    );
    pass(
        "criterion 3 (surviving monomial)",
        started,
        "500 nonzero products: witness present, minimal potential exact",
    );
}

/// Criterion 4: bounded certification of x + yt over A(p=2, vars={1,2},
/// d=2), factor degree <= 2, no fresh variables: CertifiedWithinBudget by
/// exhaustive enumeration with pruning. Runtime target < 5 min.
#[test]
fn criterion_4_x_plus_yt_certified() {
    let started = Instant::now();
    let p = prime(2);
    let f = RPoly::from_coeffs(p, vec![RingElem::var(1, p), RingElem::var(2, p)]);
    let budget = SearchBudget::new(2, 0, 2, 100_000_000);
    let cert = certify_strong_atom(&f, &budget, 0).unwrap();
    assert_eq!(cert.verdict, AtomVerdict::CertifiedWithinBudget);
    assert_eq!(cert.space, SubringSpec::new(p, [1, 2].into(), 2));
    assert!(cert.enumerated > 0);
    pass(
        "criterion 4 (x + yt strongly irreducible)",
        started,
        &format!(
            "CertifiedWithinBudget after {} enumerated candidates",
            cert.enumerated
        ),
    );
}

/// Criterion 5: theorem length bounds, exhaustive sweep. Every nonzero
/// nonunit f in A(vars={1}, d=2, p=2)[t] of degree <= 2: the factor product
/// is bit-exact, lengths respect the case bounds, and every factor is
/// certified within the sweep budget. Runtime target < 30 min.
#[test]
fn criterion_5_atomizer_sweep() {
    let started = Instant::now();
    let p = prime(2);
    let spec = SubringSpec::new(p, [1].into(), 2);
    let elems: Vec<RingElem> = enumerate_elements(&spec, 1 << 20).unwrap().collect();
    let budget = SearchBudget::new(2, 2, 2, 100_000_000);
    let one_poly = RPoly::constant(RingElem::one(p));

    let mut swept = 0u32;
    let mut case_counts = [0u32; 3];
    for c0 in &elems {
        for c1 in &elems {
            for c2 in &elems {
                let f = RPoly::from_coeffs(p, vec![c0.clone(), c1.clone(), c2.clone()]);
                if f.is_zero() || f.is_unit() {
                    continue;
                }
                let a = atomize(&f, &budget, 0).unwrap();
                let product = a
                    .factors
                    .iter()
                    .fold(one_poly.clone(), |acc, g| acc.mul(g));
                assert_eq!(product, f, "product mismatch for {f}");
                match a.case {
                    CaseTag::UnitCoeff => {
                        case_counts[0] += 1;
                        let n = f.unit_coeff_degree().unwrap();
                        assert!(
                            a.factors.len() <= n.max(1),
                            "case-1 bound violated for {f}: {} > {}",
                            a.factors.len(),
                            n.max(1)
                        );
                    }
                    CaseTag::MSplit => {
                        case_counts[1] += 1;
                        assert_eq!(a.factors.len(), 2);
                    }
                    CaseTag::MNoSplit => {
                        case_counts[2] += 1;
                        assert!(a.factors.len() <= f.degree().unwrap() + 2);
                    }
                    other => panic!("unexpected case {other:?} for {f}"),
                }
                for (factor, cert) in a.factors.iter().zip(&a.certificates) {
                    assert!(!factor.is_unit(), "unit factor emitted for {f}");
                    assert_eq!(
                        cert.verdict,
                        AtomVerdict::CertifiedWithinBudget,
                        "uncertified factor {factor} of {f}"
                    );
                }
                swept += 1;
            }
        }
    }
    assert_eq!(swept, 512 - 64 - 1); // minus units and zero
    pass(
        "criterion 5 (theorem sweep)",
        started,
        &format!(
            "{} polynomials atomized: {} unit-coefficient, {} padded splits, {} mixed",
            swept, case_counts[0], case_counts[1], case_counts[2]
        ),
    );
}

/// Criterion 6: Hensel exactness, exhaustive. Every monic image of degree
/// <= 4 over F_2 with a coprime split, under every nilpotent coefficient
/// perturbation from the 8-element subring: the lifted factors re-multiply
/// to the input exactly. Runtime < 2 min.
#[test]
fn criterion_6_hensel_exhaustive() {
    let started = Instant::now();
    let p = prime(2);
    let spec = SubringSpec::new(p, [1].into(), 2);
    let m_elems: Vec<RingElem> = enumerate_elements(&spec, 1 << 20)
        .unwrap()
        .filter(|e| e.in_maximal_ideal())
        .collect();
    assert_eq!(m_elems.len(), 4);

    let mut lifts = 0u64;
    for deg in 1..=4usize {
        for f_bar in fppoly::monic_polys_of_degree(p, deg) {
            let (_, powers) = f_bar.factor().unwrap();
            if powers.len() < 2 {
                continue; // no coprime split available
            }
            // Ordered splits along nonempty proper subsets of the
            // prime-power groups.
            for mask in 1..(1u32 << powers.len()) - 1 {
                let mut u_bar = FpPoly::one(p);
                let mut v_bar = FpPoly::one(p);
                for (i, (q, e)) in powers.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        u_bar = u_bar.mul(&q.pow(*e));
                    } else {
                        v_bar = v_bar.mul(&q.pow(*e));
                    }
                }
                // Every nilpotent perturbation of the deg + 1 coefficients.
                let positions = deg + 1;
                let mut idx = vec![0usize; positions];
                loop {
                    let perturbed = {
                        let mut coeffs: Vec<RingElem> =
                            (0..positions).map(|i| m_elems[idx[i]].clone()).collect();
                        for (i, c) in coeffs.iter_mut().enumerate() {
                            *c = c.add(&RingElem::scalar(FieldScalar::new(
                                f_bar.coeff(i),
                                p,
                            )));
                        }
                        RPoly::from_coeffs(p, coeffs)
                    };
                    let ambient = ambient_subring(&perturbed, 0, 1).unwrap();
                    let (u, v) = hensel_split(&perturbed, &u_bar, &v_bar, &ambient).unwrap();
                    assert_eq!(u.mul(&v), perturbed, "inexact lift of {perturbed}");
                    assert!(u.degree().unwrap() <= deg && v.degree().unwrap() <= deg);
                    lifts += 1;

                    let mut advance = 0;
                    loop {
                        if advance == positions {
                            break;
                        }
                        idx[advance] += 1;
                        if idx[advance] < m_elems.len() {
                            break;
                        }
                        idx[advance] = 0;
                        advance += 1;
                    }
                    if advance == positions {
                        break;
                    }
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "criterion 6 exceeded 2 min: {elapsed:?}"
    );
    pass(
        "criterion 6 (Hensel exactness)",
        started,
        &format!("{lifts} exhaustive lifts, all exact"),
    );
}

/// Criterion 7: F_p[t] toolkit, exhaustive. Factorization reconstructs all
/// monic polynomials of degree <= 6 over F_2 and F_3, and every reported
/// irreducible survives an independent trial-division check. Runtime < 1 min.
#[test]
fn criterion_7_fp_toolkit_exhaustive() {
    let started = Instant::now();
    let mut factored = 0u32;
    for p_val in [2u64, 3] {
        let p = prime(p_val);
        for deg in 1..=6usize {
            for f in fppoly::monic_polys_of_degree(p, deg) {
                let (scalar, factors) = f.factor().unwrap();
                let rebuilt = factors
                    .iter()
                    .fold(FpPoly::one(p), |acc, (q, m)| acc.mul(&q.pow(*m)))
                    .scale(scalar.value());
                assert_eq!(rebuilt, f, "reconstruction failed for {f}");
                for (q, _) in &factors {
                    // Independent cross-check: no monic divisor of degree
                    // between 1 and half of deg(q).
                    let dq = q.degree().unwrap();
                    for cand_deg in 1..=dq / 2 {
                        for cand in fppoly::monic_polys_of_degree(p, cand_deg) {
                            assert!(
                                !cand.divides(q),
                                "reported irreducible {q} divisible by {cand}"
                            );
                        }
                    }
                }
                factored += 1;
            }
        }
    }
    assert_eq!(factored, 126 + 1092);
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "criterion 7 exceeded 1 min: {elapsed:?}"
    );
    pass(
        "criterion 7 (F_p[t] toolkit)",
        started,
        "1218 monic polynomials reconstructed, irreducibles cross-checked",
    );
}

/// Criterion 8: CLI golden outputs. The three flagship commands reproduce
/// byte-identical text and schema-valid JSON under --seed 0.
#[test]
fn criterion_8_cli_golden() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_antimatter");
    let run = |args: &[&str]| {
        let out = Command::new(bin)
            .args(args)
            .env_remove("ANTIMATTER_MAX_CANDIDATES")
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "command failed: {args:?}");
        String::from_utf8(out.stdout).expect("utf-8 output")
    };

    // Byte-identical text outputs.
    assert_eq!(
        run(&["nilindex", "x1^(1/2)", "--p", "2", "--seed", "0"]),
        "m=1/2, bound 4, exact 3\n"
    );
    assert_eq!(
        run(&[
            "witness",
            "(x1^(1/2)) + (x1)t",
            "(x2^(1/2))t",
            "--p",
            "2",
            "--seed",
            "0"
        ]),
        "j=0, j'=1, monomial x1^(1/2)x2^(1/2), degree 1, potential 1/1\n"
    );
    assert_eq!(
        run(&["atomize", "(x1)", "--p", "2", "--seed", "0"]),
        "case: MSplit\n\
         bound: 2 (factors: 2)\n\
         factor 1: (x3 + x1^(1/2)) + (x2)t\n\
         factor 2: (x3 + x1^(1/2)) + (x2)t\n\
         certificate 1: CertifiedWithinBudget (enumerated 229375)\n\
         certificate 2: CertifiedWithinBudget (enumerated 229375)\n\
         product check: ok\n"
    );

    // Schema-valid JSON for the same three commands.
    let nil: serde_json::Value = serde_json::from_str(&run(&[
        "nilindex", "x1^(1/2)", "--p", "2", "--seed", "0", "--json",
    ]))
    .unwrap();
    assert_eq!(nil["schema"], 1);
    assert_eq!(nil["min_potential"], "1/2");
    assert_eq!(nil["bound"], "4");
    assert_eq!(nil["exact_index"], 3);

    let wit: serde_json::Value = serde_json::from_str(&run(&[
        "witness",
        "(x1^(1/2)) + (x1)t",
        "(x2^(1/2))t",
        "--p",
        "2",
        "--seed",
        "0",
        "--json",
    ]))
    .unwrap();
    assert_eq!(wit["schema"], 1);
    assert_eq!(wit["j"], 0);
    assert_eq!(wit["j_prime"], 1);
    assert_eq!(wit["monomial"], "x1^(1/2)x2^(1/2)");
    assert_eq!(wit["degree"], 1);

    let atom: serde_json::Value = serde_json::from_str(&run(&[
        "atomize", "(x1)", "--p", "2", "--seed", "0", "--json",
    ]))
    .unwrap();
    assert_eq!(atom["schema"], 1);
    assert_eq!(atom["case"], "MSplit");
    assert_eq!(atom["factors"].as_array().unwrap().len(), 2);
    assert_eq!(atom["bound"], 2);
    assert_eq!(atom["replay"]["seed"], 0);
    for cert in atom["certificates"].as_array().unwrap() {
        assert_eq!(cert["verdict"], "CertifiedWithinBudget");
        assert_eq!(cert["enumerated_count"], 229375);
        for key in [
            "subject",
            "p",
            "variables",
            "denominator",
            "degree_bound",
            "fresh_vars",
            "enumerated_count",
            "seed",
        ] {
            assert!(!cert[key].is_null(), "missing certificate key {key}");
        }
    }

    // Replays are byte-identical run to run.
    let again = run(&["atomize", "(x1)", "--p", "2", "--seed", "0", "--json"]);
    let atom_again: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(atom, atom_again);

    pass(
        "criterion 8 (CLI golden)",
        started,
        "three commands byte-identical in text, schema-valid in JSON",
    );
}
