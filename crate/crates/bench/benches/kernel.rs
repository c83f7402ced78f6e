use criterion::{black_box, criterion_group, criterion_main, Criterion};

use antimatter_bench::{p2, quadratic_with_nilpotent, subring_64};
use antimatter_core::*;

fn bench_elem_mul(c: &mut Criterion) {
    let elems = subring_64();
    c.bench_function("elem_mul/64-element subring, all pairs", |b| {
        b.iter(|| {
            for a in &elems {
                for x in &elems {
                    black_box(a.mul(x));
                }
            }
        });
    });
}

fn bench_rpoly_mul(c: &mut Criterion) {
    let elems = subring_64();
    let f = RPoly::from_coeffs(p2(), vec![elems[37].clone(), elems[11].clone(), elems[62].clone()]);
    let g = RPoly::from_coeffs(p2(), vec![elems[53].clone(), elems[29].clone(), elems[7].clone()]);
    c.bench_function("rpoly_mul/degree 2 x degree 2", |b| {
        b.iter(|| black_box(f.mul(&g)));
    });
}

fn bench_hensel_split(c: &mut Criterion) {
    let f = quadratic_with_nilpotent();
    let t = FpPoly::t(p2());
    let t1 = FpPoly::from_coeffs(p2(), vec![1, 1]);
    let spec = ambient_subring(&f, 0, 1).unwrap();
    c.bench_function("hensel_split/t^2 + t + x1", |b| {
        b.iter(|| black_box(hensel_split(&f, &t, &t1, &spec).unwrap()));
    });
}

fn bench_in_m_split_search(c: &mut Criterion) {
    let f = RPoly::constant(RingElem::var(1, p2()));
    let budget = SearchBudget::new(2, 2, 2, 100_000_000);
    c.bench_function("find_factorization/BothInM split of x1", |b| {
        b.iter(|| {
            black_box(
                find_factorization(&f, &budget, SplitConstraint::BothInM)
                    .unwrap()
                    .found
                    .is_some(),
            )
        });
    });
}

fn bench_certify_irreducible_image(c: &mut Criterion) {
    // Image pruning empties the candidate set: the certificate is immediate.
    let f = parse_rpoly("(x1) + (1)t", p2()).unwrap();
    let budget = SearchBudget::new(2, 0, 2, 100_000_000);
    c.bench_function("certify_strong_atom/t + x1 (pruned empty)", |b| {
        b.iter(|| black_box(certify_strong_atom(&f, &budget, 0).unwrap()));
    });
}

criterion_group!(
    benches,
    bench_elem_mul,
    bench_rpoly_mul,
    bench_hensel_split,
    bench_in_m_split_search,
    bench_certify_irreducible_image
);
criterion_main!(benches);
