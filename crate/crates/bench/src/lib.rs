//! Shared fixtures for the kernel benchmarks.

use antimatter_core::*;

pub fn p2() -> Prime {
    Prime::new(2).unwrap()
}

/// All 64 elements of A(vars={1,2}, d=2, p=2).
pub fn subring_64() -> Vec<RingElem> {
    let spec = SubringSpec::new(p2(), [1, 2].into(), 2);
    enumerate_elements(&spec, 1 << 20)
        .expect("small subring")
        .collect()
}

/// The running quadratic example t^2 + t + x1.
pub fn quadratic_with_nilpotent() -> RPoly {
    parse_rpoly("(x1) + (1)t + (1)t^2", p2()).expect("fixture parses")
}
