//! Monomials with rational exponents and the deglex comparator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exponent::Exponent;

/// A finite product of variables raised to strictly positive rational
/// exponents. The empty product is the monomial 1. Variables are bare
/// nonnegative indices; the CLI maps `x1, x2, ...` onto them.
///
/// `Ord` is the deglex order: total potential first, ties broken
/// lexicographically on exponent vectors by ascending variable index. Two
/// monomials compare `Equal` exactly when they are structurally equal, so the
/// order is total and usable as a map key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<u32, Exponent>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial {
            exps: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// The monomial `x_i`.
    pub fn var(i: u32) -> Monomial {
        let mut exps = BTreeMap::new();
        exps.insert(i, Exponent::one());
        Monomial { exps }
    }

    /// Builds from (variable, exponent) pairs, summing repeats. Zero
    /// exponents are rejected.
    pub fn from_pairs<I: IntoIterator<Item = (u32, Exponent)>>(pairs: I) -> Monomial {
        let mut exps: BTreeMap<u32, Exponent> = BTreeMap::new();
        for (v, e) in pairs {
            assert!(!e.is_zero(), "zero exponent in monomial");
            match exps.remove(&v) {
                Some(old) => {
                    exps.insert(v, old.plus(&e));
                }
                None => {
                    exps.insert(v, e);
                }
            }
        }
        Monomial { exps }
    }

    /// Sum of all exponents.
    pub fn potential(&self) -> Exponent {
        self.exps
            .values()
            .fold(Exponent::zero(), |acc, e| acc.plus(e))
    }

    /// Exponent of variable `i`, zero if absent.
    pub fn potential_at(&self, i: u32) -> Exponent {
        self.exps.get(&i).cloned().unwrap_or_else(Exponent::zero)
    }

    /// Product in the truncated algebra: exponentwise sum, `None` exactly
    /// when the potentials sum to more than 1. A sum of exactly 1 survives.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        if self.potential().plus(&other.potential()).exceeds_one() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            match exps.remove(v) {
                Some(old) => {
                    exps.insert(*v, old.plus(e));
                }
                None => {
                    exps.insert(*v, e.clone());
                }
            }
        }
        Some(Monomial { exps })
    }

    /// `self^k`, `None` if truncated. `k = 0` gives 1.
    pub fn pow(&self, k: u64) -> Option<Monomial> {
        if k == 0 {
            return Some(Monomial::one());
        }
        if self.potential().times_nat(k).exceeds_one() {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .map(|(v, e)| (*v, e.times_nat(k)))
            .collect();
        Some(Monomial { exps })
    }

    /// p-th root: every exponent divided by p. Never truncates, since the
    /// potential shrinks by a factor of p.
    pub fn proot(&self, p: u64) -> Monomial {
        let exps = self.exps.iter().map(|(v, e)| (*v, e.div_nat(p))).collect();
        Monomial { exps }
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.keys().copied()
    }

    pub fn contains_any_var_outside(&self, keep: &std::collections::BTreeSet<u32>) -> bool {
        self.exps.keys().any(|v| !keep.contains(v))
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, &Exponent)> {
        self.exps.iter().map(|(v, e)| (*v, e))
    }

    /// lcm of the exponent denominators (1 for the monomial 1).
    pub fn denominator_lcm(&self) -> u64 {
        self.exps
            .values()
            .fold(1u64, |acc, e| num::integer::lcm(acc, e.denom_u64()))
    }

    pub fn deglex_compare(&self, other: &Monomial) -> Ordering {
        match self.potential().cmp(&other.potential()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic on exponent vectors, ascending variable index,
        // larger exponent at the first differing variable ranks higher.
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // Smaller index present only on one side: that side has a
                    // positive exponent where the other has zero.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.deglex_compare(other)
    }
}

impl fmt::Display for Monomial {
    /// Variables in ascending index; exponent 1 omitted: `x1^(1/2)x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (v, e) in &self.exps {
            if *e == Exponent::one() {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^({e})")?;
            }
        }
        Ok(())
    }
}
