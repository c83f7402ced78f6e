//! Dense Gaussian elimination mod p for the factor-search linear systems.

use crate::scalar::{FieldScalar, Prime};

/// Solution set of `M x = b`: one particular solution (free variables set to
/// zero) plus a kernel basis, both deterministic for a fixed input.
pub(crate) struct AffineSolution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

impl AffineSolution {
    /// Some member of the solution set on which `functional` (a coordinate
    /// index) is nonzero, if any.
    pub fn member_with_nonzero_coord(&self, coord: usize, p: u64) -> Option<Vec<u64>> {
        if self.particular[coord] != 0 {
            return Some(self.particular.clone());
        }
        for k in &self.kernel {
            if k[coord] != 0 {
                let sum: Vec<u64> = self
                    .particular
                    .iter()
                    .zip(k)
                    .map(|(a, b)| (a + b) % p)
                    .collect();
                return Some(sum);
            }
        }
        None
    }

    /// Some member of the solution set with coordinate `coord` equal to
    /// zero, if any.
    pub fn member_with_zero_coord(&self, coord: usize, p: u64) -> Option<Vec<u64>> {
        let c = self.particular[coord];
        if c == 0 {
            return Some(self.particular.clone());
        }
        for k in &self.kernel {
            if k[coord] != 0 {
                // particular - (c / k[coord]) * k.
                let scale = c * inv_mod(k[coord], p) % p;
                let adjusted: Vec<u64> = self
                    .particular
                    .iter()
                    .zip(k)
                    .map(|(a, b)| (a + p - scale * b % p) % p)
                    .collect();
                return Some(adjusted);
            }
        }
        None
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Solves `rows * x = rhs` over F_p. Rows are dense coefficient vectors of a
/// common width. Returns `None` when the system is inconsistent.
pub(crate) fn solve_affine(
    prime: Prime,
    mut rows: Vec<Vec<u64>>,
    mut rhs: Vec<u64>,
    width: usize,
) -> Option<AffineSolution> {
    let p = prime.value();
    debug_assert!(rows.iter().all(|r| r.len() == width));
    debug_assert_eq!(rows.len(), rhs.len());

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; width];
    let mut rank = 0usize;
    for col in 0..width {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        rhs.swap(rank, pivot_row);
        let inv = FieldScalar::new(rows[rank][col], prime).inverse().value();
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        rhs[rank] = rhs[rank] * inv % p;
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..width {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
                let sub = factor * rhs[rank] % p;
                rhs[r] = (rhs[r] + p - sub) % p;
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    // Inconsistent iff some zero row has nonzero rhs.
    for r in rank..rows.len() {
        if rhs[r] != 0 {
            return None;
        }
    }

    let mut particular = vec![0u64; width];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            particular[col] = rhs[*r];
        }
    }
    let mut kernel = Vec::new();
    for free_col in 0..width {
        if pivot_of_col[free_col].is_some() {
            continue;
        }
        let mut vec = vec![0u64; width];
        vec[free_col] = 1;
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                // x_col = -rows[r][free_col] * x_free.
                vec[col] = (p - rows[*r][free_col]) % p;
            }
        }
        kernel.push(vec);
    }
    Some(AffineSolution { particular, kernel })
}
