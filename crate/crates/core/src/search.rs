//! Deterministic enumeration of small lattice vectors.
//!
//! Searches walk coefficient vectors over a fixed basis with a base-s
//! counter, so the first hit is reproducible across runs.

use crate::compalg::Elem;
use crate::exactfield::{Fe, Field, FieldKind};
use crate::linalg::{vaxpy, vzero};

/// Upper bound on the number of candidates any single search inspects.
pub const SEARCH_CAP: u64 = 2_000_000;

/// Coefficients used by lattice searches: every element of a finite field,
/// 0, ±1, …, ±h over ℚ, and the prime subfield plus t over F_p(t).
pub fn coefficient_pool(field: Field, height: u32) -> Vec<Fe> {
    if let Some(els) = field.elements() {
        return els;
    }
    match field.kind() {
        FieldKind::RatFunc(p) => {
            let mut v: Vec<Fe> = (0..*p as i64).map(|i| field.from_i64(i)).collect();
            v.push(field.t());
            v
        }
        _ => {
            let mut v = vec![field.zero()];
            for i in 1..=height.max(1) as i64 {
                v.push(field.from_i64(i));
                v.push(field.from_i64(-i));
            }
            v
        }
    }
}

/// First nonzero combination Σ cᵢ basisᵢ (cᵢ from `pool`) satisfying `pred`,
/// scanning at most `cap` candidates.
pub fn find_in_span(
    field: Field,
    basis: &[Elem],
    pool: &[Fe],
    cap: u64,
    mut pred: impl FnMut(&Elem) -> bool,
) -> Option<Elem> {
    let k = basis.len();
    if k == 0 || pool.len() < 2 {
        return None;
    }
    let n = basis[0].len();
    let s = pool.len();
    let mut digits = vec![0usize; k];
    let mut seen = 0u64;
    loop {
        // increment the counter; the all-zero vector is skipped
        let mut i = 0;
        while i < k {
            digits[i] += 1;
            if digits[i] < s {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == k {
            return None;
        }
        seen += 1;
        if seen > cap {
            return None;
        }
        let mut v = vzero(field, n);
        for (d, b) in digits.iter().zip(basis) {
            vaxpy(&mut v, &pool[*d], b);
        }
        if pred(&v) {
            return Some(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    #[test]
    fn first_hit_is_deterministic() {
        let f = Field::gf(3).unwrap();
        let basis = vec![unit_vector(f, 2, 0), unit_vector(f, 2, 1)];
        let pool = coefficient_pool(f, 0);
        let hit = find_in_span(f, &basis, &pool, 100, |v| !v[1].is_zero()).unwrap();
        assert_eq!(hit, vec![f.zero(), f.one()]);
    }

    #[test]
    fn rational_pool_is_symmetric() {
        let q = Field::rationals();
        let pool = coefficient_pool(q, 2);
        assert_eq!(pool.len(), 5);
    }
}
