//! Closed lattice walks in the chamber V_k = {a_1 ≥ ... ≥ a_{k-1} ≥ 0}.
//!
//! This works directly on integer vectors and does not go through Young's
//! lattice, so it is an independent route to the noncrossing counts.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use super::CountingError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stepping {
    /// Odd steps move -ε_i or stand, even steps move +ε_i or stand.
    Vacillating,
    /// Every step is ±ε_i.
    Free,
}

fn in_chamber(a: &[i32]) -> bool {
    a.windows(2).all(|w| w[0] >= w[1]) && a.last().is_none_or(|&x| x >= 0)
}

pub fn chamber_walk_count(k: usize, length: usize, stepping: Stepping) -> Result<BigUint, CountingError> {
    if k < 2 {
        return Err(CountingError::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if stepping == Stepping::Free && length % 2 == 1 {
        return Err(CountingError::OddLength(length));
    }
    let dim = k - 1;
    let origin = vec![0i32; dim];
    let mut layer: HashMap<Vec<i32>, BigUint> = HashMap::from([(origin.clone(), BigUint::one())]);
    for step in 1..=length {
        let remaining = (length - step) as i32;
        let mut next: HashMap<Vec<i32>, BigUint> = HashMap::new();
        let mut push = |v: Vec<i32>, c: &BigUint| {
            // each later step lowers the coordinate sum by at most one
            if in_chamber(&v) && v.iter().sum::<i32>() <= remaining {
                *next.entry(v).or_default() += c;
            }
        };
        for (v, c) in &layer {
            let deltas: &[i32] = match (stepping, step % 2) {
                (Stepping::Vacillating, 1) => &[-1, 0],
                (Stepping::Vacillating, _) => &[1, 0],
                (Stepping::Free, _) => &[1, -1],
            };
            for &d in deltas {
                if d == 0 {
                    push(v.clone(), c);
                    continue;
                }
                for i in 0..dim {
                    let mut w = v.clone();
                    w[i] += d;
                    push(w, c);
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(&origin).unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::numbers::{catalan, ncn};
    use crate::setpart::matchings_iter;
    use crate::stats::cr;

    #[test]
    fn examples() {
        for k in 2..=5 {
            assert_eq!(chamber_walk_count(k, 0, Stepping::Vacillating).unwrap(), BigUint::one());
            assert_eq!(chamber_walk_count(k, 0, Stepping::Free).unwrap(), BigUint::one());
        }
        for n in 0..=10 {
            assert_eq!(chamber_walk_count(2, 2 * n, Stepping::Vacillating).unwrap(), catalan(n));
            assert_eq!(chamber_walk_count(2, 2 * n, Stepping::Free).unwrap(), catalan(n));
        }
        assert_eq!(chamber_walk_count(3, 3, Stepping::Free), Err(CountingError::OddLength(3)));
        assert!(chamber_walk_count(1, 2, Stepping::Free).is_err());
    }

    #[test]
    fn vacillating_stepping_counts_noncrossing_partitions() {
        for k in 2..=4 {
            for n in 0..=8 {
                assert_eq!(
                    chamber_walk_count(k, 2 * n, Stepping::Vacillating).unwrap(),
                    ncn(Some(k), None, n),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn free_stepping_counts_noncrossing_matchings() {
        for k in 2..=4 {
            for m in 0..=5 {
                let brute = matchings_iter(m).filter(|q| cr(q) < k).count();
                assert_eq!(chamber_walk_count(k, 2 * m, Stepping::Free).unwrap(), BigUint::from(brute));
            }
        }
        for m in 0..=8 {
            let c = |i| catalan(i);
            let expected = c(m) * c(m + 2) - c(m + 1) * c(m + 1);
            assert_eq!(chamber_walk_count(3, 2 * m, Stepping::Free).unwrap(), expected);
        }
    }
}
