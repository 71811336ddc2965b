//! Bell, Stirling and related numbers, and bounded partition counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::walks::{count_walks_bounded, BoxBound, WalkKind};
use crate::young::Shape;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// (2m-1)!!, the number of complete matchings of `[2m]`.
pub fn matching_count(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

/// Bell numbers B(0), ..., B(n) from B(i+1) = Σ_k C(i, k) B(k).
pub fn bell_numbers(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for i in 0..n {
        let next = (0..=i).map(|k| binomial(i, k) * &out[k]).sum();
        out.push(next);
    }
    out
}

pub fn bell(n: usize) -> BigUint {
    bell_numbers(n).pop().expect("non-empty")
}

/// S(n, k) from S(n, k) = k S(n-1, k) + S(n-1, k-1).
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::zero(); i + 1];
        for (j, slot) in next.iter_mut().enumerate().skip(1) {
            let keep = if j < i { &row[j] * j } else { BigUint::zero() };
            *slot = keep + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// Partitions of `[n]` with `k` distinguished blocks: split `[n]` into the
/// `m` elements covered by the marked blocks and the rest.
pub fn bnk(n: usize, k: usize) -> BigUint {
    let bells = bell_numbers(n);
    (0..=n).map(|m| binomial(n, m) * stirling2(m, k) * &bells[n - m]).sum()
}

/// Partitions of `[n]` with cr < k and ne < l; `None` leaves a statistic
/// unbounded.
pub fn ncn(k: Option<usize>, l: Option<usize>, n: usize) -> BigUint {
    let rows = k.map_or(n, |k| k.saturating_sub(1));
    let cols = l.map_or(n, |l| l.saturating_sub(1));
    count_walks_bounded(WalkKind::Vacillating, &Shape::empty(), 2 * n, Some(BoxBound { rows, cols }))
}
