//! Crossing and nesting statistics.
//!
//! The production path reads `cr`/`ne` off the vacillating tableau φ(P) and
//! the enhanced variants off the hesitating tableau φ̄(P). The `oracle_*`
//! functions search arc subsets directly and exist for cross-checking.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::setpart::SetPartition;
use crate::walks::{phi, phi_bar};
use crate::young::rsk;

pub const ORACLE_ARC_LIMIT: usize = 16;
pub const ORACLE_BLOCK_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("{what} has {size} elements, oracle limit is {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("r must be at least 1")]
    ZeroR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatRecord {
    pub cr: usize,
    pub ne: usize,
    pub enhanced_cr: usize,
    pub enhanced_ne: usize,
}

impl StatRecord {
    pub fn of(p: &SetPartition) -> StatRecord {
        let (walk, _) = phi(p);
        let (hes, _) = phi_bar(p);
        StatRecord {
            cr: walk.max_rows(),
            ne: walk.max_cols(),
            enhanced_cr: hes.max_rows(),
            enhanced_ne: hes.max_cols(),
        }
    }
}

pub fn cr(p: &SetPartition) -> usize {
    phi(p).0.max_rows()
}

pub fn ne(p: &SetPartition) -> usize {
    phi(p).0.max_cols()
}

pub fn enhanced_cr(p: &SetPartition) -> usize {
    phi_bar(p).0.max_rows()
}

pub fn enhanced_ne(p: &SetPartition) -> usize {
    phi_bar(p).0.max_cols()
}

/// `(a, b)` and `(c, d)` cross: a < c < b < d, in either order.
pub fn crosses(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = if x.0 <= y.0 { (x, y) } else { (y, x) };
    a < c && c < b && b < d
}

/// One arc strictly inside the other.
pub fn nests(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = if x.0 <= y.0 { (x, y) } else { (y, x) };
    a < c && c < d && d < b
}

/// Crossing of the enhanced representation, where a shared endpoint
/// `(i, j), (j, l)` counts.
pub fn enhanced_crosses(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = if x.0 <= y.0 { (x, y) } else { (y, x) };
    a < c && c <= b && b < d
}

/// Nesting of the enhanced representation, where loops `(j, j)` may sit
/// inside an arc.
pub fn enhanced_nests(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = if x.0 <= y.0 { (x, y) } else { (y, x) };
    a < c && c <= d && d < b
}

type Relation = fn((usize, usize), (usize, usize)) -> bool;

fn adjacency(arcs: &[(usize, usize)], rel: Relation) -> Vec<u128> {
    arcs.iter()
        .enumerate()
        .map(|(i, &x)| {
            arcs.iter()
                .enumerate()
                .filter(|&(j, &y)| i != j && rel(x, y))
                .fold(0u128, |m, (j, _)| m | (1 << j))
        })
        .collect()
}

/// Size of a largest clique of a graph on at most 128 vertices.
fn max_clique(adj: &[u128]) -> usize {
    fn grow(adj: &[u128], size: usize, cand: u128, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, size + 1, rest & adj[v], best);
        }
    }
    assert!(adj.len() <= 128);
    let all = if adj.len() == 128 { u128::MAX } else { (1u128 << adj.len()) - 1 };
    let mut best = 0;
    grow(adj, 0, all, &mut best);
    best
}

fn check_arcs(arcs: &[(usize, usize)]) -> Result<(), StatsError> {
    if arcs.len() > ORACLE_ARC_LIMIT {
        return Err(StatsError::TooLarge {
            what: "arc set",
            size: arcs.len(),
            limit: ORACLE_ARC_LIMIT,
        });
    }
    Ok(())
}

fn oracle_clique(arcs: &[(usize, usize)], rel: Relation) -> Result<usize, StatsError> {
    check_arcs(arcs)?;
    Ok(max_clique(&adjacency(arcs, rel)))
}

pub fn oracle_cr(p: &SetPartition) -> Result<usize, StatsError> {
    oracle_clique(&p.arcs(), crosses)
}

pub fn oracle_ne(p: &SetPartition) -> Result<usize, StatsError> {
    oracle_clique(&p.arcs(), nests)
}

fn enhanced_arcs(p: &SetPartition) -> Vec<(usize, usize)> {
    p.enhanced_rep().arcs
}

pub fn oracle_enhanced_cr(p: &SetPartition) -> Result<usize, StatsError> {
    oracle_clique(&enhanced_arcs(p), enhanced_crosses)
}

pub fn oracle_enhanced_ne(p: &SetPartition) -> Result<usize, StatsError> {
    oracle_clique(&enhanced_arcs(p), enhanced_nests)
}

/// Largest number of arcs in a union of `r` cliques of the relation.
fn oracle_union(arcs: &[(usize, usize)], rel: Relation, r: usize) -> Result<usize, StatsError> {
    if r == 0 {
        return Err(StatsError::ZeroR);
    }
    check_arcs(arcs)?;
    let k = arcs.len();
    let adj: Vec<u32> = adjacency(arcs, rel).into_iter().map(|m| m as u32).collect();
    let full = 1usize << k;
    let mut is_clique = vec![false; full];
    is_clique[0] = true;
    for mask in 1..full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        is_clique[mask] = is_clique[rest] && (rest as u32) & !adj[v] == 0;
    }
    // fewest cliques covering each arc subset; cliques are closed under
    // subsets, so disjoint covers suffice
    let mut cover = vec![u8::MAX; full];
    cover[0] = 0;
    let mut best = 0;
    for mask in 1..full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_clique[c] {
                let prev = cover[mask ^ c];
                cover[mask] = cover[mask].min(prev.saturating_add(1));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        if cover[mask] as usize <= r {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

pub fn oracle_cr_r(p: &SetPartition, r: usize) -> Result<usize, StatsError> {
    oracle_union(&p.arcs(), crosses, r)
}

pub fn oracle_ne_r(p: &SetPartition, r: usize) -> Result<usize, StatsError> {
    oracle_union(&p.arcs(), nests, r)
}

/// Left endpoints of the arcs listed by increasing right endpoint.
pub fn alpha_sequence(p: &SetPartition) -> Vec<usize> {
    p.standard_rep().by_right_endpoint().into_iter().map(|(i, _)| i).collect()
}

/// Largest number of arcs in a union of `r` nestings, from the RSK shape
/// of the α-sequence.
pub fn ne_r(p: &SetPartition, r: usize) -> Result<usize, StatsError> {
    if r == 0 {
        return Err(StatsError::ZeroR);
    }
    let (insertion, _) = rsk(&alpha_sequence(p)).expect("left endpoints are distinct");
    Ok(insertion.shape().conjugate().parts().iter().take(r).sum())
}

/// Blocks cross when some a < b < c < d has a, c in one and b, d in the other.
pub fn blocks_cross(x: &[usize], y: &[usize]) -> bool {
    let mut merged: Vec<(usize, bool)> = x.iter().map(|&v| (v, false)).chain(y.iter().map(|&v| (v, true))).collect();
    merged.sort_unstable();
    let runs = 1 + merged.windows(2).filter(|w| w[0].1 != w[1].1).count();
    runs >= 4
}

fn check_blocks(p: &SetPartition) -> Result<(), StatsError> {
    if p.num_blocks() > ORACLE_BLOCK_LIMIT {
        return Err(StatsError::TooLarge {
            what: "partition",
            size: p.num_blocks(),
            limit: ORACLE_BLOCK_LIMIT,
        });
    }
    Ok(())
}

/// Largest number of pairwise crossing blocks. A partition with at least
/// one block scores at least 1.
pub fn klazar_crossing_number(p: &SetPartition) -> Result<usize, StatsError> {
    check_blocks(p)?;
    let blocks = p.blocks();
    let adj: Vec<u128> = (0..blocks.len())
        .map(|i| {
            (0..blocks.len())
                .filter(|&j| i != j && blocks_cross(&blocks[i], &blocks[j]))
                .fold(0u128, |m, j| m | (1 << j))
        })
        .collect();
    Ok(max_clique(&adj))
}

/// Largest number of mutually crossing arcs drawn from distinct blocks,
/// where any two elements of a block may form an arc.
pub fn distinct_block_crossing_number(p: &SetPartition) -> Result<usize, StatsError> {
    check_blocks(p)?;
    let mut arcs = Vec::new();
    let mut owner = Vec::new();
    for (b, block) in p.blocks().iter().enumerate() {
        for (s, &a) in block.iter().enumerate() {
            for &c in &block[s + 1..] {
                arcs.push((a, c));
                owner.push(b);
            }
        }
    }
    if arcs.len() > 128 {
        return Err(StatsError::TooLarge {
            what: "arc set",
            size: arcs.len(),
            limit: 128,
        });
    }
    let adj: Vec<u128> = (0..arcs.len())
        .map(|i| {
            (0..arcs.len())
                .filter(|&j| owner[i] != owner[j] && crosses(arcs[i], arcs[j]))
                .fold(0u128, |m, j| m | (1 << j))
        })
        .collect();
    Ok(max_clique(&adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::partitions_iter;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn catalan(n: usize) -> usize {
        (0..n).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    fn lds(seq: &[usize]) -> usize {
        let mut best = vec![1; seq.len()];
        for i in 0..seq.len() {
            for j in 0..i {
                if seq[j] > seq[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn statistic_examples() {
        let q = p("1457-26-3");
        assert_eq!((cr(&q), ne(&q)), (2, 2));
        assert_eq!((enhanced_cr(&q), enhanced_ne(&q)), (2, 2));
        assert_eq!((oracle_enhanced_cr(&q), oracle_enhanced_ne(&q)), (Ok(2), Ok(2)));
        assert_eq!((cr(&p("13-24")), ne(&p("13-24"))), (2, 1));
        assert_eq!((cr(&p("14-23")), ne(&p("14-23"))), (1, 2));
        let single = SetPartition::singletons(5);
        assert_eq!((cr(&single), ne(&single)), (0, 0));
        assert_eq!((enhanced_cr(&p("1")), enhanced_ne(&p("1"))), (1, 1));
        assert_eq!(enhanced_ne(&p("13-2")), 2);
        assert_eq!(ne(&p("13-2")), 1);
        assert_eq!(oracle_cr(&p("15-246-37")), Ok(2));
        assert_eq!(oracle_cr(&p("12")), Ok(1));
    }

    #[test]
    fn stat_record_json() {
        let rec = StatRecord::of(&p("1457-26-3"));
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"cr":2,"ne":2,"enhanced_cr":2,"enhanced_ne":2}"#
        );
    }

    #[test]
    fn walk_statistics_match_oracles() {
        for n in 0..=8 {
            for q in partitions_iter(n) {
                let rec = StatRecord::of(&q);
                assert_eq!(Ok(rec.cr), oracle_cr(&q), "{q}");
                assert_eq!(Ok(rec.ne), oracle_ne(&q), "{q}");
                assert_eq!(rec.cr == 0, q.arcs().is_empty());
                assert_eq!(rec.ne == 0, q.arcs().is_empty());
                assert!(rec.cr <= rec.enhanced_cr && rec.enhanced_cr <= rec.cr + 1, "{q}");
                assert!(rec.ne <= rec.enhanced_ne && rec.enhanced_ne <= rec.ne + 1, "{q}");
                assert_eq!(lds(&alpha_sequence(&q)), rec.ne);
                if n <= 7 {
                    assert_eq!(Ok(rec.enhanced_cr), oracle_enhanced_cr(&q), "{q}");
                    assert_eq!(Ok(rec.enhanced_ne), oracle_enhanced_ne(&q), "{q}");
                }
            }
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_sequence(&p("1457-26-3")), vec![1, 4, 2, 5]);
        assert_eq!(alpha_sequence(&p("14-23")), vec![2, 1]);
        assert!(alpha_sequence(&p("1-2")).is_empty());
    }

    #[test]
    fn ne_r_examples() {
        assert_eq!(ne_r(&p("14-23"), 1), Ok(2));
        assert_eq!(ne_r(&p("1-2-3"), 2), Ok(0));
        assert_eq!(ne_r(&p("12"), 0), Err(StatsError::ZeroR));
        assert_eq!(oracle_cr_r(&p("13-24"), 1), Ok(2));
        assert_eq!(oracle_ne_r(&p("13-24"), 1), Ok(1));
        assert_eq!(oracle_ne_r(&p("12"), 1), Ok(1));
        assert_eq!(oracle_cr_r(&p("12"), 1), Ok(1));
        let q = p("1457-26-3");
        assert_eq!(oracle_ne_r(&q, 1), Ok(2));
        assert_eq!(oracle_ne_r(&q, 2), Ok(3));
        assert_eq!(ne_r(&q, 2), Ok(3));
    }

    #[test]
    fn ne_r_matches_oracle() {
        for n in 0..=8 {
            for q in partitions_iter(n) {
                for r in 1..=3 {
                    assert_eq!(ne_r(&q, r), oracle_ne_r(&q, r), "{q} r={r}");
                }
                assert_eq!(oracle_cr_r(&q, 1), oracle_cr(&q));
                assert_eq!(ne_r(&q, n.max(1)), Ok(q.arcs().len()));
            }
        }
    }

    #[test]
    fn klazar_examples() {
        assert_eq!(klazar_crossing_number(&p("15-246-37")), Ok(3));
        assert_eq!(distinct_block_crossing_number(&p("15-246-37")), Ok(3));
        assert_eq!(cr(&p("15-246-37")), 2);
        assert_eq!(klazar_crossing_number(&SetPartition::singletons(3)), Ok(1));
        assert_eq!(klazar_crossing_number(&SetPartition::singletons(0)), Ok(0));
        assert_eq!(klazar_crossing_number(&p("13-24")), Ok(2));
    }

    #[test]
    fn three_notions_are_nested() {
        for k in [3, 4] {
            let mut one_not_two = false;
            for n in 0..=8 {
                for q in partitions_iter(n) {
                    let first = cr(&q) >= k;
                    let second = distinct_block_crossing_number(&q).unwrap() >= k;
                    let third = klazar_crossing_number(&q).unwrap() >= k;
                    assert!(!first || second, "{q}");
                    assert!(!second || third, "{q}");
                    // for k = 3 pairwise crossing blocks already give the six-element chain
                    if k == 3 {
                        assert_eq!(second, third, "{q}");
                    }
                    one_not_two |= second && !first;
                }
            }
            assert!(one_not_two || k == 4, "k={k}");
        }
        // the last two notions first separate at k = 4
        let q = p("147-26-38-59");
        assert_eq!(klazar_crossing_number(&q), Ok(4));
        assert_eq!(distinct_block_crossing_number(&q), Ok(3));
        assert!(cr(&q) < 4);
    }

    #[test]
    fn classical_noncrossing_and_nonnesting() {
        let classical_nonnesting = |q: &SetPartition| {
            q.blocks().iter().all(|outer| {
                q.blocks().iter().filter(|b| *b != outer).all(|inner| {
                    outer.iter().all(|&a| {
                        outer.iter().filter(|&&e| e > a).all(|&e| {
                            inner.iter().all(|&b| {
                                inner.iter().filter(|&&d| d > b).all(|&d| {
                                    !(a < b && d < e) || outer.iter().any(|&c| b < c && c < d)
                                })
                            })
                        })
                    })
                })
            })
        };
        for n in 0..=10 {
            let (mut nc, mut nn) = (0, 0);
            for q in partitions_iter(n) {
                let c = cr(&q) <= 1;
                let e = ne(&q) <= 1;
                nc += c as usize;
                nn += e as usize;
                if n <= 7 {
                    assert_eq!(c, klazar_crossing_number(&q).unwrap() <= 1, "{q}");
                    assert_eq!(e, classical_nonnesting(&q), "{q}");
                }
            }
            assert_eq!((nc, nn), (catalan(n), catalan(n)), "n={n}");
        }
    }

    #[test]
    fn oracle_limits() {
        let big = SetPartition::new(18, vec![(1..=18).collect()]).unwrap();
        assert!(matches!(oracle_cr(&big), Err(StatsError::TooLarge { .. })));
        assert_eq!(cr(&big), 1);
        assert!(matches!(
            klazar_crossing_number(&SetPartition::singletons(13)),
            Err(StatsError::TooLarge { .. })
        ));
    }
}
