//! Set partitions of `[n] = {1, ..., n}`, their arc representations, and
//! exhaustive generators.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetPartError {
    #[error("blocks must be non-empty")]
    EmptyBlock,
    #[error("element {value} lies outside [1, {n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("element {0} appears in more than one block")]
    Overlap(usize),
    #[error("element {0} is not covered by any block")]
    Missing(usize),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("arc set is not a standard representation: {0}")]
    InvalidArcs(String),
    #[error("not a restricted growth string: {0:?}")]
    InvalidRgs(Vec<usize>),
    #[error("partition {0} is not a complete matching")]
    NotCompleteMatching(String),
}

/// A partition of `[n]` into sorted blocks, blocks ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = SetPartError;

    fn try_from(raw: RawPartition) -> Result<Self, Self::Error> {
        SetPartition::new(raw.n, raw.blocks)
    }
}

impl SetPartition {
    /// Validates that `blocks` partition `[n]` and puts them in canonical order.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, SetPartError> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(SetPartError::EmptyBlock);
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > n {
                    return Err(SetPartError::OutOfRange { value: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(SetPartError::Overlap(v));
                }
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(SetPartError::Missing(v));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The partition of `[n]` whose blocks are `{i : rgs[i-1] = b}`.
    pub fn from_rgs(rgs: &[usize]) -> Result<Self, SetPartError> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            match b.cmp(&blocks.len()) {
                std::cmp::Ordering::Less => blocks[b].push(i + 1),
                std::cmp::Ordering::Equal => blocks.push(vec![i + 1]),
                std::cmp::Ordering::Greater => return Err(SetPartError::InvalidRgs(rgs.to_vec())),
            }
        }
        Ok(SetPartition { n: rgs.len(), blocks })
    }

    /// Reassembles a partition from its standard representation.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, SetPartError> {
        let mut next = vec![0usize; n + 1];
        let mut has_prev = vec![false; n + 1];
        for &(i, j) in arcs {
            if i == 0 || j > n || i >= j {
                return Err(SetPartError::InvalidArcs(format!("bad arc ({i}, {j}) on [{n}]")));
            }
            if next[i] != 0 {
                return Err(SetPartError::InvalidArcs(format!("{i} is a left endpoint twice")));
            }
            if std::mem::replace(&mut has_prev[j], true) {
                return Err(SetPartError::InvalidArcs(format!("{j} is a right endpoint twice")));
            }
            next[i] = j;
        }
        let mut blocks = Vec::new();
        for start in (1..=n).filter(|&v| !has_prev[v]) {
            let mut block = vec![start];
            let mut v = start;
            while next[v] != 0 {
                if next[v] < v {
                    return Err(SetPartError::InvalidArcs("arcs not in numerical order".into()));
                }
                v = next[v];
                block.push(v);
            }
            blocks.push(block);
        }
        SetPartition::new(n, blocks)
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_singletons(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    /// Arcs of the standard representation, sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn standard_rep(&self) -> ArcDiagram {
        ArcDiagram {
            n: self.n,
            arcs: self.arcs(),
            enhanced: false,
        }
    }

    /// Standard representation plus a loop `(i, i)` at every isolated point.
    pub fn enhanced_rep(&self) -> ArcDiagram {
        let mut arcs = self.arcs();
        arcs.extend(self.blocks.iter().filter(|b| b.len() == 1).map(|b| (b[0], b[0])));
        arcs.sort_unstable();
        ArcDiagram {
            n: self.n,
            arcs,
            enhanced: true,
        }
    }

    pub fn min_set(&self) -> BTreeSet<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn max_set(&self) -> BTreeSet<usize> {
        self.blocks.iter().map(|b| *b.last().unwrap()).collect()
    }

    pub fn is_complete_matching(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    /// Restricted growth string: `rgs[i-1]` is the block index of `i`.
    pub fn rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                rgs[v - 1] = b;
            }
        }
        rgs
    }
}

impl fmt::Display for SetPartition {
    /// Dash notation: `1457-26-3` for `n ≤ 9`, `[1,10]-[2]-...` otherwise, `∅` for `n = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("∅");
        }
        let blocks: Vec<String> = if self.n <= 9 {
            self.blocks
                .iter()
                .map(|b| b.iter().map(|v| v.to_string()).collect())
                .collect()
        } else {
            self.blocks
                .iter()
                .map(|b| format!("[{}]", b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
                .collect()
        };
        f.write_str(&blocks.join("-"))
    }
}

impl FromStr for SetPartition {
    type Err = SetPartError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

/// Parses the dash notation produced by [`format_partition`].
pub fn parse_partition(text: &str) -> Result<SetPartition, SetPartError> {
    let t = text.trim();
    if t.is_empty() || t == "∅" {
        return Ok(SetPartition::singletons(0));
    }
    let bad = || SetPartError::Parse(text.to_string());
    let mut blocks = Vec::new();
    for piece in t.split('-') {
        let piece = piece.trim();
        let block: Vec<usize> = if let Some(inner) = piece.strip_prefix('[').and_then(|p| p.strip_suffix(']')) {
            inner
                .split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            piece
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        if block.is_empty() {
            return Err(bad());
        }
        blocks.push(block);
    }
    let n = blocks.iter().map(Vec::len).sum();
    SetPartition::new(n, blocks)
}

pub fn format_partition(p: &SetPartition) -> String {
    p.to_string()
}

/// An arc diagram on `[n]`; loops `(i, i)` appear only in enhanced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub enhanced: bool,
}

impl ArcDiagram {
    /// Proper arcs `(i, j)` with `i < j`.
    pub fn proper_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied().filter(|(i, j)| i < j)
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().filter(|(i, j)| i == j).map(|&(i, _)| i)
    }

    /// Arcs sorted by right endpoint.
    pub fn by_right_endpoint(&self) -> Vec<(usize, usize)> {
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable_by_key(|&(i, j)| (j, i));
        arcs
    }

    /// For each vertex, the partner to its right (`v` is a left endpoint of `(v, k)`).
    pub fn right_partners(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n + 1];
        for (i, j) in self.proper_arcs() {
            out[i] = Some(j);
        }
        out
    }

    /// For each vertex, the partner to its left (`v` is a right endpoint of `(i, v)`).
    pub fn left_partners(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n + 1];
        for (i, j) in self.proper_arcs() {
            out[j] = Some(i);
        }
        out
    }
}

/// Iterator over all partitions of `[n]` in lexicographic order of their
/// restricted growth strings, optionally pinned to a fixed RGS prefix.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[0..=i])
    prefix_max: Vec<usize>,
    fixed: usize,
    done: bool,
}

impl PartitionIter {
    pub fn new(n: usize) -> Self {
        PartitionIter::with_prefix(n, &[]).expect("empty prefix is valid")
    }

    /// Only partitions whose RGS starts with `prefix`.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self, SetPartError> {
        if prefix.len() > n || (!prefix.is_empty() && prefix[0] != 0) {
            return Err(SetPartError::InvalidRgs(prefix.to_vec()));
        }
        let mut rgs = prefix.to_vec();
        rgs.resize(n, 0);
        let mut prefix_max = Vec::with_capacity(n);
        let mut m = 0;
        for (i, &b) in rgs.iter().enumerate() {
            if i > 0 && b > m + 1 {
                return Err(SetPartError::InvalidRgs(prefix.to_vec()));
            }
            m = m.max(b);
            prefix_max.push(m);
        }
        Ok(PartitionIter {
            rgs,
            prefix_max,
            fixed: prefix.len().max(1),
            done: false,
        })
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (self.fixed..n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for k in i + 1..n {
                    self.rgs[k] = 0;
                    self.prefix_max[k] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let p = SetPartition::from_rgs(&self.rgs).expect("iterator keeps a valid RGS");
        self.advance();
        Some(p)
    }
}

pub fn partitions_iter(n: usize) -> PartitionIter {
    PartitionIter::new(n)
}

/// All valid RGS prefixes of length `depth` (clamped to `n`), used to shard
/// exhaustive sweeps.
pub fn rgs_prefixes(n: usize, depth: usize) -> Vec<Vec<usize>> {
    let depth = depth.min(n);
    if depth == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut stack = vec![(vec![0usize], 0usize)];
    while let Some((prefix, max)) = stack.pop() {
        if prefix.len() == depth {
            out.push(prefix);
            continue;
        }
        for b in (0..=max + 1).rev() {
            let mut p = prefix.clone();
            p.push(b);
            stack.push((p, max.max(b)));
        }
    }
    out
}

/// Iterator over all complete matchings of `[2m]`, lexicographic in the
/// partner of the smallest unmatched point.
#[derive(Debug, Clone)]
pub struct MatchingIter {
    m: usize,
    choices: Vec<usize>,
    fixed: usize,
    done: bool,
}

impl MatchingIter {
    pub fn new(m: usize) -> Self {
        MatchingIter::with_prefix(m, &[]).expect("empty prefix is valid")
    }

    /// Only matchings whose first choices (partner index of the smallest
    /// unmatched point among the remaining ones) equal `prefix`.
    pub fn with_prefix(m: usize, prefix: &[usize]) -> Result<Self, SetPartError> {
        let valid = prefix.len() <= m && prefix.iter().enumerate().all(|(t, &c)| c < 2 * (m - t) - 1);
        if !valid {
            return Err(SetPartError::InvalidRgs(prefix.to_vec()));
        }
        let mut choices = prefix.to_vec();
        choices.resize(m, 0);
        Ok(MatchingIter {
            m,
            choices,
            fixed: prefix.len(),
            done: false,
        })
    }

    fn decode(&self) -> SetPartition {
        let mut free: Vec<usize> = (1..=2 * self.m).collect();
        let mut blocks = Vec::with_capacity(self.m);
        for &c in &self.choices {
            let left = free.remove(0);
            let right = free.remove(c);
            blocks.push(vec![left, right]);
        }
        SetPartition {
            n: 2 * self.m,
            blocks,
        }
    }
}

impl Iterator for MatchingIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.decode();
        self.done = true;
        for t in (self.fixed..self.m).rev() {
            let options = 2 * (self.m - t) - 1;
            if self.choices[t] + 1 < options {
                self.choices[t] += 1;
                self.choices[t + 1..].iter_mut().for_each(|c| *c = 0);
                self.done = false;
                break;
            }
        }
        Some(out)
    }
}

pub fn matchings_iter(m: usize) -> MatchingIter {
    MatchingIter::new(m)
}

/// All choice prefixes of length `depth` (clamped to `m`) for sharding
/// matching sweeps.
pub fn matching_prefixes(m: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for t in 0..depth.min(m) {
        let options = 2 * (m - t) - 1;
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..options).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn bell_oracle(n: usize) -> u64 {
        // Bell triangle
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn standard_rep_examples() {
        assert_eq!(p("1457-26-3").standard_rep().arcs, vec![(1, 4), (2, 6), (4, 5), (5, 7)]);
        assert!(SetPartition::singletons(3).standard_rep().arcs.is_empty());
        assert_eq!(p("15-246-37").standard_rep().arcs, vec![(1, 5), (2, 4), (3, 7), (4, 6)]);
    }

    #[test]
    fn enhanced_rep_examples() {
        let e = p("1457-26-3").enhanced_rep();
        assert_eq!(e.arcs, vec![(1, 4), (2, 6), (3, 3), (4, 5), (5, 7)]);
        assert!(e.enhanced);
        assert_eq!(p("1").enhanced_rep().arcs, vec![(1, 1)]);
        assert_eq!(p("12-3").enhanced_rep().arcs, vec![(1, 2), (3, 3)]);
    }

    #[test]
    fn min_max_examples() {
        let q = p("135-26-4");
        assert_eq!(q.min_set(), set(&[1, 2, 4]));
        assert_eq!(q.max_set(), set(&[4, 5, 6]));
        let s = SetPartition::singletons(4);
        assert_eq!(s.min_set(), set(&[1, 2, 3, 4]));
        assert_eq!(s.max_set(), set(&[1, 2, 3, 4]));
        let m = p("12-34");
        assert_eq!(m.min_set(), set(&[1, 3]));
        assert_eq!(m.max_set(), set(&[2, 4]));
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let expected = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_iter(n).count() as u64, e);
            assert_eq!(bell_oracle(n), e);
        }
        assert_eq!(partitions_iter(0).next(), Some(SetPartition::singletons(0)));
    }

    #[test]
    fn partitions_are_distinct_and_ordered() {
        let all: Vec<_> = partitions_iter(6).map(|p| p.rgs()).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sharded_iteration_covers_everything_once() {
        for n in 0..=7 {
            for depth in 0..=3 {
                let mut all: Vec<_> = rgs_prefixes(n, depth)
                    .into_iter()
                    .flat_map(|pre| PartitionIter::with_prefix(n, &pre).unwrap())
                    .collect();
                let total = all.len();
                all.sort();
                all.dedup();
                assert_eq!(all.len(), total);
                assert_eq!(total as u64, bell_oracle(n));
            }
        }
    }

    #[test]
    fn sharded_matchings_cover_everything_once() {
        for m in 0..=5 {
            let whole: Vec<_> = matchings_iter(m).collect();
            for depth in 0..=2 {
                let sharded: Vec<_> = matching_prefixes(m, depth)
                    .into_iter()
                    .flat_map(|pre| MatchingIter::with_prefix(m, &pre).unwrap())
                    .collect();
                assert_eq!(sharded, whole);
            }
        }
        assert!(MatchingIter::with_prefix(2, &[3]).is_err());
    }

    #[test]
    fn matching_generation() {
        assert_eq!(matchings_iter(1).collect::<Vec<_>>(), vec![p("12")]);
        assert_eq!(matchings_iter(2).collect::<Vec<_>>(), vec![p("12-34"), p("13-24"), p("14-23")]);
        // (2m-1)!!
        for (m, e) in [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105), (5, 945), (6, 10395)] {
            let all: Vec<_> = matchings_iter(m).collect();
            assert_eq!(all.len(), e);
            assert!(all.iter().all(|x| x.is_complete_matching() && x.n() == 2 * m));
        }
    }

    #[test]
    fn matching_characterization() {
        for n in 0..=8 {
            for q in partitions_iter(n) {
                let (mn, mx) = (q.min_set(), q.max_set());
                let covers = mn.union(&mx).count() == n;
                let disjoint = mn.is_disjoint(&mx);
                assert_eq!(q.is_complete_matching(), covers && disjoint, "{q}");
            }
        }
    }

    #[test]
    fn arc_diagram_invariants() {
        for n in 0..=8 {
            for q in partitions_iter(n) {
                let std = q.standard_rep();
                assert_eq!(std.arcs.len(), n - q.num_blocks());
                assert_eq!(q.enhanced_rep().loops().count(), q.num_singletons());
                let mut lefts = vec![0; n + 1];
                let mut rights = vec![0; n + 1];
                for &(i, j) in &std.arcs {
                    assert!(i < j);
                    lefts[i] += 1;
                    rights[j] += 1;
                }
                assert!(lefts.iter().chain(&rights).all(|&c| c <= 1));
                assert_eq!(SetPartition::from_arcs(n, &std.arcs).unwrap(), q);
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!(p("1").blocks(), &[vec![1]]);
        assert_eq!(parse_partition("12-2"), Err(SetPartError::Overlap(2)));
        assert!(matches!(parse_partition("13"), Err(SetPartError::OutOfRange { value: 3, .. })));
        assert!(parse_partition("1-a").is_err());
        assert!(parse_partition("1--2").is_err());
    }

    #[test]
    fn bracket_form_for_large_n() {
        let mut blocks = vec![vec![1, 10]];
        blocks.extend((2..=9).map(|v| vec![v]));
        let q = SetPartition::new(10, blocks).unwrap();
        let text = format_partition(&q);
        assert_eq!(text, "[1,10]-[2]-[3]-[4]-[5]-[6]-[7]-[8]-[9]");
        assert_eq!(parse_partition(&text).unwrap(), q);
    }

    #[test]
    fn json_schema() {
        let q = p("13-2");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"n":3,"blocks":[[1,3],[2]]}"#);
        assert_eq!(serde_json::from_str::<SetPartition>(&json).unwrap(), q);
        assert!(serde_json::from_str::<SetPartition>(r#"{"n":3,"blocks":[[1,3]]}"#).is_err());
        let arcs = serde_json::to_string(&q.enhanced_rep()).unwrap();
        assert_eq!(arcs, r#"{"n":3,"arcs":[[1,3],[2,2]],"enhanced":true}"#);
    }

    fn arb_partition() -> impl Strategy<Value = SetPartition> {
        proptest::collection::vec(0usize..12, 0..=14).prop_map(|raw| {
            let mut rgs = Vec::with_capacity(raw.len());
            let mut max = 0;
            for (i, r) in raw.into_iter().enumerate() {
                let b = if i == 0 { 0 } else { r % (max + 2) };
                max = max.max(b);
                rgs.push(b);
            }
            SetPartition::from_rgs(&rgs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(q in arb_partition()) {
            prop_assert_eq!(parse_partition(&format_partition(&q)).unwrap(), q);
        }
    }
}
