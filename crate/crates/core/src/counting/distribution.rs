//! Joint (cr, ne) distribution tables by exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CountingError;
use crate::setpart::{matching_prefixes, rgs_prefixes, MatchingIter, PartitionIter, SetPartition};
use crate::walks::{phi, phi_bar};

pub const PARTITION_BOUND: usize = 10;
pub const MATCHING_BOUND: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectKind {
    Partitions,
    Matchings,
}

impl ObjectKind {
    fn label(self) -> &'static str {
        match self {
            ObjectKind::Partitions => "partitions",
            ObjectKind::Matchings => "matchings",
        }
    }
}

/// Standard (cr, ne) or enhanced (cr̄, nē).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    #[default]
    Standard,
    Enhanced,
}

/// Restriction to one class: (min, max) for the standard statistic and
/// (min \ max, max \ min) for the enhanced one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetFilter {
    pub min: BTreeSet<usize>,
    pub max: BTreeSet<usize>,
}

impl SetFilter {
    pub fn new(min: impl IntoIterator<Item = usize>, max: impl IntoIterator<Item = usize>) -> Self {
        SetFilter {
            min: min.into_iter().collect(),
            max: max.into_iter().collect(),
        }
    }

    /// The class key of a partition under the given statistic.
    pub fn of(p: &SetPartition, statistic: Statistic) -> SetFilter {
        let (mins, maxs) = (p.min_set(), p.max_set());
        match statistic {
            Statistic::Standard => SetFilter { min: mins, max: maxs },
            Statistic::Enhanced => SetFilter {
                min: mins.difference(&maxs).copied().collect(),
                max: maxs.difference(&mins).copied().collect(),
            },
        }
    }

    fn validate(&self, n: usize, statistic: Statistic) -> Result<(), CountingError> {
        if self.min.len() != self.max.len() {
            return Err(CountingError::Filter(format!(
                "|S| = {} differs from |T| = {}",
                self.min.len(),
                self.max.len()
            )));
        }
        if let Some(v) = self.min.iter().chain(&self.max).find(|&&v| v == 0 || v > n) {
            return Err(CountingError::Filter(format!("{v} is outside [{n}]")));
        }
        if statistic == Statistic::Enhanced && !self.min.is_disjoint(&self.max) {
            return Err(CountingError::Filter("S and T must be disjoint".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableSpec {
    pub object: ObjectKind,
    pub n: usize,
    pub filter: Option<SetFilter>,
    pub statistic: Statistic,
}

impl TableSpec {
    pub fn partitions(n: usize) -> Self {
        TableSpec {
            object: ObjectKind::Partitions,
            n,
            filter: None,
            statistic: Statistic::Standard,
        }
    }

    /// Complete matchings on `[n]`, `n` even.
    pub fn matchings(n: usize) -> Self {
        TableSpec {
            object: ObjectKind::Matchings,
            ..TableSpec::partitions(n)
        }
    }

    pub fn with_filter(mut self, filter: SetFilter) -> Self {
        self.filter = Some(filter);
        self
    }

    pub fn enhanced(mut self) -> Self {
        self.statistic = Statistic::Enhanced;
        self
    }

    fn validate(&self) -> Result<(), CountingError> {
        if self.object == ObjectKind::Matchings && self.n % 2 == 1 {
            return Err(CountingError::OddMatchingSize(self.n));
        }
        if let Some(f) = &self.filter {
            f.validate(self.n, self.statistic)?;
        }
        Ok(())
    }

    fn bound(&self) -> usize {
        match self.object {
            ObjectKind::Partitions => PARTITION_BOUND,
            ObjectKind::Matchings => MATCHING_BOUND,
        }
    }
}

/// Counts indexed by (cr, ne), or by the enhanced pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub spec: TableSpec,
    pub cells: BTreeMap<(usize, usize), BigUint>,
}

impl DistributionTable {
    pub fn empty(spec: TableSpec) -> Self {
        DistributionTable {
            spec,
            cells: BTreeMap::new(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.cells.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.cells.values().sum()
    }

    pub fn record(&mut self, cell: (usize, usize)) {
        *self.cells.entry(cell).or_insert_with(BigUint::zero) += 1u32;
    }

    /// Cellwise sum; the merge is associative and commutative.
    pub fn merge(&mut self, other: &DistributionTable) {
        for (cell, count) in &other.cells {
            *self.cells.entry(*cell).or_insert_with(BigUint::zero) += count;
        }
    }

    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        self.cells.keys().copied().find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("cr,ne,count\n");
        for ((i, j), c) in &self.cells {
            writeln!(out, "{i},{j},{c}").unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let max_i = self.cells.keys().map(|c| c.0).max().unwrap_or(0);
        let max_j = self.cells.keys().map(|c| c.1).max().unwrap_or(0);
        let mut out = String::from("cr\\ne");
        for j in 0..=max_j {
            write!(out, "\t{j}").unwrap();
        }
        out.push('\n');
        for i in 0..=max_i {
            write!(out, "{i}").unwrap();
            for j in 0..=max_j {
                write!(out, "\t{}", self.get(i, j)).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct RawCell {
    cr: usize,
    ne: usize,
    count: String,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    object: ObjectKind,
    n: usize,
    filter: Option<SetFilter>,
    statistic: Statistic,
    cells: Vec<RawCell>,
}

impl Serialize for DistributionTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawTable {
            object: self.spec.object,
            n: self.spec.n,
            filter: self.spec.filter.clone(),
            statistic: self.spec.statistic,
            cells: self
                .cells
                .iter()
                .map(|(&(cr, ne), c)| RawCell {
                    cr,
                    ne,
                    count: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DistributionTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawTable::deserialize(deserializer)?;
        let mut cells = BTreeMap::new();
        for c in raw.cells {
            let count = c.count.parse::<BigUint>().map_err(serde::de::Error::custom)?;
            cells.insert((c.cr, c.ne), count);
        }
        Ok(DistributionTable {
            spec: TableSpec {
                object: raw.object,
                n: raw.n,
                filter: raw.filter,
                statistic: raw.statistic,
            },
            cells,
        })
    }
}

fn statistic_pair(p: &SetPartition, statistic: Statistic) -> (usize, usize) {
    let walk = match statistic {
        Statistic::Standard => phi(p).0,
        Statistic::Enhanced => phi_bar(p).0,
    };
    (walk.max_rows(), walk.max_cols())
}

fn tally(spec: &TableSpec, objects: impl Iterator<Item = SetPartition>) -> DistributionTable {
    let mut table = DistributionTable::empty(spec.clone());
    for p in objects {
        if let Some(f) = &spec.filter {
            if &SetFilter::of(&p, spec.statistic) != f {
                continue;
            }
        }
        table.record(statistic_pair(&p, spec.statistic));
    }
    table
}

fn all_objects(spec: &TableSpec) -> Box<dyn Iterator<Item = SetPartition>> {
    match spec.object {
        ObjectKind::Partitions => Box::new(PartitionIter::new(spec.n)),
        ObjectKind::Matchings => Box::new(MatchingIter::new(spec.n / 2)),
    }
}

fn check_symmetric(table: DistributionTable) -> Result<DistributionTable, CountingError> {
    match table.first_asymmetry() {
        Some((i, j)) => Err(CountingError::Asymmetric(i, j)),
        None => Ok(table),
    }
}

/// Exact table by enumerating every object, within the brute-force bound.
pub fn distribution(spec: &TableSpec) -> Result<DistributionTable, CountingError> {
    spec.validate()?;
    if spec.n > spec.bound() {
        return Err(CountingError::BoundExceeded {
            object: spec.object.label(),
            n: spec.n,
            limit: spec.bound(),
        });
    }
    check_symmetric(tally(spec, all_objects(spec)))
}

/// Same table, with the enumeration split by generator prefix across
/// `shards` worker threads. No size bound is applied.
pub fn distribution_sharded(spec: &TableSpec, shards: usize) -> Result<DistributionTable, CountingError> {
    spec.validate()?;
    let shards = shards.max(1);
    let jobs: Vec<Vec<usize>> = match spec.object {
        ObjectKind::Partitions => {
            let mut depth = 1;
            while depth < spec.n && rgs_prefixes(spec.n, depth).len() < 4 * shards {
                depth += 1;
            }
            rgs_prefixes(spec.n, depth)
        }
        ObjectKind::Matchings => {
            let m = spec.n / 2;
            let mut depth = 0;
            while depth < m && matching_prefixes(m, depth).len() < 4 * shards {
                depth += 1;
            }
            matching_prefixes(m, depth)
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(shards)
        .build()
        .map_err(|e| CountingError::InvalidParameter(e.to_string()))?;
    let partials: Vec<DistributionTable> = pool.install(|| {
        jobs.par_iter()
            .map(|prefix| {
                let objects: Box<dyn Iterator<Item = SetPartition>> = match spec.object {
                    ObjectKind::Partitions => Box::new(PartitionIter::with_prefix(spec.n, prefix).expect("generated prefix")),
                    ObjectKind::Matchings => Box::new(MatchingIter::with_prefix(spec.n / 2, prefix).expect("generated prefix")),
                };
                tally(spec, objects)
            })
            .collect()
    });
    let mut table = DistributionTable::empty(spec.clone());
    for part in &partials {
        table.merge(part);
    }
    check_symmetric(table)
}

/// One table per nonempty class, from a single pass over the objects.
pub fn grouped_distributions(
    object: ObjectKind,
    n: usize,
    statistic: Statistic,
) -> Result<BTreeMap<SetFilter, DistributionTable>, CountingError> {
    let base = TableSpec {
        object,
        n,
        filter: None,
        statistic,
    };
    base.validate()?;
    let mut groups: BTreeMap<SetFilter, DistributionTable> = BTreeMap::new();
    for p in all_objects(&base) {
        let key = SetFilter::of(&p, statistic);
        let cell = statistic_pair(&p, statistic);
        groups
            .entry(key.clone())
            .or_insert_with(|| DistributionTable::empty(base.clone().with_filter(key)))
            .record(cell);
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::numbers::{bell, matching_count};
    use num_traits::One;

    #[test]
    fn small_tables() {
        let t = distribution(&TableSpec::partitions(4)).unwrap();
        assert_eq!(t.get(2, 1), BigUint::one());
        assert_eq!(t.get(1, 2), BigUint::one());
        assert_eq!(t.total(), BigUint::from(15u32));
        let empty = distribution(&TableSpec::partitions(0)).unwrap();
        assert_eq!(empty.cells.len(), 1);
        assert_eq!(empty.get(0, 0), BigUint::one());
        let m = distribution(&TableSpec::matchings(6)).unwrap();
        assert_eq!(m.total(), BigUint::from(15u32));
        assert!(m.is_symmetric());
    }

    #[test]
    fn totals() {
        for n in 0..=8 {
            assert_eq!(distribution(&TableSpec::partitions(n)).unwrap().total(), bell(n));
            assert_eq!(distribution(&TableSpec::partitions(n).enhanced()).unwrap().total(), bell(n));
        }
        for m in 0..=5 {
            assert_eq!(distribution(&TableSpec::matchings(2 * m)).unwrap().total(), matching_count(m));
        }
    }

    #[test]
    fn filtered_table() {
        let spec = TableSpec::partitions(4).with_filter(SetFilter::new([1, 2], [3, 4]));
        let t = distribution(&spec).unwrap();
        // 13-24 and 14-23
        assert_eq!(t.total(), BigUint::from(2u32));
        assert_eq!(t.get(2, 1), BigUint::one());
        let bad = TableSpec::partitions(4).with_filter(SetFilter::new([1], [3, 4]));
        assert!(matches!(distribution(&bad), Err(CountingError::Filter(_))));
        let overlap = TableSpec::partitions(4).enhanced().with_filter(SetFilter::new([1], [1]));
        assert!(matches!(distribution(&overlap), Err(CountingError::Filter(_))));
    }

    #[test]
    fn bounds_and_errors() {
        assert!(matches!(
            distribution(&TableSpec::partitions(11)),
            Err(CountingError::BoundExceeded { .. })
        ));
        assert_eq!(distribution(&TableSpec::matchings(5)), Err(CountingError::OddMatchingSize(5)));
    }

    #[test]
    fn sharded_equals_serial() {
        for n in [0, 1, 5, 8] {
            let spec = TableSpec::partitions(n);
            assert_eq!(distribution_sharded(&spec, 3).unwrap(), distribution(&spec).unwrap());
        }
        let spec = TableSpec::matchings(10);
        assert_eq!(distribution_sharded(&spec, 4).unwrap(), distribution(&spec).unwrap());
        let spec = TableSpec::partitions(7).enhanced().with_filter(SetFilter::new([1], [7]));
        assert_eq!(distribution_sharded(&spec, 2).unwrap(), distribution(&spec).unwrap());
    }

    #[test]
    fn grouped_tables_sum_to_whole() {
        let groups = grouped_distributions(ObjectKind::Partitions, 6, Statistic::Standard).unwrap();
        let mut whole = DistributionTable::empty(TableSpec::partitions(6));
        for t in groups.values() {
            whole.merge(t);
            assert!(t.is_symmetric());
        }
        assert_eq!(whole.cells, distribution(&TableSpec::partitions(6)).unwrap().cells);
        let (key, one) = groups.iter().next().unwrap();
        assert_eq!(one, &distribution(&TableSpec::partitions(6).with_filter(key.clone())).unwrap());
    }

    #[test]
    fn table_formats() {
        let t = distribution(&TableSpec::partitions(3)).unwrap();
        assert_eq!(t.to_csv(), "cr,ne,count\n0,0,1\n1,1,4\n");
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["object"], "partitions");
        assert_eq!(json["n"], 3);
        assert!(json["filter"].is_null());
        assert_eq!(json["cells"][1], serde_json::json!({"cr": 1, "ne": 1, "count": "4"}));
        let back: DistributionTable = serde_json::from_value(json).unwrap();
        assert_eq!(back, t);
        assert!(t.to_text().starts_with("cr\\ne\t0\t1\n0\t1\t0\n"));
    }
}
