//! Integer partitions as nodes of Young's lattice, standard Young tableaux
//! with arbitrary distinct content, and Schensted row insertion.
//!
//! Cells are addressed with zero-based `(row, col)` coordinates; row 0 is the
//! top (longest) row.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("shape parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("cannot parse shape from {0:?}")]
    ParseShape(String),
    #[error("tableau entries must be positive integers")]
    ZeroEntry,
    #[error("entry {0} occurs more than once")]
    DuplicateEntry(usize),
    #[error("rows {0:?} do not form a standard tableau")]
    NotStandard(Vec<Vec<usize>>),
    #[error("cell ({row}, {col}) is not a removable corner")]
    InvalidCorner { row: usize, col: usize },
    #[error("cell ({row}, {col}) is not an addable cell for entry {value}")]
    InvalidAddition { row: usize, col: usize, value: usize },
}

/// A zero-based cell position in a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// An integer partition λ, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = YoungError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.parts
    }
}

impl Shape {
    pub fn empty() -> Self {
        Shape { parts: Vec::new() }
    }

    /// Builds a shape from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, YoungError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotWeaklyDecreasing(parts));
        }
        Ok(Shape { parts })
    }

    /// The single-row shape `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Shape::empty()
        } else {
            Shape { parts: vec![n] }
        }
    }

    /// The single-column shape `(1^n)`.
    pub fn column(n: usize) -> Self {
        Shape { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows λ'_1.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns λ_1.
    pub fn num_cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `r`, zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.num_rows() <= rows && self.num_cols() <= cols
    }

    pub fn conjugate(&self) -> Shape {
        let cols = self.num_cols();
        let parts = (1..=cols)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Shape { parts }
    }

    /// Rows where a square can be appended.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.parts.len())
            .filter(|&r| r == 0 || self.row_len(r) < self.parts[r - 1])
            .collect()
    }

    /// Rows whose last square is a removable corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&r| self.parts[r] > self.row_len(r + 1))
            .collect()
    }

    pub fn with_added(&self, row: usize) -> Option<Shape> {
        if row > self.parts.len() || (row > 0 && self.row_len(row) >= self.parts[row - 1]) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Shape { parts })
    }

    pub fn with_removed(&self, row: usize) -> Option<Shape> {
        if row >= self.parts.len() || self.parts[row] <= self.row_len(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Shape { parts })
    }

    /// Shapes covering this one, ordered by the row that grows (top row first).
    pub fn up_covers(&self) -> Vec<Shape> {
        self.addable_rows()
            .into_iter()
            .filter_map(|r| self.with_added(r))
            .collect()
    }

    /// Shapes covered by this one, ordered by the row that shrinks (top row first).
    pub fn down_covers(&self) -> Vec<Shape> {
        self.removable_rows()
            .into_iter()
            .filter_map(|r| self.with_removed(r))
            .collect()
    }

    /// If `larger` is this shape plus exactly one square, returns that square.
    pub fn added_cell(&self, larger: &Shape) -> Option<Cell> {
        if larger.size() != self.size() + 1 || larger.num_rows() > self.num_rows() + 1 {
            return None;
        }
        let mut found = None;
        for r in 0..larger.num_rows() {
            let (a, b) = (self.row_len(r), larger.row_len(r));
            if a == b {
                continue;
            }
            if b != a + 1 || found.is_some() {
                return None;
            }
            found = Some(Cell::new(r, a));
        }
        found
    }

    /// The cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell::new(r, c)))
    }

    pub fn hook_length(&self, cell: Cell) -> usize {
        let arm = self.parts[cell.row] - cell.col - 1;
        let leg = self.parts[cell.row + 1..]
            .iter()
            .take_while(|&&p| p > cell.col)
            .count();
        arm + leg + 1
    }

    /// The digit-string form used in tables, e.g. `21`; `None` if a part exceeds 9.
    pub fn compact(&self) -> Option<String> {
        if self.parts.iter().any(|&p| p > 9) {
            return None;
        }
        Some(self.parts.iter().map(|p| p.to_string()).collect())
    }

    /// Compact form with the empty shape written as `empty`, bracketed list otherwise.
    pub fn render(&self, empty: &str) -> String {
        if self.is_empty() {
            return empty.to_string();
        }
        match self.compact() {
            Some(s) => s,
            None => format!(
                "[{}]",
                self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("∅"))
    }
}

impl FromStr for Shape {
    type Err = YoungError;

    /// Accepts `∅`, `0`, an empty string, a digit string such as `211`, or a
    /// bracketed list such as `[10,2]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "∅" || t == "0" || t == "[]" {
            return Ok(Shape::empty());
        }
        let parts: Vec<usize> = if let Some(inner) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            inner
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| YoungError::ParseShape(s.to_string()))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| YoungError::ParseShape(s.to_string()))?
        };
        if parts.contains(&0) {
            return Err(YoungError::ParseShape(s.to_string()));
        }
        Shape::new(parts)
    }
}

/// Number of standard Young tableaux of shape `shape` with content `[|shape|]`,
/// by the hook-length formula.
pub fn syt_count(shape: &Shape) -> BigUint {
    let n = shape.size();
    let mut numer = BigUint::one();
    for i in 2..=n {
        numer *= BigUint::from(i);
    }
    let mut denom = BigUint::one();
    for cell in shape.cells() {
        denom *= BigUint::from(shape.hook_length(cell));
    }
    numer / denom
}

/// A standard Young tableau whose entries are distinct positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = YoungError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl StandardTableau {
    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self, YoungError> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let mut seen = BTreeSet::new();
        for &v in rows.iter().flatten() {
            if v == 0 {
                return Err(YoungError::ZeroEntry);
            }
            if !seen.insert(v) {
                return Err(YoungError::DuplicateEntry(v));
            }
        }
        let ok_shape = rows.windows(2).all(|w| w[0].len() >= w[1].len()) && rows.iter().all(|r| !r.is_empty());
        let ok_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let ok_cols = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lower, upper)| upper < lower));
        if !(ok_shape && ok_rows && ok_cols) {
            return Err(YoungError::NotStandard(rows));
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn content(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position_of(v).is_some()
    }

    pub fn position_of(&self, v: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == v).map(|c| Cell::new(r, c))
        })
    }

    pub fn max_entry(&self) -> Option<usize> {
        self.rows.iter().flatten().copied().max()
    }

    /// Schensted row insertion `T ← v`. Returns the new tableau and the
    /// bumping path, which ends at the newly created cell.
    pub fn row_insert(&self, v: usize) -> Result<(StandardTableau, Vec<Cell>), YoungError> {
        if v == 0 {
            return Err(YoungError::ZeroEntry);
        }
        if self.contains(v) {
            return Err(YoungError::DuplicateEntry(v));
        }
        let mut rows = self.rows.clone();
        let mut path = Vec::with_capacity(rows.len() + 1);
        let mut x = v;
        for (r, row) in rows.iter_mut().enumerate() {
            // first entry larger than x
            let c = row.partition_point(|&e| e < x);
            path.push(Cell::new(r, c));
            if c == row.len() {
                row.push(x);
                return Ok((StandardTableau { rows }, path));
            }
            x = std::mem::replace(&mut row[c], x);
        }
        path.push(Cell::new(rows.len(), 0));
        rows.push(vec![x]);
        Ok((StandardTableau { rows }, path))
    }

    /// Reverse row insertion from a removable corner; the exact inverse of
    /// [`row_insert`](Self::row_insert). Returns the smaller tableau and the
    /// ejected entry.
    pub fn reverse_insert(&self, corner: Cell) -> Result<(StandardTableau, usize), YoungError> {
        if !self.is_corner(corner) {
            return Err(YoungError::InvalidCorner {
                row: corner.row,
                col: corner.col,
            });
        }
        let mut rows = self.rows.clone();
        let mut x = rows[corner.row].pop().expect("corner row is non-empty");
        if rows[corner.row].is_empty() {
            rows.pop();
        }
        for r in (0..corner.row).rev() {
            let row = &mut rows[r];
            // last entry smaller than x
            let c = row.partition_point(|&e| e < x) - 1;
            x = std::mem::replace(&mut row[c], x);
        }
        Ok((StandardTableau { rows }, x))
    }

    pub fn is_corner(&self, cell: Cell) -> bool {
        let shape = self.shape();
        cell.row < shape.num_rows()
            && cell.col + 1 == shape.row_len(cell.row)
            && shape.row_len(cell.row + 1) <= cell.col
    }

    /// Places `value` in the addable cell `cell`, which must keep the tableau standard.
    pub fn add_at(&self, cell: Cell, value: usize) -> Result<StandardTableau, YoungError> {
        let shape = self.shape();
        let bad = || YoungError::InvalidAddition {
            row: cell.row,
            col: cell.col,
            value,
        };
        if value == 0 {
            return Err(YoungError::ZeroEntry);
        }
        if self.contains(value) {
            return Err(YoungError::DuplicateEntry(value));
        }
        if shape.with_added(cell.row).is_none() || shape.row_len(cell.row) != cell.col {
            return Err(bad());
        }
        let left_ok = cell.col == 0 || self.rows[cell.row][cell.col - 1] < value;
        let up_ok = cell.row == 0 || self.rows[cell.row - 1][cell.col] < value;
        if !(left_ok && up_ok) {
            return Err(bad());
        }
        let mut rows = self.rows.clone();
        if cell.row == rows.len() {
            rows.push(vec![value]);
        } else {
            rows[cell.row].push(value);
        }
        Ok(StandardTableau { rows })
    }

    /// Deletes `value`, which must sit in a removable corner.
    pub fn remove_entry(&self, value: usize) -> Result<StandardTableau, YoungError> {
        let cell = self.position_of(value).ok_or(YoungError::InvalidCorner {
            row: usize::MAX,
            col: usize::MAX,
        })?;
        if !self.is_corner(cell) {
            return Err(YoungError::InvalidCorner {
                row: cell.row,
                col: cell.col,
            });
        }
        let mut rows = self.rows.clone();
        rows[cell.row].pop();
        if rows[cell.row].is_empty() {
            rows.pop();
        }
        Ok(StandardTableau { rows })
    }

    /// The tableau of content `[k]` read off a saturated chain ∅ = λ^0 ⊂ ⋯ ⊂ λ^k:
    /// entry `i` sits in the square λ^i \ λ^(i-1).
    pub fn from_chain(chain: &[Shape]) -> Option<StandardTableau> {
        let mut t = StandardTableau::empty();
        if chain.first().is_some_and(|s| !s.is_empty()) {
            return None;
        }
        for (i, pair) in chain.windows(2).enumerate() {
            let cell = pair[0].added_cell(&pair[1])?;
            t = t.add_at(cell, i + 1).ok()?;
        }
        Some(t)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// RSK on a word of distinct positive integers: `(insertion, recording)`.
pub fn rsk(word: &[usize]) -> Result<(StandardTableau, StandardTableau), YoungError> {
    let mut insertion = StandardTableau::empty();
    let mut recording = StandardTableau::empty();
    for (i, &v) in word.iter().enumerate() {
        let (next, path) = insertion.row_insert(v)?;
        let cell = *path.last().expect("insertion path is non-empty");
        recording = recording.add_at(cell, i + 1)?;
        insertion = next;
    }
    Ok((insertion, recording))
}

/// All permutations of `[m]` in lexicographic order, one-line notation.
pub fn permutations(m: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = Some((1..=m).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut p = current.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            next = Some(p);
        }
        Some(current)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sh(parts: &[usize]) -> Shape {
        Shape::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// All partitions of `n`, largest part first.
    fn partitions_of(n: usize) -> Vec<Shape> {
        fn go(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if n == 0 {
                out.push(Shape::new(acc.clone()).unwrap());
                return;
            }
            for p in (1..=n.min(max)).rev() {
                acc.push(p);
                go(n - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Counts fillings of the diagram with 1..n that increase along rows and
    /// columns, by trying every placement order.
    fn brute_force_syt(shape: &Shape) -> usize {
        fn go(target: &Shape, current: &Shape) -> usize {
            if current == target {
                return 1;
            }
            current
                .up_covers()
                .into_iter()
                .filter(|s| (0..s.num_rows()).all(|r| s.row_len(r) <= target.row_len(r)))
                .map(|s| go(target, &s))
                .sum()
        }
        go(shape, &Shape::empty())
    }

    fn lis(w: &[usize]) -> usize {
        let mut best = vec![1; w.len()];
        for i in 0..w.len() {
            for j in 0..i {
                if w[j] < w[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    fn lds(w: &[usize]) -> usize {
        let rev: Vec<usize> = w.iter().map(|&x| usize::MAX - x).collect();
        lis(&rev)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Shape::empty().conjugate(), Shape::empty());
        assert_eq!(sh(&[2, 1]).conjugate(), sh(&[2, 1]));
        assert_eq!(sh(&[3, 1]).conjugate(), sh(&[2, 1, 1]));
        for n in 0..=8 {
            for s in partitions_of(n) {
                assert_eq!(s.conjugate().conjugate(), s);
            }
        }
    }

    #[test]
    fn cover_examples() {
        assert_eq!(Shape::empty().up_covers(), vec![sh(&[1])]);
        assert!(Shape::empty().down_covers().is_empty());
        assert_eq!(sh(&[2, 1]).up_covers(), vec![sh(&[3, 1]), sh(&[2, 2]), sh(&[2, 1, 1])]);
        assert_eq!(sh(&[3, 2, 1]).down_covers(), vec![sh(&[2, 2, 1]), sh(&[3, 1, 1]), sh(&[3, 2])]);
    }

    #[test]
    fn du_minus_ud_is_identity() {
        for n in 0..=7 {
            for s in partitions_of(n) {
                let du: usize = s.up_covers().iter().map(|u| u.down_covers().len()).sum();
                let ud: usize = s.down_covers().iter().map(|d| d.up_covers().len()).sum();
                // each up-then-down returns to s exactly once per cover; the
                // off-diagonal terms of DU and UD coincide
                assert_eq!(du as isize - ud as isize, 1, "shape {s}");
            }
        }
    }

    #[test]
    fn syt_count_examples_and_brute_force() {
        assert_eq!(syt_count(&Shape::empty()), BigUint::from(1u32));
        assert_eq!(syt_count(&sh(&[2, 1])), BigUint::from(2u32));
        assert_eq!(syt_count(&sh(&[2, 2])), BigUint::from(2u32));
        for n in 0..=7 {
            for s in partitions_of(n) {
                assert_eq!(syt_count(&s), BigUint::from(brute_force_syt(&s)), "shape {s}");
            }
        }
    }

    #[test]
    fn insertion_examples() {
        let (t, path) = StandardTableau::empty().row_insert(5).unwrap();
        assert_eq!(t, tab(&[&[5]]));
        assert_eq!(path, vec![Cell::new(0, 0)]);

        let (t, _) = tab(&[&[1, 2], &[3]]).row_insert(4).unwrap();
        assert_eq!(t, tab(&[&[1, 2, 4], &[3]]));

        let (t, path) = tab(&[&[2, 4]]).row_insert(1).unwrap();
        assert_eq!(t, tab(&[&[1, 4], &[2]]));
        assert_eq!(path.last(), Some(&Cell::new(1, 0)));

        assert_eq!(tab(&[&[2, 4]]).row_insert(4), Err(YoungError::DuplicateEntry(4)));
    }

    #[test]
    fn reverse_insertion_examples() {
        assert_eq!(
            tab(&[&[1, 4], &[2]]).reverse_insert(Cell::new(1, 0)).unwrap(),
            (tab(&[&[2, 4]]), 1)
        );
        assert_eq!(tab(&[&[5]]).reverse_insert(Cell::new(0, 0)).unwrap(), (StandardTableau::empty(), 5));
        assert_eq!(
            tab(&[&[1, 2, 4], &[3]]).reverse_insert(Cell::new(0, 2)).unwrap(),
            (tab(&[&[1, 2], &[3]]), 4)
        );
        assert_eq!(
            tab(&[&[1, 2, 4], &[3]]).reverse_insert(Cell::new(0, 1)),
            Err(YoungError::InvalidCorner { row: 0, col: 1 })
        );
    }

    #[test]
    fn rsk_examples() {
        let (a, b) = rsk(&[2, 3, 1]).unwrap();
        assert_eq!(a, tab(&[&[1, 3], &[2]]));
        assert_eq!(b, tab(&[&[1, 2], &[3]]));
        assert_eq!(rsk(&[]).unwrap(), (StandardTableau::empty(), StandardTableau::empty()));
        assert_eq!(rsk(&[1, 2, 3]).unwrap().0, tab(&[&[1, 2, 3]]));
        assert_eq!(rsk(&[1, 2, 1]), Err(YoungError::DuplicateEntry(1)));
    }

    #[test]
    fn schensted_lis_lds() {
        for m in 0..=6 {
            for w in permutations(m) {
                let shape = rsk(&w).unwrap().0.shape();
                assert_eq!(shape.num_cols(), lis(&w), "{w:?}");
                assert_eq!(shape.num_rows(), lds(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn greene_theorem() {
        // a_k: longest subsequence coverable by k increasing subsequences,
        // i.e. (Dilworth) with no decreasing subsequence longer than k.
        for m in 0..=5 {
            for w in permutations(m) {
                let shape = rsk(&w).unwrap().0.shape();
                let conj = shape.conjugate();
                let subs: Vec<Vec<usize>> = (0u32..(1 << m))
                    .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect())
                    .collect();
                for k in 1..=m {
                    let a_k = subs.iter().filter(|s| lds(s) <= k).map(Vec::len).max().unwrap();
                    let d_k = subs.iter().filter(|s| lis(s) <= k).map(Vec::len).max().unwrap();
                    assert_eq!(a_k, shape.parts().iter().take(k).sum::<usize>(), "{w:?} k={k}");
                    assert_eq!(d_k, conj.parts().iter().take(k).sum::<usize>(), "{w:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(4).count(), 24);
        assert_eq!(permutations(3).nth(3), Some(vec![2, 3, 1]));
    }

    #[test]
    fn shape_text_and_json() {
        assert_eq!("211".parse::<Shape>().unwrap(), sh(&[2, 1, 1]));
        assert_eq!("∅".parse::<Shape>().unwrap(), Shape::empty());
        assert_eq!("[10,2]".parse::<Shape>().unwrap(), sh(&[10, 2]));
        assert!("12".parse::<Shape>().is_err());
        assert_eq!(sh(&[10, 2]).to_string(), "[10,2]");
        assert_eq!(serde_json::to_string(&sh(&[2, 1])).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Shape>("[1,2]").is_err());
    }

    fn arb_tableau() -> impl Strategy<Value = StandardTableau> {
        proptest::collection::vec(1usize..40, 0..=8).prop_map(|raw| {
            let mut seen = BTreeSet::new();
            let word: Vec<usize> = raw.into_iter().filter(|v| seen.insert(*v)).collect();
            rsk(&word).unwrap().0
        })
    }

    proptest! {
        #[test]
        fn reverse_insert_inverts_row_insert(t in arb_tableau(), v in 1usize..60) {
            prop_assume!(!t.contains(v));
            let (bigger, path) = t.row_insert(v).unwrap();
            prop_assert_eq!(bigger.shape().size(), t.size() + 1);
            let corner = *path.last().unwrap();
            prop_assert_eq!(bigger.reverse_insert(corner).unwrap(), (t, v));
        }
    }
}
