//! Walks on Young's lattice (vacillating, hesitating and oscillating
//! tableaux) and their bijections with set partitions and matchings.
//!
//! Step `i` of a walk goes from `shapes[i-1]` to `shapes[i]`. For the
//! vacillating and hesitating kinds, element `j` of `[n]` owns the step pair
//! `(2j-1, 2j)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::setpart::{SetPartError, SetPartition};
use crate::young::{Cell, Shape, StandardTableau, YoungError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("{kind} walk violates its step rule at index {index}")]
    StepViolation { kind: WalkKind, index: usize },
    #[error("{kind} walk must start at the empty shape")]
    NotStartingEmpty { kind: WalkKind },
    #[error("{kind} walk must have even length, got {length}")]
    OddLength { kind: WalkKind, length: usize },
    #[error("walk must end at the empty shape")]
    NotClosed,
    #[error("expected a {expected} walk, got {found}")]
    KindMismatch { expected: WalkKind, found: WalkKind },
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("partition {0} is not a complete matching")]
    NotCompleteMatching(String),
    #[error("cannot parse walk from {0:?}")]
    Parse(String),
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error(transparent)]
    SetPart(#[from] SetPartError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Vacillating,
    Hesitating,
    Oscillating,
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkKind::Vacillating => "vacillating",
            WalkKind::Hesitating => "hesitating",
            WalkKind::Oscillating => "oscillating",
        })
    }
}

impl std::str::FromStr for WalkKind {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vacillating" => Ok(WalkKind::Vacillating),
            "hesitating" => Ok(WalkKind::Hesitating),
            "oscillating" => Ok(WalkKind::Oscillating),
            _ => Err(WalkError::Parse(s.to_string())),
        }
    }
}

/// One move between consecutive shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Stay,
    Add(Cell),
    Remove(Cell),
    Invalid,
}

impl Move {
    pub fn between(from: &Shape, to: &Shape) -> Move {
        if from == to {
            Move::Stay
        } else if let Some(c) = from.added_cell(to) {
            Move::Add(c)
        } else if let Some(c) = to.added_cell(from) {
            Move::Remove(c)
        } else {
            Move::Invalid
        }
    }
}

/// A walk λ^0, ..., λ^L on Young's lattice of a given kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWalk")]
pub struct TableauWalk {
    kind: WalkKind,
    shapes: Vec<Shape>,
}

#[derive(Deserialize)]
struct RawWalk {
    kind: WalkKind,
    shapes: Vec<Shape>,
}

impl TryFrom<RawWalk> for TableauWalk {
    type Error = WalkError;

    fn try_from(raw: RawWalk) -> Result<Self, Self::Error> {
        TableauWalk::new(raw.kind, raw.shapes)
    }
}

impl TableauWalk {
    pub fn new(kind: WalkKind, shapes: Vec<Shape>) -> Result<Self, WalkError> {
        validate_walk(kind, &shapes)?;
        Ok(TableauWalk { kind, shapes })
    }

    /// Parses comma-separated shapes such as `∅,∅,1,1,11,∅` (`0` also denotes ∅).
    pub fn parse(kind: WalkKind, text: &str) -> Result<Self, WalkError> {
        let shapes = split_shapes(text)
            .iter()
            .map(|s| s.parse::<Shape>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| WalkError::Parse(text.to_string()))?;
        TableauWalk::new(kind, shapes)
    }

    pub fn kind(&self) -> WalkKind {
        self.kind
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// Number of steps L.
    pub fn length(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn final_shape(&self) -> &Shape {
        self.shapes.last().expect("walks are non-empty")
    }

    pub fn is_closed(&self) -> bool {
        self.final_shape().is_empty()
    }

    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Shape::num_rows).max().unwrap_or(0)
    }

    pub fn max_cols(&self) -> usize {
        self.shapes.iter().map(Shape::num_cols).max().unwrap_or(0)
    }

    /// Conjugates every shape. Step types are preserved, so the result is a
    /// valid walk of the same kind.
    pub fn conjugate(&self) -> TableauWalk {
        TableauWalk {
            kind: self.kind,
            shapes: self.shapes.iter().map(Shape::conjugate).collect(),
        }
    }

    /// Walk with every do-nothing step deleted.
    pub fn without_stays(&self) -> Vec<Shape> {
        let mut out = vec![self.shapes[0].clone()];
        for s in &self.shapes[1..] {
            if out.last() != Some(s) {
                out.push(s.clone());
            }
        }
        out
    }

    /// Comma-joined compact shapes with ∅ written as `0`.
    pub fn to_plain_string(&self) -> String {
        self.render("0")
    }

    fn render(&self, empty: &str) -> String {
        self.shapes.iter().map(|s| s.render(empty)).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for TableauWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("∅"))
    }
}

fn split_shapes(text: &str) -> Vec<String> {
    // commas inside brackets belong to a shape
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    out.push(cur);
    out
}

/// Checks the kind-specific step rules. The walk may end at any shape.
pub fn validate_walk(kind: WalkKind, shapes: &[Shape]) -> Result<(), WalkError> {
    match shapes.first() {
        Some(s) if s.is_empty() => {}
        _ => return Err(WalkError::NotStartingEmpty { kind }),
    }
    let length = shapes.len() - 1;
    if kind != WalkKind::Oscillating && length % 2 == 1 {
        return Err(WalkError::OddLength { kind, length });
    }
    let moves: Vec<Move> = shapes.windows(2).map(|w| Move::between(&w[0], &w[1])).collect();
    let violation = |index| Err(WalkError::StepViolation { kind, index });
    match kind {
        WalkKind::Vacillating => {
            for (k, mv) in moves.iter().enumerate() {
                let index = k + 1;
                let ok = match mv {
                    Move::Stay => true,
                    Move::Remove(_) => index % 2 == 1,
                    Move::Add(_) => index % 2 == 0,
                    Move::Invalid => false,
                };
                if !ok {
                    return violation(index);
                }
            }
        }
        WalkKind::Hesitating => {
            for (k, pair) in moves.chunks(2).enumerate() {
                let first = 2 * k + 1;
                if pair[0] == Move::Invalid {
                    return violation(first);
                }
                let ok = matches!(
                    (pair[0], pair[1]),
                    (Move::Stay, Move::Add(_)) | (Move::Remove(_), Move::Stay) | (Move::Add(_), Move::Remove(_))
                );
                if !ok {
                    return violation(first + 1);
                }
            }
        }
        WalkKind::Oscillating => {
            for (k, mv) in moves.iter().enumerate() {
                if !matches!(mv, Move::Add(_) | Move::Remove(_)) {
                    return violation(k + 1);
                }
            }
        }
    }
    Ok(())
}

/// The tableaux T_0, ..., T_L underlying a walk, and the arcs recorded along it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkTrace {
    pub tableaux: Vec<StandardTableau>,
    /// Arcs `(left, right)` ordered by right endpoint.
    pub pair_events: Vec<(usize, usize)>,
}

impl WalkTrace {
    pub fn shapes(&self) -> Vec<Shape> {
        self.tableaux.iter().map(StandardTableau::shape).collect()
    }
}

fn expect_kind(walk: &TableauWalk, expected: WalkKind) -> Result<(), WalkError> {
    if walk.kind != expected {
        return Err(WalkError::KindMismatch {
            expected,
            found: walk.kind,
        });
    }
    Ok(())
}

/// The vacillating tableau of a partition, built right to left.
pub fn phi(p: &SetPartition) -> (TableauWalk, WalkTrace) {
    let n = p.n();
    let diagram = p.standard_rep();
    let left_of = diagram.left_partners();
    let right_of = diagram.right_partners();
    let mut tableaux = vec![StandardTableau::empty(); 2 * n + 1];
    let mut t = StandardTableau::empty();
    for j in (1..=n).rev() {
        if right_of[j].is_some() {
            t = t.remove_entry(j).expect("a left endpoint is the largest entry");
        }
        tableaux[2 * j - 1] = t.clone();
        if let Some(i) = left_of[j] {
            t = t.row_insert(i).expect("left endpoints are inserted once").0;
        }
        tableaux[2 * j - 2] = t.clone();
    }
    finish(WalkKind::Vacillating, tableaux, diagram.by_right_endpoint())
}

/// The hesitating tableau of a partition, built right to left from its
/// enhanced representation.
pub fn phi_bar(p: &SetPartition) -> (TableauWalk, WalkTrace) {
    let n = p.n();
    let diagram = p.standard_rep();
    let left_of = diagram.left_partners();
    let right_of = diagram.right_partners();
    let mut tableaux = vec![StandardTableau::empty(); 2 * n + 1];
    let mut t = StandardTableau::empty();
    for j in (1..=n).rev() {
        match (left_of[j], right_of[j]) {
            (None, None) => {
                let up = t.row_insert(j).expect("isolated points are fresh").0;
                tableaux[2 * j - 1] = up.clone();
                t = up.remove_entry(j).expect("j is the largest entry");
            }
            (Some(i), Some(_)) => {
                let up = t.row_insert(i).expect("left endpoints are inserted once").0;
                tableaux[2 * j - 1] = up.clone();
                t = up.remove_entry(j).expect("j is the largest entry");
            }
            (left, right) => {
                if right.is_some() {
                    t = t.remove_entry(j).expect("j is the largest entry");
                }
                tableaux[2 * j - 1] = t.clone();
                if let Some(i) = left {
                    t = t.row_insert(i).expect("left endpoints are inserted once").0;
                }
            }
        }
        tableaux[2 * j - 2] = t.clone();
    }
    finish(WalkKind::Hesitating, tableaux, diagram.by_right_endpoint())
}

fn finish(kind: WalkKind, tableaux: Vec<StandardTableau>, pair_events: Vec<(usize, usize)>) -> (TableauWalk, WalkTrace) {
    let walk = TableauWalk {
        kind,
        shapes: tableaux.iter().map(StandardTableau::shape).collect(),
    };
    debug_assert!(validate_walk(kind, &walk.shapes).is_ok());
    (walk, WalkTrace { tableaux, pair_events })
}

/// Inverse of [`phi`] extended to vacillating walks of any end shape:
/// returns the partition and the final tableau, whose content is a subset of
/// the block maxima.
pub fn psi(walk: &TableauWalk) -> Result<(SetPartition, StandardTableau), WalkError> {
    let (p, trace) = psi_traced(walk)?;
    let t = trace.tableaux.last().cloned().unwrap_or_default();
    Ok((p, t))
}

pub fn psi_traced(walk: &TableauWalk) -> Result<(SetPartition, WalkTrace), WalkError> {
    expect_kind(walk, WalkKind::Vacillating)?;
    validate_walk(walk.kind, &walk.shapes)?;
    let n = walk.length() / 2;
    let mut t = StandardTableau::empty();
    let mut tableaux = vec![t.clone()];
    let mut arcs = Vec::new();
    for (idx, pair) in walk.shapes.windows(2).enumerate() {
        let i = idx + 1;
        match Move::between(&pair[0], &pair[1]) {
            Move::Stay => {}
            Move::Add(cell) => t = t.add_at(cell, i / 2)?,
            Move::Remove(cell) => {
                let (smaller, j) = t.reverse_insert(cell)?;
                arcs.push((j, i.div_ceil(2)));
                t = smaller;
            }
            Move::Invalid => unreachable!("validated walk"),
        }
        tableaux.push(t.clone());
    }
    let p = SetPartition::from_arcs(n, &arcs)?;
    Ok((p, WalkTrace { tableaux, pair_events: arcs }))
}

/// Inverse of [`phi_bar`] on closed hesitating walks.
pub fn psi_bar(walk: &TableauWalk) -> Result<SetPartition, WalkError> {
    psi_bar_traced(walk).map(|(p, _)| p)
}

pub fn psi_bar_traced(walk: &TableauWalk) -> Result<(SetPartition, WalkTrace), WalkError> {
    expect_kind(walk, WalkKind::Hesitating)?;
    validate_walk(walk.kind, &walk.shapes)?;
    if !walk.is_closed() {
        return Err(WalkError::NotClosed);
    }
    let n = walk.length() / 2;
    let mut t = StandardTableau::empty();
    let mut tableaux = vec![t.clone()];
    let mut arcs = Vec::new();
    for j in 1..=n {
        let (a, b, c) = (&walk.shapes[2 * j - 2], &walk.shapes[2 * j - 1], &walk.shapes[2 * j]);
        let (mid, last) = match (Move::between(a, b), Move::between(b, c)) {
            (Move::Stay, Move::Add(cell)) => (t.clone(), t.add_at(cell, j)?),
            (Move::Remove(cell), Move::Stay) => {
                let (smaller, i) = t.reverse_insert(cell)?;
                arcs.push((i, j));
                (smaller.clone(), smaller)
            }
            (Move::Add(up), Move::Remove(down)) => {
                let bigger = t.add_at(up, j)?;
                let (smaller, x) = bigger.reverse_insert(down)?;
                if x != j {
                    arcs.push((x, j));
                }
                (bigger, smaller)
            }
            _ => unreachable!("validated walk"),
        };
        tableaux.push(mid);
        tableaux.push(last.clone());
        t = last;
    }
    let p = SetPartition::from_arcs(n, &arcs)?;
    Ok((p, WalkTrace { tableaux, pair_events: arcs }))
}

/// The oscillating tableau of a complete matching on `[2m]`.
pub fn matching_to_oscillating(m: &SetPartition) -> Result<TableauWalk, WalkError> {
    matching_to_oscillating_traced(m).map(|(w, _)| w)
}

pub fn matching_to_oscillating_traced(m: &SetPartition) -> Result<(TableauWalk, WalkTrace), WalkError> {
    if !m.is_complete_matching() {
        return Err(WalkError::NotCompleteMatching(m.to_string()));
    }
    let len = m.n();
    let diagram = m.standard_rep();
    let left_of = diagram.left_partners();
    let mut tableaux = vec![StandardTableau::empty(); len + 1];
    let mut t = StandardTableau::empty();
    for j in (1..=len).rev() {
        t = match left_of[j] {
            Some(i) => t.row_insert(i).expect("left endpoints are inserted once").0,
            None => t.remove_entry(j).expect("j is the largest entry"),
        };
        tableaux[j - 1] = t.clone();
    }
    Ok(finish(WalkKind::Oscillating, tableaux, diagram.by_right_endpoint()))
}

/// Inverse of [`matching_to_oscillating`].
pub fn oscillating_to_matching(walk: &TableauWalk) -> Result<SetPartition, WalkError> {
    expect_kind(walk, WalkKind::Oscillating)?;
    validate_walk(walk.kind, &walk.shapes)?;
    if !walk.is_closed() {
        return Err(WalkError::NotClosed);
    }
    let mut t = StandardTableau::empty();
    let mut arcs = Vec::new();
    for (idx, pair) in walk.shapes.windows(2).enumerate() {
        let j = idx + 1;
        match Move::between(&pair[0], &pair[1]) {
            Move::Add(cell) => t = t.add_at(cell, j)?,
            Move::Remove(cell) => {
                let (smaller, i) = t.reverse_insert(cell)?;
                arcs.push((i, j));
                t = smaller;
            }
            _ => unreachable!("validated walk"),
        }
    }
    Ok(SetPartition::from_arcs(walk.length(), &arcs)?)
}

/// The matching M_w on `[2m]` with arcs joining `w(i)` and `2m - i + 1`.
pub fn permutation_matching(w: &[usize]) -> Result<SetPartition, WalkError> {
    let m = w.len();
    let mut seen = vec![false; m + 1];
    for &v in w {
        if v == 0 || v > m || std::mem::replace(&mut seen[v], true) {
            return Err(WalkError::NotPermutation(w.to_vec()));
        }
    }
    let blocks = w.iter().enumerate().map(|(i, &v)| vec![v, 2 * m - i]).collect();
    Ok(SetPartition::new(2 * m, blocks)?)
}

/// RSK read off the oscillating tableau of M_w: the insertion tableau is the
/// first `m` steps, the recording tableau the last `m` steps reversed.
pub fn rsk_via_oscillating(w: &[usize]) -> Result<(StandardTableau, StandardTableau), WalkError> {
    let m = w.len();
    let walk = matching_to_oscillating(&permutation_matching(w)?)?;
    let shapes = walk.shapes();
    let insertion = StandardTableau::from_chain(&shapes[..=m]).expect("first half only grows");
    let tail: Vec<Shape> = shapes[m..].iter().rev().cloned().collect();
    let recording = StandardTableau::from_chain(&tail).expect("second half only shrinks");
    Ok((insertion, recording))
}

/// Restriction of shapes to a `rows × cols` box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxBound {
    pub rows: usize,
    pub cols: usize,
}

impl BoxBound {
    pub fn admits(&self, s: &Shape) -> bool {
        s.fits_in(self.rows, self.cols)
    }
}

fn admits(bound: Option<BoxBound>, s: &Shape) -> bool {
    bound.is_none_or(|b| b.admits(s))
}

/// Number of walks of a kind and length from ∅ to every reachable shape,
/// optionally confined to a box.
pub fn walk_counts(kind: WalkKind, length: usize, bound: Option<BoxBound>) -> BTreeMap<Shape, BigUint> {
    let mut layer: HashMap<Shape, BigUint> = HashMap::from([(Shape::empty(), BigUint::one())]);
    let add = |next: &mut HashMap<Shape, BigUint>, s: Shape, c: &BigUint| {
        if admits(bound, &s) {
            *next.entry(s).or_insert_with(BigUint::zero) += c;
        }
    };
    match kind {
        WalkKind::Vacillating | WalkKind::Oscillating => {
            for step in 1..=length {
                let mut next = HashMap::new();
                for (s, c) in &layer {
                    match kind {
                        WalkKind::Vacillating => {
                            add(&mut next, s.clone(), c);
                            let moves = if step % 2 == 1 { s.down_covers() } else { s.up_covers() };
                            for t in moves {
                                add(&mut next, t, c);
                            }
                        }
                        _ => {
                            for t in s.up_covers().into_iter().chain(s.down_covers()) {
                                add(&mut next, t, c);
                            }
                        }
                    }
                }
                layer = next;
            }
            if kind == WalkKind::Vacillating && length % 2 == 1 {
                layer.clear();
            }
        }
        WalkKind::Hesitating => {
            if length % 2 == 1 {
                return BTreeMap::new();
            }
            for _ in 0..length / 2 {
                let mut next = HashMap::new();
                for (s, c) in &layer {
                    for t in s.down_covers() {
                        add(&mut next, t, c);
                    }
                    for u in s.up_covers() {
                        if !admits(bound, &u) {
                            continue;
                        }
                        add(&mut next, u.clone(), c);
                        for t in u.down_covers() {
                            add(&mut next, t, c);
                        }
                    }
                }
                layer = next;
            }
        }
    }
    layer.into_iter().collect()
}

/// g_λ(n) for vacillating walks, f_λ(n) for hesitating ones, and the number
/// of oscillating walks of the given length ending at `shape`.
pub fn count_walks(kind: WalkKind, shape: &Shape, length: usize) -> BigUint {
    count_walks_bounded(kind, shape, length, None)
}

pub fn count_walks_bounded(kind: WalkKind, shape: &Shape, length: usize, bound: Option<BoxBound>) -> BigUint {
    walk_counts(kind, length, bound).remove(shape).unwrap_or_default()
}

/// Every closed walk of a kind and length, in cover order.
pub fn closed_walks(kind: WalkKind, length: usize) -> Vec<TableauWalk> {
    fn remaining_removals(kind: WalkKind, step: usize, length: usize) -> usize {
        // removals possible in steps step+1..=length
        match kind {
            WalkKind::Vacillating => (step + 1..=length).filter(|i| i % 2 == 1).count(),
            WalkKind::Hesitating => (length - step).div_ceil(2),
            WalkKind::Oscillating => length - step,
        }
    }
    fn go(kind: WalkKind, length: usize, path: &mut Vec<Shape>, out: &mut Vec<TableauWalk>) {
        let step = path.len() - 1;
        let cur = path.last().unwrap().clone();
        if cur.size() > remaining_removals(kind, step, length) {
            return;
        }
        if step == length {
            if cur.is_empty() {
                out.push(TableauWalk {
                    kind,
                    shapes: path.clone(),
                });
            }
            return;
        }
        let i = step + 1;
        let mut options = Vec::new();
        match kind {
            WalkKind::Vacillating => {
                options.push(cur.clone());
                options.extend(if i % 2 == 1 { cur.down_covers() } else { cur.up_covers() });
            }
            WalkKind::Oscillating => {
                options.extend(cur.up_covers());
                options.extend(cur.down_covers());
            }
            WalkKind::Hesitating => {
                if i % 2 == 1 {
                    options.push(cur.clone());
                    options.extend(cur.up_covers());
                    options.extend(cur.down_covers());
                } else {
                    let prev = &path[path.len() - 2];
                    match Move::between(prev, &cur) {
                        Move::Stay => options.extend(cur.up_covers()),
                        Move::Remove(_) => options.push(cur.clone()),
                        Move::Add(_) => options.extend(cur.down_covers()),
                        Move::Invalid => {}
                    }
                }
            }
        }
        for s in options {
            path.push(s);
            go(kind, length, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if kind != WalkKind::Oscillating && length % 2 == 1 {
        return out;
    }
    go(kind, length, &mut vec![Shape::empty()], &mut out);
    out
}
