//! Dyck and Motzkin paths attached to partitions and matchings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::setpart::{SetPartError, SetPartition};
use crate::walks::{matching_to_oscillating, oscillating_to_matching, TableauWalk, WalkError, WalkKind};
use crate::young::Shape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathsError {
    #[error("|S| = {s} but |T| = {t}")]
    CardinalityMismatch { s: usize, t: usize },
    #[error("element {value} is outside [{n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("path is not of the form L(S, T): bad step pair at element {element}")]
    InvalidProfile { element: usize },
    #[error("path goes below the axis at step {step}")]
    NotMotzkin { step: usize },
    #[error("not a Dyck path")]
    NotDyck,
    #[error("matching has a {k}-crossing")]
    HasCrossing { k: usize },
    #[error("paths cross at step {step}")]
    PathsCross { step: usize },
    #[error("paths have different lengths")]
    LengthMismatch,
    #[error("heights have odd parity at step {step}")]
    Parity { step: usize },
    #[error("invalid step character {0:?}")]
    Parse(char),
    #[error(transparent)]
    SetPart(#[from] SetPartError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Flat => 'F',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "RawPath", try_from = "RawPath")]
pub struct LatticePath {
    steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct RawPath {
    steps: String,
}

impl From<LatticePath> for RawPath {
    fn from(p: LatticePath) -> Self {
        RawPath { steps: p.to_string() }
    }
}

impl TryFrom<RawPath> for LatticePath {
    type Error = PathsError;

    fn try_from(raw: RawPath) -> Result<Self, Self::Error> {
        raw.steps.parse()
    }
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Path through the given heights, which must change by at most 1.
    pub fn from_heights(heights: &[i64]) -> Option<Self> {
        let steps = heights
            .windows(2)
            .map(|w| match w[1] - w[0] {
                1 => Some(Step::Up),
                -1 => Some(Step::Down),
                0 => Some(Step::Flat),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights a_0 = 0, a_1, ..., a_L.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.steps {
            h.push(h.last().unwrap() + s.delta());
        }
        h
    }

    /// First step after which the path is below the axis.
    pub fn first_violation(&self) -> Option<usize> {
        self.heights().iter().position(|&h| h < 0)
    }

    pub fn is_motzkin(&self) -> bool {
        let h = self.heights();
        h.iter().all(|&x| x >= 0) && h.last() == Some(&0)
    }

    pub fn is_dyck(&self) -> bool {
        self.is_motzkin() && !self.steps.contains(&Step::Flat)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.steps.iter().map(|s| s.letter()).collect::<String>())
    }
}

impl FromStr for LatticePath {
    type Err = PathsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                'F' => Ok(Step::Flat),
                other => Err(PathsError::Parse(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LatticePath { steps })
    }
}

/// L(S, T) together with the first step, if any, that dips below the axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MotzkinProfile {
    pub path: LatticePath,
    pub first_violation: Option<usize>,
}

impl MotzkinProfile {
    /// Whether some partition has min set S and max set T.
    pub fn is_motzkin(&self) -> bool {
        self.first_violation.is_none()
    }
}

pub fn motzkin_profile(s: &BTreeSet<usize>, t: &BTreeSet<usize>, n: usize) -> Result<MotzkinProfile, PathsError> {
    if s.len() != t.len() {
        return Err(PathsError::CardinalityMismatch { s: s.len(), t: t.len() });
    }
    if let Some(&value) = s.iter().chain(t).find(|&&v| v == 0 || v > n) {
        return Err(PathsError::OutOfRange { value, n });
    }
    let mut steps = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let pair = match (s.contains(&i), t.contains(&i)) {
            (true, true) => [Step::Flat, Step::Flat],
            (true, false) => [Step::Flat, Step::Up],
            (false, true) => [Step::Down, Step::Flat],
            (false, false) => [Step::Down, Step::Up],
        };
        steps.extend(pair);
    }
    let path = LatticePath::new(steps);
    let first_violation = path.first_violation();
    Ok(MotzkinProfile { path, first_violation })
}

/// Recovers `(S, T, n)` from a path of the form L(S, T).
pub fn profile_sets(path: &LatticePath) -> Result<(BTreeSet<usize>, BTreeSet<usize>, usize), PathsError> {
    if path.len() % 2 == 1 {
        return Err(PathsError::InvalidProfile {
            element: path.len().div_ceil(2),
        });
    }
    let (mut s, mut t) = (BTreeSet::new(), BTreeSet::new());
    for (k, pair) in path.steps().chunks(2).enumerate() {
        let i = k + 1;
        match (pair[0], pair[1]) {
            (Step::Flat, Step::Flat) => {
                s.insert(i);
                t.insert(i);
            }
            (Step::Flat, Step::Up) => {
                s.insert(i);
            }
            (Step::Down, Step::Flat) => {
                t.insert(i);
            }
            (Step::Down, Step::Up) => {}
            _ => return Err(PathsError::InvalidProfile { element: i }),
        }
    }
    Ok((s, t, path.len() / 2))
}

/// Left endpoints A = [n] \ T and right endpoints B = [n] \ S of a profile.
fn endpoint_lists(path: &LatticePath) -> Result<(Vec<usize>, Vec<usize>, usize), PathsError> {
    let (s, t, n) = profile_sets(path)?;
    if let Some(step) = path.first_violation() {
        return Err(PathsError::NotMotzkin { step });
    }
    let lefts = (1..=n).filter(|i| !t.contains(i)).collect();
    let rights = (1..=n).filter(|i| !s.contains(i)).collect();
    Ok((lefts, rights, n))
}

/// The noncrossing partition with the min and max sets encoded by the path.
pub fn noncrossing_from_motzkin(path: &LatticePath) -> Result<SetPartition, PathsError> {
    let (lefts, rights, n) = endpoint_lists(path)?;
    let a = path.heights();
    let mut arcs = Vec::with_capacity(rights.len());
    for &j in &rights {
        let i = lefts
            .iter()
            .copied()
            .filter(|&i| i < j && a[2 * i] == a[2 * j - 2])
            .max()
            .ok_or(PathsError::InvalidProfile { element: j })?;
        arcs.push((i, j));
    }
    Ok(SetPartition::from_arcs(n, &arcs)?)
}

/// The nonnesting partition with the min and max sets encoded by the path.
pub fn nonnesting_from_motzkin(path: &LatticePath) -> Result<SetPartition, PathsError> {
    let (lefts, rights, n) = endpoint_lists(path)?;
    let arcs: Vec<(usize, usize)> = lefts.into_iter().zip(rights).collect();
    Ok(SetPartition::from_arcs(n, &arcs)?)
}

fn oscillating_shapes(m: &SetPartition, k: usize) -> Result<Vec<Shape>, PathsError> {
    let walk = matching_to_oscillating(m)?;
    if walk.max_rows() >= k {
        return Err(PathsError::HasCrossing { k });
    }
    Ok(walk.shapes().to_vec())
}

/// Dyck path of a matching without 2-crossings: heights are the row lengths
/// of its oscillating tableau.
pub fn dyck_from_matching_k2(m: &SetPartition) -> Result<LatticePath, PathsError> {
    let shapes = oscillating_shapes(m, 2)?;
    let heights: Vec<i64> = shapes.iter().map(|s| s.row_len(0) as i64).collect();
    Ok(LatticePath::from_heights(&heights).expect("oscillating steps change one cell"))
}

pub fn matching_from_dyck_k2(path: &LatticePath) -> Result<SetPartition, PathsError> {
    if !path.is_dyck() {
        return Err(PathsError::NotDyck);
    }
    let shapes = path.heights().into_iter().map(|h| Shape::row(h as usize)).collect();
    Ok(oscillating_to_matching(&TableauWalk::new(WalkKind::Oscillating, shapes)?)?)
}

/// Noncrossing pair of Dyck paths `(P, Q)` of a matching without
/// 3-crossings, with P = x + y and Q = x - y for the row lengths (x, y).
pub fn dyck_pair_from_matching_k3(m: &SetPartition) -> Result<(LatticePath, LatticePath), PathsError> {
    let shapes = oscillating_shapes(m, 3)?;
    let (mut p, mut q) = (Vec::new(), Vec::new());
    for s in &shapes {
        let (x, y) = (s.row_len(0) as i64, s.row_len(1) as i64);
        p.push(x + y);
        q.push(x - y);
    }
    let p = LatticePath::from_heights(&p).expect("each step moves one coordinate");
    let q = LatticePath::from_heights(&q).expect("each step moves one coordinate");
    Ok((p, q))
}

pub fn matching_from_dyck_pair_k3(p: &LatticePath, q: &LatticePath) -> Result<SetPartition, PathsError> {
    if p.len() != q.len() {
        return Err(PathsError::LengthMismatch);
    }
    if !p.is_dyck() || !q.is_dyck() {
        return Err(PathsError::NotDyck);
    }
    let (hp, hq) = (p.heights(), q.heights());
    let mut shapes = Vec::with_capacity(hp.len());
    for (step, (&a, &b)) in hp.iter().zip(&hq).enumerate() {
        if a < b {
            return Err(PathsError::PathsCross { step });
        }
        if (a + b) % 2 != 0 {
            return Err(PathsError::Parity { step });
        }
        let (x, y) = ((a + b) / 2, (a - b) / 2);
        shapes.push(Shape::new(vec![x as usize, y as usize]).expect("x ≥ y ≥ 0"));
    }
    Ok(oscillating_to_matching(&TableauWalk::new(WalkKind::Oscillating, shapes)?)?)
}

/// All Dyck paths of length 2m in lexicographic order (D before U).
pub fn dyck_paths(m: usize) -> Vec<LatticePath> {
    fn go(m: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if downs == m {
            out.push(LatticePath::new(cur.clone()));
            return;
        }
        if downs < ups {
            cur.push(Step::Down);
            go(m, ups, downs + 1, cur, out);
            cur.pop();
        }
        if ups < m {
            cur.push(Step::Up);
            go(m, ups + 1, downs, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, 0, &mut Vec::new(), &mut out);
    out
}
