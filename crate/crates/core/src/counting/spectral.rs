//! Numeric check that each eigenvalue of A_{k,j} has the form
//! θ = 2(cos(π r_1/m) + ... + cos(π r_j/m)) with m = j + k + 1.
//!
//! L(k, j) and L(j, k) are isomorphic by conjugation, so the sum is taken
//! over min(k, j) cosines.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::ToPrimitive;
use serde::Serialize;

use super::numbers::binomial;
use super::transfer::rect_lattice;
use super::CountingError;

/// Largest lattice handed to the dense eigen-solver.
pub const SPECTRAL_DIM_LIMIT: usize = 400;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenMatch {
    pub eigenvalue: f64,
    pub theta: f64,
    pub r: Vec<usize>,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenReport {
    pub k: usize,
    pub j: usize,
    pub m: usize,
    pub tolerance: f64,
    pub matches: Vec<EigenMatch>,
    pub all_matched: bool,
}

impl EigenReport {
    pub fn max_error(&self) -> f64 {
        self.matches.iter().map(|e| e.error).fold(0.0, f64::max)
    }
}

/// All sorted j-tuples over 0..2m with their θ values.
fn theta_family(j: usize, m: usize) -> Vec<(f64, Vec<usize>)> {
    fn go(j: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<(f64, Vec<usize>)>) {
        if cur.len() == j {
            let theta = cur.iter().map(|&r| 2.0 * (std::f64::consts::PI * r as f64 / m as f64).cos()).sum();
            out.push((theta, cur.clone()));
            return;
        }
        for r in start..2 * m {
            cur.push(r);
            go(j, m, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(j, m, 0, &mut Vec::new(), &mut out);
    out
}

pub fn eigenvalue_form_check(k: usize, j: usize, tolerance: f64) -> Result<EigenReport, CountingError> {
    if k == 0 || j == 0 {
        return Err(CountingError::InvalidParameter("k and j must be at least 1".into()));
    }
    let dim = binomial(k + j, j).to_usize().unwrap_or(usize::MAX);
    if dim > SPECTRAL_DIM_LIMIT {
        return Err(CountingError::DimensionTooLarge { dim, limit: SPECTRAL_DIM_LIMIT });
    }
    let (a, _) = rect_lattice(k, j);
    let dense = DMatrix::from_fn(dim, dim, |r, c| a.get(r, c).to_f64().expect("0/1 entries"));
    let mut eigenvalues: Vec<f64> = SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    let m = j + k + 1;
    let family = theta_family(k.min(j), m);
    let matches: Vec<EigenMatch> = eigenvalues
        .into_iter()
        .map(|ev| {
            let (theta, r) = family
                .iter()
                .min_by(|x, y| (x.0 - ev).abs().total_cmp(&(y.0 - ev).abs()))
                .expect("family is non-empty");
            EigenMatch {
                eigenvalue: ev,
                theta: *theta,
                r: r.clone(),
                error: (theta - ev).abs(),
            }
        })
        .collect();
    let all_matched = matches.iter().all(|e| e.error <= tolerance);
    Ok(EigenReport { k, j, m, tolerance, matches, all_matched })
}
