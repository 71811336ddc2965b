//! Exact polynomials and truncated power series, and the generating
//! functions built from them.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::numbers::{binomial, factorial};
use super::transfer::{char_poly, rect_lattice};
use super::CountingError;
use crate::walks::{count_walks_bounded, BoxBound, WalkKind};
use crate::young::Shape;

/// Integer polynomial, constant term first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigInt>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ExactPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        ExactPoly::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with the zero polynomial given degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// q(x) with q(t²) = p(t); odd coefficients are discarded.
    pub fn even_part(&self) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().step_by(2).cloned().collect())
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() || other.is_zero() {
            return ExactPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> ExactPoly {
        (0..e).fold(ExactPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    pub fn to_series(&self, order: usize) -> ExactSeries {
        ExactSeries::new(
            (0..=order).map(|i| BigRational::from_integer(self.coeff(i))).collect(),
            order,
        )
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<_, _>>()?;
        Ok(ExactPoly::new(coeffs))
    }
}

/// Power series over ℚ known through x^order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSeries {
    coeffs: Vec<BigRational>,
    order: usize,
}

impl ExactSeries {
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        ExactSeries { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        ExactSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        ExactSeries::new(vec![BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &ExactSeries) -> ExactSeries {
        let order = self.order.min(other.order);
        ExactSeries::new((0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(), order)
    }

    pub fn sub(&self, other: &ExactSeries) -> ExactSeries {
        let order = self.order.min(other.order);
        ExactSeries::new((0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(), order)
    }

    pub fn mul(&self, other: &ExactSeries) -> ExactSeries {
        let order = self.order.min(other.order);
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        ExactSeries::new(out, order)
    }

    pub fn inv(&self) -> Result<ExactSeries, CountingError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(CountingError::SingularSeries);
        }
        let mut out: Vec<BigRational> = Vec::with_capacity(self.order + 1);
        out.push(c0.recip());
        for n in 1..=self.order {
            let s: BigRational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-s / c0);
        }
        Ok(ExactSeries::new(out, self.order))
    }

    pub fn div(&self, other: &ExactSeries) -> Result<ExactSeries, CountingError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients n! [x^n], which must be integers for an EGF of counts.
    pub fn egf_counts(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * BigRational::from_integer(BigInt::from(factorial(n))))
            .collect()
    }
}

impl fmt::Display for ExactSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

impl Serialize for ExactSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactSeries", 2)?;
        st.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coefficients", &coeffs)?;
        st.end()
    }
}

/// I_m(2x) = Σ_j x^{|m|+2j} / (j! (|m|+j)!) through x^truncation.
pub fn bessel_series(order_m: i64, truncation: usize) -> ExactSeries {
    let m = order_m.unsigned_abs() as usize;
    let mut coeffs = vec![BigRational::zero(); truncation + 1];
    let mut j = 0;
    while m + 2 * j <= truncation {
        let denom = BigInt::from(factorial(j) * factorial(m + j));
        coeffs[m + 2 * j] = BigRational::new(BigInt::one(), denom);
        j += 1;
    }
    ExactSeries::new(coeffs, truncation)
}

/// Determinant of a square matrix of series by elimination.
fn series_det(mut m: Vec<Vec<ExactSeries>>, order: usize) -> Result<ExactSeries, CountingError> {
    let n = m.len();
    let mut det = ExactSeries::one(order);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].coeff(0).is_zero()) else {
            return Err(CountingError::SingularSeries);
        };
        if p != c {
            m.swap(p, c);
            det = ExactSeries::zero(order).sub(&det);
        }
        det = det.mul(&m[c][c]);
        let inv = m[c][c].inv()?;
        for i in c + 1..n {
            let f = m[i][c].mul(&inv);
            for jj in c..n {
                let sub = f.mul(&m[c][jj]);
                m[i][jj] = m[i][jj].sub(&sub);
            }
        }
    }
    Ok(det)
}

/// F_k(x) = det[I_{i-j}(2x) - I_{i+j}(2x)]_{i,j=1..k-1}.
pub fn fk_series(k: usize, truncation: usize) -> Result<ExactSeries, CountingError> {
    if k == 0 {
        return Err(CountingError::InvalidParameter("k must be at least 1".into()));
    }
    let size = k - 1;
    let entries = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    let (i, j) = (i as i64, j as i64);
                    bessel_series(i - j, truncation).sub(&bessel_series(i + j, truncation))
                })
                .collect()
        })
        .collect();
    series_det(entries, truncation)
}

/// f_k(m) for m = 0..=max_m, read from F_k as (2m)! [x^{2m}].
pub fn fk_counts(k: usize, max_m: usize) -> Result<Vec<BigUint>, CountingError> {
    let series = fk_series(k, 2 * max_m)?;
    series
        .egf_counts()
        .into_iter()
        .step_by(2)
        .map(|c| {
            if !c.is_integer() || c.is_negative() {
                return Err(CountingError::InvalidParameter(format!("non-integral coefficient {c}")));
            }
            Ok(c.to_integer().to_biguint().expect("checked non-negative"))
        })
        .collect()
}

/// G_{k,j}(x) = det(I - x A_{k,j}(0)) / det(I - x A_{k,j}) through x^order.
pub fn gkj_series(k: usize, j: usize, order: usize) -> Result<ExactSeries, CountingError> {
    if k == 0 || j == 0 {
        return Err(CountingError::InvalidParameter("k and j must be at least 1".into()));
    }
    let (a, a0) = rect_lattice(k, j);
    char_poly(&a0).to_series(order).div(&char_poly(&a).to_series(order))
}

/// Closed walks of length 2m from ∅ in L(k, j); equivalently matchings of
/// [2m] with cr ≤ k and ne ≤ j.
pub fn gkj_count(k: usize, j: usize, m: usize) -> BigUint {
    count_walks_bounded(WalkKind::Oscillating, &Shape::empty(), 2 * m, Some(BoxBound { rows: k, cols: j }))
}

/// g_{k,1}(m) by the reflection formula
/// Σ_i [C(2m, m - i(k+2)) - C(2m, m + i(k+2) + k + 1)].
pub fn gk1_reflection(k: usize, m: usize) -> BigUint {
    let n = 2 * m;
    let c = |r: i64| -> BigInt {
        if r < 0 || r > n as i64 {
            BigInt::zero()
        } else {
            BigInt::from(binomial(n, r as usize))
        }
    };
    let (m, k, bound) = (m as i64, k as i64, m as i64 + 1);
    let total: BigInt = (-bound..=bound).map(|i| c(m - i * (k + 2)) - c(m + i * (k + 2) + k + 1)).sum();
    total.to_biguint().expect("a count is non-negative")
}

/// Exact integer coefficients of a series, if they all are integers.
pub fn integer_coeffs(s: &ExactSeries) -> Option<Vec<BigInt>> {
    s.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}
