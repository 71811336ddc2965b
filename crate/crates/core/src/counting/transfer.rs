//! Adjacency matrices of L(k, j) and exact linear algebra over ℤ.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::series::ExactPoly;
use super::CountingError;
use crate::young::Shape;

/// Square integer matrix, optionally labelled by shapes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    legend: Option<Vec<Shape>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, CountingError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CountingError::NonSquare);
        }
        Ok(IntMatrix { rows, legend: None })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, CountingError> {
        IntMatrix::new(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); n]; n],
            legend: None,
        }
    }

    pub fn with_legend(mut self, legend: Vec<Shape>) -> Self {
        assert_eq!(legend.len(), self.dim());
        self.legend = Some(legend);
        self
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn legend(&self) -> Option<&[Shape]> {
        self.legend.as_deref()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Sum of the entries above the diagonal; the edge count for a simple
    /// graph.
    pub fn edge_count(&self) -> BigInt {
        let n = self.dim();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.rows[i][j].clone()).sum()
    }

    /// Relabel vertices: new vertex `t` is old vertex `perm[t]`.
    pub fn permuted(&self, perm: &[usize]) -> IntMatrix {
        let rows = perm.iter().map(|&i| perm.iter().map(|&j| self.rows[i][j].clone()).collect()).collect();
        let legend = self.legend.as_ref().map(|l| perm.iter().map(|&i| l[i].clone()).collect());
        IntMatrix { rows, legend }
    }

    pub fn without_vertex(&self, v: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| i != v).collect();
        self.permuted(&keep)
    }
}

/// Shapes fitting in a `k × j` box (at most `k` rows, parts at most `j`),
/// in lexicographic order of part lists, ∅ first.
pub fn box_shapes(k: usize, j: usize) -> Vec<Shape> {
    fn go(k: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        out.push(Shape::new(cur.clone()).expect("weakly decreasing"));
        if cur.len() == k {
            return;
        }
        for part in 1..=cap {
            cur.push(part);
            go(k, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, j, &mut Vec::new(), &mut out);
    out
}

/// Adjacency matrix of the Hasse diagram of L(k, j), and the same matrix
/// with ∅ deleted.
pub fn rect_lattice(k: usize, j: usize) -> (IntMatrix, IntMatrix) {
    let shapes = box_shapes(k, j);
    let n = shapes.len();
    let mut a = IntMatrix::zeros(n);
    let index: std::collections::HashMap<&Shape, usize> = shapes.iter().enumerate().map(|(i, s)| (s, i)).collect();
    for (i, s) in shapes.iter().enumerate() {
        for t in s.up_covers() {
            if let Some(&u) = index.get(&t) {
                a.rows[i][u] = BigInt::one();
                a.rows[u][i] = BigInt::one();
            }
        }
    }
    let a = a.with_legend(shapes);
    let a0 = a.without_vertex(0);
    (a, a0)
}

/// Coefficients of det(tI - A), leading coefficient first, by Berkowitz's
/// division-free algorithm.
pub fn berkowitz(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.dim();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let m = &a.rows;
    // vector for the leading 1×1 block
    let mut poly = vec![BigInt::one(), -m[0][0].clone()];
    for size in 2..=n {
        let k = size - 1;
        // R = -row k restricted to the first k columns, C = column k
        let r: Vec<BigInt> = (0..k).map(|c| -m[k][c].clone()).collect();
        let mut col: Vec<BigInt> = (0..k).map(|i| m[i][k].clone()).collect();
        let mut items = vec![BigInt::one(), -m[k][k].clone()];
        for step in 0..k {
            items.push(r.iter().zip(&col).map(|(x, y)| x * y).sum());
            if step + 1 < k {
                col = (0..k).map(|i| (0..k).map(|c| &m[i][c] * &col[c]).sum()).collect();
            }
        }
        // multiply by the (size+1) × size lower-triangular Toeplitz matrix
        let next: Vec<BigInt> = (0..=size)
            .map(|row| (0..size.min(row + 1)).map(|c| &items[row - c] * &poly[c]).sum())
            .collect();
        poly = next;
    }
    poly
}

/// det(I - tA) as a polynomial in t, constant term first. These are the
/// coefficients of det(tI - A) read from the leading one down.
pub fn char_poly(a: &IntMatrix) -> ExactPoly {
    ExactPoly::new(berkowitz(a))
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for jj in c + 1..cols {
                let v = &row[jj] * pivot - &lead * &pivot_row[jj];
                row[jj] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

/// Exact rank over ℚ by fraction-free elimination, and the corank.
pub fn rank_corank(a: &IntMatrix) -> (usize, usize) {
    let rank = bareiss_rank(a.rows.clone());
    (rank, a.dim() - rank)
}

/// Numbers of shapes in the `k × j` box of even and of odd size.
pub fn bipartite_balance(k: usize, j: usize) -> (usize, usize) {
    let shapes = box_shapes(k, j);
    let even = shapes.iter().filter(|s| s.size() % 2 == 0).count();
    (even, shapes.len() - even)
}

/// Biadjacency block of A_{k,j} between even-size and odd-size shapes.
pub fn biadjacency(k: usize, j: usize) -> Vec<Vec<BigInt>> {
    let (a, _) = rect_lattice(k, j);
    let shapes = a.legend().expect("lattice matrices carry a legend");
    let even: Vec<usize> = (0..shapes.len()).filter(|&i| shapes[i].size() % 2 == 0).collect();
    let odd: Vec<usize> = (0..shapes.len()).filter(|&i| shapes[i].size() % 2 == 1).collect();
    even.iter().map(|&i| odd.iter().map(|&o| a.get(i, o).clone()).collect()).collect()
}

/// rank(A_{k,j}) computed as twice the rank of its biadjacency block.
pub fn bipartite_rank(k: usize, j: usize) -> usize {
    2 * bareiss_rank(biadjacency(k, j))
}

const MODULUS: u64 = (1 << 61) - 1;

fn det_mod_p(m: &[Vec<BigInt>]) -> u64 {
    let p = MODULUS;
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    let x = (v % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
                    u64::try_from(x).expect("reduced mod p")
                })
                .collect()
        })
        .collect();
    let n = a.len();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let mut det = 1u64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        det = mul(det, a[c][c]);
        let inv = pow(a[c][c], p - 2);
        for i in c + 1..n {
            let f = mul(a[i][c], inv);
            if f == 0 {
                continue;
            }
            for jj in c..n {
                let sub = mul(f, a[c][jj]);
                a[i][jj] = (a[i][jj] + p - sub) % p;
            }
        }
    }
    det
}

/// Whether A_{k,j} is invertible. The graph is bipartite, so A is invertible
/// iff the two colour classes have equal size and the square biadjacency
/// block is nonsingular. A nonzero determinant modulo a prime settles
/// nonsingularity; otherwise the exact rank decides.
pub fn is_invertible(k: usize, j: usize) -> bool {
    let (even, odd) = bipartite_balance(k, j);
    if even != odd {
        return false;
    }
    let b = biadjacency(k, j);
    det_mod_p(&b) != 0 || bareiss_rank(b) == even
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::numbers::binomial;
    use crate::young::permutations;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    fn leibniz_det(a: &[Vec<BigRational>]) -> BigRational {
        let n = a.len();
        let mut total = BigRational::zero();
        for perm in permutations(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let mut term = BigRational::one();
            for (i, &pj) in perm.iter().enumerate() {
                term *= &a[i][pj - 1];
            }
            if inversions % 2 == 1 {
                term = -term;
            }
            total += term;
        }
        total
    }

    /// det(I - tA) evaluated at rational t by the Leibniz formula.
    fn det_i_minus_ta(a: &IntMatrix, t: &BigRational) -> BigRational {
        let n = a.dim();
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = if i == j { BigRational::one() } else { BigRational::zero() };
                        d - t * BigRational::from_integer(a.get(i, j).clone())
                    })
                    .collect()
            })
            .collect();
        leibniz_det(&rows)
    }

    fn rational_rank(a: &IntMatrix) -> usize {
        let mut rows: Vec<Vec<BigRational>> =
            a.rows().iter().map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
        let n = rows.len();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..n).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            for i in 0..n {
                if i != rank && !rows[i][c].is_zero() {
                    let f = &rows[i][c] / &rows[rank][c];
                    for jj in 0..n {
                        let sub = &f * &rows[rank][jj];
                        rows[i][jj] -= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0usize..=5).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n))
    }

    proptest! {
        #[test]
        fn char_poly_matches_leibniz(rows in small_matrix()) {
            let a = m(&rows);
            let p = char_poly(&a);
            for t in [-2i64, -1, 0, 1, 3] {
                let t = BigRational::from_integer(BigInt::from(t));
                prop_assert_eq!(p.eval_rational(&t), det_i_minus_ta(&a, &t));
            }
        }

        #[test]
        fn rank_matches_rational_elimination(rows in small_matrix(), dup in 0usize..3) {
            let mut rows = rows;
            // force some rank deficiency
            if rows.len() >= 2 && dup > 0 {
                let copy: Vec<i64> = rows[0].iter().map(|v| v * dup as i64).collect();
                let last = rows.len() - 1;
                rows[last] = copy;
            }
            let a = m(&rows);
            prop_assert_eq!(rank_corank(&a).0, rational_rank(&a));
        }
    }

    #[test]
    fn lattice_examples() {
        let (a, a0) = rect_lattice(1, 1);
        assert_eq!(a, m(&[vec![0, 1], vec![1, 0]]).with_legend(vec![Shape::empty(), Shape::row(1)]));
        assert_eq!(a0.dim(), 1);
        let (a22, _) = rect_lattice(2, 2);
        assert_eq!(a22.dim(), 6);
        assert_eq!(a22.edge_count(), BigInt::from(6));
        assert!(a22.is_symmetric());
        assert_eq!(
            a22.legend().unwrap().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            vec!["∅", "1", "11", "2", "21", "22"]
        );
        for k in 1..=4 {
            for j in 1..=4 {
                assert_eq!(BigInt::from(box_shapes(k, j).len()), BigInt::from(binomial(k + j, j)));
            }
        }
        assert_eq!(box_shapes(3, 11).len(), 364);
    }

    #[test]
    fn char_poly_examples() {
        let p = |k, j| char_poly(&rect_lattice(k, j).0);
        assert_eq!(p(1, 1), ExactPoly::from_i64(&[1, 0, -1]));
        assert_eq!(p(2, 2), ExactPoly::from_i64(&[1, 0, -6, 0, 5]));
        assert_eq!(char_poly(&IntMatrix::zeros(0)), ExactPoly::from_i64(&[1]));
    }

    #[test]
    fn invariants_under_relabelling() {
        for (k, j) in [(2, 2), (2, 3), (3, 3)] {
            let (a, _) = rect_lattice(k, j);
            let n = a.dim();
            let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
            assert!({
                let mut s = perm.clone();
                s.sort();
                s == (0..n).collect::<Vec<_>>()
            });
            let b = a.permuted(&perm);
            assert_eq!(char_poly(&a), char_poly(&b));
            assert_eq!(rank_corank(&a), rank_corank(&b));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_corank(&rect_lattice(1, 2).0), (2, 1));
        assert_eq!(rank_corank(&rect_lattice(1, 1).0), (2, 0));
        for k in 1..=4 {
            for j in 1..=4 {
                let (a, _) = rect_lattice(k, j);
                let (rank, _) = rank_corank(&a);
                assert_eq!(rank, bipartite_rank(k, j));
                assert_eq!(rank, 2 * char_poly(&a).even_part().degree());
                assert_eq!(is_invertible(k, j), rank == a.dim(), "({k},{j})");
            }
        }
    }

    #[test]
    fn balance_matches_gaussian_binomial_at_minus_one() {
        // q-Pascal: [n, r] = [n-1, r-1] + q^r [n-1, r]
        fn gauss(n: usize, r: usize) -> Vec<i64> {
            if r == 0 || r == n {
                return vec![1];
            }
            let a = gauss(n - 1, r - 1);
            let b = gauss(n - 1, r);
            let mut out = vec![0; (r * (n - r)) + 1];
            for (i, v) in a.iter().enumerate() {
                out[i] += v;
            }
            for (i, v) in b.iter().enumerate() {
                out[i + r] += v;
            }
            out
        }
        for k in 1..=6 {
            for j in 1..=6 {
                let (even, odd) = bipartite_balance(k, j);
                let at_minus_one: i64 = gauss(k + j, k).iter().enumerate().map(|(i, c)| if i % 2 == 0 { *c } else { -c }).sum();
                assert_eq!(even as i64 - odd as i64, at_minus_one);
                assert_eq!(even == odd, k % 2 == 1 && j % 2 == 1, "({k},{j})");
            }
        }
        assert_eq!(bipartite_balance(1, 1), (1, 1));
        assert_eq!(bipartite_balance(1, 2), (2, 1));
        let (e, o) = bipartite_balance(3, 3);
        assert_eq!(e, o);
    }

    #[test]
    fn non_square_rejected() {
        assert_eq!(IntMatrix::from_i64(&[vec![1, 2]]), Err(CountingError::NonSquare));
    }

    #[test]
    fn modular_determinant() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(det_mod_p(a.rows()), 1);
        let s = m(&[vec![2, 4], vec![1, 2]]);
        assert_eq!(det_mod_p(s.rows()), 0);
        let neg = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(det_mod_p(neg.rows()), MODULUS - 1);
    }
}
