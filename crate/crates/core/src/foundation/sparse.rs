//! Sparse triplet matrices with exact elimination.
//!
//! [`rank_kernel`] works over any [`Field`]; over ℚ the rank can also be
//! obtained by fraction-free (Bareiss) elimination on integer rows
//! ([`bareiss_rank`]), which never forms a fraction and serves as an
//! independent check of the field-based elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::Field;
use super::rational::Rational;

/// A sparse matrix storing only nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), F>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions accumulate.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, F)>>(
        rows: usize,
        cols: usize,
        t: I,
    ) -> Self {
        let mut m = Self::new(rows, cols);
        for (i, j, v) in t {
            m.add_to(i, j, v);
        }
        m
    }

    /// Builds from dense rows of small integers.
    pub fn from_dense_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::new(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, F::from_i64(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    /// Sets an entry; storing zero removes it.
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Adds `v` to an entry.
    pub fn add_to(&mut self, i: usize, j: usize, v: F) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Iterates over stored entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Applies the matrix to a dense vector.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![F::zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] = out[i].clone() + a.clone() * v[j].clone();
            }
        }
        out
    }

    /// Returns the matrix with rows permuted: row `k` of the result is row `perm[k]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rows);
        let mut inv = vec![0; self.rows];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        Self::from_triplets(
            self.rows,
            self.cols,
            self.iter().map(|(i, j, v)| (inv[i], j, v.clone())),
        )
    }

    fn sparse_rows(&self) -> Vec<BTreeMap<usize, F>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i].insert(j, v.clone());
        }
        rows
    }
}

/// Rank and a kernel basis of `m` (vectors `v` with `m v = 0`).
///
/// Gauss–Jordan elimination on sparse rows; the kernel basis has one vector
/// per non-pivot column.
pub fn rank_kernel<F: Field>(m: &SparseMatrix<F>) -> (usize, Vec<Vec<F>>) {
    // Reduced rows keyed by pivot column.
    let mut reduced: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
    for mut row in m.sparse_rows() {
        // Eliminate existing pivots from the new row.
        loop {
            let hit = row.keys().find(|c| reduced.contains_key(c)).copied();
            let Some(c) = hit else { break };
            let f = row[&c].clone();
            for (j, v) in &reduced[&c] {
                let x = row.get(j).cloned().unwrap_or_else(F::zero) - f.clone() * v.clone();
                if x.is_zero() {
                    row.remove(j);
                } else {
                    row.insert(*j, x);
                }
            }
        }
        let Some((&p, pv)) = row.iter().next() else {
            continue;
        };
        let inv = pv.inv();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        // Keep the system fully reduced: clear column p from older rows.
        for other in reduced.values_mut() {
            if let Some(f) = other.get(&p).cloned() {
                for (j, v) in &row {
                    let x = other.get(j).cloned().unwrap_or_else(F::zero) - f.clone() * v.clone();
                    if x.is_zero() {
                        other.remove(j);
                    } else {
                        other.insert(*j, x);
                    }
                }
            }
        }
        reduced.insert(p, row);
    }
    let rank = reduced.len();
    let mut kernel = Vec::new();
    for free in 0..m.cols {
        if reduced.contains_key(&free) {
            continue;
        }
        let mut v = vec![F::zero(); m.cols];
        v[free] = F::one();
        for (&p, row) in &reduced {
            if let Some(x) = row.get(&free) {
                v[p] = -x.clone();
            }
        }
        kernel.push(v);
    }
    (rank, kernel)
}

/// Rank over ℚ by fraction-free Bareiss elimination.
///
/// Each row is first scaled to integers by its denominators' lcm; the
/// elimination then divides exactly by the previous pivot at every step.
pub fn bareiss_rank(m: &SparseMatrix<Rational>) -> usize {
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); m.cols()]; m.rows()];
    let mut lcm = vec![BigInt::one(); m.rows()];
    for (i, _, v) in m.iter() {
        lcm[i] = lcm[i].lcm(&v.denom());
    }
    for (i, j, v) in m.iter() {
        a[i][j] = v.numer() * (&lcm[i] / v.denom());
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let x = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&x % &prev).is_zero());
                a[i][j] = x / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        let id = SparseMatrix::<Rational>::from_dense_i64(&[vec![1, 0], vec![0, 1]]);
        let (r, k) = rank_kernel(&id);
        assert_eq!((r, k.len()), (2, 0));
        let z = SparseMatrix::<Rational>::new(3, 3);
        let (r, k) = rank_kernel(&z);
        assert_eq!((r, k.len()), (0, 3));
    }

    #[test]
    fn rank_one_kernel() {
        let m = SparseMatrix::<Rational>::from_dense_i64(&[vec![1, 2], vec![2, 4]]);
        let (r, k) = rank_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k.len(), 1);
        // The kernel is spanned by (2, -1).
        let v = &k[0];
        assert_eq!(
            v[0].clone() * Rational::from_int(-1),
            v[1].clone() * Rational::from_int(2)
        );
        assert_eq!(bareiss_rank(&m), 1);
    }
}
