//! Dense matrices and incrementally built subspaces over an exact field.
//!
//! These are the workhorses for module-level computations, where the
//! matrices are small (vertex spaces of desk-scale modules) and dense.

use std::fmt;

use super::field::Field;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for DenseMatrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for DenseMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> DenseMatrix<F> {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        DenseMatrix {
            rows: r,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(columns: &[Vec<F>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Builds a matrix from small integers.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let v = out[(i, j)].clone() + a.clone() * b.clone();
                        out[(i, j)] = v;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Applies `f` entrywise, producing a matrix over another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> DenseMatrix<G> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            let inv = piv.inv();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let v = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        DenseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

/// A subspace of `F^n` kept in (semi-)echelon form, built by inserting vectors.
///
/// Every stored row has a distinct pivot (its first nonzero coordinate),
/// normalized to 1, and rows are kept sorted by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// The zero subspace of `F^ambient`.
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The span of the given vectors.
    pub fn spanned_by<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vs: I) -> Self {
        let mut s = Self::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// The whole space.
    pub fn full(ambient: usize) -> Self {
        Self::spanned_by(
            ambient,
            (0..ambient).map(|i| {
                let mut v = vec![F::zero(); ambient];
                v[i] = F::one();
                v
            }),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Reduces `v` against the stored rows; the result vanishes on all pivots.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        debug_assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    let x = v[j].clone() - f.clone() * row[j].clone();
                    v[j] = x;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Inserts `v`; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Back-substitutes so every row vanishes on the other rows' pivots.
    pub fn fully_reduce(&mut self) {
        for i in (0..self.rows.len()).rev() {
            let p = self.pivots[i];
            let pivot_row = self.rows[i].clone();
            for k in 0..i {
                if self.rows[k][p].is_zero() {
                    continue;
                }
                let f = self.rows[k][p].clone();
                for j in p..self.ambient {
                    if !pivot_row[j].is_zero() {
                        let x = self.rows[k][j].clone() - f.clone() * pivot_row[j].clone();
                        self.rows[k][j] = x;
                    }
                }
            }
        }
    }

    /// True when `other` is contained in `self`.
    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Equality of subspaces (independent of the chosen rows).
    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// The sum of two subspaces.
    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Coordinates that are not pivots: a basis of a complement, given by unit vectors.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_p[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::Rational;

    type Q = Rational;

    #[test]
    fn kernel_of_rank_one() {
        let m = DenseMatrix::<Q>::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = DenseMatrix::<Q>::from_i64(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.determinant(), Q::from_int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), DenseMatrix::identity(2));
        let s = DenseMatrix::<Q>::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant(), Q::zero());
    }

    #[test]
    fn subspace_membership() {
        let mut s = Subspace::<Q>::new(3);
        assert!(s.insert(vec![Q::from_int(1), Q::from_int(1), Q::zero()]));
        assert!(s.insert(vec![Q::zero(), Q::from_int(1), Q::from_int(1)]));
        assert!(!s.insert(vec![Q::from_int(1), Q::from_int(2), Q::from_int(1)]));
        assert!(s.contains(&[Q::from_int(1), Q::zero(), Q::from_int(-1)]));
        assert!(!s.contains(&[Q::from_int(1), Q::zero(), Q::zero()]));
        assert_eq!(s.non_pivots(), vec![2]);
        let mut t = s.clone();
        t.fully_reduce();
        assert!(t.same_as(&s));
    }
}
