//! Truncated graded preprojective algebras.
//!
//! For a graph with vertices `0..n` (indices) every edge `{i, j}`, `i < j`,
//! of multiplicity `d` contributes `d` arrows `β: j → i` and their partners
//! `β*: i → j` to the doubled quiver. The relation at vertex `v` is
//! `r_v = Σ_{tgt β = v} β β* − Σ_{src β = v} β* β`, homogeneous of degree 2.
//!
//! Products are written as composition: `x · y` means "first `y`, then `x`".
//! Paths are stored as arrow lists in traversal order. The degree-`d`
//! component is computed as `(V ⊗ Λ_{d−1}) / (R ⊗ Λ_{d−2})`, choosing as
//! basis the non-pivot candidates of the relation matrix with columns in
//! descending lexicographic path order, so every basis element is a path.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::coxeter::CoxeterGraph;
use crate::foundation::{DenseMatrix, Rational};

/// A sparse vector as sorted `(index, coefficient)` pairs.
pub type SVec = Vec<(usize, Rational)>;

/// One arrow of the doubled quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DArrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    /// True for the added arrows `β*` (pointing from lower to higher index).
    pub star: bool,
    /// Index of `β*` for `β` and vice versa.
    pub partner: usize,
}

/// The doubled quiver of a graph: vertex labels and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledQuiver {
    labels: Vec<u32>,
    arrows: Vec<DArrow>,
}

impl DoubledQuiver {
    pub fn from_graph(g: &CoxeterGraph) -> Self {
        let n = g.n();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let d = g.mult(i, j);
                for r in 0..d {
                    let suffix = if d > 1 {
                        format!(".{r}")
                    } else {
                        String::new()
                    };
                    let k = arrows.len();
                    let (li, lj) = (g.label(i), g.label(j));
                    arrows.push(DArrow {
                        name: format!("{lj}>{li}{suffix}"),
                        src: j,
                        tgt: i,
                        star: false,
                        partner: k + 1,
                    });
                    arrows.push(DArrow {
                        name: format!("{li}>{lj}*{suffix}"),
                        src: i,
                        tgt: j,
                        star: true,
                        partner: k,
                    });
                }
            }
        }
        DoubledQuiver {
            labels: g.labels().to_vec(),
            arrows,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn vertex(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn arrows(&self) -> &[DArrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &DArrow {
        &self.arrows[a]
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Symmetric bilinear form `(x, y) = 2 Σ x_v y_v − Σ_{a} x_{src a} y_{tgt a}`
    /// over all doubled-quiver arrows.
    pub fn bilinear_form(&self, x: &[usize], y: &[usize]) -> i64 {
        let diag: i64 = (0..self.n()).map(|v| 2 * (x[v] * y[v]) as i64).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|a| (x[a.src] * y[a.tgt]) as i64)
            .sum();
        diag - off
    }
}

/// A basis path of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathElem {
    pub src: usize,
    pub tgt: usize,
    /// Arrows in traversal order.
    pub path: Vec<usize>,
    /// `(last arrow, parent basis index in the previous degree)` for positive degree.
    pub last: Option<(usize, usize)>,
}

/// A preprojective algebra truncated at degree `N`: the components of
/// degrees `0..N` together with left and right multiplication by arrows.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    graph: CoxeterGraph,
    quiver: Arc<DoubledQuiver>,
    truncation: usize,
    basis: Vec<Vec<PathElem>>,
    /// `left[d][a][b] = a · b_d` expressed in degree `d + 1`.
    left: Vec<Vec<Vec<SVec>>>,
    /// `right[d][a][b] = b_d · a` expressed in degree `d + 1`.
    right: Vec<Vec<Vec<SVec>>>,
}

impl GradedAlgebra {
    /// Computes the components of degrees `0..n_trunc` (`n_trunc ≥ 1`).
    pub fn build(graph: &CoxeterGraph, n_trunc: usize) -> Self {
        assert!(n_trunc >= 1, "truncation must be at least 1");
        let quiver = Arc::new(DoubledQuiver::from_graph(graph));
        let arrows = quiver.arrows().to_vec();
        let nv = graph.n();
        let mut basis: Vec<Vec<PathElem>> = vec![(0..nv)
            .map(|v| PathElem {
                src: v,
                tgt: v,
                path: Vec::new(),
                last: None,
            })
            .collect()];
        let mut left: Vec<Vec<Vec<SVec>>> = Vec::new();

        for d in 1..n_trunc {
            let prev = &basis[d - 1];
            let mut cands: Vec<(usize, usize)> = Vec::new();
            let mut cand_index: HashMap<(usize, usize), usize> = HashMap::new();
            for (bi, b) in prev.iter().enumerate() {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.src == b.tgt {
                        cand_index.insert((ai, bi), cands.len());
                        cands.push((ai, bi));
                    }
                }
            }
            let cand_path = |c: usize| {
                let (a, b) = cands[c];
                let mut p = prev[b].path.clone();
                p.push(a);
                p
            };
            let cand_block = |c: usize| {
                let (a, b) = cands[c];
                (prev[b].src, arrows[a].tgt)
            };

            // Relation vectors r_v · c for c in degree d − 2.
            let mut rows: Vec<BTreeMap<usize, Rational>> = Vec::new();
            if d >= 2 {
                for (ci, c) in basis[d - 2].iter().enumerate() {
                    let v = c.tgt;
                    let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (bi, beta) in arrows.iter().enumerate() {
                        if beta.star {
                            continue;
                        }
                        if beta.tgt == v {
                            for (bp, coef) in &left[d - 2][beta.partner][ci] {
                                *row.entry(cand_index[&(bi, *bp)])
                                    .or_insert_with(Rational::zero) += coef.clone();
                            }
                        }
                        if beta.src == v {
                            for (bp, coef) in &left[d - 2][bi][ci] {
                                *row.entry(cand_index[&(beta.partner, *bp)])
                                    .or_insert_with(Rational::zero) -= coef.clone();
                            }
                        }
                    }
                    row.retain(|_, x| !x.is_zero());
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }

            // Eliminate blockwise; pivots prefer lexicographically large paths.
            let mut by_block: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for c in 0..cands.len() {
                by_block.entry(cand_block(c)).or_default().push(c);
            }
            let mut rows_by_block: BTreeMap<(usize, usize), Vec<&BTreeMap<usize, Rational>>> =
                BTreeMap::new();
            for r in &rows {
                let first = *r.keys().next().unwrap();
                rows_by_block.entry(cand_block(first)).or_default().push(r);
            }
            // For each pivot candidate: its expression through non-pivot candidates.
            let mut eliminated: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
            for (blk, members) in &by_block {
                let Some(brows) = rows_by_block.get(blk) else {
                    continue;
                };
                let mut order = members.clone();
                order.sort_by_key(|&x| std::cmp::Reverse(cand_path(x)));
                let col_of: HashMap<usize, usize> =
                    order.iter().enumerate().map(|(k, &c)| (c, k)).collect();
                let dense: Vec<Vec<Rational>> = brows
                    .iter()
                    .map(|r| {
                        let mut v = vec![Rational::zero(); order.len()];
                        for (c, x) in r.iter() {
                            v[col_of[c]] = x.clone();
                        }
                        v
                    })
                    .collect();
                let (rr, pivots) = DenseMatrix::from_rows(dense, order.len()).rref();
                let is_pivot: Vec<bool> = {
                    let mut f = vec![false; order.len()];
                    for &p in &pivots {
                        f[p] = true;
                    }
                    f
                };
                for (r, &p) in pivots.iter().enumerate() {
                    let expr = (0..order.len())
                        .filter(|&q| !is_pivot[q] && !rr[(r, q)].is_zero())
                        .map(|q| (order[q], -rr[(r, q)].clone()))
                        .collect();
                    eliminated.insert(order[p], expr);
                }
            }

            let mut new_index: HashMap<usize, usize> = HashMap::new();
            let mut new_basis = Vec::new();
            for (c, &(a, b)) in cands.iter().enumerate() {
                if !eliminated.contains_key(&c) {
                    new_index.insert(c, new_basis.len());
                    new_basis.push(PathElem {
                        src: prev[b].src,
                        tgt: arrows[a].tgt,
                        path: cand_path(c),
                        last: Some((a, b)),
                    });
                }
            }
            let express = |c: usize| -> SVec {
                match eliminated.get(&c) {
                    None => vec![(new_index[&c], Rational::one())],
                    Some(e) => {
                        let mut v: SVec =
                            e.iter().map(|(q, x)| (new_index[q], x.clone())).collect();
                        v.sort_by_key(|p| p.0);
                        v
                    }
                }
            };
            let mut lmaps = vec![vec![Vec::new(); prev.len()]; arrows.len()];
            for (c, &(a, b)) in cands.iter().enumerate() {
                lmaps[a][b] = express(c);
            }
            left.push(lmaps);
            basis.push(new_basis);
        }

        let mut alg = GradedAlgebra {
            graph: graph.clone(),
            quiver,
            truncation: n_trunc,
            basis,
            left,
            right: Vec::new(),
        };
        alg.right = alg.build_right();
        alg
    }

    fn build_right(&self) -> Vec<Vec<Vec<SVec>>> {
        let na = self.quiver.arrows().len();
        let mut right: Vec<Vec<Vec<SVec>>> = Vec::new();
        let deg1: HashMap<usize, usize> = if self.truncation > 1 {
            self.basis[1]
                .iter()
                .enumerate()
                .map(|(k, p)| (p.path[0], k))
                .collect()
        } else {
            HashMap::new()
        };
        for d in 0..self.truncation.saturating_sub(1) {
            let mut maps = vec![vec![Vec::new(); self.basis[d].len()]; na];
            for (a, row) in maps.iter_mut().enumerate() {
                for (b, elem) in self.basis[d].iter().enumerate() {
                    row[b] = match elem.last {
                        None => {
                            if elem.tgt == self.quiver.arrow(a).tgt {
                                vec![(deg1[&a], Rational::one())]
                            } else {
                                Vec::new()
                            }
                        }
                        Some((last, parent)) => self.left_sparse(d, last, &right[d - 1][a][parent]),
                    };
                }
            }
            right.push(maps);
        }
        right
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn quiver(&self) -> &Arc<DoubledQuiver> {
        &self.quiver
    }

    /// The truncation degree `N`: components of degrees `0..N` are present.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    /// Dimensions of the components of degrees `0..N`.
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn basis(&self, d: usize) -> &[PathElem] {
        &self.basis[d]
    }

    /// Dimension of the `(source, target)` block in degree `d`.
    pub fn block_dim(&self, d: usize, src: usize, tgt: usize) -> usize {
        self.basis[d]
            .iter()
            .filter(|p| p.src == src && p.tgt == tgt)
            .count()
    }

    /// `a · b` for the basis element `b` of degree `d` (requires `d + 1 < N`).
    pub fn left_basis(&self, d: usize, a: usize, b: usize) -> &SVec {
        &self.left[d][a][b]
    }

    /// `b · a` for the basis element `b` of degree `d` (requires `d + 1 < N`).
    pub fn right_basis(&self, d: usize, a: usize, b: usize) -> &SVec {
        &self.right[d][a][b]
    }

    fn left_sparse(&self, d: usize, a: usize, v: &SVec) -> SVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (b, x) in v {
            for (c, y) in &self.left[d][a][*b] {
                *acc.entry(*c).or_insert_with(Rational::zero) += x.clone() * y.clone();
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    /// Left multiplication by an arrow on a dense degree-`d` vector; `None`
    /// when the product falls outside the truncation.
    pub fn left_mul(&self, d: usize, a: usize, v: &[Rational]) -> Option<Vec<Rational>> {
        self.apply(&self.left, d, a, v)
    }

    /// Right multiplication by an arrow on a dense degree-`d` vector.
    pub fn right_mul(&self, d: usize, a: usize, v: &[Rational]) -> Option<Vec<Rational>> {
        self.apply(&self.right, d, a, v)
    }

    fn apply(
        &self,
        table: &[Vec<Vec<SVec>>],
        d: usize,
        a: usize,
        v: &[Rational],
    ) -> Option<Vec<Rational>> {
        if d + 1 >= self.truncation {
            return None;
        }
        let mut out = vec![Rational::zero(); self.dim(d + 1)];
        for (b, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, y) in &table[d][a][b] {
                out[*c] += x.clone() * y.clone();
            }
        }
        Some(out)
    }

    /// The product `x · y` of homogeneous elements; `None` past the truncation.
    pub fn mul(
        &self,
        dx: usize,
        x: &[Rational],
        dy: usize,
        y: &[Rational],
    ) -> Option<Vec<Rational>> {
        if dx + dy >= self.truncation {
            return None;
        }
        let mut out = vec![Rational::zero(); self.dim(dx + dy)];
        for (q, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let elem = &self.basis[dx][q];
            // e_tgt · y keeps the block of y ending where q starts.
            let mut cur: Vec<Rational> = y
                .iter()
                .enumerate()
                .map(|(k, z)| {
                    if self.basis[dy][k].tgt == elem.src {
                        z.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            for (step, &a) in elem.path.iter().enumerate() {
                cur = self
                    .left_mul(dy + step, a, &cur)
                    .expect("within truncation");
            }
            for (o, z) in out.iter_mut().zip(cur) {
                if !z.is_zero() {
                    *o += c.clone() * z;
                }
            }
        }
        Some(out)
    }

    /// The unit vector of basis element `k` in degree `d`.
    pub fn unit(&self, d: usize, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim(d)];
        v[k] = Rational::one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_dimensions() {
        let alg = GradedAlgebra::build(&CoxeterGraph::kronecker(), 4);
        assert_eq!(alg.dims(), vec![2, 4, 6, 8]);
        for v in 0..2 {
            let layers: Vec<usize> = (0..4)
                .map(|d| (0..2).map(|t| alg.block_dim(d, v, t)).sum())
                .collect();
            assert_eq!(layers, vec![1, 2, 3, 4]);
        }
    }

    #[test]
    fn dynkin_a_dimensions() {
        // The preprojective algebra of A_n has dimension n(n+1)(n+2)/6.
        for n in 1..=4u32 {
            let alg = GradedAlgebra::build(&CoxeterGraph::a(n), 2 * n as usize + 2);
            let nn = n as usize;
            assert_eq!(alg.total_dim(), nn * (nn + 1) * (nn + 2) / 6, "A{n}");
        }
        let a2 = GradedAlgebra::build(&CoxeterGraph::a(2), 6);
        assert_eq!(a2.dims(), vec![2, 2, 0, 0, 0, 0]);
    }

    #[test]
    fn triangle_degree_one() {
        let alg = GradedAlgebra::build(&CoxeterGraph::triangle(), 2);
        assert_eq!(alg.dim(1), 6);
    }

    #[test]
    fn relations_vanish() {
        let g = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&g, 4);
        let q = alg.quiver().clone();
        for v in 0..alg.n() {
            let mut total = vec![Rational::zero(); alg.dim(2)];
            for (b, beta) in q.arrows().iter().enumerate() {
                if beta.star {
                    continue;
                }
                let e = alg.unit(0, v);
                if beta.tgt == v {
                    let x = alg.left_mul(0, beta.partner, &e).unwrap();
                    let y = alg.left_mul(1, b, &x).unwrap();
                    total.iter_mut().zip(y).for_each(|(t, z)| *t += z);
                }
                if beta.src == v {
                    let x = alg.left_mul(0, b, &e).unwrap();
                    let y = alg.left_mul(1, beta.partner, &x).unwrap();
                    total.iter_mut().zip(y).for_each(|(t, z)| *t -= z);
                }
            }
            assert!(total.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn products_are_associative() {
        let alg = GradedAlgebra::build(&CoxeterGraph::kronecker(), 7);
        for (dx, dy, dz) in [(1, 2, 1), (2, 1, 2), (1, 1, 3), (0, 2, 2)] {
            for i in 0..alg.dim(dx) {
                for j in 0..alg.dim(dy) {
                    for k in 0..alg.dim(dz) {
                        let (x, y, z) = (alg.unit(dx, i), alg.unit(dy, j), alg.unit(dz, k));
                        let xy = alg.mul(dx, &x, dy, &y).unwrap();
                        let l = alg.mul(dx + dy, &xy, dz, &z).unwrap();
                        let yz = alg.mul(dy, &y, dz, &z).unwrap();
                        let r = alg.mul(dx, &x, dy + dz, &yz).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn right_multiplication_matches_products() {
        let alg = GradedAlgebra::build(&CoxeterGraph::triangle(), 5);
        for d in 0..4 {
            for b in 0..alg.dim(d) {
                for a in 0..alg.quiver().arrows().len() {
                    let y = alg.unit(d, b);
                    let arrow = {
                        let k = alg.basis(1).iter().position(|p| p.path == vec![a]).unwrap();
                        alg.unit(1, k)
                    };
                    assert_eq!(
                        alg.right_mul(d, a, &y).unwrap(),
                        alg.mul(d, &y, 1, &arrow).unwrap()
                    );
                }
            }
        }
    }
}
