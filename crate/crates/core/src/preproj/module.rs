//! Finite-dimensional representations of the doubled quiver satisfying the
//! preprojective relations, and homomorphisms between them.
//!
//! A module stores one vector space dimension per vertex and one matrix
//! per arrow (`dim tgt × dim src`). Submodules, quotients, kernels and
//! cokernels are computed exactly; the radical filtration gives the
//! layer structure reported in module dumps.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGraph;
use crate::foundation::{QMatrix, Rational, Subspace};

use super::algebra::{DoubledQuiver, GradedAlgebra};
use super::ideal::GradedIdeal;
use super::PreprojError;

/// A representation of the doubled quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    quiver: Arc<DoubledQuiver>,
    dims: Vec<usize>,
    maps: Vec<QMatrix>,
}

/// A module homomorphism, one matrix per vertex (`dim target × dim source`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub blocks: Vec<QMatrix>,
}

/// Coordinates with respect to a full-column-rank basis matrix, read off
/// an invertible square submatrix.
pub(crate) struct CoordSolver {
    rows: Vec<usize>,
    inv: QMatrix,
}

impl CoordSolver {
    /// `k` has linearly independent columns.
    pub(crate) fn new(k: &QMatrix) -> Self {
        let (_, rows) = k.transpose().rref();
        let sub = QMatrix::from_rows(rows.iter().map(|&r| k.row(r).to_vec()).collect(), k.cols());
        let inv = sub.inverse().expect("basis columns must be independent");
        CoordSolver { rows, inv }
    }

    /// Coordinates of a vector assumed to lie in the column span.
    pub(crate) fn coords(&self, y: &[Rational]) -> Vec<Rational> {
        let sub: Vec<Rational> = self.rows.iter().map(|&r| y[r].clone()).collect();
        self.inv.mul_vec(&sub)
    }
}

/// Columns as a matrix with `rows` rows.
pub(crate) fn columns_matrix(cols: &[Vec<Rational>], rows: usize) -> QMatrix {
    QMatrix::from_columns(cols, rows)
}

fn unit(n: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[k] = Rational::one();
    v
}

impl ModuleRep {
    /// Builds a module after checking matrix shapes.
    pub fn new(
        quiver: Arc<DoubledQuiver>,
        dims: Vec<usize>,
        maps: Vec<QMatrix>,
    ) -> Result<Self, PreprojError> {
        if dims.len() != quiver.n() || maps.len() != quiver.arrows().len() {
            return Err(PreprojError::Malformed(
                "wrong number of vertices or arrows".into(),
            ));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.tgt] || m.cols() != dims[a.src] {
                return Err(PreprojError::Malformed(format!(
                    "arrow {} has the wrong shape",
                    a.name
                )));
            }
        }
        Ok(ModuleRep { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<DoubledQuiver>) -> Self {
        let dims = vec![0; quiver.n()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| QMatrix::zeros(0, 0))
            .collect();
        ModuleRep { quiver, dims, maps }
    }

    /// The simple module at vertex index `v`.
    pub fn simple(quiver: Arc<DoubledQuiver>, v: usize) -> Self {
        let mut dims = vec![0; quiver.n()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| QMatrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        ModuleRep { quiver, dims, maps }
    }

    pub fn quiver(&self) -> &Arc<DoubledQuiver> {
        &self.quiver
    }

    /// Dimension vector, indexed by vertex index.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The matrix of arrow `a`.
    pub fn map(&self, a: usize) -> &QMatrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[QMatrix] {
        &self.maps
    }

    /// True when `Σ_{tgt β = v} β β* − Σ_{src β = v} β* β` acts as zero at every vertex.
    pub fn satisfies_relations(&self) -> bool {
        (0..self.quiver.n()).all(|v| {
            let mut acc = QMatrix::zeros(self.dims[v], self.dims[v]);
            for (b, beta) in self.quiver.arrows().iter().enumerate() {
                if beta.star {
                    continue;
                }
                if beta.tgt == v {
                    acc = acc.add(&self.maps[b].mul(&self.maps[beta.partner]));
                }
                if beta.src == v {
                    acc = acc.sub(&self.maps[beta.partner].mul(&self.maps[b]));
                }
            }
            acc.is_zero()
        })
    }

    /// `J X` at every vertex: the span of all arrow images.
    pub fn radical(&self) -> Vec<Subspace<Rational>> {
        self.images_of(&self.full_spaces())
    }

    fn full_spaces(&self) -> Vec<Subspace<Rational>> {
        self.dims.iter().map(|&d| Subspace::full(d)).collect()
    }

    fn images_of(&self, spaces: &[Subspace<Rational>]) -> Vec<Subspace<Rational>> {
        let mut out: Vec<Subspace<Rational>> =
            self.dims.iter().map(|&d| Subspace::new(d)).collect();
        for (a, arrow) in self.quiver.arrows().iter().enumerate() {
            for v in spaces[arrow.src].basis() {
                out[arrow.tgt].insert(self.maps[a].mul_vec(v));
            }
        }
        out
    }

    /// `J^t X` at every vertex.
    pub fn radical_power(&self, t: usize) -> Vec<Subspace<Rational>> {
        let mut cur = self.full_spaces();
        for _ in 0..t {
            cur = self.images_of(&cur);
        }
        cur
    }

    /// Radical layers: `dim (J^t X / J^{t+1} X)_v` for `t = 0, 1, …` until zero.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = self.full_spaces();
        while cur.iter().any(|s| s.dim() > 0) {
            let next = self.images_of(&cur);
            out.push(
                cur.iter()
                    .zip(&next)
                    .map(|(a, b)| a.dim() - b.dim())
                    .collect(),
            );
            cur = next;
        }
        out
    }

    /// The smallest `L` with `J^L X = 0`.
    pub fn loewy_length(&self) -> usize {
        self.layers().len()
    }

    /// Vectors spanning a complement of `J X`, as `(vertex, vector)`.
    pub fn top_generators(&self) -> Vec<(usize, Vec<Rational>)> {
        let rad = self.radical();
        let mut out = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            for k in r.non_pivots() {
                out.push((v, unit(self.dims[v], k)));
            }
        }
        out
    }

    /// The dimension vector of the top `X / J X`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.dim())
            .collect()
    }

    /// The submodule spanned by per-vertex subspaces (which must be closed
    /// under the arrows), with its inclusion map.
    pub fn submodule(&self, spaces: &[Subspace<Rational>]) -> (ModuleRep, ModuleMap) {
        let bases: Vec<QMatrix> = spaces
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| columns_matrix(s.basis(), d))
            .collect();
        let solvers: Vec<Option<CoordSolver>> = bases
            .iter()
            .map(|k| (k.cols() > 0).then(|| CoordSolver::new(k)))
            .collect();
        let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vec<Rational>> = (0..dims[arrow.src])
                    .map(|c| {
                        let img = self.maps[a].mul_vec(&bases[arrow.src].column(c));
                        match &solvers[arrow.tgt] {
                            Some(s) => {
                                debug_assert!(
                                    spaces[arrow.tgt].contains(&img),
                                    "subspaces are not a submodule"
                                );
                                s.coords(&img)
                            }
                            None => {
                                debug_assert!(img.iter().all(|x| x.is_zero()));
                                Vec::new()
                            }
                        }
                    })
                    .collect();
                columns_matrix(&cols, dims[arrow.tgt])
            })
            .collect();
        let sub = ModuleRep {
            quiver: self.quiver.clone(),
            dims,
            maps,
        };
        (sub, ModuleMap { blocks: bases })
    }

    /// The quotient by a submodule given as per-vertex subspaces, with the projection.
    pub fn quotient(&self, spaces: &[Subspace<Rational>]) -> (ModuleRep, ModuleMap) {
        let comp: Vec<Vec<usize>> = spaces.iter().map(Subspace::non_pivots).collect();
        let dims: Vec<usize> = comp.iter().map(Vec::len).collect();
        let project = |v: usize, x: Vec<Rational>| -> Vec<Rational> {
            let r = spaces[v].reduce(x);
            comp[v].iter().map(|&k| r[k].clone()).collect()
        };
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vec<Rational>> = comp[arrow.src]
                    .iter()
                    .map(|&k| project(arrow.tgt, self.maps[a].column(k)))
                    .collect();
                columns_matrix(&cols, dims[arrow.tgt])
            })
            .collect();
        let blocks = (0..self.dims.len())
            .map(|v| {
                let cols: Vec<Vec<Rational>> = (0..self.dims[v])
                    .map(|k| project(v, unit(self.dims[v], k)))
                    .collect();
                columns_matrix(&cols, dims[v])
            })
            .collect();
        (
            ModuleRep {
                quiver: self.quiver.clone(),
                dims,
                maps,
            },
            ModuleMap { blocks },
        )
    }

    /// Direct sum with the canonical inclusions and projections.
    pub fn direct_sum(parts: &[&ModuleRep]) -> (ModuleRep, Vec<ModuleMap>, Vec<ModuleMap>) {
        let quiver = parts
            .first()
            .expect("direct sum of no modules")
            .quiver
            .clone();
        let n = quiver.n();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let mut maps: Vec<QMatrix> = quiver
            .arrows()
            .iter()
            .map(|a| QMatrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        let mut offs = vec![0usize; n];
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        for p in parts {
            for (a, arrow) in quiver.arrows().iter().enumerate() {
                for r in 0..p.dims[arrow.tgt] {
                    for c in 0..p.dims[arrow.src] {
                        maps[a][(offs[arrow.tgt] + r, offs[arrow.src] + c)] =
                            p.maps[a][(r, c)].clone();
                    }
                }
            }
            let mut inc = Vec::new();
            let mut proj = Vec::new();
            for v in 0..n {
                let mut i = QMatrix::zeros(dims[v], p.dims[v]);
                for k in 0..p.dims[v] {
                    i[(offs[v] + k, k)] = Rational::one();
                }
                proj.push(i.transpose());
                inc.push(i);
            }
            incs.push(ModuleMap { blocks: inc });
            projs.push(ModuleMap { blocks: proj });
            for v in 0..n {
                offs[v] += p.dims[v];
            }
        }
        (ModuleRep { quiver, dims, maps }, incs, projs)
    }

    /// Kernel of a homomorphism out of `self`, with its inclusion.
    pub fn kernel(&self, f: &ModuleMap) -> (ModuleRep, ModuleMap) {
        let spaces: Vec<Subspace<Rational>> = f
            .blocks
            .iter()
            .zip(&self.dims)
            .map(|(m, &d)| {
                Subspace::spanned_by(
                    d,
                    if m.rows() == 0 {
                        (0..d).map(|k| unit(d, k)).collect()
                    } else {
                        m.kernel()
                    },
                )
            })
            .collect();
        self.submodule(&spaces)
    }

    /// Image of a homomorphism `self → y`, as per-vertex subspaces of `y`.
    pub fn image_spaces(&self, f: &ModuleMap, y: &ModuleRep) -> Vec<Subspace<Rational>> {
        (0..self.dims.len())
            .map(|v| {
                Subspace::spanned_by(y.dims[v], (0..self.dims[v]).map(|k| f.blocks[v].column(k)))
            })
            .collect()
    }

    /// Cokernel of a homomorphism `self → y`, with the projection from `y`.
    pub fn cokernel(&self, f: &ModuleMap, y: &ModuleRep) -> (ModuleRep, ModuleMap) {
        y.quotient(&self.image_spaces(f, y))
    }

    /// JSON dump: vertex labels, radical layers and arrow matrices.
    pub fn to_json(&self) -> ModuleJson {
        let labels = self.quiver.labels();
        ModuleJson {
            vertices: labels.to_vec(),
            layers: self
                .layers()
                .into_iter()
                .map(|l| {
                    l.iter()
                        .enumerate()
                        .filter(|(_, &d)| d > 0)
                        .map(|(v, &d)| (labels[v].to_string(), d))
                        .collect()
                })
                .collect(),
            dims: self.dims.clone(),
            arrows: self
                .quiver
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(a, m)| ArrowMatrixJson {
                    name: a.name.clone(),
                    from: labels[a.src],
                    to: labels[a.tgt],
                    matrix: m.to_rows(),
                })
                .collect(),
        }
    }

    /// Parses a dump against the doubled quiver of `graph`.
    pub fn from_json(j: &ModuleJson, graph: &CoxeterGraph) -> Result<Self, PreprojError> {
        let quiver = Arc::new(DoubledQuiver::from_graph(graph));
        if j.vertices != quiver.labels() || j.dims.len() != quiver.n() {
            return Err(PreprojError::Malformed(
                "vertex list does not match the graph".into(),
            ));
        }
        let mut maps: Vec<Option<QMatrix>> = vec![None; quiver.arrows().len()];
        for a in &j.arrows {
            let k = quiver
                .arrow_by_name(&a.name)
                .ok_or_else(|| PreprojError::Malformed(format!("unknown arrow {}", a.name)))?;
            let arrow = quiver.arrow(k);
            let (r, c) = (j.dims[arrow.tgt], j.dims[arrow.src]);
            if a.matrix.len() != r || a.matrix.iter().any(|row| row.len() != c) {
                return Err(PreprojError::Malformed(format!(
                    "arrow {} has the wrong shape",
                    a.name
                )));
            }
            maps[k] = Some(QMatrix::from_rows(a.matrix.clone(), c));
        }
        let maps = maps
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                let a = quiver.arrow(k);
                m.unwrap_or_else(|| QMatrix::zeros(j.dims[a.tgt], j.dims[a.src]))
            })
            .collect();
        let m = ModuleRep::new(quiver, j.dims.clone(), maps)?;
        if !m.satisfies_relations() {
            return Err(PreprojError::Malformed(
                "preprojective relations fail".into(),
            ));
        }
        Ok(m)
    }

    /// Reduces the arrow matrices modulo `p`; fails on non-integral entries.
    pub fn mod_prime(&self, p: u64) -> Result<Vec<Vec<Vec<u64>>>, PreprojError> {
        self.maps
            .iter()
            .map(|m| {
                m.to_rows()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| x.mod_prime(p).ok_or(PreprojError::NotIntegral(p)))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// JSON form of a module.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleJson {
    pub vertices: Vec<u32>,
    /// Radical layers, top first: `{vertex label: dimension}`.
    pub layers: Vec<BTreeMap<String, usize>>,
    /// Vertex dimensions in vertex order.
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowMatrixJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowMatrixJson {
    pub name: String,
    pub from: u32,
    pub to: u32,
    pub matrix: Vec<Vec<Rational>>,
}

impl ModuleMap {
    pub fn zero(x: &ModuleRep, y: &ModuleRep) -> Self {
        ModuleMap {
            blocks: (0..x.dims.len())
                .map(|v| QMatrix::zeros(y.dims[v], x.dims[v]))
                .collect(),
        }
    }

    pub fn identity(x: &ModuleRep) -> Self {
        ModuleMap {
            blocks: x.dims.iter().map(|&d| QMatrix::identity(d)).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(QMatrix::is_zero)
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Rational> {
        self.blocks
            .iter()
            .flat_map(|m| m.to_rows().into_iter().flatten())
            .collect()
    }

    /// Total trace `Σ_v tr(f_v)` of an endomorphism.
    pub fn trace(&self) -> Rational {
        self.blocks
            .iter()
            .fold(Rational::zero(), |acc, m| acc + m.trace())
    }

    /// True when the map commutes with every arrow action.
    pub fn is_homomorphism(&self, x: &ModuleRep, y: &ModuleRep) -> bool {
        x.quiver.arrows().iter().enumerate().all(|(a, arrow)| {
            y.maps[a].mul(&self.blocks[arrow.src]) == self.blocks[arrow.tgt].mul(&x.maps[a])
        })
    }

    pub fn is_injective(&self) -> bool {
        self.blocks
            .iter()
            .all(|m| m.cols() == 0 || m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks
            .iter()
            .all(|m| m.rows() == 0 || m.rank() == m.rows())
    }

    /// Horizontal concatenation `[f_1 … f_k] : ⊕ X_i → Y`.
    pub fn hconcat(maps: &[ModuleMap], y: &ModuleRep) -> ModuleMap {
        let blocks = (0..y.dims.len())
            .map(|v| {
                let cols: Vec<Vec<Rational>> = maps
                    .iter()
                    .flat_map(|f| (0..f.blocks[v].cols()).map(move |c| f.blocks[v].column(c)))
                    .collect();
                columns_matrix(&cols, y.dims[v])
            })
            .collect();
        ModuleMap { blocks }
    }

    /// Vertical concatenation `(f_1; …; f_k) : X → ⊕ Y_i`.
    pub fn vconcat(maps: &[ModuleMap], x: &ModuleRep) -> ModuleMap {
        let blocks = (0..x.dims.len())
            .map(|v| {
                let rows: Vec<Vec<Rational>> =
                    maps.iter().flat_map(|f| f.blocks[v].to_rows()).collect();
                QMatrix::from_rows(rows, x.dims[v])
            })
            .collect();
        ModuleMap { blocks }
    }
}

/// The quotient `(Λ/T) e_j` (or all of `Λ/T` when `source` is `None`) as
/// a left module; its basis consists of the paths outside `T`, graded by
/// degree, so the radical filtration is the degree filtration.
pub fn quotient_module(
    alg: &GradedAlgebra,
    ideal: &GradedIdeal,
    source: Option<u32>,
) -> Result<ModuleRep, PreprojError> {
    quotient_module_with_paths(alg, ideal, source).map(|(m, _)| m)
}

/// For each vertex, the basis paths `(degree, basis index)` of a module.
pub type BasisPaths = Vec<Vec<(usize, usize)>>;

/// Like [`quotient_module`], also returning for each vertex the basis
/// paths `(degree, basis index)` in module-basis order.
pub fn quotient_module_with_paths(
    alg: &GradedAlgebra,
    ideal: &GradedIdeal,
    source: Option<u32>,
) -> Result<(ModuleRep, BasisPaths), PreprojError> {
    let sources: Vec<usize> = match source {
        Some(l) => vec![alg
            .graph()
            .index_of(l)
            .ok_or(PreprojError::UnknownVertex(l))?],
        None => (0..alg.n()).collect(),
    };
    if !ideal.quotient_fits(alg, &sources) {
        return Err(PreprojError::TruncationTooSmall {
            needed: alg.truncation() + 1,
            have: alg.truncation(),
        });
    }
    let nt = alg.truncation();
    let nv = alg.n();
    // Module basis: (degree, non-pivot index) grouped by target vertex.
    let mut index: Vec<BTreeMap<usize, (usize, usize)>> = vec![BTreeMap::new(); nt];
    let mut dims = vec![0usize; nv];
    let mut paths: BasisPaths = vec![Vec::new(); nv];
    for d in 0..nt {
        for k in ideal.part(d).non_pivots() {
            let e = &alg.basis(d)[k];
            if sources.contains(&e.src) {
                index[d].insert(k, (e.tgt, dims[e.tgt]));
                dims[e.tgt] += 1;
                paths[e.tgt].push((d, k));
            }
        }
    }
    let quiver = alg.quiver().clone();
    let mut maps: Vec<QMatrix> = quiver
        .arrows()
        .iter()
        .map(|a| QMatrix::zeros(dims[a.tgt], dims[a.src]))
        .collect();
    for d in 0..nt.saturating_sub(1) {
        for (&k, &(v, col)) in &index[d] {
            for (a, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.src != v {
                    continue;
                }
                let img = alg.left_mul(d, a, &alg.unit(d, k)).unwrap();
                let red = ideal.part(d + 1).reduce(img);
                for (k2, x) in red.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let &(v2, row) = index[d + 1]
                        .get(&k2)
                        .expect("reduced vectors live on module paths");
                    debug_assert_eq!(v2, arrow.tgt);
                    maps[a][(row, col)] = x.clone();
                }
            }
        }
    }
    Ok((ModuleRep::new(quiver, dims, maps)?, paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Word;
    use crate::preproj::ideal::{ideal_for_word, ideal_i};

    #[test]
    fn kronecker_p03() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 5);
        let t = ideal_for_word(&alg, &Word::new(&[0, 1, 0]))
            .unwrap()
            .pop()
            .unwrap();
        let p = quotient_module(&alg, &t, Some(0)).unwrap();
        assert_eq!(p.dims(), &[4, 2]);
        assert_eq!(p.layers(), vec![vec![1, 0], vec![0, 2], vec![3, 0]]);
        assert!(p.satisfies_relations());
    }

    #[test]
    fn simple_from_ideal() {
        let g = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&g, 3);
        let s = quotient_module(&alg, &ideal_i(&alg, 2).unwrap(), Some(2)).unwrap();
        assert_eq!(s, ModuleRep::simple(alg.quiver().clone(), 1));
    }

    #[test]
    fn truncation_is_checked() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 3);
        let t = ideal_for_word(&alg, &Word::new(&[0, 1, 0]))
            .unwrap()
            .pop()
            .unwrap();
        assert!(matches!(
            quotient_module(&alg, &t, Some(0)),
            Err(PreprojError::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn kernels_quotients_and_sums() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 5);
        let t = ideal_for_word(&alg, &Word::new(&[0, 1, 0]))
            .unwrap()
            .pop()
            .unwrap();
        let p = quotient_module(&alg, &t, Some(0)).unwrap();
        let (rad, inc) = p.submodule(&p.radical());
        assert_eq!(rad.dims(), &[3, 2]);
        assert!(rad.satisfies_relations());
        assert!(inc.is_homomorphism(&rad, &p));
        let (top, proj) = p.quotient(&p.radical());
        assert_eq!(top.dims(), &[1, 0]);
        assert!(proj.is_homomorphism(&p, &top));
        let (k, kinc) = p.kernel(&proj);
        assert_eq!(k.dims(), rad.dims());
        assert!(kinc.is_injective());
        let (sum, incs, projs) = ModuleRep::direct_sum(&[&p, &top]);
        assert_eq!(sum.dims(), &[5, 2]);
        assert!(incs.iter().all(|i| i.is_injective()));
        assert!(projs[1].compose(&incs[1]) == ModuleMap::identity(&top));
        assert_eq!(sum.loewy_length(), 3);
    }

    #[test]
    fn json_round_trip() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 5);
        let t = ideal_for_word(&alg, &Word::new(&[0, 1]))
            .unwrap()
            .pop()
            .unwrap();
        let m = quotient_module(&alg, &t, None).unwrap();
        let j = serde_json::to_string(&m.to_json()).unwrap();
        let back = ModuleRep::from_json(&serde_json::from_str(&j).unwrap(), &g).unwrap();
        assert_eq!(back, m);
    }
}
