//! Graded two-sided ideals of a truncated preprojective algebra: the
//! ideals `I_i = Λ(1 − e_i)Λ`, their products, the chains
//! `T_k = I_{i₁}⋯I_{i_k}` of a word, and the Hom-dimension formula
//! `Hom(Λ_k, Λ_m) ≅ T_{k+1,m}/T_m`.
//!
//! Every ideal is stored as one subspace per degree below the truncation.
//! All spanning vectors are block-pure (supported on paths with a fixed
//! source and target), and echelon reduction keeps the stored rows so.

use crate::coxeter::Word;
use crate::foundation::{Rational, Subspace};

use super::algebra::GradedAlgebra;
use super::PreprojError;

/// A graded subspace of the algebra, one component per degree `0..N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    parts: Vec<Subspace<Rational>>,
}

impl GradedIdeal {
    pub fn zero(alg: &GradedAlgebra) -> Self {
        GradedIdeal {
            parts: alg.dims().into_iter().map(Subspace::new).collect(),
        }
    }

    /// The whole algebra.
    pub fn whole(alg: &GradedAlgebra) -> Self {
        GradedIdeal {
            parts: alg.dims().into_iter().map(Subspace::full).collect(),
        }
    }

    /// `J^k`: everything of degree at least `k`.
    pub fn radical_power(alg: &GradedAlgebra, k: usize) -> Self {
        let parts = alg.dims().into_iter().enumerate().map(|(d, n)| {
            if d >= k {
                Subspace::full(n)
            } else {
                Subspace::new(n)
            }
        });
        GradedIdeal {
            parts: parts.collect(),
        }
    }

    /// The two-sided ideal generated by homogeneous elements `(degree, vector)`.
    pub fn generated_by(alg: &GradedAlgebra, gens: &[(usize, Vec<Rational>)]) -> Self {
        let mut ideal = Self::zero(alg);
        for d in 0..alg.truncation() {
            for (gd, g) in gens {
                if *gd == d {
                    for piece in block_projections(alg, d, g) {
                        ideal.parts[d].insert(piece);
                    }
                }
            }
            if d > 0 {
                let prev = ideal.parts[d - 1].basis().to_vec();
                for x in &prev {
                    for a in 0..alg.quiver().arrows().len() {
                        ideal.parts[d].insert(alg.left_mul(d - 1, a, x).unwrap());
                        ideal.parts[d].insert(alg.right_mul(d - 1, a, x).unwrap());
                    }
                }
            }
        }
        ideal
    }

    /// The component of degree `d`.
    pub fn part(&self, d: usize) -> &Subspace<Rational> {
        &self.parts[d]
    }

    pub fn truncation(&self) -> usize {
        self.parts.len()
    }

    /// Dimensions of the components.
    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    /// Codimension in the truncated algebra.
    pub fn codim(&self) -> usize {
        self.parts.iter().map(|s| s.ambient() - s.dim()).sum()
    }

    pub fn same_as(&self, other: &GradedIdeal) -> bool {
        self.parts.len() == other.parts.len()
            && self
                .parts
                .iter()
                .zip(&other.parts)
                .all(|(a, b)| a.same_as(b))
    }

    /// True when `other ⊆ self`.
    pub fn contains(&self, other: &GradedIdeal) -> bool {
        self.parts
            .iter()
            .zip(&other.parts)
            .all(|(a, b)| a.contains_subspace(b))
    }

    /// Dimension of `e_tgt · (component d) · e_src`.
    pub fn block_dim(&self, alg: &GradedAlgebra, d: usize, src: usize, tgt: usize) -> usize {
        self.parts[d]
            .pivots()
            .iter()
            .filter(|&&p| {
                let e = &alg.basis(d)[p];
                e.src == src && e.tgt == tgt
            })
            .count()
    }

    /// Dimension of `e_tgt (Λ/self) e_src` summed over all degrees.
    pub fn quotient_block_dim(&self, alg: &GradedAlgebra, src: usize, tgt: usize) -> usize {
        (0..self.parts.len())
            .map(|d| alg.block_dim(d, src, tgt) - self.block_dim(alg, d, src, tgt))
            .sum()
    }

    /// True when the quotient vanishes in the top computed degree for
    /// paths starting at `sources` (so it vanishes in all higher degrees).
    pub fn quotient_fits(&self, alg: &GradedAlgebra, sources: &[usize]) -> bool {
        let top = self.parts.len() - 1;
        alg.basis(top).iter().enumerate().all(|(k, e)| {
            !sources.contains(&e.src) || {
                let mut v = vec![Rational::zero(); alg.dim(top)];
                v[k] = Rational::one();
                self.parts[top].contains(&v)
            }
        })
    }

    /// Checks closure under left and right multiplication by arrows.
    pub fn is_two_sided(&self, alg: &GradedAlgebra) -> bool {
        (0..self.parts.len().saturating_sub(1)).all(|d| {
            self.parts[d].basis().iter().all(|x| {
                (0..alg.quiver().arrows().len()).all(|a| {
                    self.parts[d + 1].contains(&alg.left_mul(d, a, x).unwrap())
                        && self.parts[d + 1].contains(&alg.right_mul(d, a, x).unwrap())
                })
            })
        })
    }
}

/// Splits a vector into its nonzero `(source, target)` block components.
fn block_projections(alg: &GradedAlgebra, d: usize, v: &[Rational]) -> Vec<Vec<Rational>> {
    let mut blocks: std::collections::BTreeMap<(usize, usize), Vec<Rational>> = Default::default();
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let e = &alg.basis(d)[k];
        blocks
            .entry((e.src, e.tgt))
            .or_insert_with(|| vec![Rational::zero(); v.len()])[k] = x.clone();
    }
    blocks.into_values().collect()
}

fn vertex(alg: &GradedAlgebra, label: u32) -> Result<usize, PreprojError> {
    alg.graph()
        .index_of(label)
        .ok_or(PreprojError::UnknownVertex(label))
}

/// `I_i = Λ(1 − e_i)Λ`: all of `J` plus the idempotents `e_v`, `v ≠ i`.
pub fn ideal_i(alg: &GradedAlgebra, label: u32) -> Result<GradedIdeal, PreprojError> {
    let i = vertex(alg, label)?;
    let mut ideal = GradedIdeal::radical_power(alg, 1);
    for v in (0..alg.n()).filter(|&v| v != i) {
        ideal.parts[0].insert(alg.unit(0, v));
    }
    Ok(ideal)
}

/// The product `A · I_i` of an ideal with `I_i`:
/// `(A I_i)_d = A_d e_{≠i} + Σ_{src α = i} A_{d−1} α`.
pub fn ideal_times_i(
    alg: &GradedAlgebra,
    a: &GradedIdeal,
    label: u32,
) -> Result<GradedIdeal, PreprojError> {
    let i = vertex(alg, label)?;
    let mut out = GradedIdeal::zero(alg);
    for d in 0..a.parts.len() {
        for (row, &p) in a.parts[d].basis().iter().zip(a.parts[d].pivots()) {
            if alg.basis(d)[p].src != i {
                out.parts[d].insert(row.clone());
            }
        }
        if d > 0 {
            for row in a.parts[d - 1].basis() {
                for (al, arrow) in alg.quiver().arrows().iter().enumerate() {
                    if arrow.src == i {
                        out.parts[d].insert(alg.right_mul(d - 1, al, row).unwrap());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The product `A · B` of two ideals, computed as `A · G` where `G` spans
/// `B` modulo `J B` (a set of left-ideal generators of `B`).
pub fn ideal_product(alg: &GradedAlgebra, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
    let nt = a.parts.len();
    // Left-ideal generators of B, degree by degree.
    let mut gens: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(nt);
    for d in 0..nt {
        let mut jb = Subspace::new(alg.dim(d));
        if d > 0 {
            for x in b.parts[d - 1].basis() {
                for al in 0..alg.quiver().arrows().len() {
                    jb.insert(alg.left_mul(d - 1, al, x).unwrap());
                }
            }
        }
        let mut g = Vec::new();
        for row in b.parts[d].basis() {
            if jb.insert(row.clone()) {
                g.push(row.clone());
            }
        }
        gens.push(g);
    }
    let mut out = GradedIdeal::zero(alg);
    for k in 0..nt {
        for m in 0..nt - k {
            for x in a.parts[k].basis() {
                for g in &gens[m] {
                    out.parts[k + m].insert(alg.mul(k, x, m, g).unwrap());
                }
            }
        }
    }
    out
}

/// The chain `T_0 = Λ ⊇ T_1 ⊇ … ⊇ T_k` with `T_j = T_{j−1} I_{i_j}`
/// (returned with `T_0` first; the word need not be reduced).
pub fn ideal_for_word(alg: &GradedAlgebra, word: &Word) -> Result<Vec<GradedIdeal>, PreprojError> {
    let mut chain = vec![GradedIdeal::whole(alg)];
    for &l in word.letters() {
        let next = ideal_times_i(alg, chain.last().unwrap(), l)?;
        chain.push(next);
    }
    Ok(chain)
}

/// Dimensions of `Hom(Λ_k e_a, Λ_m e_b)` for all vertex pairs, read from
/// `e_a (T_{k+1,m}/T_m) e_b`; `total` is `dim T_{k+1,m}/T_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFormula {
    pub total: usize,
    /// `blocks[a][b]` for vertex indices `a, b`.
    pub blocks: Vec<Vec<usize>>,
}

/// Evaluates `Hom_Λ(Λ_k, Λ_m) ≅ T_{k+1,m}/T_m`, where
/// `T_{k+1,m} = I_{i_{k+1}}⋯I_{i_m}` (the whole algebra when `k ≥ m`).
pub fn hom_formula(
    alg: &GradedAlgebra,
    word: &Word,
    k: usize,
    m: usize,
) -> Result<HomFormula, PreprojError> {
    let l = word.letters();
    assert!(
        k <= l.len() && m <= l.len(),
        "k and m must not exceed the word length"
    );
    let t_m = ideal_for_word(alg, &Word::new(&l[..m]))?.pop().unwrap();
    let all: Vec<usize> = (0..alg.n()).collect();
    if !t_m.quotient_fits(alg, &all) {
        return Err(PreprojError::TruncationTooSmall {
            needed: m + 1,
            have: alg.truncation(),
        });
    }
    let t_km = if k >= m {
        GradedIdeal::whole(alg)
    } else {
        ideal_for_word(alg, &Word::new(&l[k..m]))?.pop().unwrap()
    };
    let n = alg.n();
    let mut blocks = vec![vec![0; n]; n];
    for (a, row) in blocks.iter_mut().enumerate() {
        for (b, x) in row.iter_mut().enumerate() {
            *x = t_m.quotient_block_dim(alg, b, a) - t_km.quotient_block_dim(alg, b, a);
        }
    }
    Ok(HomFormula {
        total: t_m.codim() - t_km.codim(),
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;

    #[test]
    fn simple_quotients() {
        for g in [CoxeterGraph::kronecker(), CoxeterGraph::triangle()] {
            let alg = GradedAlgebra::build(&g, 5);
            for &l in g.labels() {
                let ii = ideal_i(&alg, l).unwrap();
                assert_eq!(ii.codim(), 1);
                assert!(ii.is_two_sided(&alg));
                let gens: Vec<(usize, Vec<Rational>)> = (0..alg.n())
                    .filter(|&v| g.label(v) != l)
                    .map(|v| (0, alg.unit(0, v)))
                    .collect();
                assert!(ii.same_as(&GradedIdeal::generated_by(&alg, &gens)));
            }
        }
    }

    #[test]
    fn sum_of_two_generators() {
        let g = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&g, 4);
        let (a, b) = (ideal_i(&alg, 1).unwrap(), ideal_i(&alg, 2).unwrap());
        let sum: Vec<Subspace<Rational>> = (0..4).map(|d| a.part(d).sum(b.part(d))).collect();
        assert_eq!(sum[0].dim(), 3);
        assert!((1..4).all(|d| sum[d].dim() == alg.dim(d)));
    }

    #[test]
    fn idempotent_and_products() {
        let alg = GradedAlgebra::build(&CoxeterGraph::kronecker(), 6);
        let i0 = ideal_i(&alg, 0).unwrap();
        let i1 = ideal_i(&alg, 1).unwrap();
        assert!(ideal_product(&alg, &i0, &i0).same_as(&i0));
        let p01 = ideal_product(&alg, &i0, &i1);
        assert!(p01.same_as(&ideal_times_i(&alg, &i0, 1).unwrap()));
        let p10 = ideal_product(&alg, &i1, &i0);
        assert!(!p01.same_as(&p10));
        // Λ/I0I1 has composition factors S0 three times and S1 once.
        let mult = |t: &GradedIdeal, v: usize| {
            (0..alg.n())
                .map(|s| t.quotient_block_dim(&alg, s, v))
                .sum::<usize>()
        };
        assert_eq!((mult(&p01, 0), mult(&p01, 1)), (3, 1));
        assert_eq!((mult(&p10, 0), mult(&p10, 1)), (1, 3));
    }

    #[test]
    fn chain_with_repeated_letter_stalls() {
        let alg = GradedAlgebra::build(&CoxeterGraph::triangle(), 5);
        let c = ideal_for_word(&alg, &Word::new(&[2, 2])).unwrap();
        assert!(c[1].same_as(&c[2]));
        assert!(!c[0].same_as(&c[1]));
    }

    #[test]
    fn hom_formula_reads_quotients() {
        let alg = GradedAlgebra::build(&CoxeterGraph::kronecker(), 4);
        let w = Word::new(&[0, 1]);
        let f = hom_formula(&alg, &w, 2, 2).unwrap();
        assert_eq!(f.total, 4);
        let small = GradedAlgebra::build(&CoxeterGraph::kronecker(), 2);
        assert!(matches!(
            hom_formula(&small, &w, 2, 2),
            Err(PreprojError::TruncationTooSmall { .. })
        ));
    }
}
