//! Gabriel quivers of endomorphism algebras of module families, and the
//! standard families `Λ_k e_{i_k}` attached to reduced words.
//!
//! The number of arrows `T_a → T_b` is `dim rad(T_a, T_b) − dim rad²(T_a, T_b)`,
//! where `rad(X, Y) = Hom(X, Y)` for non-isomorphic indecomposables,
//! `rad(X, X)` is the radical of `End(X)`, and `rad²` sums all composites
//! through members of the family.

use crate::coxeter::{is_reduced, Word};
use crate::foundation::{Rational, Subspace};
use crate::quiver::MultiQuiver;
use crate::word2quiver::{last_occurrence_flags, position_id};

use super::algebra::GradedAlgebra;
use super::hom::{hom, radical_of_end, HomSpace};
use super::ideal::ideal_for_word;
use super::module::{quotient_module, ModuleMap, ModuleRep};
use super::PreprojError;

/// The modules `Λ_k e_{i_k}` for `k = 1..l`, with flags marking the
/// projective-injective ones (last occurrence of each letter).
#[derive(Clone, Debug)]
pub struct StandardFamily {
    pub word: Word,
    pub modules: Vec<ModuleRep>,
    pub projective: Vec<bool>,
}

/// Builds the standard family of a reduced word.
pub fn standard_family(alg: &GradedAlgebra, word: &Word) -> Result<StandardFamily, PreprojError> {
    if !is_reduced(alg.graph(), word)? {
        return Err(PreprojError::NotReduced(word.clone()));
    }
    let ideals = ideal_for_word(alg, word)?;
    let modules = word
        .letters()
        .iter()
        .enumerate()
        .map(|(k, &i)| quotient_module(alg, &ideals[k + 1], Some(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StandardFamily {
        word: word.clone(),
        modules,
        projective: last_occurrence_flags(word),
    })
}

/// Pairwise Hom spaces and radicals of a family of indecomposables.
pub(crate) struct FamilyRadicals {
    /// `homs[a][b]` is a basis of `Hom(T_a, T_b)`.
    pub homs: Vec<Vec<HomSpace>>,
    /// `rad[a][b]` is a basis of `rad(T_a, T_b)`.
    pub rad: Vec<Vec<Vec<ModuleMap>>>,
}

impl FamilyRadicals {
    pub(crate) fn new(modules: &[ModuleRep]) -> Result<Self, PreprojError> {
        let homs: Vec<Vec<HomSpace>> = modules
            .iter()
            .map(|x| modules.iter().map(|y| hom(x, y)).collect())
            .collect();
        let mut rad = Vec::with_capacity(modules.len());
        for (a, x) in modules.iter().enumerate() {
            let ra = radical_of_end(x, &homs[a][a]);
            if x.is_zero() || homs[a][a].dim() != ra.len() + 1 {
                return Err(PreprojError::DecomposableSummand(a));
            }
            rad.push(
                (0..modules.len())
                    .map(|b| {
                        if a == b {
                            ra.clone()
                        } else {
                            homs[a][b].basis.clone()
                        }
                    })
                    .collect::<Vec<_>>(),
            );
        }
        Ok(FamilyRadicals { homs, rad })
    }

    /// Dimension of `rad²(T_a, T_b)`.
    pub(crate) fn rad2_dim(&self, a: usize, b: usize) -> usize {
        let mut span: Option<Subspace<Rational>> = None;
        for c in 0..self.rad.len() {
            for f in &self.rad[a][c] {
                for g in &self.rad[c][b] {
                    let v = g.compose(f).flatten();
                    span.get_or_insert_with(|| Subspace::new(v.len())).insert(v);
                }
            }
        }
        span.map_or(0, |s| s.dim())
    }
}

/// The Gabriel quiver of `End(⊕ T_a)`, vertices `p1, p2, …` in family order.
pub fn end_quiver(modules: &[ModuleRep]) -> Result<MultiQuiver, PreprojError> {
    let fam = FamilyRadicals::new(modules)?;
    Ok(quiver_from_radicals(&fam))
}

pub(crate) fn quiver_from_radicals(fam: &FamilyRadicals) -> MultiQuiver {
    let n = fam.rad.len();
    let mut q = MultiQuiver::new();
    for k in 0..n {
        q.add_vertex(&position_id(k), false).expect("fresh ids");
    }
    for a in 0..n {
        for b in 0..n {
            let irr = fam.rad[a][b].len() - fam.rad2_dim(a, b);
            if irr > 0 {
                q.add_arrows_idx(a, b, irr as u32);
            }
        }
    }
    q
}

/// Marks the vertices flagged projective as frozen.
pub fn mark_frozen(q: &mut MultiQuiver, projective: &[bool]) {
    for (k, &p) in projective.iter().enumerate() {
        if p {
            q.set_frozen(&position_id(k), true)
                .expect("vertex ids follow family order");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;
    use crate::quiver::{detect, is_isomorphic};
    use crate::word2quiver::build_q;

    fn check_word(g: &CoxeterGraph, word: &[u32]) {
        let w = Word::new(word);
        let alg = GradedAlgebra::build(g, w.len() + 2);
        let fam = standard_family(&alg, &w).unwrap();
        let mut q = end_quiver(&fam.modules).unwrap();
        mark_frozen(&mut q, &fam.projective);
        let expected = build_q(g, &w, true).unwrap();
        assert!(detect(&q).loops.is_empty());
        assert!(
            is_isomorphic(&q, &expected).is_some(),
            "word {w}: got {q:?}, expected {expected:?}"
        );
    }

    #[test]
    fn single_simple_has_no_loop() {
        let g = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&g, 3);
        let q = end_quiver(&[ModuleRep::simple(alg.quiver().clone(), 0)]).unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(q.arrow_count(), 0);
    }

    #[test]
    fn kronecker_ladder() {
        check_word(&CoxeterGraph::kronecker(), &[0, 1, 0, 1]);
    }

    #[test]
    fn triangle_first_example() {
        check_word(&CoxeterGraph::triangle(), &[1, 2, 1, 3, 2]);
    }

    #[test]
    fn decomposable_is_rejected() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 3);
        let s = ModuleRep::simple(alg.quiver().clone(), 0);
        let (sum, _, _) = ModuleRep::direct_sum(&[&s, &s]);
        assert_eq!(
            end_quiver(&[s, sum]).unwrap_err(),
            PreprojError::DecomposableSummand(1)
        );
    }
}
