//! Exchange of a non-projective summand in a cluster tilting family via
//! minimal approximations, and syzygies over finite-dimensional quotients.
//!
//! For `T = M ⊕ T'`, the minimal right `add(T')`-approximation
//! `g: E → M` is assembled from a basis of `Hom(T_j, M)` modulo the maps
//! factoring through radical maps inside `add(T')`; then `M* = ker g`.
//! The left approximation `f: M → E'` is built dually and its cokernel
//! is checked to be isomorphic to `M*`.

use crate::foundation::{Rational, Subspace};

use super::algebra::GradedAlgebra;
use super::endquiver::FamilyRadicals;
use super::ext::cover_over;
use super::hom::{indecomposable, is_isomorphic_indecomposable};
use super::ideal::GradedIdeal;
use super::module::{ModuleMap, ModuleRep};
use super::PreprojError;

/// `0 → left --f--> middle --g--> right → 0`; the middle term is a direct
/// sum of the family members listed in `middle_summands`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub left: ModuleRep,
    pub middle: ModuleRep,
    pub right: ModuleRep,
    pub f: ModuleMap,
    pub g: ModuleMap,
    pub middle_summands: Vec<usize>,
}

impl ShortExactSequence {
    /// Checks injectivity of `f`, surjectivity of `g`, `g ∘ f = 0` and the
    /// dimension count, which together give exactness.
    pub fn is_exact(&self) -> bool {
        self.f.is_homomorphism(&self.left, &self.middle)
            && self.g.is_homomorphism(&self.middle, &self.right)
            && self.f.is_injective()
            && self.g.is_surjective()
            && self.g.compose(&self.f).is_zero()
            && self.left.total_dim() + self.right.total_dim() == self.middle.total_dim()
    }
}

/// The result of exchanging summand `index`.
#[derive(Clone, Debug)]
pub struct Exchange {
    pub index: usize,
    /// The new summand `M*`.
    pub replacement: ModuleRep,
    /// `0 → M* → E → M → 0`.
    pub forward: ShortExactSequence,
    /// `0 → M → E' → C → 0` with `C ≅ M*`.
    pub backward: ShortExactSequence,
}

/// Keeps the maps of `candidates` that are independent modulo `known`.
fn complement(known: &[ModuleMap], candidates: &[ModuleMap]) -> Vec<ModuleMap> {
    let Some(first) = candidates.first() else {
        return Vec::new();
    };
    let mut span: Subspace<Rational> = Subspace::new(first.flatten().len());
    for k in known {
        span.insert(k.flatten());
    }
    candidates
        .iter()
        .filter(|c| span.insert(c.flatten()))
        .cloned()
        .collect()
}

/// Exchanges summand `index` of a cluster tilting family.
pub fn exchange_summand(
    family: &[ModuleRep],
    index: usize,
    projective: &[bool],
) -> Result<Exchange, PreprojError> {
    if projective.get(index).copied().unwrap_or(true) {
        return Err(PreprojError::NoExchange(format!(
            "summand {index} is projective or out of range"
        )));
    }
    let fam = &FamilyRadicals::new(family)?;
    let n = family.len();
    for a in 0..n {
        for b in a..n {
            let h = (fam.homs[a][b].dim() + fam.homs[b][a].dim()) as i64;
            if h != family[a]
                .quiver()
                .bilinear_form(family[a].dims(), family[b].dims())
            {
                return Err(PreprojError::NotClusterTilting(format!(
                    "Ext¹ between summands {a} and {b} is nonzero"
                )));
            }
        }
    }
    let m = &family[index];
    let others: Vec<usize> = (0..n).filter(|&j| j != index).collect();

    // Right approximation E → M.
    let mut right_maps = Vec::new();
    let mut right_summands = Vec::new();
    for &j in &others {
        let through_rad: Vec<ModuleMap> = others
            .iter()
            .flat_map(|&i| {
                fam.rad[j][i]
                    .iter()
                    .flat_map(move |r| fam.homs[i][index].basis.iter().map(move |h| h.compose(r)))
            })
            .collect();
        for f in complement(&through_rad, &fam.homs[j][index].basis) {
            right_maps.push(f);
            right_summands.push(j);
        }
    }
    if right_maps.is_empty() {
        return Err(PreprojError::NoExchange(
            "right approximation is zero".into(),
        ));
    }
    let refs: Vec<&ModuleRep> = right_summands.iter().map(|&j| &family[j]).collect();
    let (e, _, _) = ModuleRep::direct_sum(&refs);
    let g = ModuleMap::hconcat(&right_maps, m);
    if !g.is_surjective() {
        return Err(PreprojError::NoExchange(
            "right approximation is not surjective".into(),
        ));
    }
    let (mstar, incl) = e.kernel(&g);

    // Left approximation M → E'.
    let mut left_maps = Vec::new();
    let mut left_summands = Vec::new();
    for &j in &others {
        let through_rad: Vec<ModuleMap> = others
            .iter()
            .flat_map(|&i| {
                fam.homs[index][i]
                    .basis
                    .iter()
                    .flat_map(move |h| fam.rad[i][j].iter().map(move |r| r.compose(h)))
            })
            .collect();
        for f in complement(&through_rad, &fam.homs[index][j].basis) {
            left_maps.push(f);
            left_summands.push(j);
        }
    }
    if left_maps.is_empty() {
        return Err(PreprojError::NoExchange(
            "left approximation is zero".into(),
        ));
    }
    let refs: Vec<&ModuleRep> = left_summands.iter().map(|&j| &family[j]).collect();
    let (e2, _, _) = ModuleRep::direct_sum(&refs);
    let f = ModuleMap::vconcat(&left_maps, m);
    if !f.is_injective() {
        return Err(PreprojError::NoExchange(
            "left approximation is not injective".into(),
        ));
    }
    let (c, proj) = m.cokernel(&f, &e2);

    if !indecomposable(&mstar) {
        return Err(PreprojError::NoExchange(
            "kernel of the approximation is decomposable".into(),
        ));
    }
    if is_isomorphic_indecomposable(&mstar, m) {
        return Err(PreprojError::NoExchange(
            "replacement is isomorphic to the original".into(),
        ));
    }
    if !is_isomorphic_indecomposable(&mstar, &c) {
        return Err(PreprojError::NoExchange(
            "the two exchange sequences disagree".into(),
        ));
    }
    log::debug!(
        "exchanged summand {index}: dims {:?} -> {:?}",
        m.dims(),
        mstar.dims()
    );
    Ok(Exchange {
        index,
        replacement: mstar.clone(),
        forward: ShortExactSequence {
            left: mstar,
            middle: e,
            right: m.clone(),
            f: incl,
            g,
            middle_summands: right_summands,
        },
        backward: ShortExactSequence {
            left: m.clone(),
            middle: e2,
            right: c,
            f,
            g: proj,
            middle_summands: left_summands,
        },
    })
}

/// Kernel of the projective cover of `x` over `Λ/ideal` (`x` must be a
/// `Λ/ideal`-module).
pub fn syzygy(
    alg: &GradedAlgebra,
    ideal: &GradedIdeal,
    x: &ModuleRep,
) -> Result<ModuleRep, PreprojError> {
    let cover = cover_over(alg, ideal, x)?;
    Ok(cover.module.kernel(&cover.map).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, Word};
    use crate::preproj::endquiver::standard_family;
    use crate::preproj::ext::ext1_by_form;
    use crate::preproj::ideal::ideal_for_word;
    use crate::preproj::module::quotient_module;

    #[test]
    fn kronecker_three_summands() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 6);
        let fam = standard_family(&alg, &Word::new(&[0, 1, 0])).unwrap();
        assert_eq!(fam.projective, vec![false, true, true]);
        let ex = exchange_summand(&fam.modules, 0, &fam.projective).unwrap();
        assert_eq!(ex.replacement.dims(), &[3, 2]);
        assert!(ex.forward.is_exact());
        assert!(ex.backward.is_exact());
        assert_eq!(ex.forward.middle_summands, vec![2]);
        assert_eq!(ext1_by_form(&fam.modules[0], &ex.replacement), 1);
        let p03 = &fam.modules[2];
        let (rad, _) = p03.submodule(&p03.radical());
        assert!(is_isomorphic_indecomposable(&ex.replacement, &rad));

        let mut family = fam.modules.clone();
        family[0] = ex.replacement.clone();
        let back = exchange_summand(&family, 0, &fam.projective).unwrap();
        assert!(is_isomorphic_indecomposable(
            &back.replacement,
            &fam.modules[0]
        ));
        assert!(exchange_summand(&fam.modules, 1, &fam.projective).is_err());
    }

    #[test]
    fn syzygies() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 7);
        let t4 = ideal_for_word(&alg, &Word::periodic(&[0, 1], 4))
            .unwrap()
            .pop()
            .unwrap();
        let l4e0 = quotient_module(&alg, &t4, Some(0)).unwrap();
        assert!(syzygy(&alg, &t4, &l4e0).unwrap().is_zero());
        let s0 = ModuleRep::simple(alg.quiver().clone(), 0);
        let omega = syzygy(&alg, &t4, &s0).unwrap();
        let (rad, _) = l4e0.submodule(&l4e0.radical());
        assert_eq!(omega.dims(), &[3, 2]);
        assert!(is_isomorphic_indecomposable(&omega, &rad));
        assert_eq!(omega.total_dim(), l4e0.total_dim() - s0.total_dim());
    }
}
