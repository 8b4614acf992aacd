//! Projective covers and `Ext¹`.
//!
//! `Ext¹(X, Y)` is read off the sequence
//! `0 → Hom(X, Y) → Hom(P, Y) → Hom(Ω, Y) → Ext¹(X, Y) → 0`
//! for a projective cover `P → X` with kernel `Ω`. Truncating `P` at
//! `J^N` with `N = LL(X) + LL(Y)` is exact: every map `Ω → Y` kills
//! `J^{LL(Y)} Ω`, which already contains `J^N P`.

use crate::foundation::Rational;

use super::algebra::GradedAlgebra;
use super::hom::hom;
use super::ideal::GradedIdeal;
use super::module::{columns_matrix, quotient_module_with_paths, ModuleMap, ModuleRep};
use super::PreprojError;

/// A projective cover over `Λ/ideal`: the cover `P`, the surjection
/// `π: P → X`, and the vertices of the generators used.
pub struct Cover {
    pub module: ModuleRep,
    pub map: ModuleMap,
    pub generator_vertices: Vec<usize>,
}

/// Projective cover of `x` over `Λ/ideal`, assuming `ideal · x = 0`.
pub fn cover_over(
    alg: &GradedAlgebra,
    ideal: &GradedIdeal,
    x: &ModuleRep,
) -> Result<Cover, PreprojError> {
    let gens = x.top_generators();
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for (v, g) in &gens {
        let (p, paths) = quotient_module_with_paths(alg, ideal, Some(alg.quiver().label(*v)))?;
        let blocks = (0..x.dims().len())
            .map(|w| {
                let cols: Vec<Vec<Rational>> = paths[w]
                    .iter()
                    .map(|&(d, k)| {
                        alg.basis(d)[k]
                            .path
                            .iter()
                            .fold(g.clone(), |acc, &a| x.map(a).mul_vec(&acc))
                    })
                    .collect();
                columns_matrix(&cols, x.dim(w))
            })
            .collect();
        parts.push(p);
        maps.push(ModuleMap { blocks });
    }
    if parts.is_empty() {
        return Ok(Cover {
            module: x.clone(),
            map: ModuleMap::identity(x),
            generator_vertices: Vec::new(),
        });
    }
    let refs: Vec<&ModuleRep> = parts.iter().collect();
    let (module, _, _) = ModuleRep::direct_sum(&refs);
    let map = ModuleMap::hconcat(&maps, x);
    debug_assert!(map.is_homomorphism(&module, x));
    debug_assert!(map.is_surjective());
    Ok(Cover {
        module,
        map,
        generator_vertices: gens.iter().map(|(v, _)| *v).collect(),
    })
}

/// Projective cover of `x` truncated at `J^n`.
pub fn projective_cover(
    alg: &GradedAlgebra,
    x: &ModuleRep,
    n: usize,
) -> Result<Cover, PreprojError> {
    if alg.truncation() < n + 1 {
        return Err(PreprojError::TruncationTooSmall {
            needed: n + 1,
            have: alg.truncation(),
        });
    }
    cover_over(alg, &GradedIdeal::radical_power(alg, n), x)
}

/// `dim Ext¹(X, Y)`; needs truncation at least `LL(X) + LL(Y) + 1`.
pub fn ext1(alg: &GradedAlgebra, x: &ModuleRep, y: &ModuleRep) -> Result<usize, PreprojError> {
    if x.quiver() != y.quiver() {
        return Err(PreprojError::QuiverMismatch);
    }
    if x.is_zero() || y.is_zero() {
        return Ok(0);
    }
    let ly = y.loewy_length();
    let n = x.loewy_length() + ly;
    let cover = projective_cover(alg, x, n)?;
    let (omega, _) = cover.module.kernel(&cover.map);
    let (omega_top, _) = omega.quotient(&omega.radical_power(ly));
    let hom_p: usize = cover.generator_vertices.iter().map(|&v| y.dim(v)).sum();
    Ok(hom(&omega_top, y).dim() + hom(x, y).dim() - hom_p)
}

/// `dim Ext¹(X, Y)` through the symmetric form:
/// `hom(X, Y) + hom(Y, X) − (dim X, dim Y)`.
pub fn ext1_by_form(x: &ModuleRep, y: &ModuleRep) -> usize {
    let h = (hom(x, y).dim() + hom(y, x).dim()) as i64;
    let e = h - x.quiver().bilinear_form(x.dims(), y.dims());
    usize::try_from(e).expect("the symmetric form never exceeds the Hom dimensions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, Word};
    use crate::preproj::ideal::ideal_for_word;
    use crate::preproj::module::quotient_module;

    #[test]
    fn simples() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 4);
        let s0 = ModuleRep::simple(alg.quiver().clone(), 0);
        let s1 = ModuleRep::simple(alg.quiver().clone(), 1);
        assert_eq!(ext1(&alg, &s0, &s0).unwrap(), 0);
        assert_eq!(ext1(&alg, &s0, &s1).unwrap(), 2);
        assert_eq!(ext1_by_form(&s0, &s1), 2);
        let t = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&t, 4);
        for v in 0..3 {
            let s = ModuleRep::simple(alg.quiver().clone(), v);
            assert_eq!(ext1(&alg, &s, &s).unwrap(), 0);
        }
    }

    #[test]
    fn truncation_is_enforced() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 2);
        let s0 = ModuleRep::simple(alg.quiver().clone(), 0);
        assert!(matches!(
            ext1(&alg, &s0, &s0),
            Err(PreprojError::TruncationTooSmall { needed: 3, have: 2 })
        ));
    }

    #[test]
    fn kronecker_chain_is_rigid() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 9);
        let word = Word::periodic(&[0, 1], 4);
        let ideals = ideal_for_word(&alg, &word).unwrap();
        let mods: Vec<ModuleRep> = (1..=4)
            .map(|k| quotient_module(&alg, &ideals[k], None).unwrap())
            .collect();
        for a in &mods {
            for b in &mods {
                assert_eq!(ext1(&alg, a, b).unwrap(), 0);
                assert_eq!(ext1_by_form(a, b), 0);
            }
        }
    }

    #[test]
    fn cover_kernel_dimension() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 6);
        let t = ideal_for_word(&alg, &Word::new(&[0, 1, 0]))
            .unwrap()
            .pop()
            .unwrap();
        let p = quotient_module(&alg, &t, Some(0)).unwrap();
        let c = projective_cover(&alg, &p, 4).unwrap();
        let (k, _) = c.module.kernel(&c.map);
        assert_eq!(k.total_dim() + p.total_dim(), c.module.total_dim());
    }
}
