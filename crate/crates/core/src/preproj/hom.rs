//! Homomorphism spaces, radicals of endomorphism rings and isomorphism
//! tests for indecomposable modules.
//!
//! `Hom(X, Y)` is solved through generators: a map is determined by the
//! images of a minimal generating set of `X`, so the unknowns are those
//! images, and every arrow relation among a spanning tree of `X`'s basis
//! gives linear constraints.

use crate::foundation::{QMatrix, Rational, Subspace};

use super::module::{columns_matrix, ModuleMap, ModuleRep};

/// A basis of `Hom(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub basis: Vec<ModuleMap>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The map with coordinates `c` in this basis.
    pub fn combine(&self, c: &[Rational], x: &ModuleRep, y: &ModuleRep) -> ModuleMap {
        self.basis
            .iter()
            .zip(c)
            .fold(ModuleMap::zero(x, y), |acc, (f, ci)| {
                if ci.is_zero() {
                    acc
                } else {
                    acc.add(&f.scale(ci))
                }
            })
    }
}

enum Origin {
    Generator(usize),
    Arrow(usize, usize),
}

struct SpanningTree {
    /// Per element: vertex, vector in `X_v`, and how it was reached.
    elems: Vec<(usize, Vec<Rational>, Origin)>,
    /// Per vertex: element indices forming a basis of `X_v`.
    at: Vec<Vec<usize>>,
    /// Per vertex: inverse of the basis matrix.
    inv: Vec<QMatrix>,
    gens: Vec<(usize, Vec<Rational>)>,
}

fn spanning_tree(x: &ModuleRep) -> SpanningTree {
    let n = x.dims().len();
    let gens = x.top_generators();
    let mut spaces: Vec<Subspace<Rational>> = x.dims().iter().map(|&d| Subspace::new(d)).collect();
    let mut elems = Vec::new();
    let mut at = vec![Vec::new(); n];
    for (g, (v, vec)) in gens.iter().enumerate() {
        spaces[*v].insert(vec.clone());
        at[*v].push(elems.len());
        elems.push((*v, vec.clone(), Origin::Generator(g)));
    }
    let total = x.total_dim();
    let mut head = 0;
    while head < elems.len() && elems.len() < total {
        let (v, vec) = (elems[head].0, elems[head].1.clone());
        for (a, arrow) in x.quiver().arrows().iter().enumerate() {
            if arrow.src != v {
                continue;
            }
            let img = x.map(a).mul_vec(&vec);
            if spaces[arrow.tgt].insert(img.clone()) {
                at[arrow.tgt].push(elems.len());
                elems.push((arrow.tgt, img, Origin::Arrow(a, head)));
            }
        }
        head += 1;
    }
    debug_assert_eq!(
        elems.len(),
        total,
        "top generators must generate the module"
    );
    let inv = (0..n)
        .map(|v| {
            let cols: Vec<Vec<Rational>> = at[v].iter().map(|&e| elems[e].1.clone()).collect();
            columns_matrix(&cols, x.dim(v))
                .inverse()
                .expect("spanning tree gives a basis")
        })
        .collect();
    SpanningTree {
        elems,
        at,
        inv,
        gens,
    }
}

/// A basis of `Hom(X, Y)`.
pub fn hom(x: &ModuleRep, y: &ModuleRep) -> HomSpace {
    let tree = spanning_tree(x);
    let offsets: Vec<usize> = tree
        .gens
        .iter()
        .scan(0, |acc, (v, _)| {
            let o = *acc;
            *acc += y.dim(*v);
            Some(o)
        })
        .collect();
    let unknowns: usize = tree.gens.iter().map(|(v, _)| y.dim(*v)).sum();
    if unknowns == 0 {
        return HomSpace { basis: Vec::new() };
    }
    // f(element) as a linear function of the unknowns.
    let mut images: Vec<QMatrix> = Vec::with_capacity(tree.elems.len());
    for (v, _, origin) in &tree.elems {
        let m = match origin {
            Origin::Generator(g) => {
                let mut m = QMatrix::zeros(y.dim(*v), unknowns);
                for r in 0..y.dim(*v) {
                    m[(r, offsets[*g] + r)] = Rational::one();
                }
                m
            }
            Origin::Arrow(a, parent) => y.map(*a).mul(&images[*parent]),
        };
        images.push(m);
    }
    let mut constraints = Subspace::new(unknowns);
    'outer: for (e, (v, vec, _)) in tree.elems.iter().enumerate() {
        for (a, arrow) in x.quiver().arrows().iter().enumerate() {
            if arrow.src != *v || y.dim(arrow.tgt) == 0 {
                continue;
            }
            let coords = tree.inv[arrow.tgt].mul_vec(&x.map(a).mul_vec(vec));
            let mut c = y.map(a).mul(&images[e]).scale(&-Rational::one());
            for (k, ck) in coords.iter().enumerate() {
                if !ck.is_zero() {
                    c = c.add(&images[tree.at[arrow.tgt][k]].scale(ck));
                }
            }
            for r in 0..c.rows() {
                constraints.insert(c.row(r).to_vec());
            }
            if constraints.dim() == unknowns {
                break 'outer;
            }
        }
    }
    let solutions: Vec<Vec<Rational>> = if constraints.dim() == 0 {
        (0..unknowns)
            .map(|k| {
                (0..unknowns)
                    .map(|j| {
                        if j == k {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    } else {
        QMatrix::from_rows(constraints.basis().to_vec(), unknowns).kernel()
    };
    let basis = solutions
        .iter()
        .map(|u| ModuleMap {
            blocks: (0..x.dims().len())
                .map(|v| {
                    let cols: Vec<Vec<Rational>> =
                        tree.at[v].iter().map(|&e| images[e].mul_vec(u)).collect();
                    columns_matrix(&cols, y.dim(v)).mul(&tree.inv[v])
                })
                .collect(),
        })
        .collect();
    HomSpace { basis }
}

/// A basis of the radical of `End(X)`: the kernel of the trace form
/// `(φ, ψ) ↦ tr(φψ)`, which in characteristic zero is exactly the
/// Jacobson radical.
pub fn radical_of_end(x: &ModuleRep, end: &HomSpace) -> Vec<ModuleMap> {
    let gram = trace_gram(&end.basis, &end.basis);
    gram.kernel().iter().map(|c| end.combine(c, x, x)).collect()
}

/// `G_ij = tr(a_i ∘ b_j)`.
fn trace_gram(a: &[ModuleMap], b: &[ModuleMap]) -> QMatrix {
    QMatrix::from_rows(
        a.iter()
            .map(|f| b.iter().map(|g| f.compose(g).trace()).collect())
            .collect(),
        b.len(),
    )
}

/// True when `End(X)` is local with residue field `ℚ`.
pub fn indecomposable(x: &ModuleRep) -> bool {
    let end = hom(x, x);
    !x.is_zero() && trace_gram(&end.basis, &end.basis).rank() == 1
}

/// Isomorphism test for indecomposable modules: some composite
/// `X → Y → X` has nonzero trace, hence is not nilpotent, hence invertible.
pub fn is_isomorphic_indecomposable(x: &ModuleRep, y: &ModuleRep) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    let f = hom(x, y);
    let g = hom(y, x);
    !trace_gram(&g.basis, &f.basis).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, Word};
    use crate::preproj::algebra::GradedAlgebra;
    use crate::preproj::ideal::{ideal_for_word, ideal_i};
    use crate::preproj::module::quotient_module;

    fn kron_pk(alg: &GradedAlgebra, word: &[u32], j: u32) -> ModuleRep {
        let t = ideal_for_word(alg, &Word::new(word))
            .unwrap()
            .pop()
            .unwrap();
        quotient_module(alg, &t, Some(j)).unwrap()
    }

    #[test]
    fn simples() {
        let g = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&g, 3);
        let s: Vec<ModuleRep> = (0..3)
            .map(|v| ModuleRep::simple(alg.quiver().clone(), v))
            .collect();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(hom(&s[i], &s[j]).dim(), usize::from(i == j));
            }
        }
        let _ = ideal_i(&alg, 1).unwrap();
    }

    #[test]
    fn kronecker_examples() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 5);
        let t2 = ideal_for_word(&alg, &Word::new(&[0, 1]))
            .unwrap()
            .pop()
            .unwrap();
        let l2 = quotient_module(&alg, &t2, None).unwrap();
        assert_eq!(hom(&l2, &l2).dim(), 4);
        let p01 = kron_pk(&alg, &[0], 0);
        let p12 = kron_pk(&alg, &[0, 1], 1);
        let h = hom(&p01, &p12);
        assert_eq!(h.dim(), 2);
        assert!(h.basis.iter().all(|f| f.is_homomorphism(&p01, &p12)));
        assert_eq!(hom(&p12, &p01).dim(), 0);
    }

    #[test]
    fn indecomposability_and_isomorphism() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 5);
        let p03 = kron_pk(&alg, &[0, 1, 0], 0);
        assert!(indecomposable(&p03));
        let end = hom(&p03, &p03);
        assert_eq!(radical_of_end(&p03, &end).len(), end.dim() - 1);
        let (sum, _, _) = ModuleRep::direct_sum(&[&p03, &p03]);
        assert!(!indecomposable(&sum));
        assert!(is_isomorphic_indecomposable(&p03, &p03));
        let p12 = kron_pk(&alg, &[0, 1], 1);
        assert!(!is_isomorphic_indecomposable(&p03, &p12));
    }

    #[test]
    fn radical_is_nilpotent() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 6);
        let t2 = ideal_for_word(&alg, &Word::new(&[0, 1]))
            .unwrap()
            .pop()
            .unwrap();
        let l2 = quotient_module(&alg, &t2, None).unwrap();
        let end = hom(&l2, &l2);
        let rad = radical_of_end(&l2, &end);
        assert!(!rad.is_empty());
        // Products of `total_dim` radical elements vanish.
        let mut power = rad.clone();
        for _ in 1..l2.total_dim() {
            power = power
                .iter()
                .flat_map(|f| rad.iter().map(move |r| r.compose(f)))
                .filter(|m| !m.is_zero())
                .collect();
        }
        assert!(power.is_empty());
    }
}
