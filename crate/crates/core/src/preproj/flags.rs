//! Counting composition flags over finite fields.
//!
//! A flag of type `(i_1, …, i_k)` in `M` is a chain
//! `M = M_0 ⊃ M_1 ⊃ … ⊃ M_k = 0` of submodules with `M_{l−1}/M_l ≅ S_{i_l}`.
//! Each step removes one dimension at vertex `i_l`, i.e. picks a hyperplane
//! of `M_{i_l}` containing the arrow images into `i_l`; the count over
//! `F_p` is the sum over those hyperplanes. The Euler characteristic of
//! the flag variety is the value at `q = 1` of the point-count polynomial,
//! recovered by interpolation over several primes.

use crate::coxeter::Word;
use crate::foundation::{DenseMatrix, Field, Fp, Rational, Subspace};

use super::module::ModuleRep;
use super::PreprojError;

/// Primes used by [`flag_euler`] unless told otherwise.
pub const DEFAULT_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

struct Rep<F: Field> {
    arrows: Vec<(usize, usize)>,
    dims: Vec<usize>,
    maps: Vec<DenseMatrix<F>>,
}

impl<F: Field> Rep<F> {
    /// Drops the hyperplane `λ · x = 0` at vertex `v`, where `λ_p = 1`
    /// is the first nonzero entry; the basis `e_j − λ_j e_p` (`j ≠ p`)
    /// makes coordinates in the hyperplane simply "delete entry `p`".
    fn restrict(&self, v: usize, lambda: &[F], p: usize) -> Rep<F> {
        let d = self.dims[v];
        let keep: Vec<usize> = (0..d).filter(|&j| j != p).collect();
        let maps = self
            .arrows
            .iter()
            .zip(&self.maps)
            .map(|(&(s, t), m)| {
                let m = if t == v {
                    let rows: Vec<Vec<F>> = keep.iter().map(|&r| m.row(r).to_vec()).collect();
                    DenseMatrix::from_rows(rows, m.cols())
                } else {
                    m.clone()
                };
                if s == v {
                    let cols: Vec<Vec<F>> = keep
                        .iter()
                        .map(|&j| {
                            let mut c = m.column(j);
                            let pc = m.column(p);
                            for (x, y) in c.iter_mut().zip(pc) {
                                *x = x.clone() - lambda[j].clone() * y;
                            }
                            c
                        })
                        .collect();
                    DenseMatrix::from_columns(&cols, m.rows())
                } else {
                    m
                }
            })
            .collect();
        let mut dims = self.dims.clone();
        dims[v] -= 1;
        Rep {
            arrows: self.arrows.clone(),
            dims,
            maps,
        }
    }

    fn count(&self, ty: &[usize], field_size: u64) -> u64 {
        let Some((&v, rest)) = ty.split_first() else {
            return u64::from(self.dims.iter().all(|&d| d == 0));
        };
        let d = self.dims[v];
        if d == 0 {
            return 0;
        }
        let mut rad: Subspace<F> = Subspace::new(d);
        for ((_, t), m) in self.arrows.iter().zip(&self.maps) {
            if *t == v {
                for c in 0..m.cols() {
                    rad.insert(m.column(c));
                }
            }
        }
        let ann: Vec<Vec<F>> = if rad.dim() == 0 {
            (0..d)
                .map(|k| {
                    (0..d)
                        .map(|j| if j == k { F::one() } else { F::zero() })
                        .collect()
                })
                .collect()
        } else {
            DenseMatrix::from_rows(rad.basis().to_vec(), d).kernel()
        };
        let mut total = 0;
        for coeffs in projective_points::<F>(ann.len(), field_size) {
            let lambda: Vec<F> = (0..d)
                .map(|j| {
                    ann.iter()
                        .zip(&coeffs)
                        .fold(F::zero(), |acc, (a, c)| acc + a[j].clone() * c.clone())
                })
                .collect();
            let p = lambda
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero functional");
            let inv = lambda[p].inv();
            let lambda: Vec<F> = lambda.into_iter().map(|x| x * inv.clone()).collect();
            total += self.restrict(v, &lambda, p).count(rest, field_size);
        }
        total
    }
}

/// Representatives of the points of `P^{n−1}(F_q)`: vectors whose first
/// nonzero entry is 1.
fn projective_points<F: Field>(n: usize, q: u64) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = q.pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![F::zero(); n];
            v[lead] = F::one();
            for x in v.iter_mut().skip(lead + 1) {
                *x = F::from_i64((code % q) as i64);
                code /= q;
            }
            out.push(v);
        }
    }
    out
}

fn type_indices(x: &ModuleRep, ty: &Word) -> Result<Vec<usize>, PreprojError> {
    ty.letters()
        .iter()
        .map(|&l| x.quiver().vertex(l).ok_or(PreprojError::UnknownVertex(l)))
        .collect()
}

fn count_in<const P: u64>(x: &ModuleRep, ty: &[usize]) -> Result<u64, PreprojError> {
    let residues = x.mod_prime(P)?;
    let rep = Rep::<Fp<P>> {
        arrows: x.quiver().arrows().iter().map(|a| (a.src, a.tgt)).collect(),
        dims: x.dims().to_vec(),
        maps: x
            .quiver()
            .arrows()
            .iter()
            .zip(residues)
            .map(|(a, rows)| {
                let rows = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(Fp::<P>::from_residue).collect())
                    .collect();
                DenseMatrix::from_rows(rows, x.dim(a.src))
            })
            .collect(),
    };
    Ok(rep.count(ty, P))
}

/// Number of flags of type `ty` in `x ⊗ F_p`.
pub fn count_flags(x: &ModuleRep, ty: &Word, p: u64) -> Result<u64, PreprojError> {
    let ty = type_indices(x, ty)?;
    let mut hist = vec![0usize; x.dims().len()];
    for &v in &ty {
        hist[v] += 1;
    }
    if hist != x.dims() {
        return Ok(0);
    }
    match p {
        2 => count_in::<2>(x, &ty),
        3 => count_in::<3>(x, &ty),
        5 => count_in::<5>(x, &ty),
        7 => count_in::<7>(x, &ty),
        11 => count_in::<11>(x, &ty),
        13 => count_in::<13>(x, &ty),
        17 => count_in::<17>(x, &ty),
        19 => count_in::<19>(x, &ty),
        23 => count_in::<23>(x, &ty),
        _ => Err(PreprojError::Malformed(format!("unsupported prime {p}"))),
    }
}

/// Euler characteristic of the flag variety of type `ty`: the point count
/// is interpolated as a polynomial in `q` of degree at most
/// `Σ_v d_v(d_v − 1)/2` (the dimension of the ambient product of complete
/// flag varieties) and evaluated at `q = 1`. Primes beyond those needed
/// for the fit serve as consistency checks.
pub fn flag_euler(x: &ModuleRep, ty: &Word, primes: &[u64]) -> Result<i64, PreprojError> {
    let degree: usize = x.dims().iter().map(|d| d * d.saturating_sub(1) / 2).sum();
    if primes.len() < degree + 1 {
        return Err(PreprojError::InterpolationInconsistent(format!(
            "degree bound {degree} needs {} primes, got {}",
            degree + 1,
            primes.len()
        )));
    }
    let points: Vec<(Rational, Rational)> = primes
        .iter()
        .map(|&p| {
            Ok((
                Rational::from_int(p as i64),
                Rational::from_int(count_flags(x, ty, p)? as i64),
            ))
        })
        .collect::<Result<_, PreprojError>>()?;
    let (fit, check) = points.split_at(degree + 1);
    for (q, y) in check {
        if &lagrange(fit, q) != y {
            return Err(PreprojError::InterpolationInconsistent(format!(
                "count at q = {q} is {y}, fit predicts {}",
                lagrange(fit, q)
            )));
        }
    }
    let chi = lagrange(fit, &Rational::one());
    chi.to_i64().filter(|_| chi.is_integer()).ok_or_else(|| {
        PreprojError::InterpolationInconsistent(format!("non-integral value {chi} at q = 1"))
    })
}

fn lagrange(points: &[(Rational, Rational)], at: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = yi.clone();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                term = term * (at.clone() - xj.clone()) / (xi.clone() - xj.clone());
            }
        }
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;
    use crate::preproj::algebra::GradedAlgebra;
    use crate::preproj::ideal::ideal_for_word;
    use crate::preproj::module::quotient_module;

    #[test]
    fn simple_and_kronecker() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 4);
        let s0 = ModuleRep::simple(alg.quiver().clone(), 0);
        for p in DEFAULT_PRIMES {
            assert_eq!(count_flags(&s0, &Word::new(&[0]), p).unwrap(), 1);
        }
        assert_eq!(
            flag_euler(&s0, &Word::new(&[0]), &DEFAULT_PRIMES).unwrap(),
            1
        );
        let t = ideal_for_word(&alg, &Word::new(&[0, 1]))
            .unwrap()
            .pop()
            .unwrap();
        let p12 = quotient_module(&alg, &t, Some(1)).unwrap();
        let ty = Word::new(&[1, 0, 0]);
        assert_eq!(count_flags(&p12, &ty, 2).unwrap(), 3);
        assert_eq!(count_flags(&p12, &ty, 3).unwrap(), 4);
        assert_eq!(flag_euler(&p12, &ty, &[2, 3, 5]).unwrap(), 2);
        assert_eq!(count_flags(&p12, &Word::new(&[0, 1, 0]), 5).unwrap(), 0);
        assert_eq!(count_flags(&p12, &Word::new(&[1, 0]), 5).unwrap(), 0);
    }

    #[test]
    fn semisimple_counts_complete_flags() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 3);
        let s0 = ModuleRep::simple(alg.quiver().clone(), 0);
        let (m, _, _) = ModuleRep::direct_sum(&[&s0, &s0, &s0]);
        let ty = Word::new(&[0, 0, 0]);
        // Complete flags in F_q^3: (q^2 + q + 1)(q + 1).
        assert_eq!(count_flags(&m, &ty, 2).unwrap(), 21);
        assert_eq!(flag_euler(&m, &ty, &DEFAULT_PRIMES).unwrap(), 6);
    }

    #[test]
    fn too_few_primes() {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 3);
        let s0 = ModuleRep::simple(alg.quiver().clone(), 0);
        let (m, _, _) = ModuleRep::direct_sum(&[&s0, &s0, &s0]);
        assert!(matches!(
            flag_euler(&m, &Word::new(&[0, 0, 0]), &[2, 3]),
            Err(PreprojError::InterpolationInconsistent(_))
        ));
    }
}
