//! Property tests for the invariants the library relies on: exact linear
//! algebra over ℚ and F_p, Laurent division, quiver and matrix mutation,
//! reduced words, and the tilting-ideal chains.

use std::collections::{BTreeMap, HashMap, VecDeque};

use cyclab_core::cluster::{seed_mutate, Seed};
use cyclab_core::coxeter::{canonical_form, is_reduced, CoxeterGraph, ReflectionElement, Word};
use cyclab_core::foundation::{
    bareiss_rank, rank_kernel, DenseMatrix, Fp, LaurentPoly, QMatrix, Rational, SparseMatrix,
};
use cyclab_core::loopgroup::{sample_cell, verify_point, Cell};
use cyclab_core::preproj::{hom, hom_formula, ideal_for_word, quotient_module, GradedAlgebra};
use cyclab_core::quiver::{fz_mutate, matrix_mutate, to_exchange_matrix, MultiQuiver};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A fixed seed keeps every run (and its timing) reproducible.
fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(42),
        ..ProptestConfig::default()
    }
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn rank_over_q_bounds_rank_mod_p(rows in small_matrix()) {
        let q = QMatrix::from_i64(&rows);
        let f5 = DenseMatrix::<Fp<5>>::from_i64(&rows);
        let f2 = DenseMatrix::<Fp<2>>::from_i64(&rows);
        prop_assert!(q.rank() >= f5.rank());
        prop_assert!(q.rank() >= f2.rank());
    }

    #[test]
    fn elimination_methods_agree(rows in small_matrix()) {
        let dense = QMatrix::from_i64(&rows);
        let sparse = SparseMatrix::<Rational>::from_dense_i64(&rows);
        let (rank, kernel) = rank_kernel(&sparse);
        prop_assert_eq!(rank, dense.rank());
        prop_assert_eq!(bareiss_rank(&sparse), rank);
        prop_assert_eq!(kernel.len(), dense.cols() - rank);
        for v in &kernel {
            prop_assert!(sparse.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_is_invariant_under_row_shuffles(rows in small_matrix(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..rows.len()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let sparse = SparseMatrix::<Rational>::from_dense_i64(&rows);
        prop_assert_eq!(rank_kernel(&sparse.permute_rows(&perm)).0, rank_kernel(&sparse).0);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in prop::collection::vec((-2i32..=2, -2i32..=2, -5i64..=5), 1..5),
        b in prop::collection::vec((-2i32..=2, -2i32..=2, -5i64..=5), 1..4),
    ) {
        let poly = |terms: &[(i32, i32, i64)]| {
            terms.iter().fold(LaurentPoly::zero(), |acc, &(x, y, c)| {
                &acc + &LaurentPoly::monomial(&[("x", x), ("y", y)], Rational::from_int(c))
            })
        };
        let (pa, pb) = (poly(&a), poly(&b));
        prop_assume!(!pb.is_zero());
        let prod = &pa * &pb;
        prop_assert!(prod.divide_exact(&pb).unwrap().same_value(&pa));
    }
}

/// A random quiver without loops or 2-cycles on 2–6 vertices.
fn random_quiver() -> impl Strategy<Value = MultiQuiver> {
    quiver_up_to(6, 3)
}

/// Random quivers on `2..=max_n` vertices with multiplicities up to `max_mult`.
fn quiver_up_to(max_n: usize, max_mult: i64) -> impl Strategy<Value = MultiQuiver> {
    (2usize..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(-max_mult..=max_mult, pairs),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(arrows, frozen)| {
                let mut q = MultiQuiver::new();
                for (v, &f) in frozen.iter().enumerate() {
                    // Keep at least one exchangeable vertex.
                    q.add_vertex(&format!("v{v}"), f && v > 0).unwrap();
                }
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let m = arrows[k];
                        k += 1;
                        if m > 0 {
                            q.add_arrows_idx(i, j, m as u32);
                        } else if m < 0 {
                            q.add_arrows_idx(j, i, (-m) as u32);
                        }
                    }
                }
                q
            })
    })
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn mutation_is_an_involution(q in random_quiver(), pick in any::<prop::sample::Index>()) {
        let ex = q.exchangeable_ids();
        let k = &ex[pick.index(ex.len())];
        let twice = fz_mutate(&fz_mutate(&q, k).unwrap(), k).unwrap();
        prop_assert_eq!(twice, q);
    }

    #[test]
    fn quiver_and_matrix_mutation_agree(q in random_quiver(), pick in any::<prop::sample::Index>()) {
        let b = to_exchange_matrix(&q).unwrap();
        let k = pick.index(b.n);
        let via_quiver = to_exchange_matrix(&fz_mutate(&q, &b.labels[k]).unwrap()).unwrap();
        prop_assert_eq!(via_quiver, matrix_mutate(&b, k).unwrap());
    }
}

/// Word lengths by breadth-first search over all products of generators,
/// independent of the root-positivity test used by the library.
fn bfs_lengths(g: &CoxeterGraph, radius: usize) -> HashMap<ReflectionElement, usize> {
    let id = ReflectionElement::identity(g.n());
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == radius {
            continue;
        }
        for i in 0..g.n() {
            let v = w.times_simple(g, i);
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn triangle_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u32..=3, 0..=max).prop_map(|l| Word::new(&l))
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn reducedness_matches_bfs_lengths(word in triangle_word(6)) {
        let g = CoxeterGraph::triangle();
        let lengths = bfs_lengths(&g, 6);
        let w = canonical_form(&g, &word).unwrap();
        prop_assert_eq!(is_reduced(&g, &word).unwrap(), lengths[&w] == word.len());
    }

    #[test]
    fn commuting_letters_can_be_swapped(l in prop::collection::vec(1u32..=4, 2..8), pos in any::<prop::sample::Index>()) {
        // In A4 (path 1-2-3-4) letters at distance ≥ 2 commute.
        let g = CoxeterGraph::a(4);
        let p = pos.index(l.len() - 1);
        prop_assume!(l[p].abs_diff(l[p + 1]) >= 2);
        let mut swapped = l.clone();
        swapped.swap(p, p + 1);
        let (a, b) = (Word::new(&l), Word::new(&swapped));
        prop_assert_eq!(canonical_form(&g, &a).unwrap(), canonical_form(&g, &b).unwrap());
        prop_assert_eq!(is_reduced(&g, &a).unwrap(), is_reduced(&g, &b).unwrap());
    }

    #[test]
    fn kronecker_alternating_words_are_reduced(len in 0usize..=20, start in 0u32..2) {
        let g = CoxeterGraph::kronecker();
        let w = Word::periodic(&[start, 1 - start], len);
        prop_assert!(is_reduced(&g, &w).unwrap());
        let mut l = w.letters().to_vec();
        if let Some(&last) = l.last() {
            l.push(last);
            prop_assert!(!is_reduced(&g, &Word::new(&l)).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn chains_descend_strictly_iff_reduced(word in triangle_word(4)) {
        let g = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&g, word.len() + 2);
        let chain = ideal_for_word(&alg, &word).unwrap();
        let strict = chain.windows(2).all(|p| p[1].codim() > p[0].codim());
        prop_assert_eq!(strict, is_reduced(&g, &word).unwrap());
    }

    #[test]
    fn hom_between_quotients_matches_the_ideal_formula(
        letters in prop::collection::vec(0u32..2, 1..=4),
        k in 1usize..=4,
        m in 1usize..=4,
    ) {
        let g = CoxeterGraph::kronecker();
        let word = Word::new(&letters);
        prop_assume!(is_reduced(&g, &word).unwrap());
        let (k, m) = (k.min(word.len()), m.min(word.len()));
        let alg = GradedAlgebra::build(&g, word.len() + 2);
        let chain = ideal_for_word(&alg, &word).unwrap();
        let lk = quotient_module(&alg, &chain[k], None).unwrap();
        let lm = quotient_module(&alg, &chain[m], None).unwrap();
        prop_assert_eq!(hom(&lk, &lm).dim(), hom_formula(&alg, &word, k, m).unwrap().total);
    }
}

#[test]
fn bfs_oracle_sees_the_finite_group() {
    // A3 ≅ S4: 24 elements, longest of length 6.
    let lengths = bfs_lengths(&CoxeterGraph::a(3), 10);
    assert_eq!(lengths.len(), 24);
    let mut profile = BTreeMap::new();
    for d in lengths.values() {
        *profile.entry(*d).or_insert(0) += 1;
    }
    assert_eq!(
        profile.into_values().collect::<Vec<_>>(),
        vec![1, 3, 5, 6, 5, 3, 1]
    );
}

proptest! {
    #![proptest_config(config(60))]

    /// Mutation sequences on small quivers stay Laurent (every exchange
    /// divides exactly) and each step undoes itself.
    #[test]
    fn seed_mutation_is_laurent_and_involutive(
        // Degrees grow geometrically with the multiplicities, so keep them small.
        q in quiver_up_to(4, 2),
        steps in prop::collection::vec(any::<prop::sample::Index>(), 1..5),
    ) {
        let mut s = Seed::initial(q, Vec::new()).unwrap();
        for pick in steps {
            let ex = s.quiver.exchangeable_ids();
            let k = &ex[pick.index(ex.len())];
            let t = seed_mutate(&s, k).unwrap();
            prop_assert_eq!(seed_mutate(&t, k).unwrap().key(), s.key());
            s = t;
        }
    }

    #[test]
    fn sampled_cell_points_satisfy_all_identities(seed in any::<u64>(), w4 in any::<bool>()) {
        let cell = if w4 { Cell::W4 } else { Cell::W3 };
        let p = sample_cell(cell, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(p.in_cell());
        let report = verify_point(&p);
        prop_assert!(report.ok(), "{:?}", report);
    }
}
