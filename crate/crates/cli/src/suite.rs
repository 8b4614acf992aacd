//! The verification suite: one function per acceptance criterion, each
//! returning named sub-checks evaluated exactly, plus the config-driven
//! runner behind `cyclab verify`.
//!
//! A criterion passes only when every sub-check passes. Sub-checks whose
//! literal statement is known to be false carry a `note` with the
//! computation that refutes it; they still count as failures.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{anyhow, Context};
use cyclab_core::cluster::{classify_type, explore, ClusterType};
use cyclab_core::coxeter::{
    elements_up_to_length, is_reduced, longest_element, reduced_words, CoxeterGraph, Word,
};
use cyclab_core::foundation::LaurentPoly;
use cyclab_core::loopgroup::{
    auxiliary_in_cluster, coordinates_def, generator_product, initial_seed, jacobian_rank,
    phi_series, sample_cell, seed_values, verify_point, verify_symbolic, Auxiliary, Cell,
    CheckKind, IdentityReport,
};
use cyclab_core::preproj::{
    end_quiver, exchange_summand, ext1, ideal_for_word, ideal_i, ideal_product, indecomposable,
    is_isomorphic_indecomposable, mark_frozen, quotient_module, standard_family, GradedAlgebra,
    GradedIdeal, ModuleRep, PreprojError,
};
use cyclab_core::quiver::{fz_mutate, is_isomorphic, MultiQuiver};
use cyclab_core::word2quiver::{build_q, position_id};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graphs::named_graph;

/// Parameters of a suite run. Every field has a default, so `{}` is a
/// valid config.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Seed of every random choice in the run.
    pub rng: u64,
    /// Length of the Kronecker word `(0,1,0,1,…)` for the chain table.
    pub kronecker_length: usize,
    /// Maximal length of the exhaustively enumerated reduced words.
    pub theorem_max_length: usize,
    /// Number of random reduced triangle words checked in addition.
    pub random_triangle_words: usize,
    /// Maximal length of those random words.
    pub random_word_max_length: usize,
    /// Truncation degree for the ideal identities.
    pub ideal_truncation: usize,
    /// Maximal length of group elements in the ideal bijection check.
    pub bijection_max_length: usize,
    /// Sampled points per unipotent cell.
    pub samples: usize,
    /// Exploration depth of the `w₄` exchange graph.
    pub explore_depth: usize,
    /// Total-degree cap of the generating series.
    pub phi_cap: usize,
    /// Primes for the flag-count interpolation.
    pub phi_primes: Vec<u64>,
    /// Extra words checked against the quiver theorem.
    pub words: Vec<WordCheck>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            rng: 42,
            kronecker_length: 8,
            theorem_max_length: 6,
            random_triangle_words: 50,
            random_word_max_length: 8,
            ideal_truncation: 8,
            bijection_max_length: 5,
            samples: 100,
            explore_depth: 5,
            phi_cap: 4,
            phi_primes: vec![2, 3, 5],
            words: Vec::new(),
        }
    }
}

/// A word on a named graph, e.g. `{"graph": "triangle", "word": "1,2,1"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordCheck {
    pub graph: String,
    pub word: String,
}

/// One named, exactly evaluated statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Analysis attached to statements known to be false as stated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SubCheck {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        SubCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        if !self.passed {
            self.note = Some(note.to_string());
        }
        self
    }
}

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<SubCheck>,
    pub seconds: f64,
}

impl CriterionReport {
    /// One line: id, PASS/FAIL, title, time, and the failed sub-checks.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {:>2}  {status}  {} ({:.1} s)",
            self.id, self.title, self.seconds
        );
        let failed: Vec<&SubCheck> = self.checks.iter().filter(|c| !c.passed).collect();
        if !failed.is_empty() {
            let names: Vec<String> = failed
                .iter()
                .map(|c| match &c.note {
                    Some(n) => format!("{}: {} [{n}]", c.name, c.detail),
                    None => format!("{}: {}", c.name, c.detail),
                })
                .collect();
            line.push_str(&format!(" — failed: {}", names.join("; ")));
        }
        line
    }

    /// Failed sub-checks that carry no analysis note.
    pub fn unexplained_failures(&self) -> Vec<&SubCheck> {
        self.checks
            .iter()
            .filter(|c| !c.passed && c.note.is_none())
            .collect()
    }
}

fn run_criterion(
    id: u32,
    title: &str,
    body: impl FnOnce() -> anyhow::Result<Vec<SubCheck>>,
) -> CriterionReport {
    let start = Instant::now();
    let checks = match body() {
        Ok(c) => c,
        Err(e) => vec![SubCheck::new("computation", false, format!("{e:#}"))],
    };
    let seconds = start.elapsed().as_secs_f64();
    let passed = !checks.is_empty() && checks.iter().all(|c| c.passed);
    log::info!(
        "criterion {id}: {} in {seconds:.2} s",
        if passed { "pass" } else { "fail" }
    );
    CriterionReport {
        id,
        title: title.to_string(),
        passed,
        checks,
        seconds,
    }
}

// ---------------------------------------------------------------------------
// Shared helpers.

/// Radical layers of `P_{v,t} = P_v / J^t P_v` over the Kronecker algebra:
/// layer `j` (from 1) holds `j` copies of `S_v` for odd `j`, of the other
/// simple for even `j`.
fn kronecker_projective_layers(v: usize, t: usize) -> Vec<Vec<usize>> {
    (1..=t)
        .map(|j| {
            let mut layer = vec![0, 0];
            layer[if j % 2 == 1 { v } else { 1 - v }] = j;
            layer
        })
        .collect()
}

/// `P_{v,t}` as a module.
fn truncated_projective(alg: &GradedAlgebra, v: u32, t: usize) -> Result<ModuleRep, PreprojError> {
    quotient_module(alg, &GradedIdeal::radical_power(alg, t), Some(v))
}

/// All reduced words of length `1..=max` over the graph, in length order.
pub fn reduced_words_up_to(g: &CoxeterGraph, max: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut frontier = vec![Word::default()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in g.labels() {
                if w.letters().last() == Some(&l) {
                    continue;
                }
                let mut letters = w.letters().to_vec();
                letters.push(l);
                let v = Word::new(&letters);
                if is_reduced(g, &v).expect("labels come from the graph") {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Distinct random reduced words of length `1..=max_len` (no repeated
/// adjacent letters, rejection-sampled for reducedness).
pub fn random_reduced_words(
    g: &CoxeterGraph,
    count: usize,
    max_len: usize,
    seed: u64,
) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = g.labels();
    let mut seen = BTreeSet::new();
    let mut attempts = 0;
    while seen.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let len = 1 + (rng.next_u32() as usize) % max_len;
        let mut letters: Vec<u32> = Vec::with_capacity(len);
        while letters.len() < len {
            let l = labels[(rng.next_u32() as usize) % labels.len()];
            if letters.last() != Some(&l) {
                letters.push(l);
            }
        }
        let w = Word::new(&letters);
        if is_reduced(g, &w).expect("labels come from the graph") {
            seen.insert(w);
        }
    }
    seen.into_iter().collect()
}

/// End-quiver of the standard family (projectives frozen) against `build_q`.
pub fn quiver_theorem_holds(alg: &GradedAlgebra, word: &Word) -> anyhow::Result<bool> {
    let fam = standard_family(alg, word)?;
    let mut q = end_quiver(&fam.modules)?;
    mark_frozen(&mut q, &fam.projective);
    let expected = build_q(alg.graph(), word, true)?;
    Ok(is_isomorphic(&q, &expected).is_some())
}

/// Words of the list that are not proper prefixes of other listed words.
fn maximal_words(words: &[Word]) -> Vec<Word> {
    let set: BTreeSet<&Word> = words.iter().collect();
    words
        .iter()
        .filter(|w| {
            !set.iter()
                .any(|v| v.len() > w.len() && v.letters()[..w.len()] == *w.letters())
        })
        .cloned()
        .collect()
}

/// Pairs `(a, b)` of family members with nonzero Ext¹, computed from projective covers.
fn nonrigid_pairs(
    alg: &GradedAlgebra,
    modules: &[ModuleRep],
) -> anyhow::Result<Vec<(usize, usize)>> {
    let mut bad = Vec::new();
    for (a, x) in modules.iter().enumerate() {
        for (b, y) in modules.iter().enumerate() {
            if ext1(alg, x, y)? != 0 {
                bad.push((a, b));
            }
        }
    }
    Ok(bad)
}

fn graph_name(g: &CoxeterGraph) -> String {
    format!("{:?}", g.labels())
}

// ---------------------------------------------------------------------------
// The criteria.

/// 1. The Kronecker chain `Λ_k` for `(0,1)` repeated.
pub fn criterion_1(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(1, "Kronecker chain table", || {
        let g = CoxeterGraph::kronecker();
        let len = cfg.kronecker_length.max(4);
        let alg = GradedAlgebra::build(&g, len + 2);
        let chain = ideal_for_word(&alg, &Word::periodic(&[0, 1], len))?;
        let summand = |k: usize, v: u32| quotient_module(&alg, &chain[k], Some(v));
        let is_p = |x: &ModuleRep, v: u32, t: usize| -> anyhow::Result<bool> {
            if t == 0 {
                return Ok(x.is_zero());
            }
            let p = truncated_projective(&alg, v, t)?;
            Ok(x.layers() == kronecker_projective_layers(v as usize, t)
                && indecomposable(x)
                && is_isomorphic_indecomposable(x, &p))
        };
        let decomposes = |k: usize, a: usize, b: usize| -> anyhow::Result<bool> {
            Ok(is_p(&summand(k, 0)?, 0, a)? && is_p(&summand(k, 1)?, 1, b)?)
        };
        let mut checks = Vec::new();
        for (k, a, b, text) in [
            (1, 1, 0, "Λ1 = P0,1"),
            (2, 1, 2, "Λ2 = P0,1 ⊕ P1,2"),
            (3, 3, 2, "Λ3 = P0,3 ⊕ P1,2"),
            (4, 5, 4, "Λ4 = P0,5 ⊕ P1,4"),
        ] {
            let ok = decomposes(k, a, b)?;
            let detail = if ok {
                "isomorphic, layers match".to_string()
            } else {
                format!(
                    "computed Λ{k}e0 has layers {:?}, Λ{k}e1 has layers {:?}",
                    summand(k, 0)?.layers(),
                    summand(k, 1)?.layers()
                )
            };
            checks.push(SubCheck::new(text, ok, detail).with_note(
                "Λ4·e0 has total dimension 6 = 1+2+3, i.e. P0,3; the formula Λ2t = P0,2t+1 ⊕ P1,2t \
                 is index-shifted and contradicts Λ2 = P0,1 ⊕ P1,2",
            ));
        }
        let mut wrong = Vec::new();
        for k in 1..=len {
            let (a, b) = if k % 2 == 1 { (k, k - 1) } else { (k - 1, k) };
            if !decomposes(k, a, b)? {
                wrong.push(k);
            }
        }
        checks.push(SubCheck::new(
            format!("Λ2t = P0,2t−1 ⊕ P1,2t and Λ2t+1 = P0,2t+1 ⊕ P1,2t for k ≤ {len}"),
            wrong.is_empty(),
            if wrong.is_empty() {
                "all summands indecomposable and isomorphic to the truncated projectives".into()
            } else {
                format!("mismatch at k = {wrong:?}")
            },
        ));
        let layers_ok = (1..=len).all(|t| {
            let x = summand(len, (t % 2 == 0) as u32);
            x.map(|x| {
                x.layers()
                    .iter()
                    .enumerate()
                    .all(|(j, l)| l.iter().sum::<usize>() == j + 1)
            })
            .unwrap_or(false)
        });
        checks.push(SubCheck::new(
            "radical layers of every summand have sizes 1, 2, 3, …",
            layers_ok,
            format!("checked on Λ{len}"),
        ));
        Ok(checks)
    })
}

/// 2. End-quivers of standard families against the word quivers.
pub fn criterion_2(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(2, "End-quiver equals the word quiver", || {
        let mut checks = Vec::new();
        let max = cfg.theorem_max_length;
        for (name, g) in [
            ("A2", CoxeterGraph::a(2)),
            ("Kronecker", CoxeterGraph::kronecker()),
            ("triangle", CoxeterGraph::triangle()),
        ] {
            let words = reduced_words_up_to(&g, max);
            let alg = GradedAlgebra::build(&g, max + 2);
            let mut bad = Vec::new();
            for w in &words {
                if !quiver_theorem_holds(&alg, w)? {
                    bad.push(w.to_string());
                }
            }
            checks.push(SubCheck::new(
                format!("{name}: all reduced words of length ≤ {max}"),
                bad.is_empty() && !words.is_empty(),
                if bad.is_empty() {
                    format!("{} words", words.len())
                } else {
                    format!("mismatch for {bad:?}")
                },
            ));
        }
        let g = CoxeterGraph::triangle();
        let words = random_reduced_words(
            &g,
            cfg.random_triangle_words,
            cfg.random_word_max_length,
            cfg.rng,
        );
        let alg = GradedAlgebra::build(&g, cfg.random_word_max_length + 2);
        let mut bad = Vec::new();
        for w in &words {
            if !quiver_theorem_holds(&alg, w)? {
                bad.push(w.to_string());
            }
        }
        checks.push(SubCheck::new(
            format!(
                "triangle: {} random reduced words of length ≤ {}",
                cfg.random_triangle_words, cfg.random_word_max_length
            ),
            bad.is_empty() && words.len() == cfg.random_triangle_words,
            if bad.is_empty() {
                format!("{} words (rng {})", words.len(), cfg.rng)
            } else {
                format!("mismatch for {bad:?}")
            },
        ));
        Ok(checks)
    })
}

/// The three quivers displayed for `w = s1s2s1s3s2` on the triangle graph,
/// vertices `p1..p5` in word order.
pub fn displayed_triangle_quivers() -> [(Word, MultiQuiver); 3] {
    let v: Vec<(&str, bool)> = (1..=5)
        .map(|k| (["p1", "p2", "p3", "p4", "p5"][k - 1], false))
        .collect();
    let q = |arrows: &[(&str, &str)]| {
        let a: Vec<(&str, &str, u32)> = arrows.iter().map(|&(x, y)| (x, y, 1)).collect();
        MultiQuiver::from_parts(&v, &a).expect("well-formed quiver")
    };
    [
        (
            Word::new(&[1, 2, 1, 3, 2]),
            q(&[
                ("p1", "p2"),
                ("p2", "p3"),
                ("p2", "p4"),
                ("p3", "p1"),
                ("p3", "p5"),
                ("p3", "p4"),
                ("p4", "p5"),
                ("p5", "p2"),
            ]),
        ),
        (
            Word::new(&[2, 1, 2, 3, 2]),
            q(&[
                ("p1", "p2"),
                ("p2", "p5"),
                ("p2", "p4"),
                ("p3", "p1"),
                ("p3", "p4"),
                ("p4", "p5"),
                ("p5", "p3"),
            ]),
        ),
        (
            Word::new(&[2, 1, 3, 2, 3]),
            q(&[
                ("p1", "p2"),
                ("p1", "p3"),
                ("p2", "p4"),
                ("p2", "p5"),
                ("p3", "p4"),
                ("p4", "p1"),
                ("p4", "p5"),
                ("p5", "p3"),
            ]),
        ),
    ]
}

/// 3. The three quivers of one triangle-graph element and the mutation between them.
pub fn criterion_3(_cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(3, "Triangle-graph quiver triple", || {
        let g = CoxeterGraph::triangle();
        let mut checks = Vec::new();
        let shown = displayed_triangle_quivers();
        for (w, expected) in &shown {
            let q = build_q(&g, w, false)?;
            checks.push(SubCheck::new(
                format!("Q{w} matches the displayed quiver"),
                &q == expected,
                format!("{} arrows", q.arrow_count()),
            ));
        }
        let mutated = fz_mutate(&shown[0].1, "p1")?;
        let iso = is_isomorphic(&mutated, &shown[1].1);
        checks.push(SubCheck::new(
            "mutation at the left vertex maps the first quiver to the second",
            iso.is_some(),
            iso.map(|m| format!("via {m:?}"))
                .unwrap_or_else(|| "not isomorphic".into()),
        ));
        Ok(checks)
    })
}

/// 4. Idempotence, commutation and braid relations of the ideals `I_i`.
pub fn criterion_4(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(4, "Ideal identities", || {
        let n = cfg.ideal_truncation;
        let mut checks = Vec::new();
        let t = CoxeterGraph::triangle();
        let alg = GradedAlgebra::build(&t, n);
        let ii: Vec<GradedIdeal> = (1..=3)
            .map(|l| ideal_i(&alg, l))
            .collect::<Result<_, _>>()?;
        let idem = ii.iter().all(|i| ideal_product(&alg, i, i).same_as(i));
        checks.push(SubCheck::new(
            "I_i² = I_i on the triangle graph",
            idem,
            format!("degrees < {n}"),
        ));

        let a3 = CoxeterGraph::a(3);
        let alg3 = GradedAlgebra::build(&a3, n);
        let (i1, i3) = (ideal_i(&alg3, 1)?, ideal_i(&alg3, 3)?);
        let comm = ideal_product(&alg3, &i1, &i3).same_as(&ideal_product(&alg3, &i3, &i1));
        checks.push(SubCheck::new(
            "I1 I3 = I3 I1 for the non-adjacent pair of A3",
            comm,
            format!("degrees < {n}"),
        ));

        let prod3 = |a: &GradedIdeal, b: &GradedIdeal, c: &GradedIdeal| {
            ideal_product(&alg, &ideal_product(&alg, a, b), c)
        };
        let mut braid = Vec::new();
        for (a, b) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let x = prod3(&ii[a], &ii[b], &ii[a]);
            let y = prod3(&ii[b], &ii[a], &ii[b]);
            let via_chain = ideal_for_word(
                &alg,
                &Word::new(&[a as u32 + 1, b as u32 + 1, a as u32 + 1]),
            )?
            .pop()
            .unwrap();
            braid.push(x.same_as(&y) && x.same_as(&via_chain));
        }
        checks.push(SubCheck::new(
            "I_i I_j I_i = I_j I_i I_j for every pair on the triangle graph",
            braid.iter().all(|&b| b),
            format!("pairs (1,2), (1,3), (2,3): {braid:?}; degrees < {n}"),
        ));
        let adjacent_differ =
            !ideal_product(&alg, &ii[0], &ii[1]).same_as(&ideal_product(&alg, &ii[1], &ii[0]));
        checks.push(SubCheck::new(
            "I1 I2 ≠ I2 I1 for an adjacent pair (control)",
            adjacent_differ,
            "",
        ));
        Ok(checks)
    })
}

/// 5. Distinct group elements give distinct ideals.
pub fn criterion_5(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(5, "Elements to ideals is injective", || {
        let g = CoxeterGraph::triangle();
        let max = cfg.bijection_max_length;
        let elems = elements_up_to_length(&g, max);
        let alg = GradedAlgebra::build(&g, max + 3);
        let ideals: Vec<GradedIdeal> = elems
            .iter()
            .map(|(w, _)| ideal_for_word(&alg, w).map(|mut c| c.pop().unwrap()))
            .collect::<Result<_, _>>()?;
        let mut clashes = Vec::new();
        for i in 0..ideals.len() {
            for j in i + 1..ideals.len() {
                if ideals[i].same_as(&ideals[j]) {
                    clashes.push((elems[i].0.to_string(), elems[j].0.to_string()));
                }
            }
        }
        let mut profile = vec![0usize; max + 1];
        for (w, _) in &elems {
            profile[w.len()] += 1;
        }
        let mut checks = vec![SubCheck::new(
            format!(
                "pairwise distinct ideals for the {} elements of length ≤ {max}",
                elems.len()
            ),
            clashes.is_empty(),
            if clashes.is_empty() {
                format!("elements per length {profile:?}")
            } else {
                format!("equal ideals for {clashes:?}")
            },
        )];
        let mut inconsistent = Vec::new();
        for ((w, _), ideal) in elems.iter().zip(&ideals) {
            for v in reduced_words(&g, w, 1000)? {
                if !ideal_for_word(&alg, &v)?.pop().unwrap().same_as(ideal) {
                    inconsistent.push(v.to_string());
                }
            }
        }
        checks.push(SubCheck::new(
            "all reduced words of an element give the same ideal",
            inconsistent.is_empty(),
            if inconsistent.is_empty() {
                String::new()
            } else {
                format!("differs for {inconsistent:?}")
            },
        ));
        Ok(checks)
    })
}

/// 6. Rigidity of the standard families, the A3 family, and `l(w₀)`.
pub fn criterion_6(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(6, "Rigidity of standard families", || {
        let mut checks = Vec::new();
        // Families of item 1.
        let kron = CoxeterGraph::kronecker();
        let len = cfg.kronecker_length;
        let alg = GradedAlgebra::build(&kron, 2 * len + 1);
        let fam = standard_family(&alg, &Word::periodic(&[0, 1], len))?;
        let bad = nonrigid_pairs(&alg, &fam.modules)?;
        checks.push(SubCheck::new(
            format!("Ext¹ = 0 on the Kronecker family of length {len}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} ordered pairs", len * len)
            } else {
                format!("nonzero at {bad:?}")
            },
        ));
        // Families of items 2 and 3 (every shorter word is a prefix of a listed maximal one).
        let max = cfg.theorem_max_length;
        for (name, g) in [
            ("A2", CoxeterGraph::a(2)),
            ("Kronecker", kron.clone()),
            ("triangle", CoxeterGraph::triangle()),
        ] {
            let words = maximal_words(&reduced_words_up_to(&g, max));
            let alg = GradedAlgebra::build(&g, 2 * max + 1);
            let mut bad = Vec::new();
            for w in &words {
                let fam = standard_family(&alg, w)?;
                if !nonrigid_pairs(&alg, &fam.modules)?.is_empty() {
                    bad.push(w.to_string());
                }
            }
            checks.push(SubCheck::new(
                format!("Ext¹ = 0 on the {name} families of length ≤ {max}"),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{} maximal words (graph {})", words.len(), graph_name(&g))
                } else {
                    format!("nonzero for {bad:?}")
                },
            ));
        }
        let g = CoxeterGraph::a(3);
        let w0 = longest_element(&g, &[1, 2, 3])?;
        let alg = GradedAlgebra::build(&g, 2 * w0.len() + 1);
        let fam = standard_family(&alg, &w0)?;
        let bad = nonrigid_pairs(&alg, &fam.modules)?;
        checks.push(SubCheck::new(
            "A3: the family of w0 has 6 = 3·4/2 pairwise rigid summands",
            fam.modules.len() == 6 && bad.is_empty(),
            format!(
                "w0 = {w0}, {} summands, nonrigid pairs {bad:?}",
                fam.modules.len()
            ),
        ));
        let (a4, d4) = (
            longest_element(&CoxeterGraph::a(4), &[1, 2, 3, 4])?,
            longest_element(&CoxeterGraph::d(4), &[1, 2, 3, 4])?,
        );
        checks.push(SubCheck::new(
            "l(w0) = 10 for A4",
            a4.len() == 10,
            format!("{}", a4.len()),
        ));
        checks.push(SubCheck::new(
            "l(w0) = 12 for D4",
            d4.len() == 12,
            format!("{}", d4.len()),
        ));
        Ok(checks)
    })
}

fn all_hold(reports: &[IdentityReport], pick: impl Fn(CheckKind, bool) -> bool) -> (usize, usize) {
    let mut failing = 0;
    for r in reports {
        if r.checks
            .iter()
            .any(|c| pick(c.kind, c.printed_form) && !c.holds)
        {
            failing += 1;
        }
    }
    (failing, reports.len())
}

/// 7. Loop-group identities at sampled points.
pub fn criterion_7(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(7, "Loop-group identities", || {
        let mut checks = Vec::new();
        let sym = verify_symbolic();
        checks.push(SubCheck::new(
            "symbolic minors equal their closed forms",
            sym.ok(),
            format!("{} minors", sym.checks.len()),
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng);
        let mut points = Vec::new();
        let mut reports = Vec::new();
        for cell in [Cell::W3, Cell::W4] {
            for _ in 0..cfg.samples {
                let p = sample_cell(cell, &mut rng);
                reports.push(verify_point(&p));
                points.push(p);
            }
        }
        let w4: Vec<IdentityReport> = points
            .iter()
            .zip(&reports)
            .filter(|(p, _)| p.cell == Cell::W4)
            .map(|(_, r)| r.clone())
            .collect();
        for (name, kind) in [
            (
                "sampled points satisfy the cell relations",
                CheckKind::CellRelation,
            ),
            (
                "minors at the points equal their closed forms",
                CheckKind::Minor,
            ),
            ("the five exchange relations hold", CheckKind::Exchange),
            (
                "the auxiliary functions equal their closed forms",
                CheckKind::Auxiliary,
            ),
        ] {
            let (bad, total) = all_hold(&reports, |k, printed| k == kind && !printed);
            checks.push(SubCheck::new(
                name,
                bad == 0 && total > 0,
                format!("{} failing of {total} points", bad),
            ));
        }
        let (bad, total) = all_hold(&w4, |k, printed| k == CheckKind::Product && printed);
        let (true_bad, _) = all_hold(&w4, |k, printed| k == CheckKind::Product && !printed);
        checks.push(
            SubCheck::new(
                "Δσ(3;1)Δ(3;1) = Δσ(4;0)Δ(4;0) = G⁴",
                bad == 0 && total > 0,
                format!("fails at {bad} of {total} w4 points; G³ and G⁵ fail at {true_bad}"),
            )
            .with_note(
                "on the cell the products are G³ and G⁵ identically (Δ(4;0) = GΔ(3;1), Δσ(4;0) = GΔσ(3;1)); \
                 G⁴ agrees only where G = 1",
            ),
        );
        let (bad, total) = all_hold(&w4, |k, printed| k == CheckKind::Coordinate && !printed);
        let (printed_bad, _) = all_hold(&w4, |k, printed| k == CheckKind::Coordinate && printed);
        checks.push(SubCheck::new(
            "coordinates from minors, F with numerator ΣΔσ(1;1) − ΩΔ̃σ(2;0)",
            bad == 0 && total > 0,
            format!(
                "{bad} failing of {total} w4 points; the printed + sign fails at {printed_bad}"
            ),
        ));
        let p = points
            .iter()
            .find(|p| p.cell == Cell::W4)
            .ok_or_else(|| anyhow!("no w4 sample"))?;
        let rank = jacobian_rank(p);
        checks.push(SubCheck::new(
            "Jacobian of the four minors in D, E, F, G has rank 4",
            rank == 4,
            format!("rank {rank} at {:?}", p.coords),
        ));
        Ok(checks)
    })
}

/// 8. Cluster types of the two cell seeds.
pub fn criterion_8(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(8, "Cluster types of the cell seeds", || {
        let mut checks = Vec::new();
        let s3 = initial_seed(Cell::W3)?;
        let t3 = classify_type(&s3, 10, 100)?;
        checks.push(SubCheck::new(
            "w3 seed closure has 2 seeds (type A1)",
            matches!(&t3, ClusterType::Finite { name, clusters: 2, .. } if name == "A1"),
            format!("{t3:?}"),
        ));
        let s4 = initial_seed(Cell::W4)?;
        let depth = cfg.explore_depth;
        let g = explore(&s4, depth, 10_000)?;
        checks.push(SubCheck::new(
            format!(
                "w4 exploration to depth {depth}: {} distinct seeds on a path",
                2 * depth + 1
            ),
            g.nodes.len() == 2 * depth + 1 && g.is_path(),
            format!(
                "{} seeds, path: {}, closed: {}",
                g.nodes.len(),
                g.is_path(),
                g.complete
            ),
        ));
        let aux: BTreeSet<LaurentPoly> = auxiliary_in_cluster()?
            .iter()
            .map(LaurentPoly::trim_vars)
            .collect();
        let initial: BTreeSet<LaurentPoly> = s4
            .cluster()
            .into_iter()
            .map(LaurentPoly::trim_vars)
            .collect();
        let new_at = |d: usize| -> anyhow::Result<BTreeSet<LaurentPoly>> {
            Ok(explore(&s4, d, 10_000)?
                .cluster_variables()
                .difference(&initial)
                .cloned()
                .collect())
        };
        let d2 = new_at(2)?;
        let missing: Vec<String> = aux.difference(&d2).map(|p| p.to_string()).collect();
        checks.push(
            SubCheck::new(
                "depth-2 w4 variables equal {Δ̃σ(1;1), Δ̃σ(2;0), Ψ, Ω, Σ}",
                d2 == aux,
                format!("{} new variables at depth 2; missing {missing:?}", d2.len()),
            )
            .with_note(
                "the exchange graph is a path and Σ = μ2μ1μ2 lies three mutations from the initial seed; \
                 depth 2 yields Δ̃σ(1;1), Δ̃σ(2;0), Ψ, Ω only",
            ),
        );
        let d3 = new_at(3)?;
        let point = cyclab_core::loopgroup::point_from_parameters(
            Cell::W4,
            2.into(),
            (-1).into(),
            3.into(),
            5.into(),
        )?;
        let vals = seed_values(&point);
        let closed = Auxiliary::closed_forms();
        let agree = auxiliary_in_cluster()?
            .iter()
            .zip(closed.as_array())
            .all(|(l, c)| l.evaluate(&vals).ok() == Some(point.eval(c)));
        checks.push(SubCheck::new(
            "all five auxiliary functions appear by depth 3 and match their closed forms",
            aux.is_subset(&d3) && agree,
            format!("{} new variables at depth 3", d3.len()),
        ));
        let mut laurent = Vec::new();
        for (name, s) in [("w3", s3), ("w4", s4)]
            .into_iter()
            .chain(crate::graphs::laurent_test_seeds())
        {
            let ok = explore(&s, 6, 5000).is_ok();
            laurent.push(format!(
                "{name}: {}",
                if ok { "exact" } else { "violation" }
            ));
        }
        checks.push(SubCheck::new(
            "every mutation divides exactly (depth 6)",
            laurent.iter().all(|l| l.ends_with("exact")),
            laurent.join(", "),
        ));
        Ok(checks)
    })
}

/// 9. Summand exchange follows quiver mutation on the Kronecker family of length 4.
pub fn criterion_9(_cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(9, "Exchange follows mutation", || {
        let g = CoxeterGraph::kronecker();
        let alg = GradedAlgebra::build(&g, 8);
        let fam = standard_family(&alg, &Word::new(&[0, 1, 0, 1]))?;
        let mut family = fam.modules.clone();
        let mut q = end_quiver(&family)?;
        mark_frozen(&mut q, &fam.projective);
        let mut checks = Vec::new();
        for (step, idx) in [0usize, 1, 0].into_iter().enumerate() {
            let ex = exchange_summand(&family, idx, &fam.projective)
                .with_context(|| format!("exchange {} at summand {idx}", step + 1))?;
            family[idx] = ex.replacement;
            let mut next = end_quiver(&family)?;
            mark_frozen(&mut next, &fam.projective);
            let expected = fz_mutate(&q, &position_id(idx))?;
            // Mutation says nothing about arrows between frozen vertices.
            let ok = next.without_frozen_frozen_arrows() == expected.without_frozen_frozen_arrows();
            let frozen_part_equal = next == expected;
            checks.push(SubCheck::new(
                format!(
                    "exchange {} at {}: End-quiver = mutated quiver away from frozen–frozen arrows",
                    step + 1,
                    position_id(idx)
                ),
                ok && ex.forward.is_exact() && ex.backward.is_exact(),
                format!(
                    "new summand dims {:?}, middle terms {:?}, frozen–frozen arrows {}",
                    family[idx].dims(),
                    ex.forward.middle_summands,
                    if frozen_part_equal {
                        "agree too"
                    } else {
                        "differ"
                    }
                ),
            ));
            q = next;
        }
        Ok(checks)
    })
}

/// 10. Flag generating series against the coordinates of generator products.
pub fn criterion_10(cfg: &SuiteConfig) -> CriterionReport {
    run_criterion(10, "Flag series equal matrix coordinates", || {
        let g = CoxeterGraph::kronecker();
        let word = Word::new(&[0, 1, 0, 1]);
        let alg = GradedAlgebra::build(&g, 6);
        let fam = standard_family(&alg, &word)?;
        let (d, e, f) = coordinates_def(&generator_product(&word));
        let cap = cfg.phi_cap;
        let mut checks = Vec::new();
        for (idx, name, coord) in [
            (0usize, "P0,1 ↔ D", d.clone()),
            (1, "P1,2 ↔ DF − E", &(&d * &f) - &e),
        ] {
            let phi = phi_series(&fam.modules[idx], &word, cap, &cfg.phi_primes)?;
            let target = coord.truncate_total_degree(cap as i32);
            checks.push(SubCheck::new(
                format!("{name} to degree {cap}"),
                phi.same_value(&target),
                format!("series {phi}; coordinate {target}"),
            ));
        }
        Ok(checks)
    })
}

/// All criteria, evaluated on separate threads and returned in order.
pub fn run_criteria(cfg: &SuiteConfig) -> Vec<CriterionReport> {
    let criteria: [fn(&SuiteConfig) -> CriterionReport; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|c| scope.spawn(move || c(cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    })
}

/// Status of an extra word check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordStatus {
    Pass,
    Fail,
    /// The word is not reduced, which the suite reports rather than checks.
    ExpectedFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordReport {
    pub graph: String,
    pub word: String,
    pub status: WordStatus,
    pub detail: String,
}

fn check_word(w: &WordCheck) -> WordReport {
    let report = |status, detail: String| WordReport {
        graph: w.graph.clone(),
        word: w.word.clone(),
        status,
        detail,
    };
    let Some(g) = named_graph(&w.graph) else {
        return report(WordStatus::Fail, format!("unknown graph {:?}", w.graph));
    };
    let word: Word = match w.word.parse() {
        Ok(word) => word,
        Err(e) => return report(WordStatus::Fail, e.to_string()),
    };
    let alg = GradedAlgebra::build(&g, word.len() + 2);
    match standard_family(&alg, &word) {
        Err(PreprojError::NotReduced(_)) => report(
            WordStatus::ExpectedFailure,
            format!("NotReduced: {word} is not reduced"),
        ),
        Err(e) => report(WordStatus::Fail, e.to_string()),
        Ok(_) => match quiver_theorem_holds(&alg, &word) {
            Ok(true) => report(WordStatus::Pass, "end-quiver ≅ word quiver".into()),
            Ok(false) => report(
                WordStatus::Fail,
                "end-quiver differs from the word quiver".into(),
            ),
            Err(e) => report(WordStatus::Fail, format!("{e:#}")),
        },
    }
}

/// The full report of `cyclab verify`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub criteria: Vec<CriterionReport>,
    pub words: Vec<WordReport>,
    pub passed: bool,
}

/// Runs every criterion and the configured word checks.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let criteria = run_criteria(cfg);
    let words: Vec<WordReport> = cfg.words.iter().map(check_word).collect();
    let passed =
        criteria.iter().all(|c| c.passed) && words.iter().all(|w| w.status != WordStatus::Fail);
    SuiteReport {
        config: cfg.clone(),
        criteria,
        words,
        passed,
    }
}
