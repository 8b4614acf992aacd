//! The combinatorial quiver `Q(i₁,…,i_k)` of a reduced expression.
//!
//! Vertices are word positions `p1, p2, …`. Consecutive occurrences of a
//! letter are joined by an arrow from the later to the earlier position.
//! For every edge `i — j` of multiplicity `d`, the subword of `i`/`j`
//! letters splits into maximal blocks; `d` arrows run from the last letter
//! of each block to the last letter of the following block.

use std::collections::BTreeMap;

use crate::coxeter::{is_reduced, CoxeterError, CoxeterGraph, Word};
use crate::quiver::MultiQuiver;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Word2QuiverError {
    #[error("word {0} is not reduced")]
    NotReduced(Word),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Vertex id of the 0-based word position `k`.
pub fn position_id(k: usize) -> String {
    format!("p{}", k + 1)
}

/// For each position, whether it is the final occurrence of its letter.
pub fn last_occurrence_flags(word: &Word) -> Vec<bool> {
    let l = word.letters();
    (0..l.len()).map(|k| !l[k + 1..].contains(&l[k])).collect()
}

/// `Q(word)`; with `freeze_last` the final occurrence of each letter is frozen.
pub fn build_q(
    graph: &CoxeterGraph,
    word: &Word,
    freeze_last: bool,
) -> Result<MultiQuiver, Word2QuiverError> {
    if !is_reduced(graph, word)? {
        return Err(Word2QuiverError::NotReduced(word.clone()));
    }
    let l = word.letters();
    let last = last_occurrence_flags(word);
    let mut q = MultiQuiver::new();
    for k in 0..l.len() {
        q.add_vertex(&position_id(k), freeze_last && last[k])
            .expect("positions are distinct");
    }
    // Consecutive occurrences of the same letter.
    let mut prev: BTreeMap<u32, usize> = BTreeMap::new();
    for (k, &a) in l.iter().enumerate() {
        if let Some(&p) = prev.get(&a) {
            q.add_arrows_idx(k, p, 1);
        }
        prev.insert(a, k);
    }
    // Edge arrows between consecutive maximal blocks of the two-letter subword.
    let labels = graph.labels();
    for (x, &a) in labels.iter().enumerate() {
        for &b in &labels[x + 1..] {
            let d = graph.mult_labels(a, b).unwrap_or(0);
            if d == 0 {
                continue;
            }
            let sub: Vec<usize> = (0..l.len()).filter(|&k| l[k] == a || l[k] == b).collect();
            // Last position of each maximal block.
            let ends: Vec<usize> = (0..sub.len())
                .filter(|&t| t + 1 == sub.len() || l[sub[t + 1]] != l[sub[t]])
                .map(|t| sub[t])
                .collect();
            for w in ends.windows(2) {
                q.add_arrows_idx(w[0], w[1], d);
            }
        }
    }
    Ok(q)
}

/// `Q(word)` with the final occurrence of every letter removed.
pub fn build_q_underline(
    graph: &CoxeterGraph,
    word: &Word,
) -> Result<MultiQuiver, Word2QuiverError> {
    let q = build_q(graph, word, false)?;
    let last = last_occurrence_flags(word);
    Ok(q.induced_by(|k| !last[k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::is_isomorphic;

    #[test]
    fn single_letter() {
        let q = build_q(&CoxeterGraph::a(2), &Word::new(&[1]), false).unwrap();
        assert_eq!((q.n(), q.arrow_count()), (1, 0));
    }

    #[test]
    fn kronecker_ladder() {
        let q = build_q(&CoxeterGraph::kronecker(), &Word::new(&[0, 1, 0, 1]), true).unwrap();
        let e = MultiQuiver::from_parts(
            &[("p1", false), ("p2", false), ("p3", true), ("p4", true)],
            &[
                ("p1", "p2", 2),
                ("p2", "p3", 2),
                ("p3", "p4", 2),
                ("p3", "p1", 1),
                ("p4", "p2", 1),
            ],
        )
        .unwrap();
        assert_eq!(q, e);
    }

    #[test]
    fn underline_variants() {
        let k = CoxeterGraph::kronecker();
        let u = build_q_underline(&k, &Word::new(&[0, 1, 0, 1])).unwrap();
        let e =
            MultiQuiver::from_parts(&[("p1", false), ("p2", false)], &[("p1", "p2", 2)]).unwrap();
        assert_eq!(u, e);
        assert_eq!(
            build_q_underline(&CoxeterGraph::a(2), &Word::new(&[1, 2]))
                .unwrap()
                .n(),
            0
        );
        // s1 s2 s3 s1 s2 s3 over an acyclic orientation gives back the graph's quiver.
        let t = CoxeterGraph::new(&[1, 2, 3], &[(1, 2, 1), (2, 3, 2)]).unwrap();
        let u = build_q_underline(&t, &Word::new(&[1, 2, 3, 1, 2, 3])).unwrap();
        let e = MultiQuiver::from_parts(
            &[("p1", false), ("p2", false), ("p3", false)],
            &[("p1", "p2", 1), ("p2", "p3", 2)],
        )
        .unwrap();
        assert!(is_isomorphic(&u, &e).is_some());
    }

    #[test]
    fn rejects_non_reduced() {
        assert!(matches!(
            build_q(&CoxeterGraph::a(2), &Word::new(&[1, 1]), false),
            Err(Word2QuiverError::NotReduced(_))
        ));
    }

    #[test]
    fn triangle_first_expression() {
        let q = build_q(
            &CoxeterGraph::triangle(),
            &Word::new(&[1, 2, 1, 3, 2]),
            false,
        )
        .unwrap();
        let e = MultiQuiver::from_parts(
            &[
                ("p1", false),
                ("p2", false),
                ("p3", false),
                ("p4", false),
                ("p5", false),
            ],
            &[
                ("p1", "p2", 1),
                ("p2", "p3", 1),
                ("p2", "p4", 1),
                ("p3", "p1", 1),
                ("p3", "p4", 1),
                ("p3", "p5", 1),
                ("p4", "p5", 1),
                ("p5", "p2", 1),
            ],
        )
        .unwrap();
        assert_eq!(q, e);
    }
}
