//! Coxeter groups of finite loop-free graphs with edge multiplicities.
//!
//! The group `W` of a graph with multiplicities `d_ij` is generated by
//! simple reflections `s_i` acting on the root lattice by
//! `s_i(α_j) = α_j − C_ij α_i`, where `C` is the generalized Cartan matrix
//! `C_ii = 2`, `C_ij = −d_ij`. Non-adjacent generators commute, generators
//! joined by a single edge satisfy the braid relation, and generators joined
//! by a multiple edge satisfy no relation. Reducedness is decided by the
//! positive-root criterion: `l(w s_i) > l(w)` iff `w(α_i)` is positive.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Errors raised by Coxeter-group operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u32),
    #[error("loop at vertex {0}")]
    Loop(u32),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u32),
    #[error("word {0} is not reduced")]
    NotReduced(Word),
    #[error("closure exceeded the cap of {0} words")]
    CapExceeded(usize),
    #[error("the parabolic subgraph on {0:?} is not a simply-laced Dynkin diagram")]
    InfiniteParabolic(Vec<u32>),
    #[error("malformed word {0:?}")]
    MalformedWord(String),
}

/// A finite loop-free graph with symmetric edge multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    labels: Vec<u32>,
    mult: Vec<Vec<u32>>,
}

/// JSON form of a graph: `{vertices:[…], edges:[{a,b,mult}…]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub vertices: Vec<u32>,
    pub edges: Vec<EdgeJson>,
}

/// One edge `a — b` with multiplicity `mult`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeJson {
    pub a: u32,
    pub b: u32,
    pub mult: u32,
}

impl CoxeterGraph {
    /// Builds a graph from vertex labels and `(a, b, multiplicity)` edges.
    /// Repeated edges accumulate multiplicity.
    pub fn new(vertices: &[u32], edges: &[(u32, u32, u32)]) -> Result<Self, CoxeterError> {
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(CoxeterError::DuplicateVertex(w[0]));
        }
        let n = labels.len();
        let mut g = CoxeterGraph {
            labels,
            mult: vec![vec![0; n]; n],
        };
        for &(a, b, m) in edges {
            if a == b {
                if m > 0 {
                    return Err(CoxeterError::Loop(a));
                }
                continue;
            }
            let i = g.index_of(a).ok_or(CoxeterError::UnknownVertex(a))?;
            let j = g.index_of(b).ok_or(CoxeterError::UnknownVertex(b))?;
            g.mult[i][j] += m;
            g.mult[j][i] += m;
        }
        Ok(g)
    }

    /// The Kronecker graph: vertices 0, 1 joined by a double edge.
    pub fn kronecker() -> Self {
        Self::new(&[0, 1], &[(0, 1, 2)]).unwrap()
    }

    /// The triangle graph: vertices 1, 2, 3 pairwise joined by single edges.
    pub fn triangle() -> Self {
        Self::new(&[1, 2, 3], &[(1, 2, 1), (2, 3, 1), (1, 3, 1)]).unwrap()
    }

    /// The path `A_n` on vertices 1..n.
    pub fn a(n: u32) -> Self {
        let v: Vec<u32> = (1..=n).collect();
        let e: Vec<(u32, u32, u32)> = (1..n).map(|i| (i, i + 1, 1)).collect();
        Self::new(&v, &e).unwrap()
    }

    /// `D_n` (n ≥ 4) on vertices 1..n: a path 1—2—…—(n−1) with n attached to n−2.
    pub fn d(n: u32) -> Self {
        assert!(n >= 4, "D_n needs n >= 4");
        let v: Vec<u32> = (1..=n).collect();
        let mut e: Vec<(u32, u32, u32)> = (1..n - 1).map(|i| (i, i + 1, 1)).collect();
        e.push((n - 2, n, 1));
        Self::new(&v, &e).unwrap()
    }

    /// The cycle on vertices 1..n (n ≥ 3), single edges.
    pub fn cycle(n: u32) -> Self {
        let v: Vec<u32> = (1..=n).collect();
        let e: Vec<(u32, u32, u32)> = (1..=n).map(|i| (i, i % n + 1, 1)).collect();
        Self::new(&v, &e).unwrap()
    }

    pub fn from_json(j: &GraphJson) -> Result<Self, CoxeterError> {
        let e: Vec<(u32, u32, u32)> = j.edges.iter().map(|e| (e.a, e.b, e.mult)).collect();
        Self::new(&j.vertices, &e)
    }

    pub fn to_json(&self) -> GraphJson {
        let mut edges = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.mult[i][j] > 0 {
                    edges.push(EdgeJson {
                        a: self.labels[i],
                        b: self.labels[j],
                        mult: self.mult[i][j],
                    });
                }
            }
        }
        GraphJson {
            vertices: self.labels.clone(),
            edges,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Vertex labels in increasing order (index `i` has label `labels()[i]`).
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Multiplicity `d_ij` between vertex indices.
    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i][j]
    }

    /// Multiplicity between vertex labels.
    pub fn mult_labels(&self, a: u32, b: u32) -> Option<u32> {
        Some(self.mult[self.index_of(a)?][self.index_of(b)?])
    }

    /// Generalized Cartan matrix entry `C_ij` (indices).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else {
            -(self.mult[i][j] as i64)
        }
    }

    /// Indices of the letters of a word; fails on unknown letters.
    pub fn indices(&self, word: &Word) -> Result<Vec<usize>, CoxeterError> {
        word.0
            .iter()
            .map(|&l| self.index_of(l).ok_or(CoxeterError::UnknownVertex(l)))
            .collect()
    }

    /// True when the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..self.n() {
                if self.mult[i][j] > 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// The induced subgraph on the given labels.
    pub fn induced(&self, subset: &[u32]) -> Result<CoxeterGraph, CoxeterError> {
        let mut edges = Vec::new();
        for (k, &a) in subset.iter().enumerate() {
            let i = self.index_of(a).ok_or(CoxeterError::UnknownVertex(a))?;
            for &b in &subset[k + 1..] {
                let j = self.index_of(b).ok_or(CoxeterError::UnknownVertex(b))?;
                if self.mult[i][j] > 0 {
                    edges.push((a, b, self.mult[i][j]));
                }
            }
        }
        CoxeterGraph::new(subset, &edges)
    }
}

/// A finite sequence of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    /// The prefix of length `k`.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    /// The word `pattern` repeated until it has length `len`.
    pub fn periodic(pattern: &[u32], len: usize) -> Word {
        Word(pattern.iter().copied().cycle().take(len).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Word {
    type Err = CoxeterError;
    /// Parses comma-separated letters such as `1,2,1` (parentheses optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Word::default());
        }
        t.split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| CoxeterError::MalformedWord(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// A group element, as the integer matrix of its action on the root
/// lattice: column `j` holds the simple-root coordinates of `w(α_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflectionElement {
    matrix: Vec<Vec<i64>>,
}

impl ReflectionElement {
    /// The identity of a rank-`n` group.
    pub fn identity(n: usize) -> Self {
        let mut matrix = vec![vec![0; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        ReflectionElement { matrix }
    }

    /// Entry `(i, j)`: coefficient of `α_i` in `w(α_j)`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `w(α_i)` in simple-root coordinates.
    pub fn root_image(&self, i: usize) -> Vec<i64> {
        self.matrix.iter().map(|r| r[i]).collect()
    }

    /// Right multiplication by the simple reflection with index `i`.
    pub fn times_simple(&self, g: &CoxeterGraph, i: usize) -> Self {
        let n = self.matrix.len();
        let mut m = self.matrix.clone();
        for j in 0..n {
            let c = g.cartan(i, j);
            if c != 0 && j != i {
                for (r, row) in m.iter_mut().enumerate() {
                    row[j] = self.matrix[r][j] - c * self.matrix[r][i];
                }
            }
        }
        for row in m.iter_mut() {
            row[i] = -row[i];
        }
        ReflectionElement { matrix: m }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.matrix.len())
    }
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

/// True iff `l(w s_i) = l(w) + 1`, i.e. `w(α_i)` is a positive root.
pub fn length_increases(w: &ReflectionElement, i: usize) -> bool {
    is_positive(&w.root_image(i))
}

/// The group element of a word, as its root-lattice matrix.
pub fn canonical_form(g: &CoxeterGraph, word: &Word) -> Result<ReflectionElement, CoxeterError> {
    let idx = g.indices(word)?;
    Ok(idx
        .iter()
        .fold(ReflectionElement::identity(g.n()), |w, &i| {
            w.times_simple(g, i)
        }))
}

/// True iff every prefix extension increases the length.
pub fn is_reduced(g: &CoxeterGraph, word: &Word) -> Result<bool, CoxeterError> {
    let idx = g.indices(word)?;
    let mut w = ReflectionElement::identity(g.n());
    for &i in &idx {
        if !length_increases(&w, i) {
            return Ok(false);
        }
        w = w.times_simple(g, i);
    }
    Ok(true)
}

/// Length of the length-`k` prefixes that stay reduced: the largest `k`
/// such that the prefix of length `k` is reduced.
pub fn reduced_prefix_len(g: &CoxeterGraph, word: &Word) -> Result<usize, CoxeterError> {
    let idx = g.indices(word)?;
    let mut w = ReflectionElement::identity(g.n());
    for (k, &i) in idx.iter().enumerate() {
        if !length_increases(&w, i) {
            return Ok(k);
        }
        w = w.times_simple(g, i);
    }
    Ok(idx.len())
}

/// A reduced word for `w`, found by repeatedly stripping right descents.
pub fn reduced_word_of(g: &CoxeterGraph, w: &ReflectionElement) -> Word {
    let mut w = w.clone();
    let mut rev = Vec::new();
    while let Some(i) = (0..g.n()).find(|&i| !length_increases(&w, i)) {
        rev.push(g.label(i));
        w = w.times_simple(g, i);
    }
    rev.reverse();
    Word(rev)
}

/// The length of the element represented by `word`.
pub fn length(g: &CoxeterGraph, word: &Word) -> Result<usize, CoxeterError> {
    Ok(reduced_word_of(g, &canonical_form(g, word)?).len())
}

/// All reduced expressions of the element of a reduced `word`, as the
/// closure under commutation moves (`d_ij = 0`) and braid moves (`d_ij = 1`).
pub fn reduced_words(
    g: &CoxeterGraph,
    word: &Word,
    cap: usize,
) -> Result<BTreeSet<Word>, CoxeterError> {
    if !is_reduced(g, word)? {
        return Err(CoxeterError::NotReduced(word.clone()));
    }
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(w) = queue.pop_front() {
        let l = w.letters();
        let mut next = Vec::new();
        for k in 0..l.len().saturating_sub(1) {
            let (a, b) = (l[k], l[k + 1]);
            if a == b {
                continue;
            }
            match g.mult_labels(a, b) {
                Some(0) => {
                    let mut v = l.to_vec();
                    v.swap(k, k + 1);
                    next.push(Word(v));
                }
                Some(1) if k + 2 < l.len() && l[k + 2] == a => {
                    let mut v = l.to_vec();
                    v[k] = b;
                    v[k + 1] = a;
                    v[k + 2] = b;
                    next.push(Word(v));
                }
                _ => {}
            }
        }
        for v in next {
            if seen.insert(v.clone()) {
                if seen.len() > cap {
                    return Err(CoxeterError::CapExceeded(cap));
                }
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}

/// Shape of a connected simply-laced Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    /// Number of positive roots.
    pub fn positive_roots(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(8) => 120,
            DynkinType::E(_) => unreachable!("only E6, E7, E8 exist"),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Recognizes the connected components of a graph as simply-laced Dynkin
/// diagrams; `None` if some component is not of type A, D or E.
pub fn dynkin_components(g: &CoxeterGraph) -> Option<Vec<DynkinType>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        comp[s] = s;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..n {
                if g.mult(i, j) > 0 && comp[j] == usize::MAX {
                    comp[j] = s;
                    members.push(j);
                }
            }
            k += 1;
        }
        out.push(classify_tree(g, &members)?);
    }
    Some(out)
}

fn classify_tree(g: &CoxeterGraph, members: &[usize]) -> Option<DynkinType> {
    let size = members.len();
    let mut edges = 0;
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            match g.mult(i, j) {
                0 => {}
                1 => edges += 1,
                _ => return None,
            }
        }
    }
    if edges + 1 != size {
        return None; // contains a cycle
    }
    let deg = |i: usize| members.iter().filter(|&&j| g.mult(i, j) > 0).count();
    let branch: Vec<usize> = members.iter().copied().filter(|&i| deg(i) >= 3).collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(size)),
        [c] if deg(*c) == 3 => {
            // Arm lengths from the branch vertex.
            let mut arms = Vec::new();
            for &start in members.iter().filter(|&&j| g.mult(*c, j) > 0) {
                let (mut prev, mut cur, mut len) = (*c, start, 1);
                loop {
                    let next: Vec<usize> = members
                        .iter()
                        .copied()
                        .filter(|&j| j != prev && g.mult(cur, j) > 0)
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [nx] => {
                            prev = cur;
                            cur = *nx;
                            len += 1;
                        }
                        _ => return None,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(DynkinType::D(size)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(DynkinType::E(size)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// A reduced word for the longest element of the parabolic subgroup
/// generated by `parabolic` (labels), built greedily: letters are appended
/// while some generator still increases the length.
pub fn longest_element(g: &CoxeterGraph, parabolic: &[u32]) -> Result<Word, CoxeterError> {
    let sub = g.induced(parabolic)?;
    let types = dynkin_components(&sub)
        .ok_or_else(|| CoxeterError::InfiniteParabolic(parabolic.to_vec()))?;
    let expected: usize = types.iter().map(|t| t.positive_roots()).sum();
    let idx: Vec<usize> = parabolic.iter().map(|&l| g.index_of(l).unwrap()).collect();
    let mut w = ReflectionElement::identity(g.n());
    let mut word = Vec::new();
    while let Some(&i) = idx.iter().find(|&&i| length_increases(&w, i)) {
        w = w.times_simple(g, i);
        word.push(g.label(i));
        assert!(
            word.len() <= expected,
            "longest element exceeded the positive-root count"
        );
    }
    debug_assert_eq!(word.len(), expected);
    Ok(Word(word))
}

/// All group elements of length at most `max_len`, each with one reduced
/// word, found by breadth-first search on the root-lattice matrices.
pub fn elements_up_to_length(g: &CoxeterGraph, max_len: usize) -> Vec<(Word, ReflectionElement)> {
    let mut seen: HashMap<ReflectionElement, usize> = HashMap::new();
    let id = ReflectionElement::identity(g.n());
    let mut out = vec![(Word::default(), id.clone())];
    seen.insert(id, 0);
    let mut frontier = vec![0usize];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &k in &frontier {
            let (word, w) = out[k].clone();
            for i in 0..g.n() {
                if !length_increases(&w, i) {
                    continue;
                }
                let v = w.times_simple(g, i);
                if !seen.contains_key(&v) {
                    let mut l = word.0.clone();
                    l.push(g.label(i));
                    seen.insert(v.clone(), out.len());
                    next.push(out.len());
                    out.push((Word(l), v));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Counts group elements by length, up to `max_len`.
pub fn length_profile(g: &CoxeterGraph, max_len: usize) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for (w, _) in elements_up_to_length(g, max_len) {
        *m.entry(w.len()).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[u32]) -> Word {
        Word::new(l)
    }

    #[test]
    fn identity_always_increases() {
        let e = ReflectionElement::identity(3);
        assert!((0..3).all(|i| length_increases(&e, i)));
    }

    #[test]
    fn kronecker_alternating_word_extends() {
        let g = CoxeterGraph::kronecker();
        let x = canonical_form(&g, &w(&[0, 1, 0])).unwrap();
        assert!(length_increases(&x, g.index_of(1).unwrap()));
    }

    #[test]
    fn a2_longest_has_no_ascent() {
        let g = CoxeterGraph::a(2);
        let x = canonical_form(&g, &w(&[1, 2, 1])).unwrap();
        assert!(!length_increases(&x, g.index_of(2).unwrap()));
    }

    #[test]
    fn reducedness_examples() {
        assert!(!is_reduced(&CoxeterGraph::a(2), &w(&[1, 1])).unwrap());
        assert!(is_reduced(&CoxeterGraph::kronecker(), &w(&[0, 1, 0, 1, 0, 1])).unwrap());
        assert!(is_reduced(&CoxeterGraph::triangle(), &w(&[1, 2, 1, 3, 2])).unwrap());
        assert!(!is_reduced(&CoxeterGraph::a(2), &w(&[1, 2, 1, 2])).unwrap());
    }

    #[test]
    fn braid_closure_examples() {
        let a2 = CoxeterGraph::a(2);
        let s = reduced_words(&a2, &w(&[1, 2, 1]), 100).unwrap();
        assert_eq!(s, [w(&[1, 2, 1]), w(&[2, 1, 2])].into_iter().collect());
        let t = reduced_words(&CoxeterGraph::triangle(), &w(&[1, 2, 1, 3, 2]), 100).unwrap();
        assert!(t.contains(&w(&[2, 1, 2, 3, 2])));
        assert!(t.contains(&w(&[2, 1, 3, 2, 3])));
        let k = reduced_words(&CoxeterGraph::kronecker(), &w(&[0, 1, 0]), 100).unwrap();
        assert_eq!(k.len(), 1);
        assert!(matches!(
            reduced_words(&a2, &w(&[1, 1]), 100),
            Err(CoxeterError::NotReduced(_))
        ));
        assert!(matches!(
            reduced_words(
                &CoxeterGraph::a(4),
                &longest_element(&CoxeterGraph::a(4), &[1, 2, 3, 4]).unwrap(),
                5
            ),
            Err(CoxeterError::CapExceeded(5))
        ));
    }

    #[test]
    fn longest_elements() {
        assert_eq!(
            longest_element(&CoxeterGraph::a(2), &[1, 2]).unwrap().len(),
            3
        );
        assert_eq!(
            longest_element(&CoxeterGraph::a(4), &[1, 2, 3, 4])
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            longest_element(&CoxeterGraph::d(4), &[1, 2, 3, 4])
                .unwrap()
                .len(),
            12
        );
        assert!(matches!(
            longest_element(&CoxeterGraph::triangle(), &[1, 2, 3]),
            Err(CoxeterError::InfiniteParabolic(_))
        ));
        assert!(matches!(
            longest_element(&CoxeterGraph::kronecker(), &[0, 1]),
            Err(CoxeterError::InfiniteParabolic(_))
        ));
        assert_eq!(
            longest_element(&CoxeterGraph::triangle(), &[1, 2])
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn canonical_forms() {
        let a2 = CoxeterGraph::a(2);
        assert!(canonical_form(&a2, &Word::default()).unwrap().is_identity());
        assert_eq!(
            canonical_form(&a2, &w(&[1, 2, 1])).unwrap(),
            canonical_form(&a2, &w(&[2, 1, 2])).unwrap()
        );
        let k = CoxeterGraph::kronecker();
        // s0 s1 (α0) = s0(α0 + 2α1) = 3α0 + 2α1 and s0 s1 (α1) = -2α0 - α1.
        let x = canonical_form(&k, &w(&[0, 1])).unwrap();
        let y = canonical_form(&k, &w(&[1, 0])).unwrap();
        assert_ne!(x, y);
        assert_eq!(x.matrix(), &[vec![3, -2], vec![2, -1]]);
    }

    #[test]
    fn word_parsing() {
        assert_eq!("1,2,1".parse::<Word>().unwrap(), w(&[1, 2, 1]));
        assert_eq!("(0, 1)".parse::<Word>().unwrap(), w(&[0, 1]));
        assert_eq!("".parse::<Word>().unwrap(), Word::default());
        assert!("1,a".parse::<Word>().is_err());
        assert_eq!(w(&[1, 2]).to_string(), "(1,2)");
    }

    #[test]
    fn dynkin_recognition() {
        assert_eq!(
            dynkin_components(&CoxeterGraph::a(3)),
            Some(vec![DynkinType::A(3)])
        );
        assert_eq!(
            dynkin_components(&CoxeterGraph::d(5)),
            Some(vec![DynkinType::D(5)])
        );
        assert_eq!(dynkin_components(&CoxeterGraph::cycle(4)), None);
        let e6 = CoxeterGraph::new(
            &[1, 2, 3, 4, 5, 6],
            &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (3, 6, 1)],
        )
        .unwrap();
        assert_eq!(dynkin_components(&e6), Some(vec![DynkinType::E(6)]));
        assert_eq!(longest_element(&e6, &[1, 2, 3, 4, 5, 6]).unwrap().len(), 36);
    }
}
