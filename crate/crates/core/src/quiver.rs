//! Finite multiquivers with frozen vertices: Fomin–Zelevinsky mutation,
//! exchange matrices, loop and 2-cycle detection, and isomorphism testing.
//!
//! Arrows between two frozen vertices are carried along but ignored by
//! mutation and by the exchange matrix, following the extended-quiver
//! convention in which arrows between coefficients are neglected.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Errors raised by quiver operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("loop at vertex {0}")]
    LoopAtVertex(String),
    #[error("2-cycle between {0} and {1}")]
    TwoCycleAtVertex(String, String),
    #[error("vertex {0} is frozen")]
    FrozenVertex(String),
    #[error("quiver is not mutable: {0}")]
    NotMutable(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
}

/// A finite directed multigraph with a frozen-vertex subset.
///
/// Vertices keep their insertion order; arrows are stored as
/// multiplicities on ordered index pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiQuiver {
    ids: Vec<String>,
    frozen: Vec<bool>,
    arrows: BTreeMap<(usize, usize), u32>,
}

/// JSON form: `{vertices:[{id, frozen}], arrows:[{from,to,mult}]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverJson {
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub id: String,
    #[serde(default)]
    pub frozen: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowJson {
    pub from: String,
    pub to: String,
    pub mult: u32,
}

impl MultiQuiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a quiver from `(id, frozen)` vertices and `(from, to, mult)` arrows.
    pub fn from_parts(
        vertices: &[(&str, bool)],
        arrows: &[(&str, &str, u32)],
    ) -> Result<Self, QuiverError> {
        let mut q = Self::new();
        for &(v, f) in vertices {
            q.add_vertex(v, f)?;
        }
        for &(a, b, m) in arrows {
            q.add_arrows(a, b, m)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, id: &str, frozen: bool) -> Result<usize, QuiverError> {
        if self.index_of(id).is_some() {
            return Err(QuiverError::DuplicateVertex(id.to_string()));
        }
        self.ids.push(id.to_string());
        self.frozen.push(frozen);
        Ok(self.ids.len() - 1)
    }

    /// Adds `mult` arrows `from → to`.
    pub fn add_arrows(&mut self, from: &str, to: &str, mult: u32) -> Result<(), QuiverError> {
        let i = self.require(from)?;
        let j = self.require(to)?;
        self.add_arrows_idx(i, j, mult);
        Ok(())
    }

    pub fn add_arrows_idx(&mut self, i: usize, j: usize, mult: u32) {
        if mult > 0 {
            *self.arrows.entry((i, j)).or_insert(0) += mult;
        }
    }

    fn require(&self, id: &str) -> Result<usize, QuiverError> {
        self.index_of(id)
            .ok_or_else(|| QuiverError::UnknownVertex(id.to_string()))
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|v| v == id)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn is_frozen_idx(&self, i: usize) -> bool {
        self.frozen[i]
    }

    pub fn is_frozen(&self, id: &str) -> Result<bool, QuiverError> {
        Ok(self.frozen[self.require(id)?])
    }

    pub fn set_frozen(&mut self, id: &str, frozen: bool) -> Result<(), QuiverError> {
        let i = self.require(id)?;
        self.frozen[i] = frozen;
        Ok(())
    }

    /// Frozen vertex ids.
    pub fn frozen_ids(&self) -> Vec<String> {
        (0..self.n())
            .filter(|&i| self.frozen[i])
            .map(|i| self.ids[i].clone())
            .collect()
    }

    /// Exchangeable (non-frozen) vertex ids.
    pub fn exchangeable_ids(&self) -> Vec<String> {
        (0..self.n())
            .filter(|&i| !self.frozen[i])
            .map(|i| self.ids[i].clone())
            .collect()
    }

    /// Number of arrows `i → j` (indices).
    pub fn mult_idx(&self, i: usize, j: usize) -> u32 {
        self.arrows.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Number of arrows `from → to`.
    pub fn mult(&self, from: &str, to: &str) -> Result<u32, QuiverError> {
        Ok(self.mult_idx(self.require(from)?, self.require(to)?))
    }

    /// All arrow groups as `(from index, to index, multiplicity)`.
    pub fn arrows_idx(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.arrows.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    /// Total number of arrows.
    pub fn arrow_count(&self) -> u32 {
        self.arrows.values().sum()
    }

    /// Net arrow count `#(i→j) − #(j→i)`.
    pub fn net_idx(&self, i: usize, j: usize) -> i64 {
        self.mult_idx(i, j) as i64 - self.mult_idx(j, i) as i64
    }

    fn both_frozen(&self, i: usize, j: usize) -> bool {
        self.frozen[i] && self.frozen[j]
    }

    /// The same quiver without arrows between two frozen vertices.
    pub fn without_frozen_frozen_arrows(&self) -> MultiQuiver {
        let mut q = self.clone();
        q.arrows
            .retain(|&(i, j), _| !(self.frozen[i] && self.frozen[j]));
        q
    }

    /// The full subquiver on the vertices satisfying `keep`, in order.
    pub fn induced_by(&self, keep: impl Fn(usize) -> bool) -> MultiQuiver {
        let kept: Vec<usize> = (0..self.n()).filter(|&i| keep(i)).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &i) in kept.iter().enumerate() {
            pos[i] = k;
        }
        let mut arrows = BTreeMap::new();
        for (i, j, m) in self.arrows_idx() {
            if pos[i] != usize::MAX && pos[j] != usize::MAX {
                arrows.insert((pos[i], pos[j]), m);
            }
        }
        MultiQuiver {
            ids: kept.iter().map(|&i| self.ids[i].clone()).collect(),
            frozen: kept.iter().map(|&i| self.frozen[i]).collect(),
            arrows,
        }
    }

    /// Renames vertices through `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> MultiQuiver {
        MultiQuiver {
            ids: self.ids.iter().map(|s| f(s)).collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: (0..self.n())
                .map(|i| VertexJson {
                    id: self.ids[i].clone(),
                    frozen: self.frozen[i],
                })
                .collect(),
            arrows: self
                .arrows_idx()
                .map(|(i, j, m)| ArrowJson {
                    from: self.ids[i].clone(),
                    to: self.ids[j].clone(),
                    mult: m,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Self, QuiverError> {
        let mut q = Self::new();
        for v in &j.vertices {
            q.add_vertex(&v.id, v.frozen)?;
        }
        for a in &j.arrows {
            q.add_arrows(&a.from, &a.to, a.mult)?;
        }
        Ok(q)
    }

    /// Graphviz rendering; frozen vertices are drawn as boxes and
    /// multiple arrows are labelled with their multiplicity.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{}\" {{", escape(name)).unwrap();
        for i in 0..self.n() {
            let shape = if self.frozen[i] { "box" } else { "ellipse" };
            writeln!(s, "  \"{}\" [shape={}];", escape(&self.ids[i]), shape).unwrap();
        }
        for (i, j, m) in self.arrows_idx() {
            let label = if m > 1 {
                format!(" [label=\"{m}\"]")
            } else {
                String::new()
            };
            writeln!(
                s,
                "  \"{}\" -> \"{}\"{};",
                escape(&self.ids[i]),
                escape(&self.ids[j]),
                label
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Loops and 2-cycles present in a quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detection {
    pub loops: BTreeSet<String>,
    /// Unordered pairs (stored sorted) with arrows in both directions and at
    /// least one exchangeable endpoint.
    pub two_cycles: BTreeSet<(String, String)>,
}

impl Detection {
    pub fn is_clean(&self) -> bool {
        self.loops.is_empty() && self.two_cycles.is_empty()
    }
}

/// Reports loops and exchangeable-touching 2-cycles.
pub fn detect(q: &MultiQuiver) -> Detection {
    let mut d = Detection::default();
    for (i, j, _) in q.arrows_idx() {
        if i == j {
            d.loops.insert(q.ids[i].clone());
        } else if i < j && q.mult_idx(j, i) > 0 && !q.both_frozen(i, j) {
            let (a, b) = (q.ids[i].clone(), q.ids[j].clone());
            d.two_cycles.insert(if a <= b { (a, b) } else { (b, a) });
        }
    }
    d
}

/// Fomin–Zelevinsky mutation at vertex `k`.
///
/// For each path `i → k → j` add an arrow `i → j`, reverse the arrows at
/// `k`, then cancel the 2-cycles so created. Pairs of frozen vertices are
/// left untouched.
pub fn fz_mutate(q: &MultiQuiver, k: &str) -> Result<MultiQuiver, QuiverError> {
    let k = q.require(k)?;
    fz_mutate_idx(q, k)
}

pub fn fz_mutate_idx(q: &MultiQuiver, k: usize) -> Result<MultiQuiver, QuiverError> {
    if k >= q.n() {
        return Err(QuiverError::IndexOutOfRange(k));
    }
    if q.frozen[k] {
        return Err(QuiverError::FrozenVertex(q.ids[k].clone()));
    }
    if q.mult_idx(k, k) > 0 {
        return Err(QuiverError::LoopAtVertex(q.ids[k].clone()));
    }
    for j in 0..q.n() {
        if j != k && q.mult_idx(k, j) > 0 && q.mult_idx(j, k) > 0 {
            return Err(QuiverError::TwoCycleAtVertex(
                q.ids[k].clone(),
                q.ids[j].clone(),
            ));
        }
    }
    let ins: Vec<(usize, u32)> = (0..q.n())
        .filter(|&i| i != k)
        .map(|i| (i, q.mult_idx(i, k)))
        .filter(|p| p.1 > 0)
        .collect();
    let outs: Vec<(usize, u32)> = (0..q.n())
        .filter(|&j| j != k)
        .map(|j| (j, q.mult_idx(k, j)))
        .filter(|p| p.1 > 0)
        .collect();

    let mut r = q.clone();
    // Reverse the arrows at k.
    r.arrows.retain(|&(i, j), _| i != k && j != k);
    for &(i, m) in &ins {
        r.add_arrows_idx(k, i, m);
    }
    for &(j, m) in &outs {
        r.add_arrows_idx(j, k, m);
    }
    // Composite arrows, cancelled against opposite arrows.
    for &(i, a) in &ins {
        for &(j, b) in &outs {
            if i == j || q.both_frozen(i, j) {
                continue;
            }
            let net = r.net_idx(i, j) + (a as i64) * (b as i64);
            r.arrows.remove(&(i, j));
            r.arrows.remove(&(j, i));
            if net > 0 {
                r.add_arrows_idx(i, j, net as u32);
            } else if net < 0 {
                r.add_arrows_idx(j, i, (-net) as u32);
            }
        }
    }
    Ok(r)
}

/// An `m × n` integer matrix whose first `n` rows (the exchangeable rows)
/// form a skew-symmetric block; the last `m − n` rows are the frozen rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    /// Row labels: exchangeable vertices first, then frozen vertices.
    pub labels: Vec<String>,
    /// Number of exchangeable columns.
    pub n: usize,
    /// Row-major entries, `labels.len()` rows of `n` columns.
    pub b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    /// A matrix with generic labels `1..m`.
    pub fn from_rows(b: Vec<Vec<i64>>, n: usize) -> Self {
        let labels = (1..=b.len()).map(|i| i.to_string()).collect();
        ExchangeMatrix { labels, n, b }
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.b.iter().map(|r| r[j]).collect()
    }

    /// True when the exchangeable block is skew-symmetric.
    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.b[i][j] == -self.b[j][i]))
    }
}

/// Matrix mutation at column `k` (0-based):
/// `b′_ij = −b_ij` if `i = k` or `j = k`, otherwise
/// `b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
pub fn matrix_mutate(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, QuiverError> {
    if k >= b.n {
        return Err(QuiverError::IndexOutOfRange(k));
    }
    let mut out = b.clone();
    for i in 0..b.m() {
        for j in 0..b.n {
            out.b[i][j] = if i == k || j == k {
                -b.b[i][j]
            } else {
                let (bik, bkj) = (b.b[i][k], b.b[k][j]);
                b.b[i][j] + (bik.abs() * bkj + bik * bkj.abs()) / 2
            };
        }
    }
    Ok(out)
}

/// Exchange matrix of a quiver: `b_ij = #(i→j) − #(j→i)`, rows ordered
/// exchangeable-first (in vertex order) then frozen.
pub fn to_exchange_matrix(q: &MultiQuiver) -> Result<ExchangeMatrix, QuiverError> {
    let d = detect(q);
    if let Some(l) = d.loops.iter().next() {
        return Err(QuiverError::NotMutable(format!("loop at {l}")));
    }
    if let Some((a, b)) = d.two_cycles.iter().next() {
        return Err(QuiverError::NotMutable(format!(
            "2-cycle between {a} and {b}"
        )));
    }
    let order: Vec<usize> = (0..q.n())
        .filter(|&i| !q.frozen[i])
        .chain((0..q.n()).filter(|&i| q.frozen[i]))
        .collect();
    let n = q.frozen.iter().filter(|&&f| !f).count();
    let b = order
        .iter()
        .map(|&i| order[..n].iter().map(|&j| q.net_idx(i, j)).collect())
        .collect();
    Ok(ExchangeMatrix {
        labels: order.iter().map(|&i| q.ids[i].clone()).collect(),
        n,
        b,
    })
}

/// A frozen-status-preserving vertex bijection `a → b` matching arrow
/// multiplicities, found by backtracking with degree invariants.
pub fn is_isomorphic(a: &MultiQuiver, b: &MultiQuiver) -> Option<BTreeMap<String, String>> {
    let n = a.n();
    if n != b.n() || a.arrow_count() != b.arrow_count() {
        return None;
    }
    let sig = |q: &MultiQuiver, i: usize| {
        let out: u32 = (0..q.n()).map(|j| q.mult_idx(i, j)).sum();
        let inn: u32 = (0..q.n()).map(|j| q.mult_idx(j, i)).sum();
        let mut outs: Vec<u32> = (0..q.n())
            .map(|j| q.mult_idx(i, j))
            .filter(|&m| m > 0)
            .collect();
        let mut ins: Vec<u32> = (0..q.n())
            .map(|j| q.mult_idx(j, i))
            .filter(|&m| m > 0)
            .collect();
        outs.sort_unstable();
        ins.sort_unstable();
        (q.frozen[i], q.mult_idx(i, i), out, inn, outs, ins)
    };
    let raw_a: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let raw_b: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    let mut ca = raw_a.clone();
    let mut cb = raw_b.clone();
    ca.sort();
    cb.sort();
    if ca != cb {
        return None;
    }
    ca.dedup();
    let class = |s: &_| ca.binary_search(s).unwrap();
    let sa: Vec<usize> = raw_a.iter().map(class).collect();
    let sb: Vec<usize> = raw_b.iter().map(class).collect();
    // Order a's vertices so that rare signatures are placed first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| sa.iter().filter(|s| **s == sa[i]).count());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        a: &MultiQuiver,
        b: &MultiQuiver,
        sa: &[usize],
        sb: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for j in 0..b.n() {
            if used[j] || sa[i] != sb[j] {
                continue;
            }
            let ok = order[..k].iter().all(|&p| {
                a.mult_idx(i, p) == b.mult_idx(j, map[p])
                    && a.mult_idx(p, i) == b.mult_idx(map[p], j)
            });
            if !ok {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if go(k + 1, order, a, b, sa, sb, map, used) {
                return true;
            }
            used[j] = false;
            map[i] = usize::MAX;
        }
        false
    }
    if go(0, &order, a, b, &sa, &sb, &mut map, &mut used) {
        Some(
            (0..n)
                .map(|i| (a.ids[i].clone(), b.ids[map[i]].clone()))
                .collect(),
        )
    } else {
        None
    }
}

/// True when `map` is a frozen-preserving bijection carrying `a` onto `b`
/// with matching arrow multiplicities.
pub fn is_isomorphism(a: &MultiQuiver, b: &MultiQuiver, map: &BTreeMap<String, String>) -> bool {
    if a.n() != b.n() || map.len() != a.n() {
        return false;
    }
    let mut idx = vec![usize::MAX; a.n()];
    for i in 0..a.n() {
        match map.get(&a.ids[i]).and_then(|t| b.index_of(t)) {
            Some(j) if b.frozen[j] == a.frozen[i] => idx[i] = j,
            _ => return false,
        }
    }
    if idx.iter().collect::<BTreeSet<_>>().len() != a.n() {
        return false;
    }
    (0..a.n()).all(|i| (0..a.n()).all(|j| a.mult_idx(i, j) == b.mult_idx(idx[i], idx[j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear() -> MultiQuiver {
        MultiQuiver::from_parts(
            &[("1", false), ("2", false), ("3", false)],
            &[("1", "2", 1), ("2", "3", 1)],
        )
        .unwrap()
    }

    #[test]
    fn mutate_linear_at_middle() {
        let m = fz_mutate(&linear(), "2").unwrap();
        let e = MultiQuiver::from_parts(
            &[("1", false), ("2", false), ("3", false)],
            &[("2", "1", 1), ("3", "2", 1), ("1", "3", 1)],
        )
        .unwrap();
        assert_eq!(m, e);
    }

    #[test]
    fn mutate_single_vertex() {
        let q = MultiQuiver::from_parts(&[("1", false)], &[]).unwrap();
        assert_eq!(fz_mutate(&q, "1").unwrap(), q);
    }

    #[test]
    fn mutation_errors() {
        let q = MultiQuiver::from_parts(&[("1", false), ("2", true)], &[("1", "1", 1)]).unwrap();
        assert_eq!(
            fz_mutate(&q, "1"),
            Err(QuiverError::LoopAtVertex("1".into()))
        );
        assert_eq!(
            fz_mutate(&q, "2"),
            Err(QuiverError::FrozenVertex("2".into()))
        );
        let c = MultiQuiver::from_parts(
            &[("1", false), ("2", false)],
            &[("1", "2", 1), ("2", "1", 1)],
        )
        .unwrap();
        assert!(matches!(
            fz_mutate(&c, "1"),
            Err(QuiverError::TwoCycleAtVertex(_, _))
        ));
        assert!(matches!(
            fz_mutate(&c, "x"),
            Err(QuiverError::UnknownVertex(_))
        ));
    }

    #[test]
    fn frozen_frozen_arrows_are_carried() {
        let q = MultiQuiver::from_parts(
            &[("x", false), ("f", true), ("g", true)],
            &[("f", "x", 1), ("x", "g", 1), ("g", "f", 2)],
        )
        .unwrap();
        let m = fz_mutate(&q, "x").unwrap();
        assert_eq!(m.mult("g", "f").unwrap(), 2);
        assert_eq!(m.mult("f", "g").unwrap(), 0);
        assert_eq!(m.mult("x", "f").unwrap(), 1);
        assert_eq!(m.mult("g", "x").unwrap(), 1);
    }

    #[test]
    fn matrix_mutation_examples() {
        let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]], 2);
        assert_eq!(
            matrix_mutate(&b, 0).unwrap().b,
            vec![vec![0, -1], vec![1, 0]]
        );
        let z = ExchangeMatrix::from_rows(vec![vec![0]], 1);
        assert_eq!(matrix_mutate(&z, 0).unwrap(), z);
        let k = ExchangeMatrix::from_rows(vec![vec![0, 2], vec![-2, 0]], 2);
        let mut cur = k.clone();
        for step in 0..10 {
            cur = matrix_mutate(&cur, step % 2).unwrap();
            assert!(cur.is_skew_symmetric());
        }
        assert!(matrix_mutate(&k, 2).is_err());
    }

    #[test]
    fn exchange_matrices() {
        let q = MultiQuiver::from_parts(&[("1", false), ("2", false)], &[("1", "2", 2)]).unwrap();
        assert_eq!(
            to_exchange_matrix(&q).unwrap().b,
            vec![vec![0, 2], vec![-2, 0]]
        );
        let e = to_exchange_matrix(&MultiQuiver::new()).unwrap();
        assert_eq!((e.m(), e.n), (0, 0));
        let l = MultiQuiver::from_parts(&[("1", false)], &[("1", "1", 1)]).unwrap();
        assert!(matches!(
            to_exchange_matrix(&l),
            Err(QuiverError::NotMutable(_))
        ));
    }

    #[test]
    fn detection() {
        let l = MultiQuiver::from_parts(&[("1", false)], &[("1", "1", 1)]).unwrap();
        assert_eq!(detect(&l).loops, ["1".to_string()].into_iter().collect());
        let c = MultiQuiver::from_parts(
            &[("1", false), ("2", false)],
            &[("1", "2", 1), ("2", "1", 1)],
        )
        .unwrap();
        assert_eq!(detect(&c).two_cycles.len(), 1);
        assert!(detect(&linear()).is_clean());
        let ff =
            MultiQuiver::from_parts(&[("1", true), ("2", true)], &[("1", "2", 1), ("2", "1", 1)])
                .unwrap();
        assert!(detect(&ff).is_clean());
    }

    #[test]
    fn isomorphism_examples() {
        let q = linear();
        let id = is_isomorphic(&q, &q).unwrap();
        assert!(id.iter().all(|(a, b)| a == b));
        let a = MultiQuiver::from_parts(&[("1", false), ("2", false)], &[("1", "2", 1)]).unwrap();
        let b = MultiQuiver::from_parts(&[("1", false), ("2", false)], &[("2", "1", 1)]).unwrap();
        let s = is_isomorphic(&a, &b).unwrap();
        assert_eq!(s["1"], "2");
        assert!(is_isomorphism(&a, &b, &s));
        let d = MultiQuiver::from_parts(&[("1", false), ("2", false)], &[("1", "2", 2)]).unwrap();
        assert!(is_isomorphic(&d, &a).is_none());
        let f = MultiQuiver::from_parts(&[("1", true), ("2", false)], &[("1", "2", 1)]).unwrap();
        assert!(is_isomorphic(&f, &a).is_none());
    }

    #[test]
    fn json_and_dot() {
        let q = MultiQuiver::from_parts(&[("a", false), ("b", true)], &[("a", "b", 2)]).unwrap();
        let j = serde_json::to_string(&q.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"vertices":[{"id":"a","frozen":false},{"id":"b","frozen":true}],"arrows":[{"from":"a","to":"b","mult":2}]}"#
        );
        let back = MultiQuiver::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, q);
        let dot = q.to_dot("q");
        assert!(dot.contains("\"b\" [shape=box]"));
        assert!(dot.contains("\"a\" -> \"b\" [label=\"2\"]"));
    }
}
