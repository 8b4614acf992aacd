//! Symbolic cluster algebras: seeds, seed mutation with exact Laurent
//! arithmetic, exchange-graph exploration, finite-type detection and the
//! subcluster conditions.
//!
//! A seed is a quiver (frozen vertices are coefficients) together with a
//! Laurent polynomial for every vertex, written in the variables of the
//! initial seed. Coefficients are never mutated; the `inverted` set only
//! records which coefficients are meant to be invertible.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::foundation::{LaurentError, LaurentPoly};
use crate::quiver::{detect, fz_mutate, MultiQuiver, QuiverError, QuiverJson};

/// Errors raised by seed operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClusterError {
    #[error("exchange relation at {vertex} is not divisible by the old variable")]
    LaurentViolation { vertex: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("malformed seed: {0}")]
    Malformed(String),
}

/// A seed: quiver, one Laurent polynomial per vertex, and invertible coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub quiver: MultiQuiver,
    pub vars: BTreeMap<String, LaurentPoly>,
    pub inverted: BTreeSet<String>,
}

/// JSON form: the quiver fields plus `vars` and `inverted`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedJson {
    #[serde(flatten)]
    pub quiver: QuiverJson,
    #[serde(default)]
    pub vars: Option<BTreeMap<String, LaurentPoly>>,
    #[serde(default)]
    pub inverted: Vec<String>,
}

impl Seed {
    /// The initial seed on a quiver: every vertex carries its own variable.
    pub fn initial(
        quiver: MultiQuiver,
        inverted: impl IntoIterator<Item = String>,
    ) -> Result<Self, ClusterError> {
        let vars = quiver
            .ids()
            .iter()
            .map(|id| (id.clone(), LaurentPoly::var(id)))
            .collect();
        let seed = Seed {
            quiver,
            vars,
            inverted: inverted.into_iter().collect(),
        };
        seed.validate()?;
        Ok(seed)
    }

    fn validate(&self) -> Result<(), ClusterError> {
        for id in &self.inverted {
            if !self.quiver.is_frozen(id)? {
                return Err(ClusterError::Malformed(format!(
                    "inverted vertex {id} is not a coefficient"
                )));
            }
        }
        if self.vars.len() != self.quiver.n()
            || self
                .quiver
                .ids()
                .iter()
                .any(|id| !self.vars.contains_key(id))
        {
            return Err(ClusterError::Malformed(
                "every vertex needs exactly one variable".into(),
            ));
        }
        let exch = self.quiver.induced_by(|i| !self.quiver.is_frozen_idx(i));
        if !detect(&exch).is_clean() {
            return Err(ClusterError::Malformed(
                "exchangeable part has loops or 2-cycles".into(),
            ));
        }
        Ok(())
    }

    pub fn from_json(j: &SeedJson) -> Result<Self, ClusterError> {
        let quiver = MultiQuiver::from_json(&j.quiver)?;
        match &j.vars {
            None => Seed::initial(quiver, j.inverted.iter().cloned()),
            Some(vars) => {
                let seed = Seed {
                    quiver,
                    vars: vars.clone(),
                    inverted: j.inverted.iter().cloned().collect(),
                };
                seed.validate()?;
                Ok(seed)
            }
        }
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            quiver: self.quiver.to_json(),
            vars: Some(self.vars.clone()),
            inverted: self.inverted.iter().cloned().collect(),
        }
    }

    /// Variables of the exchangeable vertices.
    pub fn cluster(&self) -> Vec<&LaurentPoly> {
        self.quiver
            .exchangeable_ids()
            .iter()
            .map(|id| &self.vars[id])
            .collect()
    }

    /// The unordered extended cluster in canonical form: the seed's identity.
    pub fn key(&self) -> Vec<LaurentPoly> {
        let mut k: Vec<LaurentPoly> = self.vars.values().map(LaurentPoly::trim_vars).collect();
        k.sort();
        k
    }
}

/// Mutates a seed at exchangeable vertex `k`:
/// `x_k' = (Π_{b_ik > 0} x_i^{b_ik} + Π_{b_ik < 0} x_i^{−b_ik}) / x_k`.
pub fn seed_mutate(s: &Seed, k: &str) -> Result<Seed, ClusterError> {
    let ki = s
        .quiver
        .index_of(k)
        .ok_or_else(|| QuiverError::UnknownVertex(k.to_string()))?;
    if s.quiver.is_frozen_idx(ki) {
        return Err(QuiverError::FrozenVertex(k.to_string()).into());
    }
    let mut incoming = LaurentPoly::one();
    let mut outgoing = LaurentPoly::one();
    for i in 0..s.quiver.n() {
        let b = s.quiver.net_idx(i, ki);
        let x = &s.vars[s.quiver.id(i)];
        if b > 0 {
            incoming = &incoming * &x.pow(b as u32);
        } else if b < 0 {
            outgoing = &outgoing * &x.pow((-b) as u32);
        }
    }
    let numerator = &incoming + &outgoing;
    let new = numerator.divide_exact(&s.vars[k]).map_err(|e| match e {
        LaurentError::NotDivisible | LaurentError::DivisionByZero => {
            ClusterError::LaurentViolation {
                vertex: k.to_string(),
            }
        }
        other => ClusterError::Malformed(other.to_string()),
    })?;
    let mut vars = s.vars.clone();
    vars.insert(k.to_string(), new);
    Ok(Seed {
        quiver: fz_mutate(&s.quiver, k)?,
        vars,
        inverted: s.inverted.clone(),
    })
}

/// A breadth-first fragment of the exchange graph.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub nodes: Vec<Seed>,
    /// Mutation distance from the initial seed.
    pub depth: Vec<usize>,
    /// Undirected edges `(a, b, vertex)` with `a < b`.
    pub edges: BTreeSet<(usize, usize, String)>,
    /// True when every mutation of every node leads to a known node.
    pub complete: bool,
}

impl ExchangeGraph {
    /// Number of distinct neighbours of each node.
    pub fn degrees(&self) -> Vec<usize> {
        let mut nb: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.nodes.len()];
        for (a, b, _) in &self.edges {
            nb[*a].insert(*b);
            nb[*b].insert(*a);
        }
        nb.iter().map(BTreeSet::len).collect()
    }

    /// Distinct exchangeable cluster variables over all nodes.
    pub fn cluster_variables(&self) -> BTreeSet<LaurentPoly> {
        self.nodes
            .iter()
            .flat_map(|s| s.cluster().into_iter().map(LaurentPoly::trim_vars))
            .collect()
    }

    /// True when the graph is a simple path.
    pub fn is_path(&self) -> bool {
        let deg = self.degrees();
        let n = self.nodes.len();
        let distinct: BTreeSet<(usize, usize)> =
            self.edges.iter().map(|(a, b, _)| (*a, *b)).collect();
        n <= 1
            || (distinct.len() == n - 1
                && deg.iter().all(|&d| d <= 2)
                && deg.iter().filter(|&&d| d == 1).count() == 2)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for (i, s) in self.nodes.iter().enumerate() {
            let label: Vec<String> = s.cluster().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}\"];",
                label.join("\\n").replace('"', "'")
            );
        }
        for (a, b, v) in &self.edges {
            let _ = writeln!(out, "  n{a} -- n{b} [label=\"{v}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Explores the exchange graph breadth-first up to `depth` mutations and
/// `node_cap` nodes. Nodes at the depth limit are still mutated to test
/// whether their neighbours are already known.
pub fn explore(s: &Seed, depth: usize, node_cap: usize) -> Result<ExchangeGraph, ClusterError> {
    let mut index: HashMap<Vec<LaurentPoly>, usize> = HashMap::new();
    let mut g = ExchangeGraph {
        nodes: vec![s.clone()],
        depth: vec![0],
        edges: BTreeSet::new(),
        complete: true,
    };
    index.insert(s.key(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for k in g.nodes[a].quiver.exchangeable_ids() {
            let t = seed_mutate(&g.nodes[a], &k)?;
            let key = t.key();
            let b = match index.get(&key) {
                Some(&b) => b,
                None if g.depth[a] < depth && g.nodes.len() < node_cap => {
                    let b = g.nodes.len();
                    index.insert(key, b);
                    g.depth.push(g.depth[a] + 1);
                    g.nodes.push(t);
                    queue.push_back(b);
                    b
                }
                None => {
                    g.complete = false;
                    continue;
                }
            };
            g.edges.insert((a.min(b), a.max(b), k));
        }
    }
    Ok(g)
}

/// Result of a closure-based type search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClusterType {
    Finite {
        name: String,
        clusters: usize,
        variables: usize,
    },
    InfiniteWithinCap {
        explored: usize,
    },
}

/// Names a finite exchange graph by its rank and number of clusters.
fn finite_type_name(rank: usize, clusters: usize) -> String {
    let name = match (rank, clusters) {
        (0, 1) => "trivial",
        (1, 2) => "A1",
        (2, 4) => "A1xA1",
        (2, 5) => "A2",
        (2, 6) => "B2",
        (2, 8) => "G2",
        (3, 8) => "A1xA1xA1",
        (3, 10) => "A1xA2",
        (3, 14) => "A3",
        (3, 20) => "B3",
        (4, 42) => "A4",
        (4, 50) => "D4",
        _ => "unrecognized",
    };
    name.to_string()
}

/// Explores up to the caps and reports a finite type when the closure completes.
pub fn classify_type(s: &Seed, depth: usize, node_cap: usize) -> Result<ClusterType, ClusterError> {
    let g = explore(s, depth, node_cap)?;
    if !g.complete {
        return Ok(ClusterType::InfiniteWithinCap {
            explored: g.nodes.len(),
        });
    }
    let rank = s.quiver.exchangeable_ids().len();
    Ok(ClusterType::Finite {
        name: finite_type_name(rank, g.nodes.len()),
        clusters: g.nodes.len(),
        variables: g.cluster_variables().len(),
    })
}

/// Outcome of the subcluster conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubclusterReport {
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    pub messages: Vec<String>,
}

impl SubclusterReport {
    pub fn holds(&self) -> bool {
        self.s1 && self.s2 && self.s3
    }
}

/// Checks that `sub` sits inside `ambient` along `embedding`
/// (sub vertex → ambient vertex):
/// (S1) cluster variables go to cluster variables with equal values, and
/// coefficients go anywhere with equal values; (S2) every arrow of the
/// ambient quiver at the image of a cluster variable comes from `sub`;
/// (S3) ambient-invertible coefficients among the images are invertible in `sub`.
pub fn check_subcluster(
    sub: &Seed,
    ambient: &Seed,
    embedding: &BTreeMap<String, String>,
) -> SubclusterReport {
    let mut messages = Vec::new();
    let mut s1 = true;
    let images: BTreeSet<&String> = embedding.values().collect();
    if images.len() != embedding.len() {
        messages.push("embedding is not injective".into());
        s1 = false;
    }
    for id in sub.quiver.ids() {
        let Some(img) = embedding.get(id) else {
            messages.push(format!("{id} is not embedded"));
            s1 = false;
            continue;
        };
        let Ok(amb_frozen) = ambient.quiver.is_frozen(img) else {
            messages.push(format!("{img} is not an ambient vertex"));
            s1 = false;
            continue;
        };
        if !sub.quiver.is_frozen(id).unwrap_or(true) && amb_frozen {
            messages.push(format!("cluster variable {id} maps to coefficient {img}"));
            s1 = false;
        }
        if !sub.vars[id].same_value(&ambient.vars[img]) {
            messages.push(format!("{id} and {img} carry different values"));
            s1 = false;
        }
    }
    let mut s2 = s1;
    if s1 {
        let back: BTreeMap<&String, &String> = embedding.iter().map(|(a, b)| (b, a)).collect();
        for id in sub.quiver.exchangeable_ids() {
            let img = &embedding[&id];
            for other in ambient.quiver.ids() {
                let out_amb = ambient.quiver.mult(img, other).unwrap_or(0);
                let in_amb = ambient.quiver.mult(other, img).unwrap_or(0);
                let (out_sub, in_sub) = match back.get(other) {
                    Some(pre) => (
                        sub.quiver.mult(&id, pre).unwrap_or(0),
                        sub.quiver.mult(pre, &id).unwrap_or(0),
                    ),
                    None => (0, 0),
                };
                if (out_amb, in_amb) != (out_sub, in_sub) {
                    messages.push(format!(
                        "arrows between {img} and {other}: ambient ({out_amb}, {in_amb}), sub ({out_sub}, {in_sub})"
                    ));
                    s2 = false;
                }
            }
        }
    }
    let mut s3 = true;
    for id in sub.quiver.frozen_ids() {
        if let Some(img) = embedding.get(&id) {
            if ambient.inverted.contains(img) && !sub.inverted.contains(&id) {
                messages.push(format!(
                    "{img} is invertible in the ambient seed but {id} is not"
                ));
                s3 = false;
            }
        }
    }
    SubclusterReport {
        s1,
        s2,
        s3,
        messages,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::Rational;

    fn a2() -> Seed {
        let q = MultiQuiver::from_parts(&[("1", false), ("2", false)], &[("1", "2", 1)]).unwrap();
        Seed::initial(q, []).unwrap()
    }

    #[test]
    fn rank_one() {
        let q = MultiQuiver::from_parts(&[("x", false)], &[]).unwrap();
        let s = Seed::initial(q, []).unwrap();
        let t = seed_mutate(&s, "x").unwrap();
        let expected = LaurentPoly::monomial(&[("x", -1)], Rational::from_int(2));
        assert!(t.vars["x"].same_value(&expected));
        assert_eq!(seed_mutate(&t, "x").unwrap().key(), s.key());
        let ty = classify_type(&s, 5, 100).unwrap();
        assert_eq!(
            ty,
            ClusterType::Finite {
                name: "A1".into(),
                clusters: 2,
                variables: 2
            }
        );
    }

    #[test]
    fn pentagon() {
        let g = explore(&a2(), 10, 100).unwrap();
        assert!(g.complete);
        assert_eq!(g.nodes.len(), 5);
        assert_eq!(g.cluster_variables().len(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!(
            classify_type(&a2(), 10, 100).unwrap(),
            ClusterType::Finite {
                name: "A2".into(),
                clusters: 5,
                variables: 5
            }
        );
    }

    #[test]
    fn kronecker_is_infinite() {
        let q = MultiQuiver::from_parts(&[("1", false), ("2", false)], &[("1", "2", 2)]).unwrap();
        let s = Seed::initial(q, []).unwrap();
        let g = explore(&s, 6, 1000).unwrap();
        assert!(!g.complete);
        assert!(g.is_path());
        assert_eq!(g.nodes.len(), 13);
        assert!(matches!(
            classify_type(&s, 6, 1000).unwrap(),
            ClusterType::InfiniteWithinCap { .. }
        ));
    }

    #[test]
    fn a3_orientations_close() {
        for arrows in [
            vec![("1", "2", 1), ("2", "3", 1)],
            vec![("1", "2", 1), ("3", "2", 1)],
        ] {
            let q = MultiQuiver::from_parts(&[("1", false), ("2", false), ("3", false)], &arrows)
                .unwrap();
            let s = Seed::initial(q, []).unwrap();
            let ty = classify_type(&s, 20, 1000).unwrap();
            assert_eq!(
                ty,
                ClusterType::Finite {
                    name: "A3".into(),
                    clusters: 14,
                    variables: 9
                }
            );
        }
    }

    #[test]
    fn frozen_vertices_are_not_mutated() {
        let q = MultiQuiver::from_parts(&[("1", false), ("c", true)], &[("c", "1", 1)]).unwrap();
        let s = Seed::initial(q, ["c".to_string()]).unwrap();
        assert!(seed_mutate(&s, "c").is_err());
        let t = seed_mutate(&s, "1").unwrap();
        assert_eq!(t.vars["c"], s.vars["c"]);
        assert_eq!(t.inverted, s.inverted);
    }

    #[test]
    fn json_round_trip() {
        let s = seed_mutate(&a2(), "1").unwrap();
        let j = serde_json::to_string(&s.to_json()).unwrap();
        let back = Seed::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn subcluster_identity_and_violation() {
        let q = MultiQuiver::from_parts(
            &[("1", false), ("2", false), ("c", true)],
            &[("1", "2", 1), ("c", "1", 1)],
        )
        .unwrap();
        let s = Seed::initial(q, ["c".to_string()]).unwrap();
        let id: BTreeMap<String, String> = s
            .quiver
            .ids()
            .iter()
            .map(|x| (x.clone(), x.clone()))
            .collect();
        assert!(check_subcluster(&s, &s, &id).holds());
        let dropped =
            MultiQuiver::from_parts(&[("1", false), ("2", false), ("c", true)], &[("1", "2", 1)])
                .unwrap();
        let sub = Seed::initial(dropped, ["c".to_string()]).unwrap();
        let r = check_subcluster(&sub, &s, &id);
        assert!(r.s1 && !r.s2);
    }
}
