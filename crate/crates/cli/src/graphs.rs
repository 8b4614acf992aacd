//! Graph lookup by name or JSON file, and small reference seeds.

use std::path::Path;

use cyclab_core::cluster::Seed;
use cyclab_core::coxeter::{CoxeterGraph, GraphJson};
use cyclab_core::quiver::MultiQuiver;

use crate::io::read_json;

/// Built-in graphs: `kronecker`, `triangle`, `aN`, `dN`, `cycleN`
/// (case-insensitive).
pub fn named_graph(name: &str) -> Option<CoxeterGraph> {
    let lower = name.to_ascii_lowercase();
    let num = |prefix: &str| {
        lower
            .strip_prefix(prefix)
            .and_then(|r| r.parse::<u32>().ok())
    };
    match lower.as_str() {
        "kronecker" => Some(CoxeterGraph::kronecker()),
        "triangle" => Some(CoxeterGraph::triangle()),
        _ => {
            if let Some(n) = num("cycle") {
                (n >= 3).then(|| CoxeterGraph::cycle(n))
            } else if let Some(n) = num("a") {
                (n >= 1).then(|| CoxeterGraph::a(n))
            } else if let Some(n) = num("d") {
                (n >= 4).then(|| CoxeterGraph::d(n))
            } else {
                None
            }
        }
    }
}

/// A graph given as a built-in name or a path to graph JSON.
pub fn load_graph(name_or_path: &str) -> anyhow::Result<CoxeterGraph> {
    if let Some(g) = named_graph(name_or_path) {
        return Ok(g);
    }
    let j: GraphJson = read_json(Path::new(name_or_path))?;
    Ok(CoxeterGraph::from_json(&j)?)
}

/// Small seeds whose mutations must all divide exactly: types A2, A3 and
/// the Kronecker quiver.
pub fn laurent_test_seeds() -> Vec<(&'static str, Seed)> {
    let seed = |v: &[&str], a: &[(&str, &str, u32)]| {
        let vs: Vec<(&str, bool)> = v.iter().map(|&x| (x, false)).collect();
        Seed::initial(
            MultiQuiver::from_parts(&vs, a).expect("valid quiver"),
            Vec::new(),
        )
        .expect("valid seed")
    };
    vec![
        ("A2", seed(&["x1", "x2"], &[("x1", "x2", 1)])),
        (
            "A3",
            seed(&["x1", "x2", "x3"], &[("x1", "x2", 1), ("x2", "x3", 1)]),
        ),
        ("Kronecker", seed(&["x1", "x2"], &[("x1", "x2", 2)])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(named_graph("Kronecker").unwrap().n(), 2);
        assert_eq!(named_graph("a4").unwrap().n(), 4);
        assert_eq!(named_graph("D4").unwrap().n(), 4);
        assert_eq!(named_graph("cycle5").unwrap().n(), 5);
        assert!(named_graph("d3").is_none());
        assert!(named_graph("e8").is_none());
    }
}
