//! The `cyclab` binary: outputs, exit codes, JSON round trips and byte
//! stability.

use std::path::PathBuf;
use std::process::{Command, Output};

use cyclab_core::cluster::{Seed, SeedJson};
use cyclab_core::coxeter::{CoxeterGraph, Word};
use cyclab_core::preproj::{standard_family, GradedAlgebra, ModuleJson, ModuleRep};
use cyclab_core::quiver::{MultiQuiver, QuiverJson};
use serde_json::Value;

fn cyclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cyclab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn coxeter_subcommands() {
    let v: Value = serde_json::from_str(&stdout(&[
        "coxeter", "length", "--graph", "a3", "--word", "1,2,1,2",
    ]))
    .unwrap();
    assert_eq!(v["length"], 2);
    assert_eq!(v["reduced"], false);
    let v: Value = serde_json::from_str(&stdout(&[
        "coxeter", "longest", "--graph", "d4", "--word", "",
    ]))
    .unwrap();
    assert_eq!(v["length"], 12);
    let v: Value = serde_json::from_str(&stdout(&[
        "coxeter", "words", "--graph", "a2", "--word", "1,2,1",
    ]))
    .unwrap();
    assert_eq!(v["reduced_words"].as_array().unwrap().len(), 2);
}

#[test]
fn graph_files_are_accepted() {
    let path = scratch("triangle.json");
    let g = serde_json::json!({"vertices": [1, 2, 3], "edges": [{"a": 1, "b": 2, "mult": 1}, {"a": 2, "b": 3, "mult": 1}, {"a": 1, "b": 3, "mult": 1}]});
    std::fs::write(&path, g.to_string()).unwrap();
    let from_file = stdout(&[
        "word2quiver",
        "--graph",
        path.to_str().unwrap(),
        "--word",
        "1,2,1,3,2",
    ]);
    let by_name = stdout(&["word2quiver", "--graph", "triangle", "--word", "1,2,1,3,2"]);
    assert_eq!(from_file, by_name);
}

#[test]
fn quiver_json_round_trips_through_mutation() {
    let q = stdout(&[
        "word2quiver",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0,1",
        "--freeze-last",
    ]);
    let path = scratch("ladder.json");
    std::fs::write(&path, &q).unwrap();
    let parsed = MultiQuiver::from_json(&serde_json::from_str::<QuiverJson>(&q).unwrap()).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&parsed.to_json()).unwrap() + "\n",
        q
    );
    let once = scratch("ladder-mu.json");
    stdout(&[
        "quiver",
        "mutate",
        "--quiver",
        path.to_str().unwrap(),
        "--at",
        "p2",
        "--out",
        once.to_str().unwrap(),
    ]);
    let twice = stdout(&[
        "quiver",
        "mutate",
        "--quiver",
        once.to_str().unwrap(),
        "--at",
        "p2",
    ]);
    assert_eq!(twice, q);
    let dot = stdout(&["quiver", "dot", "--quiver", path.to_str().unwrap()]);
    assert!(dot.contains("shape=box"), "{dot}");
}

#[test]
fn seed_json_round_trips() {
    let seed = stdout(&["loopgroup", "seed", "--cell", "w4"]);
    let parsed = Seed::from_json(&serde_json::from_str::<SeedJson>(&seed).unwrap()).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&parsed.to_json()).unwrap() + "\n",
        seed
    );
    let path = scratch("w4.json");
    std::fs::write(&path, &seed).unwrap();
    let ty: Value = serde_json::from_str(&stdout(&[
        "cluster",
        "type",
        "--seed",
        path.to_str().unwrap(),
        "--depth",
        "4",
    ]))
    .unwrap();
    assert_eq!(ty["kind"], "infinite_within_cap");
    let ex: Value = serde_json::from_str(&stdout(&[
        "cluster",
        "explore",
        "--seed",
        path.to_str().unwrap(),
        "--depth",
        "3",
    ]))
    .unwrap();
    assert_eq!(ex["seeds"], 7);
    assert_eq!(ex["is_path"], true);
}

#[test]
fn module_json_round_trips() {
    let m = stdout(&[
        "preproj",
        "module",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0,1",
        "--summand",
        "2",
    ]);
    let j: ModuleJson = serde_json::from_str(&m).unwrap();
    let g = CoxeterGraph::kronecker();
    let parsed = ModuleRep::from_json(&j, &g).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&parsed.to_json()).unwrap() + "\n",
        m
    );
    let alg = GradedAlgebra::build(&g, 9);
    let fam = standard_family(&alg, &Word::new(&[0, 1, 0, 1])).unwrap();
    assert_eq!(parsed.dims(), fam.modules[1].dims());
    // The flag series of P1,2 over (0,1,0,1) is DF − E truncated to degree 4.
    let path = scratch("p12.json");
    std::fs::write(&path, &m).unwrap();
    let phi = stdout(&[
        "loopgroup",
        "phi",
        "--module",
        path.to_str().unwrap(),
        "--word",
        "0,1,0,1",
        "--cap",
        "4",
    ]);
    assert!(phi.contains("\"terms\""));
}

#[test]
fn preproj_tables() {
    let ext: Value = serde_json::from_str(&stdout(&[
        "preproj",
        "ext",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0,1",
    ]))
    .unwrap();
    assert!(ext["ext"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap())
        .all(|x| x == 0));
    let hom: Value = serde_json::from_str(&stdout(&[
        "preproj",
        "hom",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0",
    ]))
    .unwrap();
    assert_eq!(hom["hom"], hom["formula"]);
    let ex: Value = serde_json::from_str(&stdout(&[
        "preproj",
        "exchange",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0,1",
        "--summand",
        "1",
    ]))
    .unwrap();
    assert_eq!(ex["summand"], 1);
    let eq = stdout(&[
        "preproj",
        "endquiver",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0,1",
    ]);
    let w2q = stdout(&[
        "word2quiver",
        "--graph",
        "kronecker",
        "--word",
        "0,1,0,1",
        "--freeze-last",
    ]);
    assert_eq!(eq, w2q);
}

#[test]
fn loopgroup_verify_reports_every_identity() {
    let out = cyclab(&["loopgroup", "verify", "--cell", "w3", "--samples", "10"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["holds"] == true || c["printed_form"] == true));
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "loopgroup",
        "verify",
        "--cell",
        "w4",
        "--samples",
        "5",
        "--rng",
        "7",
    ];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["preproj", "ideal", "--graph", "triangle", "--word", "1,2,3"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    let missing = cyclab(&["quiver", "dot", "--quiver", "/nonexistent/q.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let bad_arg = cyclab(&["coxeter", "frobnicate", "--graph", "a2", "--word", "1"]);
    assert_eq!(bad_arg.status.code(), Some(2));
    let not_reduced = cyclab(&["word2quiver", "--graph", "a2", "--word", "1,1"]);
    assert_eq!(not_reduced.status.code(), Some(1));
    let path = scratch("w3.json");
    std::fs::write(&path, stdout(&["loopgroup", "seed", "--cell", "w3"])).unwrap();
    let frozen = cyclab(&[
        "cluster",
        "mutate",
        "--seed",
        path.to_str().unwrap(),
        "--at",
        "p2",
    ]);
    assert_eq!(frozen.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&frozen.stderr).contains("frozen"));
}

#[test]
fn verify_reports_word_statuses() {
    let cfg = scratch("suite.json");
    // A tiny configuration: word statuses are what is being checked here.
    std::fs::write(
        &cfg,
        r#"{"kronecker_length": 4, "theorem_max_length": 2, "random_triangle_words": 2, "random_word_max_length": 3,
            "ideal_truncation": 5, "bijection_max_length": 2, "samples": 2, "explore_depth": 5, "phi_cap": 4,
            "words": [{"graph": "a2", "word": "1,1"}, {"graph": "triangle", "word": "1,2,3"}]}"#,
    )
    .unwrap();
    let out = cyclab(&["verify", "--config", cfg.to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let words = v["words"].as_array().unwrap();
    assert_eq!(words[0]["status"], "expected-failure");
    assert_eq!(words[1]["status"], "pass");
    assert_eq!(v["criteria"].as_array().unwrap().len(), 10);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert_eq!(
        stderr
            .lines()
            .filter(|l| l.starts_with("criterion"))
            .count(),
        10
    );
}
