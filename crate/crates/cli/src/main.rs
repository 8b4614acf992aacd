//! `cyclab`: batch front end for every module, the verification suite
//! runner and the HTTP endpoints.
//!
//! Exit status: 0 on success, 1 when a computation fails or a verification
//! does not hold, 2 on usage errors (bad arguments, unreadable input).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclab::graphs::load_graph;
use cyclab::io::{emit_json, emit_text, read_json, UsageError};
use cyclab::suite::{run_suite, SuiteConfig};
use cyclab_core::cluster::{check_subcluster, classify_type, explore, seed_mutate, Seed, SeedJson};
use cyclab_core::coxeter::{
    canonical_form, is_reduced, length, longest_element, reduced_word_of, reduced_words, Word,
};
use cyclab_core::loopgroup::{
    initial_seed, jacobian_rank, phi_series, sample_cell, verify_point, verify_symbolic, Cell,
    Check,
};
use cyclab_core::preproj::{
    end_quiver, exchange_summand, ext1, hom, hom_formula, ideal_for_word, mark_frozen,
    quotient_module, standard_family, GradedAlgebra, ModuleJson, ModuleRep, DEFAULT_PRIMES,
};
use cyclab_core::quiver::{fz_mutate, MultiQuiver, QuiverJson};
use cyclab_core::word2quiver::{build_q, build_q_underline};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "cyclab",
    version,
    about = "Cluster structures from preprojective algebras"
)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    rng: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coxeter-group words.
    Coxeter {
        #[arg(value_enum)]
        op: CoxeterOp,
        #[command(flatten)]
        gw: GraphWord,
        /// Cap on the number of reduced words listed.
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        /// Parabolic subset for `longest` (default: all vertices).
        #[arg(long)]
        parabolic: Option<Word>,
    },
    /// Quiver mutation and export.
    Quiver {
        #[arg(value_enum)]
        op: QuiverOp,
        #[arg(long)]
        quiver: PathBuf,
        /// Vertex to mutate at.
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The quiver of a reduced word.
    Word2quiver {
        #[command(flatten)]
        gw: GraphWord,
        /// Mark the last occurrence of each letter frozen.
        #[arg(long)]
        freeze_last: bool,
        /// Delete the last occurrence of each letter.
        #[arg(long)]
        underline: bool,
        /// Also write Graphviz DOT here.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Preprojective-algebra computations for a reduced word.
    Preproj {
        #[arg(value_enum)]
        op: PreprojOp,
        #[command(flatten)]
        gw: GraphWord,
        /// Truncation degree of the algebra (default: twice the word length plus one).
        #[arg(long = "N")]
        n: Option<usize>,
        /// Vertex label j for `module`: dump Λ_w e_j.
        #[arg(long)]
        idempotent: Option<u32>,
        /// 1-based family member for `module` and `exchange`.
        #[arg(long)]
        summand: Option<usize>,
        /// Write DOT instead of JSON (`endquiver`).
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeds: mutation, exploration, type, subclusters.
    Cluster {
        #[arg(value_enum)]
        op: ClusterOp,
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        at: Option<String>,
        #[arg(long, default_value_t = 5)]
        depth: usize,
        /// Cap on explored seeds.
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        /// Ambient seed for `subcheck`.
        #[arg(long)]
        ambient: Option<PathBuf>,
        /// Embedding `{sub vertex: ambient vertex}` for `subcheck` (default: identity).
        #[arg(long)]
        map: Option<PathBuf>,
        /// Write the exchange graph as DOT (`explore`).
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Loop-group minors on the unipotent cells.
    Loopgroup {
        #[command(subcommand)]
        op: LoopOp,
    },
    /// Run the verification suite.
    Verify {
        /// Suite config JSON (default values when omitted).
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Serve the JSON endpoints.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Args)]
struct GraphWord {
    /// Graph JSON file or built-in name (kronecker, triangle, aN, dN, cycleN).
    #[arg(long)]
    graph: String,
    /// Comma-separated word, e.g. 1,2,1.
    #[arg(long)]
    word: Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoxeterOp {
    Reduce,
    Length,
    Words,
    Longest,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverOp {
    Mutate,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum PreprojOp {
    Build,
    Ideal,
    Module,
    Hom,
    Ext,
    Endquiver,
    Exchange,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClusterOp {
    Mutate,
    Explore,
    Type,
    Subcheck,
}

#[derive(Subcommand)]
enum LoopOp {
    /// Check every identity at random cell points.
    Verify {
        #[arg(long, value_parser = parse_cell)]
        cell: Cell,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The initial seed of the cell's coordinate ring.
    Seed {
        #[arg(long, value_parser = parse_cell)]
        cell: Cell,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flag generating series of a module.
    Phi {
        /// Module JSON.
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        word: Word,
        #[arg(long, default_value = "kronecker")]
        graph: String,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    s.parse()
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("CYCLAB_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Coxeter {
            op,
            gw,
            cap,
            parabolic,
        } => coxeter(op, &gw, cap, parabolic),
        Command::Quiver {
            op,
            quiver,
            at,
            out,
        } => {
            let q = MultiQuiver::from_json(&read_json::<QuiverJson>(&quiver)?)?;
            match op {
                QuiverOp::Mutate => {
                    let at = at.ok_or_else(|| UsageError("quiver mutate needs --at".into()))?;
                    emit_json(&fz_mutate(&q, &at)?.to_json(), out.as_deref())?;
                }
                QuiverOp::Dot => emit_text(&q.to_dot(&stem(&quiver)), out.as_deref())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Word2quiver {
            gw,
            freeze_last,
            underline,
            dot,
            out,
        } => {
            let g = load_graph(&gw.graph)?;
            let q = if underline {
                build_q_underline(&g, &gw.word)?
            } else {
                build_q(&g, &gw.word, freeze_last)?
            };
            if let Some(p) = dot {
                emit_text(&q.to_dot(&format!("Q{}", gw.word)), Some(&p))?;
            }
            emit_json(&q.to_json(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Preproj {
            op,
            gw,
            n,
            idempotent,
            summand,
            dot,
            out,
        } => preproj(op, &gw, n, idempotent, summand, dot, out.as_deref()),
        Command::Cluster {
            op,
            seed,
            at,
            depth,
            cap,
            ambient,
            map,
            dot,
            out,
        } => {
            let s = Seed::from_json(&read_json::<SeedJson>(&seed)?)?;
            let out = out.as_deref();
            match op {
                ClusterOp::Mutate => {
                    let at = at.ok_or_else(|| UsageError("cluster mutate needs --at".into()))?;
                    emit_json(&seed_mutate(&s, &at)?.to_json(), out)?;
                }
                ClusterOp::Explore => {
                    let g = explore(&s, depth, cap)?;
                    if dot {
                        emit_text(&g.to_dot(&stem(&seed)), out)?;
                    } else {
                        emit_json(&ExploreSummary::new(&g), out)?;
                    }
                }
                ClusterOp::Type => emit_json(&classify_type(&s, depth, cap)?, out)?,
                ClusterOp::Subcheck => {
                    let amb =
                        ambient.ok_or_else(|| UsageError("subcheck needs --ambient".into()))?;
                    let amb = Seed::from_json(&read_json::<SeedJson>(&amb)?)?;
                    let emb: BTreeMap<String, String> = match map {
                        Some(p) => read_json(&p)?,
                        None => s
                            .quiver
                            .ids()
                            .iter()
                            .map(|i| (i.clone(), i.clone()))
                            .collect(),
                    };
                    let report = check_subcluster(&s, &amb, &emb);
                    emit_json(&report, out)?;
                    if !report.holds() {
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Loopgroup { op } => loopgroup(op, cli.rng),
        Command::Verify { config, out } => {
            let mut cfg: SuiteConfig = match config {
                Some(p) => read_json(&p)?,
                None => SuiteConfig::default(),
            };
            if cli.rng != 42 {
                cfg.rng = cli.rng;
            }
            let report = run_suite(&cfg);
            for c in &report.criteria {
                eprintln!("{}", c.summary_line());
            }
            for w in &report.words {
                eprintln!(
                    "word {} on {}: {:?} ({})",
                    w.word, w.graph, w.status, w.detail
                );
            }
            emit_json(&report, out.as_deref())?;
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Serve { port } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(cyclab::server::serve(port))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn stem(p: &Path) -> String {
    p.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "cyclab".into())
}

#[derive(Serialize)]
struct CoxeterOutput {
    word: Word,
    reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_word: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_words: Option<Vec<Word>>,
}

fn coxeter(
    op: CoxeterOp,
    gw: &GraphWord,
    cap: usize,
    parabolic: Option<Word>,
) -> anyhow::Result<ExitCode> {
    let g = load_graph(&gw.graph)?;
    let w = &gw.word;
    let mut out = CoxeterOutput {
        word: w.clone(),
        reduced: is_reduced(&g, w)?,
        length: None,
        reduced_word: None,
        reduced_words: None,
    };
    match op {
        CoxeterOp::Reduce => out.reduced_word = Some(reduced_word_of(&g, &canonical_form(&g, w)?)),
        CoxeterOp::Length => out.length = Some(length(&g, w)?),
        CoxeterOp::Words => {
            let rw = reduced_word_of(&g, &canonical_form(&g, w)?);
            out.reduced_words = Some(reduced_words(&g, &rw, cap)?.into_iter().collect());
        }
        CoxeterOp::Longest => {
            let sub = parabolic
                .map(|p| p.letters().to_vec())
                .unwrap_or_else(|| g.labels().to_vec());
            let w0 = longest_element(&g, &sub)?;
            out.length = Some(w0.len());
            out.reduced_word = Some(w0);
        }
    }
    emit_json(&out, None)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct IdealEntry {
    k: usize,
    prefix: Word,
    /// Dimension of the ideal in each degree below the truncation.
    dims: Vec<usize>,
    /// `dim Λ/T_k` within the truncation.
    codim: usize,
}

#[derive(Serialize)]
struct ExtOutput {
    word: Word,
    /// `ext[a][b] = dim Ext¹(M_a, M_b)` over the standard family.
    ext: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct HomOutput {
    word: Word,
    /// `hom[k-1][m-1] = dim Hom(Λ_k, Λ_m)` computed directly.
    hom: Vec<Vec<usize>>,
    /// The same from the ideal formula `dim T_{k+1,m}/T_m`.
    formula: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ExchangeOutput {
    summand: usize,
    replacement: ModuleJson,
    /// Family members (1-based) in the middle term of `0 → M* → E → M → 0`.
    middle: Vec<usize>,
    /// Family members in the middle term of `0 → M → E' → M* → 0`.
    middle_back: Vec<usize>,
}

#[derive(Serialize)]
struct AlgebraOutput {
    graph: Vec<u32>,
    truncation: usize,
    dims: Vec<usize>,
    total_dim: usize,
}

fn preproj(
    op: PreprojOp,
    gw: &GraphWord,
    n: Option<usize>,
    idempotent: Option<u32>,
    summand: Option<usize>,
    dot: bool,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let g = load_graph(&gw.graph)?;
    let w = &gw.word;
    let alg = GradedAlgebra::build(&g, n.unwrap_or(2 * w.len() + 1));
    let family_member = |fam: &[ModuleRep]| -> anyhow::Result<usize> {
        let k = summand.ok_or_else(|| UsageError("--summand is required".into()))?;
        if k == 0 || k > fam.len() {
            return Err(UsageError(format!("--summand must be in 1..={}", fam.len())).into());
        }
        Ok(k - 1)
    };
    match op {
        PreprojOp::Build => emit_json(
            &AlgebraOutput {
                graph: g.labels().to_vec(),
                truncation: alg.truncation(),
                dims: alg.dims(),
                total_dim: alg.total_dim(),
            },
            out,
        )?,
        PreprojOp::Ideal => {
            let chain = ideal_for_word(&alg, w)?;
            let entries: Vec<IdealEntry> = chain
                .iter()
                .enumerate()
                .map(|(k, t)| IdealEntry {
                    k,
                    prefix: w.prefix(k),
                    dims: t.dims(),
                    codim: t.codim(),
                })
                .collect();
            emit_json(&entries, out)?;
        }
        PreprojOp::Module => {
            let m = match summand {
                Some(_) => {
                    let fam = standard_family(&alg, w)?;
                    fam.modules[family_member(&fam.modules)?].clone()
                }
                None => {
                    let t = ideal_for_word(&alg, w)?.pop().expect("chain is nonempty");
                    quotient_module(&alg, &t, idempotent)?
                }
            };
            emit_json(&m.to_json(), out)?;
        }
        PreprojOp::Hom => {
            let chain = ideal_for_word(&alg, w)?;
            let mods: Vec<ModuleRep> = chain[1..]
                .iter()
                .map(|t| quotient_module(&alg, t, None))
                .collect::<Result<_, _>>()?;
            let l = w.len();
            let hom_dims = (0..l)
                .map(|a| (0..l).map(|b| hom(&mods[a], &mods[b]).dim()).collect())
                .collect();
            let formula = (1..=l)
                .map(|k| {
                    (1..=l)
                        .map(|m| hom_formula(&alg, w, k, m).map(|f| f.total))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            emit_json(
                &HomOutput {
                    word: w.clone(),
                    hom: hom_dims,
                    formula,
                },
                out,
            )?;
        }
        PreprojOp::Ext => {
            let fam = standard_family(&alg, w)?;
            let ext = fam
                .modules
                .iter()
                .map(|x| {
                    fam.modules
                        .iter()
                        .map(|y| ext1(&alg, x, y))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            emit_json(
                &ExtOutput {
                    word: w.clone(),
                    ext,
                },
                out,
            )?;
        }
        PreprojOp::Endquiver => {
            let fam = standard_family(&alg, w)?;
            let mut q = end_quiver(&fam.modules)?;
            mark_frozen(&mut q, &fam.projective);
            if dot {
                emit_text(&q.to_dot(&format!("End{w}")), out)?;
            } else {
                emit_json(&q.to_json(), out)?;
            }
        }
        PreprojOp::Exchange => {
            let fam = standard_family(&alg, w)?;
            let k = family_member(&fam.modules)?;
            let ex = exchange_summand(&fam.modules, k, &fam.projective)?;
            let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect();
            emit_json(
                &ExchangeOutput {
                    summand: k + 1,
                    replacement: ex.replacement.to_json(),
                    middle: one_based(&ex.forward.middle_summands),
                    middle_back: one_based(&ex.backward.middle_summands),
                },
                out,
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ExploreSummary {
    seeds: usize,
    complete: bool,
    is_path: bool,
    depth: Vec<usize>,
    edges: Vec<(usize, usize, String)>,
    cluster_variables: Vec<cyclab_core::foundation::LaurentPoly>,
}

impl ExploreSummary {
    fn new(g: &cyclab_core::cluster::ExchangeGraph) -> Self {
        ExploreSummary {
            seeds: g.nodes.len(),
            complete: g.complete,
            is_path: g.is_path(),
            depth: g.depth.clone(),
            edges: g.edges.iter().cloned().collect(),
            cluster_variables: g.cluster_variables().into_iter().collect(),
        }
    }
}

/// Per-identity outcome over all sampled points.
#[derive(Serialize)]
struct IdentityTally {
    #[serde(flatten)]
    check: Check,
    failures: usize,
}

#[derive(Serialize)]
struct LoopVerifyOutput {
    cell: String,
    samples: usize,
    rng: u64,
    symbolic_minors_hold: bool,
    /// `holds` is true when the identity held at every point.
    identities: Vec<IdentityTally>,
    jacobian_rank: Option<usize>,
    /// All non-printed identities held everywhere.
    passed: bool,
}

fn loopgroup(op: LoopOp, rng_seed: u64) -> anyhow::Result<ExitCode> {
    match op {
        LoopOp::Verify { cell, samples, out } => {
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            let mut tally: Vec<IdentityTally> = Vec::new();
            let mut rank = None;
            for _ in 0..samples {
                let p = sample_cell(cell, &mut rng);
                if cell == Cell::W4 && rank.is_none() {
                    rank = Some(jacobian_rank(&p));
                }
                for (i, c) in verify_point(&p).checks.into_iter().enumerate() {
                    if tally.len() <= i {
                        tally.push(IdentityTally {
                            check: Check {
                                holds: true,
                                ..c.clone()
                            },
                            failures: 0,
                        });
                    }
                    if !c.holds {
                        tally[i].check.holds = false;
                        tally[i].failures += 1;
                    }
                }
            }
            let symbolic = verify_symbolic().ok();
            let passed = symbolic
                && tally.iter().all(|t| t.check.holds || t.check.printed_form)
                && rank.is_none_or(|r| r == 4);
            let report = LoopVerifyOutput {
                cell: cell.to_string(),
                samples,
                rng: rng_seed,
                symbolic_minors_hold: symbolic,
                identities: tally,
                jacobian_rank: rank,
                passed,
            };
            emit_json(&report, out.as_deref())?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        LoopOp::Seed { cell, out } => {
            emit_json(&initial_seed(cell)?.to_json(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        LoopOp::Phi {
            module,
            word,
            graph,
            cap,
        } => {
            let g = load_graph(&graph)?;
            let m = ModuleRep::from_json(&read_json::<ModuleJson>(&module)?, &g)?;
            if word.is_empty() {
                bail!(UsageError("--word must be nonempty".into()));
            }
            let phi = phi_series(&m, &word, cap, &DEFAULT_PRIMES).context("flag series")?;
            println!(
                "{}",
                serde_json::to_string_pretty(&phi).map_err(|e| anyhow!(e))?
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
