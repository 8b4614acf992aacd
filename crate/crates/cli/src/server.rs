//! Stateless HTTP JSON endpoints for the explorer front end.
//!
//! | method | path                  | body / query                          | response            |
//! |--------|-----------------------|---------------------------------------|---------------------|
//! | GET    | `/quiver/from-word`   | `word`, `graph`, `freeze_last`, `underline` | quiver JSON   |
//! | POST   | `/quiver/mutate`      | `{quiver, at}`                        | quiver JSON         |
//! | POST   | `/seed/mutate`        | `{seed, at}`                          | seed JSON           |
//! | POST   | `/seed/explore-step`  | `{seed}`                              | `{neighbours:[{at, relation, seed}]}` |
//! | GET    | `/loopgroup/seed`     | `cell=w3\|w4`                         | seed JSON           |
//!
//! Bodies are the same pretty JSON the CLI prints, so a response is
//! byte-identical to the matching CLI output. Failures answer 400 with
//! `{"error": <kind>, "message": <text>}`.

use std::collections::HashMap;

use axum::body::Bytes;
use axum::extract::Query;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use cyclab_core::cluster::{seed_mutate, ClusterError, Seed, SeedJson};
use cyclab_core::coxeter::{CoxeterError, Word};
use cyclab_core::loopgroup::{initial_seed, Cell, LoopError};
use cyclab_core::quiver::{fz_mutate, MultiQuiver, QuiverError, QuiverJson};
use cyclab_core::word2quiver::{build_q, build_q_underline, Word2QuiverError};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::graphs::named_graph;
use crate::io::to_pretty;

/// A 400 answer with a machine-readable kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub error: String,
    pub message: String,
}

impl ApiError {
    fn new(kind: &str, message: impl Into<String>) -> Self {
        ApiError {
            error: kind.to_string(),
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (
            StatusCode::BAD_REQUEST,
            [(header::CONTENT_TYPE, "application/json")],
            to_pretty(&self),
        )
            .into_response()
    }
}

fn quiver_kind(e: &QuiverError) -> &'static str {
    match e {
        QuiverError::UnknownVertex(_) => "UnknownVertex",
        QuiverError::DuplicateVertex(_) => "DuplicateVertex",
        QuiverError::LoopAtVertex(_) => "LoopAtVertex",
        QuiverError::TwoCycleAtVertex(..) => "TwoCycleAtVertex",
        QuiverError::FrozenVertex(_) => "FrozenVertex",
        QuiverError::NotMutable(_) => "NotMutable",
        QuiverError::IndexOutOfRange(_) => "IndexOutOfRange",
    }
}

fn coxeter_kind(e: &CoxeterError) -> &'static str {
    match e {
        CoxeterError::UnknownVertex(_) => "UnknownVertex",
        CoxeterError::NotReduced(_) => "NotReduced",
        CoxeterError::MalformedWord(_) => "MalformedWord",
        _ => "InvalidGraph",
    }
}

impl From<QuiverError> for ApiError {
    fn from(e: QuiverError) -> Self {
        ApiError::new(quiver_kind(&e), e.to_string())
    }
}

impl From<ClusterError> for ApiError {
    fn from(e: ClusterError) -> Self {
        let kind = match &e {
            ClusterError::LaurentViolation { .. } => "LaurentViolation",
            ClusterError::Quiver(q) => quiver_kind(q),
            ClusterError::Malformed(_) => "MalformedSeed",
        };
        ApiError::new(kind, e.to_string())
    }
}

impl From<Word2QuiverError> for ApiError {
    fn from(e: Word2QuiverError) -> Self {
        let kind = match &e {
            Word2QuiverError::NotReduced(_) => "NotReduced",
            Word2QuiverError::Coxeter(c) => coxeter_kind(c),
        };
        ApiError::new(kind, e.to_string())
    }
}

impl From<LoopError> for ApiError {
    fn from(e: LoopError) -> Self {
        ApiError::new("Internal", e.to_string())
    }
}

fn json_ok<T: Serialize>(value: &T) -> Response {
    (
        [(header::CONTENT_TYPE, "application/json")],
        to_pretty(value),
    )
        .into_response()
}

/// Parses a request body: syntax errors are `MalformedJson`, well-formed
/// JSON of the wrong shape is `InvalidRequest`.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| {
        let kind = if e.is_data() {
            "InvalidRequest"
        } else {
            "MalformedJson"
        };
        ApiError::new(kind, e.to_string())
    })
}

fn flag(q: &HashMap<String, String>, key: &str) -> Result<bool, ApiError> {
    match q.get(key).map(String::as_str) {
        None | Some("false") | Some("0") => Ok(false),
        Some("") | Some("true") | Some("1") => Ok(true),
        Some(other) => Err(ApiError::new(
            "InvalidRequest",
            format!("{key}={other} is not a boolean"),
        )),
    }
}

async fn quiver_from_word(Query(q): Query<HashMap<String, String>>) -> Result<Response, ApiError> {
    let graph_name = q.get("graph").map(String::as_str).unwrap_or("kronecker");
    let graph = named_graph(graph_name).ok_or_else(|| {
        ApiError::new("UnknownGraph", format!("no built-in graph {graph_name:?}"))
    })?;
    let word: Word = q
        .get("word")
        .ok_or_else(|| ApiError::new("InvalidRequest", "missing query parameter word"))?
        .parse()
        .map_err(|e: CoxeterError| ApiError::new(coxeter_kind(&e), e.to_string()))?;
    let quiver = if flag(&q, "underline")? {
        build_q_underline(&graph, &word)?
    } else {
        build_q(&graph, &word, flag(&q, "freeze_last")?)?
    };
    Ok(json_ok(&quiver.to_json()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverMutateRequest {
    quiver: QuiverJson,
    at: String,
}

async fn quiver_mutate(body: Bytes) -> Result<Response, ApiError> {
    let req: QuiverMutateRequest = parse_body(&body)?;
    let q = MultiQuiver::from_json(&req.quiver)?;
    Ok(json_ok(&fz_mutate(&q, &req.at)?.to_json()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SeedMutateRequest {
    seed: SeedJson,
    at: String,
}

async fn seed_mutate_handler(body: Bytes) -> Result<Response, ApiError> {
    let req: SeedMutateRequest = parse_body(&body)?;
    let s = Seed::from_json(&req.seed)?;
    Ok(json_ok(&seed_mutate(&s, &req.at)?.to_json()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExploreStepRequest {
    seed: SeedJson,
}

/// One mutation of the current seed.
#[derive(Serialize, Deserialize)]
pub struct Neighbour {
    pub at: String,
    /// `x_k · x_k′ = Π incoming + Π outgoing`, in vertex names.
    pub relation: String,
    pub seed: SeedJson,
}

#[derive(Serialize, Deserialize)]
pub struct ExploreStep {
    pub neighbours: Vec<Neighbour>,
}

/// The exchange relation at `k` written with vertex names.
pub fn exchange_relation(q: &MultiQuiver, k: &str) -> Result<String, QuiverError> {
    let ki = q
        .index_of(k)
        .ok_or_else(|| QuiverError::UnknownVertex(k.to_string()))?;
    let (mut incoming, mut outgoing) = (Vec::new(), Vec::new());
    for i in 0..q.n() {
        let b = q.net_idx(i, ki);
        let factor = |m: i64| {
            if m == 1 {
                q.id(i).to_string()
            } else {
                format!("{}^{m}", q.id(i))
            }
        };
        if b > 0 {
            incoming.push(factor(b));
        } else if b < 0 {
            outgoing.push(factor(-b));
        }
    }
    let product = |f: Vec<String>| {
        if f.is_empty() {
            "1".to_string()
        } else {
            f.join("·")
        }
    };
    Ok(format!(
        "{k}·{k}′ = {} + {}",
        product(incoming),
        product(outgoing)
    ))
}

async fn seed_explore_step(body: Bytes) -> Result<Response, ApiError> {
    let req: ExploreStepRequest = parse_body(&body)?;
    let s = Seed::from_json(&req.seed)?;
    let mut neighbours = Vec::new();
    for k in s.quiver.exchangeable_ids() {
        neighbours.push(Neighbour {
            relation: exchange_relation(&s.quiver, &k)?,
            seed: seed_mutate(&s, &k)?.to_json(),
            at: k,
        });
    }
    Ok(json_ok(&ExploreStep { neighbours }))
}

async fn loopgroup_seed(Query(q): Query<HashMap<String, String>>) -> Result<Response, ApiError> {
    let cell: Cell = q
        .get("cell")
        .ok_or_else(|| ApiError::new("InvalidRequest", "missing query parameter cell"))?
        .parse()
        .map_err(|e: String| ApiError::new("UnknownCell", e))?;
    Ok(json_ok(&initial_seed(cell)?.to_json()))
}

/// All endpoints.
pub fn router() -> Router {
    Router::new()
        .route("/quiver/from-word", get(quiver_from_word))
        .route("/quiver/mutate", post(quiver_mutate))
        .route("/seed/mutate", post(seed_mutate_handler))
        .route("/seed/explore-step", post(seed_explore_step))
        .route("/loopgroup/seed", get(loopgroup_seed))
}

/// Serves the endpoints on `127.0.0.1:port` until the process ends.
pub async fn serve(port: u16) -> anyhow::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    log::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router()).await?;
    Ok(())
}
