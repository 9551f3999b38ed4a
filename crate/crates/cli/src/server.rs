//! HTTP/JSON service for interactive games against each other or the engine.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use geodex::game::{AnalysisReport, SearchConfig, DEFAULT_BUDGET};
use geodex::{GameError, GameSolver, Geodesics, Graph, PlayoutPolicy, VertexSet};
use serde::{Deserialize, Serialize};
use serde_json::json;
use uuid::Uuid;

use crate::source::FamilySpec;

#[derive(Clone, Copy, Debug)]
pub struct ServeConfig {
    /// Idle time after which a session is dropped.
    pub ttl: Duration,
    /// Wall-clock limit for one engine computation.
    pub engine_timeout: Duration,
    /// State-expansion cap for each session's solver.
    pub budget: u64,
}

impl Default for ServeConfig {
    fn default() -> Self {
        ServeConfig { ttl: Duration::from_secs(3600), engine_timeout: Duration::from_secs(10), budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    TwoHuman,
    VsEngine,
}

struct Session {
    id: Uuid,
    solver: Arc<GameSolver>,
    mode: Mode,
    /// Player (1 or 2) the engine plays in `VsEngine` mode.
    engine_player: u8,
    history: Vec<usize>,
}

impl Session {
    fn selected(&self) -> VertexSet {
        self.history.iter().copied().collect()
    }

    fn to_move(&self) -> u8 {
        1 + (self.history.len() % 2) as u8
    }

    fn state(&self, engine_reply: Option<usize>) -> GameState {
        let geo = self.solver.geodesics();
        let g = geo.graph();
        let selected = self.selected();
        let closure = geo.closure(selected);
        let legal = g.vertices() - closure;
        let terminal = legal.is_empty();
        GameState {
            id: self.id.to_string(),
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            selected: selected.to_vec(),
            covered: (closure - selected).to_vec(),
            legal: legal.to_vec(),
            to_move: self.to_move(),
            terminal,
            winner: (terminal && !self.history.is_empty()).then(|| 2 - (self.history.len() % 2) as u8),
            mode: self.mode,
            engine_player: (self.mode == Mode::VsEngine).then_some(self.engine_player),
            history: self.history.clone(),
            engine_reply,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameState {
    pub id: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub selected: Vec<usize>,
    /// Closure of the selected set minus the selected set.
    pub covered: Vec<usize>,
    pub legal: Vec<usize>,
    /// Player to move, 1 or 2.
    pub to_move: u8,
    pub terminal: bool,
    /// The player who made the last move, once the game is over.
    pub winner: Option<u8>,
    pub mode: Mode,
    pub engine_player: Option<u8>,
    pub history: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine_reply: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateGame {
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    edge_list: Option<String>,
    #[serde(default)]
    family: Option<FamilySpec>,
    #[serde(default)]
    mode: Mode,
    #[serde(default)]
    engine_first: bool,
}

impl CreateGame {
    fn graph(&self) -> Result<Graph, ApiError> {
        let invalid = |e: &dyn std::fmt::Display| ApiError::unprocessable(e.to_string());
        match (&self.edges, &self.edge_list, &self.family) {
            (Some(edges), None, None) => {
                let n = self.n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
                Graph::from_edges(n, edges.iter().copied()).map_err(|e| invalid(&e))
            }
            (None, Some(text), None) if self.n.is_none() => geodex::parse_graph(text).map_err(|e| invalid(&e)),
            (None, None, Some(spec)) if self.n.is_none() => spec.build().map_err(|e| invalid(&e)),
            _ => Err(ApiError::unprocessable("give exactly one of edges, edge_list or family")),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveRequest {
    vertex: usize,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError { status, message: message.into() }
    }

    fn unprocessable(message: impl Into<String>) -> Self {
        Self::new(StatusCode::UNPROCESSABLE_ENTITY, message)
    }

    fn not_found() -> Self {
        Self::new(StatusCode::NOT_FOUND, "unknown game")
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

type Entry = (Instant, Arc<tokio::sync::Mutex<Session>>);

#[derive(Clone)]
pub struct AppState {
    sessions: Arc<Mutex<HashMap<Uuid, Entry>>>,
    config: ServeConfig,
}

impl AppState {
    pub fn new(config: ServeConfig) -> Self {
        AppState { sessions: Arc::default(), config }
    }

    pub fn session_count(&self) -> usize {
        self.sessions.lock().map(|m| m.len()).unwrap_or(0)
    }

    fn lookup(&self, id: &str) -> Result<Arc<tokio::sync::Mutex<Session>>, ApiError> {
        let id = Uuid::parse_str(id).map_err(|_| ApiError::not_found())?;
        let mut sessions = self.sessions.lock().map_err(|_| poisoned())?;
        let now = Instant::now();
        sessions.retain(|_, (seen, _)| now.duration_since(*seen) <= self.config.ttl);
        let (seen, session) = sessions.get_mut(&id).ok_or_else(ApiError::not_found)?;
        *seen = now;
        Ok(session.clone())
    }

    /// Runs a solver call off the async runtime under the configured time limit.
    async fn compute<T, F>(&self, f: F) -> Result<T, ApiError>
    where
        T: Send + 'static,
        F: FnOnce() -> Result<T, GameError> + Send + 'static,
    {
        let limit = self.config.engine_timeout;
        match tokio::time::timeout(limit, tokio::task::spawn_blocking(f)).await {
            Err(_) => Err(ApiError::new(StatusCode::SERVICE_UNAVAILABLE, format!("engine exceeded {limit:?}"))),
            Ok(Err(join)) => Err(ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, join.to_string())),
            Ok(Ok(Err(e @ GameError::BudgetExceeded { .. }))) => {
                Err(ApiError::new(StatusCode::SERVICE_UNAVAILABLE, e.to_string()))
            }
            Ok(Ok(Err(e))) => Err(ApiError::new(StatusCode::CONFLICT, e.to_string())),
            Ok(Ok(Ok(v))) => Ok(v),
        }
    }

    async fn engine_move(&self, solver: &Arc<GameSolver>, selected: VertexSet) -> Result<Option<usize>, ApiError> {
        let solver = solver.clone();
        self.compute(move || solver.best_move(selected, PlayoutPolicy::Optimal)).await
    }
}

fn poisoned() -> ApiError {
    ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "session table poisoned")
}

fn parse_body<T: serde::de::DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::unprocessable(e.to_string()))
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/games", post(create_game))
        .route("/games/{id}", get(get_game).delete(delete_game))
        .route("/games/{id}/moves", post(post_move))
        .route("/games/{id}/analysis", get(get_analysis))
        .with_state(state)
}

async fn create_game(State(app): State<AppState>, body: Bytes) -> Result<(StatusCode, Json<GameState>), ApiError> {
    let req: CreateGame = parse_body(&body)?;
    let graph = req.graph()?;
    let config = SearchConfig { budget: app.config.budget, ..SearchConfig::default() };
    let solver = Arc::new(GameSolver::with_config(Arc::new(Geodesics::new(graph)), config));
    let engine_player = if req.engine_first { 1 } else { 2 };
    let mut session = Session { id: Uuid::new_v4(), solver, mode: req.mode, engine_player, history: Vec::new() };
    let mut reply = None;
    if req.mode == Mode::VsEngine && req.engine_first {
        reply = app.engine_move(&session.solver, VertexSet::EMPTY).await?;
        session.history.extend(reply);
    }
    let state = session.state(reply);
    let id = session.id;
    let entry = (Instant::now(), Arc::new(tokio::sync::Mutex::new(session)));
    app.sessions.lock().map_err(|_| poisoned())?.insert(id, entry);
    Ok((StatusCode::CREATED, Json(state)))
}

async fn get_game(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<GameState>, ApiError> {
    let session = app.lookup(&id)?;
    let session = session.lock().await;
    Ok(Json(session.state(None)))
}

async fn delete_game(State(app): State<AppState>, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    let key = Uuid::parse_str(&id).map_err(|_| ApiError::not_found())?;
    let removed = app.sessions.lock().map_err(|_| poisoned())?.remove(&key);
    removed.map(|_| StatusCode::NO_CONTENT).ok_or_else(ApiError::not_found)
}

async fn post_move(
    State(app): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<GameState>, ApiError> {
    let session = app.lookup(&id)?;
    let req: MoveRequest = parse_body(&body)?;
    let mut session = session.lock().await;
    let n = session.solver.graph().vertex_count();
    if req.vertex >= n {
        return Err(ApiError::unprocessable(format!("vertex {} is not in the graph (n = {n})", req.vertex)));
    }
    if session.mode == Mode::VsEngine && session.to_move() == session.engine_player {
        return Err(ApiError::new(StatusCode::CONFLICT, "it is the engine's turn"));
    }
    let selected = session.selected();
    if !session.solver.legal_moves(selected).contains(req.vertex) {
        return Err(ApiError::new(StatusCode::CONFLICT, format!("vertex {} is not a legal move", req.vertex)));
    }
    let after = selected.with(req.vertex);
    let reply = match session.mode {
        Mode::VsEngine => app.engine_move(&session.solver, after).await?,
        Mode::TwoHuman => None,
    };
    session.history.push(req.vertex);
    session.history.extend(reply);
    Ok(Json(session.state(reply)))
}

async fn get_analysis(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<AnalysisReport>, ApiError> {
    let session = app.lookup(&id)?;
    let (solver, selected) = {
        let session = session.lock().await;
        (session.solver.clone(), session.selected())
    };
    let report = app.compute(move || solver.analyze(selected)).await?;
    Ok(Json(report))
}

/// Binds `addr` and serves until the process is stopped.
pub async fn serve(addr: std::net::SocketAddr, config: ServeConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("geodex listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(AppState::new(config))).await
}
