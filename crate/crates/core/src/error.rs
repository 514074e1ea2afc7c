use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid scenario: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),

    #[error("malformed strategy profile: {0}")]
    Profile(String),

    #[error("allocation infeasible: total {total} exceeds summed caps {capacity}")]
    Infeasible { total: f64, capacity: f64 },

    #[error("strategy space too large: {players} players (limit {limit})")]
    TooManyPlayers { players: usize, limit: usize },

    #[error("invalid preference scenario: {0}")]
    Preferences(String),
}
