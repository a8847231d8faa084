use thiserror::Error;

use crate::routing::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is not {}", if *.directed { "strongly connected" } else { "connected" })]
    DisconnectedGraph { directed: bool },

    #[error("malformed edge ({u}, {v}): {reason}")]
    MalformedEdge { u: usize, v: usize, reason: String },

    #[error("cannot combine a directed graph with an undirected one")]
    MixedDirectedness,

    #[error("order {n} is above the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("invalid routing ({} violation(s)); first: {}", .0.len(), .0.first().map(|v| v.to_string()).unwrap_or_default())]
    InvalidRouting(Vec<Violation>),

    #[error(
        "distance row sums differ ({min}..{max}); the vertex-transitive formula does not apply"
    )]
    NotRowRegular { min: u64, max: u64 },

    #[error("bad parameters for family {family}: {reason}")]
    BadParams { family: String, reason: String },

    #[error("no closed-form claim is catalogued for family {0}")]
    NoClaim(String),

    #[error("no catalogued theorem applies to n={n}, {constraint}")]
    OutOfCatalog { n: usize, constraint: String },

    #[error("instance needs {resources} resources; the exact solver supports at most {max}")]
    TooLarge { resources: usize, max: usize },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
