//! Vertex and edge forwarding indices: analytic lower bounds, a local-search
//! heuristic, and an exact branch-and-bound search.

mod analytic;
mod candidates;
mod cuts;
mod exact;
mod heuristic;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::routing::Routing;

pub use analytic::{lower_bound, lower_bound_a, lower_bound_b, transitive_formula, RationalBound};
pub use cuts::{cut_bound_edge, separator_bound_vertex};
pub use exact::exact_index;
pub use heuristic::{heuristic_index, HeuristicConfig};

/// Which load is minimized: transit vertices or traversed edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Vertex,
    Edge,
}

/// Whether routings are restricted to shortest paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Minimal,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    UpperBound,
    LowerBoundOnly,
}

impl Objective {
    /// Number of load counters: vertices or edges (arcs for digraphs).
    pub fn resource_count(self, g: &Graph) -> usize {
        match self {
            Objective::Vertex => g.n(),
            Objective::Edge => g.edge_count(),
        }
    }
}

macro_rules! text_enum {
    ($ty:ty { $($variant:ident => $text:literal),+ $(,)? }) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(Self::$variant => $text),+ })
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($text => Ok(Self::$variant),)+
                    _ => Err(format!("expected one of: {}", [$($text),+].join(", "))),
                }
            }
        }
    };
}

text_enum!(Objective { Vertex => "vertex", Edge => "edge" });
text_enum!(Mode { Minimal => "minimal", General => "general" });
text_enum!(Status { Optimal => "optimal", UpperBound => "upper-bound", LowerBoundOnly => "lower-bound-only" });

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Longest candidate path in general mode; `None` means `n - 1`.
    pub max_path_length: Option<usize>,
    pub max_nodes: u64,
    pub time_budget: Option<Duration>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_path_length: None,
            max_nodes: 500_000_000,
            time_budget: Some(Duration::from_secs(300)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveResult {
    pub objective: Objective,
    pub mode: Mode,
    pub value: u64,
    pub status: Status,
    pub lower_bound: u64,
    pub nodes: u64,
    #[serde(skip)]
    pub certificate: Option<Routing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_file: Option<String>,
}

impl SolveResult {
    /// Result carrying only the analytic lower bound.
    pub fn bound_only(g: &Graph, objective: Objective, mode: Mode) -> Self {
        let lb = lower_bound(g, objective);
        SolveResult {
            objective,
            mode,
            value: lb,
            status: Status::LowerBoundOnly,
            lower_bound: lb,
            nodes: 0,
            certificate: None,
            certificate_file: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}

/// Resources a path loads: interior vertices or traversed edge ids.
pub(crate) fn path_resources<'a>(
    g: &'a Graph,
    objective: Objective,
    path: &'a [usize],
) -> Box<dyn Iterator<Item = usize> + 'a> {
    match objective {
        Objective::Vertex => Box::new(path[1..path.len() - 1].iter().copied()),
        Objective::Edge => Box::new(
            path.windows(2)
                .map(move |w| g.edge_id(w[0], w[1]).expect("path follows arcs")),
        ),
    }
}
