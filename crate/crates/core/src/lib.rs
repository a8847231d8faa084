//! Forwarding indices of graphs and digraphs: routings, load profiles,
//! exact and heuristic solvers, a catalog of bounds, and graph families.

pub mod bounds;
pub mod error;
pub mod families;
pub mod graph;
pub mod routing;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{distances, DistanceMatrix, Graph};
pub use routing::{load_profile, shortest_path_routing, LoadProfile, Routing, TieRule};
pub use solver::{
    exact_index, heuristic_index, Mode, Objective, SearchLimits, SolveResult, Status,
};
