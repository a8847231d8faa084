//! Routings: one explicit simple path per ordered vertex pair.

mod load;
mod shortest;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

pub use load::{load_profile, LoadProfile};
pub use shortest::{shortest_path_routing, TieRule};

/// Paths for ordered pairs `(x, y)`, `x != y`, stored densely at `x * n + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routing {
    n: usize,
    paths: Vec<Option<Vec<usize>>>,
}

impl Routing {
    /// A routing with no paths yet.
    pub fn empty(n: usize) -> Self {
        Routing {
            n,
            paths: vec![None; n * n],
        }
    }

    pub fn from_fn(n: usize, mut path: impl FnMut(usize, usize) -> Vec<usize>) -> Self {
        let mut r = Self::empty(n);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    r.set(x, y, path(x, y));
                }
            }
        }
        r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, x: usize, y: usize, path: Vec<usize>) {
        self.paths[x * self.n + y] = Some(path);
    }

    pub fn path(&self, x: usize, y: usize) -> Option<&[usize]> {
        self.paths.get(x * self.n + y)?.as_deref()
    }

    /// `(x, y, path)` for every stored pair in `(x, y)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &[usize])> + '_ {
        self.paths
            .iter()
            .enumerate()
            .filter_map(move |(i, p)| p.as_deref().map(|p| (i / self.n, i % self.n, p)))
    }

    pub fn validate(&self, g: &Graph) -> ValidationReport {
        validate_routing(g, self)
    }

    pub fn to_file(&self, graph: &Graph) -> RoutingFile {
        RoutingFile {
            graph: graph.identifier(),
            pairs: self
                .iter()
                .map(|(src, dst, path)| PairPath {
                    src,
                    dst,
                    path: path.to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self, graph: &Graph) -> String {
        serde_json::to_string_pretty(&self.to_file(graph)).expect("routing serializes")
    }

    /// Reads a routing for a graph of order `n`. Pairs outside `0..n` are
    /// rejected; completeness is left to [`validate_routing`].
    pub fn from_json(text: &str, n: usize) -> Result<Self> {
        let file: RoutingFile = serde_json::from_str(text)?;
        let mut r = Routing::empty(n);
        let mut bad = Vec::new();
        for p in file.pairs {
            if p.src >= n || p.dst >= n || p.src == p.dst {
                bad.push(Violation::BadPair {
                    src: p.src,
                    dst: p.dst,
                });
            } else {
                r.set(p.src, p.dst, p.path);
            }
        }
        if bad.is_empty() {
            Ok(r)
        } else {
            Err(Error::InvalidRouting(bad))
        }
    }

    pub fn load(path: impl AsRef<Path>, n: usize) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?, n)
    }

    pub fn save(&self, graph: &Graph, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json(graph) + "\n")?;
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RoutingFile {
    pub graph: String,
    pub pairs: Vec<PairPath>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairPath {
    pub src: usize,
    pub dst: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Missing {
        src: usize,
        dst: usize,
    },
    BadPair {
        src: usize,
        dst: usize,
    },
    WrongEndpoints {
        src: usize,
        dst: usize,
    },
    NotAnArc {
        src: usize,
        dst: usize,
        from: usize,
        to: usize,
    },
    Repeated {
        src: usize,
        dst: usize,
        vertex: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Missing { src, dst } => write!(f, "no path for pair ({src}, {dst})"),
            Violation::BadPair { src, dst } => {
                write!(f, "pair ({src}, {dst}) is not a valid ordered pair")
            }
            Violation::WrongEndpoints { src, dst } => {
                write!(
                    f,
                    "path for ({src}, {dst}) does not run from {src} to {dst}"
                )
            }
            Violation::NotAnArc { src, dst, from, to } => {
                write!(
                    f,
                    "path for ({src}, {dst}) steps {from}->{to}, which is not an arc"
                )
            }
            Violation::Repeated { src, dst, vertex } => {
                write!(f, "path for ({src}, {dst}) is not simple: repeats {vertex}")
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidRouting(self.violations))
        }
    }
}

/// Itemized completeness, arc and simplicity checks.
pub fn validate_routing(g: &Graph, r: &Routing) -> ValidationReport {
    let mut violations = Vec::new();
    if r.n() != g.n() {
        violations.push(Violation::BadPair {
            src: r.n(),
            dst: g.n(),
        });
        return ValidationReport { violations };
    }
    let mut stamp = vec![usize::MAX; g.n()];
    for x in 0..g.n() {
        for y in 0..g.n() {
            if x == y {
                continue;
            }
            let Some(path) = r.path(x, y) else {
                violations.push(Violation::Missing { src: x, dst: y });
                continue;
            };
            if path.first() != Some(&x) || path.last() != Some(&y) || path.len() < 2 {
                violations.push(Violation::WrongEndpoints { src: x, dst: y });
                continue;
            }
            let pair_id = x * g.n() + y;
            for (i, &v) in path.iter().enumerate() {
                if v >= g.n() {
                    violations.push(Violation::WrongEndpoints { src: x, dst: y });
                    break;
                }
                if stamp[v] == pair_id {
                    violations.push(Violation::Repeated {
                        src: x,
                        dst: y,
                        vertex: v,
                    });
                    break;
                }
                stamp[v] = pair_id;
                if i + 1 < path.len() && !g.has_arc(v, path[i + 1]) {
                    violations.push(Violation::NotAnArc {
                        src: x,
                        dst: y,
                        from: v,
                        to: path[i + 1],
                    });
                    break;
                }
            }
        }
    }
    ValidationReport { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoutingClass {
    pub minimal: bool,
    pub symmetric: bool,
    pub consistent: bool,
}

pub fn classify_routing(g: &Graph, r: &Routing, dm: &DistanceMatrix) -> Result<RoutingClass> {
    validate_routing(g, r).into_result()?;
    let minimal = r
        .iter()
        .all(|(x, y, p)| p.len() - 1 == dm.get(x, y) as usize);
    let symmetric = r.iter().all(|(x, y, p)| {
        let back = r.path(y, x).expect("validated");
        back.len() == p.len() && back.iter().rev().eq(p.iter())
    });
    // R(x,y) must equal R(x,z)·R(z,y) for every interior z; checking the
    // maximal proper prefix and suffix of every path is equivalent.
    let consistent = r.iter().all(|(x, y, p)| {
        let k = p.len();
        if k <= 2 {
            return true;
        }
        let last_interior = p[k - 2];
        let first_interior = p[1];
        r.path(x, last_interior) == Some(&p[..k - 1]) && r.path(first_interior, y) == Some(&p[1..])
    });
    Ok(RoutingClass {
        minimal,
        symmetric,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distances;

    fn k(n: usize) -> Graph {
        let e: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::undirected(n, &e).unwrap()
    }

    #[test]
    fn direct_routing_on_complete_graph() {
        let g = k(3);
        let r = Routing::from_fn(3, |x, y| vec![x, y]);
        assert!(r.validate(&g).is_valid());
        let class = classify_routing(&g, &r, &distances(&g)).unwrap();
        assert_eq!(
            class,
            RoutingClass {
                minimal: true,
                symmetric: true,
                consistent: true
            }
        );
    }

    #[test]
    fn missing_pair_is_named() {
        let g = k(3);
        let mut r = Routing::from_fn(3, |x, y| vec![x, y]);
        r.paths[2 * 3] = None;
        let report = r.validate(&g);
        assert_eq!(
            report.violations,
            vec![Violation::Missing { src: 2, dst: 0 }]
        );
    }

    #[test]
    fn non_simple_path() {
        let g = k(3);
        let mut r = Routing::from_fn(3, |x, y| vec![x, y]);
        r.set(0, 2, vec![0, 1, 0, 2]);
        let report = r.validate(&g);
        assert_eq!(
            report.violations,
            vec![Violation::Repeated {
                src: 0,
                dst: 2,
                vertex: 0
            }]
        );
        assert!(matches!(
            classify_routing(&g, &r, &distances(&g)),
            Err(Error::InvalidRouting(_))
        ));
    }

    #[test]
    fn not_an_arc() {
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let mut r = Routing::from_fn(3, |x, y| {
            if x.abs_diff(y) == 2 {
                vec![x, 1, y]
            } else {
                vec![x, y]
            }
        });
        assert!(r.validate(&g).is_valid());
        r.set(0, 2, vec![0, 2]);
        assert!(matches!(
            r.validate(&g).violations[..],
            [Violation::NotAnArc { from: 0, to: 2, .. }]
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = k(4);
        let r = Routing::from_fn(4, |x, y| vec![x, y]);
        let back = Routing::from_json(&r.to_json(&g), 4).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"graph": "x", "pairs": [{"src": 1, "dst": 1, "path": [1]}]}"#;
        assert!(Routing::from_json(bad, 4).is_err());
    }

    #[test]
    fn detour_is_not_minimal_or_symmetric() {
        let g = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let dm = distances(&g);
        let mut r = shortest_path_routing(&g, TieRule::LowestLabel);
        r.set(0, 1, vec![0, 3, 2, 1]);
        let class = classify_routing(&g, &r, &dm).unwrap();
        assert!(!class.minimal);
        assert!(!class.symmetric);
    }
}
