//! Simple connected graphs and strongly connected digraphs on dense labels `0..n`.
//!
//! Undirected graphs keep both arcs of every edge in the adjacency lists so
//! traversal code is shared with digraphs, while [`Graph::edges`] lists each
//! edge once. Edge ids index into that list and are the resources used for
//! edge loads.

mod connectivity;
mod distance;
mod enumerate;
mod product;

use std::collections::VecDeque;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use connectivity::{connectivity, ConnectivityReport};
pub use distance::{distances, DistanceMatrix};
pub use enumerate::{
    canonical_form, connected_graphs, enumerate_connected_graphs, DegreeConstraint, Enumeration,
    EnumerationConfig,
};
pub use product::{cartesian_power, cartesian_product};

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    directed: bool,
    name: Option<String>,
    labels: Option<Vec<String>>,
    out_adj: Vec<Vec<usize>>,
    out_edge: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and builds a graph. Undirected input lists each edge once,
    /// in either orientation.
    pub fn new(n: usize, arcs: &[(usize, usize)], directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedEdge {
                u: 0,
                v: 0,
                reason: "graph has no vertices".into(),
            });
        }
        let mut seen = std::collections::HashSet::with_capacity(arcs.len());
        let mut edges = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::MalformedEdge {
                    u,
                    v,
                    reason: format!("label out of range 0..{n}"),
                });
            }
            if u == v {
                return Err(Error::MalformedEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            let key = if directed {
                (u, v)
            } else {
                (u.min(v), u.max(v))
            };
            if !seen.insert(key) {
                return Err(Error::MalformedEdge {
                    u,
                    v,
                    reason: "duplicate edge".into(),
                });
            }
            edges.push(key);
        }
        edges.sort_unstable();

        let mut out_pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut in_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            out_pairs[u].push((v, id));
            in_adj[v].push(u);
            if !directed {
                out_pairs[v].push((u, id));
                in_adj[u].push(v);
            }
        }
        let mut out_adj = Vec::with_capacity(n);
        let mut out_edge = Vec::with_capacity(n);
        for mut list in out_pairs {
            list.sort_unstable();
            out_adj.push(list.iter().map(|&(v, _)| v).collect());
            out_edge.push(list.iter().map(|&(_, e)| e).collect());
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }

        let g = Graph {
            n,
            directed,
            name: None,
            labels: None,
            out_adj,
            out_edge,
            in_adj,
            edges,
        };
        if !g.reaches_all(0, false) || (directed && !g.reaches_all(0, true)) {
            return Err(Error::DisconnectedGraph { directed });
        }
        Ok(g)
    }

    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges, false)
    }

    pub fn directed(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, arcs, true)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Attaches human-readable vertex labels. Labels are metadata only.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// ε: number of edges (undirected) or arcs (directed).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list indexed by edge id; undirected edges as `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, u: usize) -> &[usize] {
        &self.in_adj[u]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Id of the edge traversed when stepping from `u` to `v`.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let adj = self.out_adj.get(u)?;
        adj.binary_search(&v).ok().map(|i| self.out_edge[u][i])
    }

    /// Every arc, both orientations for undirected edges.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_adj[u].iter().map(move |&v| (u, v)))
    }

    /// Degree of `u`; for digraphs the smaller of in- and out-degree.
    pub fn degree(&self, u: usize) -> usize {
        if self.directed {
            self.out_adj[u].len().min(self.in_adj[u].len())
        } else {
            self.out_adj[u].len()
        }
    }

    /// Δ. For digraphs the largest in- or out-degree.
    pub fn max_degree(&self) -> usize {
        (0..self.n)
            .map(|u| self.out_adj[u].len().max(self.in_adj[u].len()))
            .max()
            .unwrap_or(0)
    }

    /// δ. For digraphs the smallest in- or out-degree.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.out_adj.iter().all(|a| a.len() == self.n - 1)
    }

    fn reaches_all(&self, start: usize, reverse: bool) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            let next = if reverse {
                &self.in_adj[u]
            } else {
                &self.out_adj[u]
            };
            for &v in next {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Stable identifier: the name when present, otherwise a content hash.
    pub fn identifier(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        let mut hasher = Sha256::new();
        hasher.update(format!("{}:{}:", self.n, self.directed));
        for &(u, v) in &self.edges {
            hasher.update(format!("{u}-{v};"));
        }
        let digest = hasher.finalize();
        format!("sha256:{}", hex::encode(&digest[..8]))
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            name: self.name.clone(),
            directed: self.directed,
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        file.into_graph()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

/// On-disk graph format. Undirected files list each edge once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub directed: bool,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph> {
        let arcs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = Graph::new(self.n, &arcs, self.directed)?;
        g.name = self.name;
        if let Some(labels) = self.labels {
            if labels.len() != g.n {
                return Err(Error::MalformedEdge {
                    u: 0,
                    v: 0,
                    reason: format!("{} labels for {} vertices", labels.len(), g.n),
                });
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }
}
