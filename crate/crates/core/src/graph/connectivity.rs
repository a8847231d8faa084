use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// Vertex connectivity κ and edge connectivity λ. For digraphs these are the
/// strong variants (every ordered pair must stay connected).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub kappa: usize,
    pub lambda: usize,
}

const INF: u32 = u32::MAX / 2;

/// Residual network with paired arcs (`id ^ 1` is the reverse).
struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize, cap: u32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Unit augmenting paths until `limit` units flow or no path remains.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && v != s && parent[v] == usize::MAX {
                        parent[v] = e;
                        if v == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !found {
                break;
            }
            let mut v = t;
            while v != s {
                let e = parent[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally disjoint s→t paths (s, t non-adjacent), capped at `limit`.
fn vertex_disjoint_paths(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNet::new(2 * g.n());
    for v in 0..g.n() {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.arcs() {
        net.add(2 * u + 1, 2 * v, INF);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

fn arc_disjoint_paths(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNet::new(g.n());
    for (u, v) in g.arcs() {
        net.add(u, v, 1);
    }
    net.max_flow(s, t, limit)
}

pub fn connectivity(g: &Graph) -> ConnectivityReport {
    let n = g.n();
    if n == 1 {
        return ConnectivityReport {
            kappa: 0,
            lambda: 0,
        };
    }
    let delta = g.min_degree();

    let mut lambda = delta;
    for t in 1..n {
        lambda = lambda.min(arc_disjoint_paths(g, 0, t, lambda));
        if g.is_directed() {
            lambda = lambda.min(arc_disjoint_paths(g, t, 0, lambda));
        }
    }

    let kappa = if g.is_complete() {
        n - 1
    } else {
        // Some vertex among the first κ+1 lies outside a minimum separator.
        let mut kappa = lambda;
        let mut i = 0;
        while i <= kappa && i < n {
            for j in 0..n {
                if j == i {
                    continue;
                }
                if !g.has_arc(i, j) {
                    kappa = kappa.min(vertex_disjoint_paths(g, i, j, kappa));
                }
                if g.is_directed() && !g.has_arc(j, i) {
                    kappa = kappa.min(vertex_disjoint_paths(g, j, i, kappa));
                }
            }
            i += 1;
        }
        kappa
    };
    ConnectivityReport { kappa, lambda }
}
