//! Local search: reroute pairs through the most loaded resource along
//! minimum-bottleneck paths while the sorted load vector improves.

use std::collections::{BTreeMap, VecDeque};

use super::{lower_bound, path_resources, Mode, Objective, SolveResult, Status};
use crate::graph::{distances, DistanceMatrix, Graph};
use crate::routing::{shortest_path_routing, Routing, TieRule};

#[derive(Debug, Clone, Copy)]
pub struct HeuristicConfig {
    pub mode: Mode,
    /// Accepted moves before giving up.
    pub iterations: usize,
    /// Tie rule of the starting shortest-path routing.
    pub tie: TieRule,
    /// Longest rerouted path; `None` means `n - 1`.
    pub max_path_length: Option<usize>,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            mode: Mode::General,
            iterations: 1000,
            tie: TieRule::LoadAware,
            max_path_length: None,
        }
    }
}

/// Always reports `Status::UpperBound` with the final routing attached.
pub fn heuristic_index(g: &Graph, objective: Objective, config: HeuristicConfig) -> SolveResult {
    let dm = distances(g);
    let n = g.n();
    let max_len = config.max_path_length.unwrap_or(n - 1).max(1);
    let start = shortest_path_routing(g, config.tie);
    let mut paths: Vec<Vec<usize>> = start.iter().map(|(_, _, p)| p.to_vec()).collect();
    let pairs: Vec<(usize, usize)> = start.iter().map(|(x, y, _)| (x, y)).collect();

    let mut load = vec![0u64; objective.resource_count(g)];
    for p in &paths {
        for r in path_resources(g, objective, p) {
            load[r] += 1;
        }
    }

    let mut search = Reroute {
        g,
        objective,
        dm: &dm,
        minimal: config.mode == Mode::Minimal,
        max_len,
    };
    let mut moves = 0;
    let mut nodes = 0u64;
    'improve: while moves < config.iterations {
        let peak = load.iter().copied().max().unwrap_or(0);
        if peak == 0 {
            break;
        }
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if !path_resources(g, objective, &paths[k]).any(|r| load[r] == peak) {
                continue;
            }
            nodes += 1;
            for r in path_resources(g, objective, &paths[k]) {
                load[r] -= 1;
            }
            let candidate = search.bottleneck_path(&load, x, y);
            let accept = match &candidate {
                Some(new) if *new != paths[k] => improves(
                    &load,
                    path_resources(g, objective, &paths[k]),
                    path_resources(g, objective, new),
                ),
                _ => false,
            };
            if accept {
                paths[k] = candidate.unwrap();
            }
            for r in path_resources(g, objective, &paths[k]) {
                load[r] += 1;
            }
            if accept {
                moves += 1;
                continue 'improve;
            }
        }
        break;
    }

    let mut routing = Routing::empty(n);
    for (&(x, y), p) in pairs.iter().zip(paths) {
        routing.set(x, y, p);
    }
    SolveResult {
        objective,
        mode: config.mode,
        value: load.iter().copied().max().unwrap_or(0),
        status: Status::UpperBound,
        lower_bound: lower_bound(g, objective),
        nodes,
        certificate: Some(routing),
        certificate_file: None,
    }
}

/// True when adding `new` instead of `old` on top of `base` makes the
/// descending-sorted load vector lexicographically smaller.
fn improves(
    base: &[u64],
    old: impl Iterator<Item = usize>,
    new: impl Iterator<Item = usize>,
) -> bool {
    let mut delta: BTreeMap<usize, i64> = BTreeMap::new();
    for r in old {
        *delta.entry(r).or_default() -= 1;
    }
    for r in new {
        *delta.entry(r).or_default() += 1;
    }
    // level -> (count with new path) - (count with old path)
    let mut levels: BTreeMap<u64, i64> = BTreeMap::new();
    for (r, d) in delta {
        if d == 0 {
            continue;
        }
        let with_new = (base[r] as i64 + d.max(0)) as u64;
        let with_old = (base[r] as i64 - d.min(0)) as u64;
        *levels.entry(with_new).or_default() += 1;
        *levels.entry(with_old).or_default() -= 1;
    }
    levels
        .iter()
        .rev()
        .find(|(_, &c)| c != 0)
        .is_some_and(|(_, &c)| c < 0)
}

struct Reroute<'a> {
    g: &'a Graph,
    objective: Objective,
    dm: &'a DistanceMatrix,
    minimal: bool,
    max_len: usize,
}

impl Reroute<'_> {
    /// Fewest-hop path among those whose largest resulting load is smallest.
    fn bottleneck_path(&mut self, load: &[u64], x: usize, y: usize) -> Option<Vec<usize>> {
        let mut levels: Vec<u64> = load.iter().map(|&l| l + 1).collect();
        levels.push(0);
        levels.sort_unstable();
        levels.dedup();
        let (mut lo, mut hi) = (0, levels.len() - 1);
        self.bfs(load, levels[hi], x, y)?;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.bfs(load, levels[mid], x, y).is_some() {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        self.bfs(load, levels[lo], x, y)
    }

    fn bfs(&self, load: &[u64], cap: u64, x: usize, y: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        let mut parent = vec![usize::MAX; n];
        let mut hops = vec![0usize; n];
        parent[x] = x;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            if hops[u] >= self.max_len {
                continue;
            }
            for &v in self.g.out_neighbors(u) {
                if parent[v] != usize::MAX {
                    continue;
                }
                if self.minimal && self.dm.get(v, y) + 1 != self.dm.get(u, y) {
                    continue;
                }
                let usable = match self.objective {
                    Objective::Vertex => v == y || load[v] < cap,
                    Objective::Edge => load[self.g.edge_id(u, v).unwrap()] < cap,
                };
                if !usable {
                    continue;
                }
                parent[v] = u;
                hops[v] = hops[u] + 1;
                if v == y {
                    let mut path = vec![y];
                    let mut w = y;
                    while w != x {
                        w = parent[w];
                        path.push(w);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(v);
            }
        }
        None
    }
}
