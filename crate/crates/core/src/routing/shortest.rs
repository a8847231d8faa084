use serde::{Deserialize, Serialize};

use super::Routing;
use crate::graph::{distances, DistanceMatrix, Graph};

/// How `shortest_path_routing` chooses among equally short next hops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieRule {
    /// Smallest neighbor label; yields lexicographically least shortest paths.
    #[default]
    LowestLabel,
    /// Least transit load so far among the next hops that keep the routing
    /// consistent, label order breaking ties.
    LoadAware,
}

/// A minimal, consistent routing. Pairs are routed by increasing distance
/// and every path is `x` followed by the already fixed path of a next hop.
pub fn shortest_path_routing(g: &Graph, tie: TieRule) -> Routing {
    let dm = distances(g);
    let greedy = match tie {
        TieRule::LowestLabel => None,
        TieRule::LoadAware => build(g, &dm, Some(&mut vec![0u64; g.n()])),
    };
    // every pair at distance >= 2 has a next hop, so label order never fails
    greedy.unwrap_or_else(|| build(g, &dm, None).expect("a next hop always exists"))
}

fn build(g: &Graph, dm: &DistanceMatrix, mut load: Option<&mut Vec<u64>>) -> Option<Routing> {
    let n = g.n();
    let mut pairs: Vec<(u32, usize, usize)> = (0..n)
        .flat_map(|x| {
            (0..n)
                .filter(move |&y| y != x)
                .map(move |y| (dm.get(x, y), x, y))
        })
        .collect();
    pairs.sort_unstable();

    let mut r = Routing::empty(n);
    for (d, x, y) in pairs {
        if d == 1 {
            r.set(x, y, vec![x, y]);
            continue;
        }
        let hops = g
            .out_neighbors(x)
            .iter()
            .copied()
            .filter(|&w| dm.get(w, y) == d - 1);
        let w = match load.as_deref() {
            None => hops.min()?,
            Some(load) => hops
                .filter(|&w| {
                    let tail = r.path(w, y).expect("shorter pairs are routed");
                    let penultimate = tail[tail.len() - 2];
                    penultimate == w || r.path(x, penultimate).map(|p| p[1]) == Some(w)
                })
                .min_by_key(|&w| (load[w], w))?,
        };
        let mut path = Vec::with_capacity(d as usize + 1);
        path.push(x);
        path.extend_from_slice(r.path(w, y).expect("shorter pairs are routed"));
        if let Some(load) = load.as_deref_mut() {
            for &v in &path[1..path.len() - 1] {
                load[v] += 1;
            }
        }
        r.set(x, y, path);
    }
    Some(r)
}
