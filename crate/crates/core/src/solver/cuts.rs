//! Combinatorial lower bounds from edge cuts and vertex separators.

use std::collections::VecDeque;

use super::{Mode, Objective};
use crate::graph::{DistanceMatrix, Graph};

const EXHAUSTIVE_CUT_ORDER: usize = 16;
const EXHAUSTIVE_SEPARATOR_ORDER: usize = 12;

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Lower bound on the edge index: every ordered pair split by a vertex set
/// `S` crosses the cut, so some cut edge carries `⌈pairs / cut⌉` paths.
/// For digraphs only pairs leaving `S` and the arcs leaving `S` count.
/// Every subset is tried up to 16 vertices; larger graphs use singletons and
/// breadth-first sweeps from every vertex.
pub fn cut_bound_edge(g: &Graph) -> u64 {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let bound = |in_s: &dyn Fn(usize) -> bool, size: usize| -> u64 {
        let mut cut = 0u64;
        for &(u, v) in g.edges() {
            let (a, b) = (in_s(u), in_s(v));
            if g.is_directed() {
                cut += u64::from(a && !b);
            } else {
                cut += u64::from(a != b);
            }
        }
        let s = size as u64;
        let pairs = s * (n as u64 - s) * if g.is_directed() { 1 } else { 2 };
        if cut == 0 {
            0
        } else {
            ceil_div(pairs, cut)
        }
    };

    let mut best = 0;
    if n <= EXHAUSTIVE_CUT_ORDER {
        for mask in 1u32..(1 << n) - 1 {
            let size = mask.count_ones() as usize;
            best = best.max(bound(&|v| mask >> v & 1 == 1, size));
        }
        return best;
    }
    let mut in_s = vec![false; n];
    for start in 0..n {
        in_s.iter_mut().for_each(|b| *b = false);
        for (size, v) in bfs_order(g, start).into_iter().take(n - 1).enumerate() {
            in_s[v] = true;
            best = best.max(bound(&|u| in_s[u], size + 1));
        }
    }
    best
}

fn bfs_order(g: &Graph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = vec![start];
    seen[start] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &v in g.out_neighbors(u).iter().chain(g.in_neighbors(u)) {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    order
}

/// Lower bound on the vertex index: the ordered pairs that a vertex set `S`
/// disconnects all route through `S`, so some member of `S` carries
/// `⌈pairs / |S|⌉` of them. Every subset is tried up to 12 vertices;
/// larger graphs use single vertices and open neighborhoods.
pub fn separator_bound_vertex(g: &Graph) -> u64 {
    let n = g.n();
    if n < 3 {
        return 0;
    }
    let mut best = 0;
    let mut consider = |removed: &[bool]| {
        let size = removed.iter().filter(|&&r| r).count() as u64;
        if size == 0 || size as usize + 2 > n {
            return;
        }
        let split = disconnected_pairs(g, removed);
        best = best.max(ceil_div(split, size));
    };
    let mut removed = vec![false; n];
    if n <= EXHAUSTIVE_SEPARATOR_ORDER {
        for mask in 1u32..(1 << n) - 1 {
            for (v, r) in removed.iter_mut().enumerate() {
                *r = mask >> v & 1 == 1;
            }
            consider(&removed);
        }
    } else {
        for v in 0..n {
            removed.iter_mut().for_each(|r| *r = false);
            removed[v] = true;
            consider(&removed);
            removed[v] = false;
            for &u in g.out_neighbors(v) {
                removed[u] = true;
            }
            consider(&removed);
        }
    }
    best
}

/// Ordered pairs of surviving vertices with no path avoiding `removed`.
fn disconnected_pairs(g: &Graph, removed: &[bool]) -> u64 {
    let n = g.n();
    let alive = removed.iter().filter(|&&r| !r).count() as u64;
    let mut total = 0;
    let mut stamp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut done = vec![false; n];
    for s in 0..n {
        if removed[s] || (!g.is_directed() && done[s]) {
            continue;
        }
        stamp[s] = s;
        stack.push(s);
        let mut reached = 1u64;
        while let Some(u) = stack.pop() {
            for &v in g.out_neighbors(u) {
                if !removed[v] && stamp[v] != s {
                    stamp[v] = s;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        if g.is_directed() {
            total += alive - reached;
        } else {
            // every member of the component sees the same unreachable set
            for v in 0..n {
                if stamp[v] == s {
                    done[v] = true;
                }
            }
            total += reached * (alive - reached);
        }
    }
    total
}

/// Lower bound from weighted resource subsets. For a set `F` of resources,
/// every pair must put at least `m(x, y)` units on `F`, where `m` is the
/// fewest members of `F` on any allowed path, so some member of `F` carries
/// `⌈Σ m / |F|⌉`. With `F` everything this is the averaging bound; with a
/// separator or a cut it is the bounds above.
pub(crate) fn subset_bound(subsets: &[(u128, u64)]) -> u64 {
    subsets
        .iter()
        .map(|&(set, total)| total.div_ceil(u64::from(set.count_ones())))
        .max()
        .unwrap_or(0)
}

/// Every tried resource set with its least total demand `Σ m`. Vertex
/// subsets are tried exhaustively up to 12 vertices; for edges, the edges
/// inside and the edges leaving each vertex subset. Larger graphs yield
/// nothing.
pub(crate) fn resource_subsets(
    g: &Graph,
    objective: Objective,
    mode: Mode,
    dm: &DistanceMatrix,
) -> Vec<(u128, u64)> {
    let n = g.n();
    let mut out = Vec::new();
    if n > EXHAUSTIVE_SEPARATOR_ORDER {
        return out;
    }
    let mut weight = vec![0u64; objective.resource_count(g)];
    for mask in 1u32..1 << n {
        let inside = |v: usize| mask >> v & 1 == 1;
        let families: &[fn(bool, bool) -> bool] = match objective {
            Objective::Vertex => &[|a, _| a],
            Objective::Edge => &[|a, b| a && b, |a, b| a != b],
        };
        for member in families {
            match objective {
                Objective::Vertex => {
                    for (v, w) in weight.iter_mut().enumerate() {
                        *w = u64::from(member(inside(v), false));
                    }
                }
                Objective::Edge => {
                    for (w, &(u, v)) in weight.iter_mut().zip(g.edges()) {
                        *w = u64::from(member(inside(u), inside(v)));
                    }
                }
            }
            let set = weight
                .iter()
                .enumerate()
                .filter(|&(_, &w)| w == 1)
                .fold(0u128, |m, (r, _)| m | 1 << r);
            if set == 0 {
                continue;
            }
            let total: u64 = (0..n)
                .map(|x| min_weights(g, objective, mode, dm, &weight, x))
                .sum();
            out.push((set, total));
        }
    }
    out
}

/// Σ over targets `y` of the least weight of an allowed `x`-`y` path, where
/// a path's weight sums its resources.
fn min_weights(
    g: &Graph,
    objective: Objective,
    mode: Mode,
    dm: &DistanceMatrix,
    weight: &[u64],
    x: usize,
) -> u64 {
    let n = g.n();
    let mut best = vec![u64::MAX; n];
    best[x] = 0;
    let step = |u: usize, v: usize| match objective {
        // entering v costs its weight; the target's own weight is removed below
        Objective::Vertex => weight[v],
        Objective::Edge => weight[g.edge_id(u, v).unwrap()],
    };
    match mode {
        Mode::Minimal => {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| dm.get(x, v));
            for &u in &order {
                for &v in g.out_neighbors(u) {
                    if dm.get(x, v) == dm.get(x, u) + 1 {
                        best[v] = best[v].min(best[u] + step(u, v));
                    }
                }
            }
        }
        Mode::General => {
            // weights are 0 or 1
            let mut deque = VecDeque::from([x]);
            let mut done = vec![false; n];
            while let Some(u) = deque.pop_front() {
                if std::mem::replace(&mut done[u], true) {
                    continue;
                }
                for &v in g.out_neighbors(u) {
                    let c = best[u] + step(u, v);
                    if c < best[v] {
                        best[v] = c;
                        if c == best[u] {
                            deque.push_front(v);
                        } else {
                            deque.push_back(v);
                        }
                    }
                }
            }
        }
    }
    (0..n)
        .filter(|&y| y != x)
        .map(|y| match objective {
            Objective::Vertex => best[y] - weight[y],
            Objective::Edge => best[y],
        })
        .sum()
}
