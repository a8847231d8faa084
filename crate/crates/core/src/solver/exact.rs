//! Exact forwarding indices by branch and bound.
//!
//! The search is a sequence of feasibility problems: with the best known
//! routing at load `U`, look for an assignment of one candidate path per
//! routed unit with every resource at most `U - 1`. A failed search proves
//! `U` optimal. For undirected graphs the two directions of a pair share
//! their candidates (a path and its reverse load the same resources), so a
//! pair is one demand with two interchangeable units.

use std::time::Instant;

use super::candidates::{candidates, Candidate};
use super::cuts::{resource_subsets, subset_bound};
use super::heuristic::{heuristic_index, HeuristicConfig};
use super::{lower_bound, Mode, Objective, SearchLimits, SolveResult, Status};
use crate::error::{Error, Result};
use crate::graph::{distances, Graph};
use crate::routing::{Routing, TieRule};

const MAX_RESOURCES: usize = 128;
const TRACKED_SUBSETS: usize = 24;

struct Demand {
    src: usize,
    dst: usize,
    units: u8,
    masks: Vec<u128>,
    paths: Vec<Vec<usize>>,
}

enum Outcome {
    Found(Vec<Vec<usize>>, u64),
    Infeasible,
    Aborted,
}

/// Minimum over routings (of the given mode) of the maximum load.
/// Reports `Status::UpperBound` with the best routing found when the node or
/// time budget runs out first.
pub fn exact_index(
    g: &Graph,
    objective: Objective,
    mode: Mode,
    limits: SearchLimits,
) -> Result<SolveResult> {
    let resources = objective.resource_count(g);
    if resources > MAX_RESOURCES {
        return Err(Error::TooLarge {
            resources,
            max: MAX_RESOURCES,
        });
    }
    let started = Instant::now();
    let n = g.n();
    let max_len = limits.max_path_length.unwrap_or(n - 1).max(1);
    let dm = distances(g);
    let reported_lb = lower_bound(g, objective);

    let incumbent = heuristic_index(
        g,
        objective,
        HeuristicConfig {
            mode,
            iterations: 1000,
            tie: TieRule::LoadAware,
            max_path_length: Some(max_len),
        },
    );
    let mut best_value = incumbent.value;
    let mut best = incumbent.certificate.expect("heuristic returns a routing");
    let mut nodes = 0u64;
    let result = |value, status, certificate, nodes| SolveResult {
        objective,
        mode,
        value,
        status,
        lower_bound: reported_lb,
        nodes,
        certificate: Some(certificate),
        certificate_file: None,
    };

    let subsets = resource_subsets(g, objective, mode, &dm);
    let mut root_lb = reported_lb.max(subset_bound(&subsets));
    if best_value <= root_lb {
        return Ok(result(best_value, Status::Optimal, best, 0));
    }

    let deadline = limits.time_budget.map(|t| started + t);
    let mut base = vec![0u64; resources];
    let mut fixed: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut demands = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || (!g.is_directed() && y < x) {
                continue;
            }
            let units: u8 = if g.is_directed() { 1 } else { 2 };
            let Some(pool) = candidates(g, objective, mode, &dm, x, y, max_len, deadline) else {
                return Ok(result(best_value, Status::UpperBound, best, nodes));
            };
            let common = pool.iter().fold(u128::MAX, |m, c| m & c.mask);
            for r in bits(common) {
                base[r] += u64::from(units);
            }
            if pool.len() == 1 {
                fixed.push((x, y, pool.into_iter().next().unwrap().path));
                continue;
            }
            let (masks, paths): (Vec<u128>, Vec<Vec<usize>>) = pool
                .into_iter()
                .map(|Candidate { mask, path }| (mask & !common, path))
                .unzip();
            demands.push(Demand {
                src: x,
                dst: y,
                units,
                masks,
                paths,
            });
        }
    }
    root_lb = root_lb.max(base.iter().copied().max().unwrap_or(0));

    // the whole resource set, then the subsets closest to binding at the root
    let all = if resources == MAX_RESOURCES {
        u128::MAX
    } else {
        (1u128 << resources) - 1
    };
    let mut ranked: Vec<(u128, u64)> = subsets.into_iter().filter(|&(set, _)| set != all).collect();
    ranked.sort_by(|a, b| {
        let lhs = u128::from(a.1) * u128::from(b.0.count_ones());
        let rhs = u128::from(b.1) * u128::from(a.0.count_ones());
        rhs.cmp(&lhs).then(a.0.cmp(&b.0))
    });
    let sets: Vec<u128> = std::iter::once(all)
        .chain(ranked.into_iter().take(TRACKED_SUBSETS).map(|(set, _)| set))
        .collect();

    let mut status = Status::Optimal;
    while best_value > root_lb {
        let budget = limits.max_nodes.saturating_sub(nodes);
        let mut search = Search::new(&demands, &sets, &base, best_value - 1, budget, deadline);
        let outcome = search.run();
        nodes += search.nodes;
        match outcome {
            Outcome::Found(chosen, value) => {
                best = assemble(g, &fixed, &demands, &chosen);
                best_value = value;
            }
            Outcome::Infeasible => break,
            Outcome::Aborted => {
                status = Status::UpperBound;
                break;
            }
        }
    }
    Ok(result(best_value, status, best, nodes))
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

fn assemble(
    g: &Graph,
    fixed: &[(usize, usize, Vec<usize>)],
    demands: &[Demand],
    chosen: &[Vec<usize>],
) -> Routing {
    let mut r = Routing::empty(g.n());
    let mut put = |x: usize, y: usize, picks: &[&Vec<usize>]| {
        r.set(x, y, picks[0].clone());
        if !g.is_directed() {
            let mut back = picks[picks.len() - 1].clone();
            back.reverse();
            r.set(y, x, back);
        }
    };
    for (x, y, p) in fixed {
        put(*x, *y, &[p]);
    }
    for (d, picks) in demands.iter().zip(chosen) {
        let paths: Vec<&Vec<usize>> = picks.iter().map(|&i| &d.paths[i]).collect();
        put(d.src, d.dst, &paths);
    }
    r
}

struct Search<'a> {
    demands: &'a [Demand],
    cap: u64,
    load: Vec<u64>,
    full: u128,
    /// Resource sets whose spare capacity must cover the least remaining
    /// use of them; the first is every resource.
    sets: &'a [u128],
    /// `overlap[d][i * sets + k]`: resources of candidate `i` in set `k`.
    overlap: Vec<Vec<u32>>,
    slack: Vec<u64>,
    rem: Vec<u8>,
    min_idx: Vec<usize>,
    chosen: Vec<Vec<usize>>,
    units_left: usize,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(
        demands: &'a [Demand],
        sets: &'a [u128],
        base: &[u64],
        cap: u64,
        max_nodes: u64,
        deadline: Option<Instant>,
    ) -> Self {
        let full = base
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l >= cap)
            .fold(0u128, |m, (r, _)| m | 1 << r);
        let overlap = demands
            .iter()
            .map(|d| {
                d.masks
                    .iter()
                    .flat_map(|&m| sets.iter().map(move |&set| (m & set).count_ones()))
                    .collect()
            })
            .collect();
        Search {
            demands,
            cap,
            load: base.to_vec(),
            full,
            sets,
            overlap,
            slack: sets
                .iter()
                .map(|&set| bits(set).map(|r| cap.saturating_sub(base[r])).sum())
                .collect(),
            rem: demands.iter().map(|d| d.units).collect(),
            min_idx: vec![0; demands.len()],
            chosen: vec![Vec::new(); demands.len()],
            units_left: demands.iter().map(|d| d.units as usize).sum(),
            nodes: 0,
            max_nodes,
            deadline,
            aborted: false,
        }
    }

    fn run(&mut self) -> Outcome {
        if self.load.iter().any(|&l| l > self.cap) {
            return Outcome::Infeasible;
        }
        if self.dfs() {
            let value = self.load.iter().copied().max().unwrap_or(0);
            Outcome::Found(std::mem::take(&mut self.chosen), value)
        } else if self.aborted {
            Outcome::Aborted
        } else {
            Outcome::Infeasible
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.max_nodes {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                self.aborted = Instant::now() >= deadline;
            }
        }
        self.aborted
    }

    fn dfs(&mut self) -> bool {
        if self.units_left == 0 {
            return true;
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return false;
        }
        let k = self.sets.len();

        // least use of every tracked set by each open demand
        let mut least = vec![u32::MAX; self.demands.len() * k];
        let mut need = vec![0u64; k];
        for (d, demand) in self.demands.iter().enumerate() {
            if self.rem[d] == 0 {
                continue;
            }
            let row = &mut least[d * k..(d + 1) * k];
            let mut any = false;
            for i in self.min_idx[d]..demand.masks.len() {
                if demand.masks[i] & self.full == 0 {
                    any = true;
                    for (l, &o) in row.iter_mut().zip(&self.overlap[d][i * k..(i + 1) * k]) {
                        *l = (*l).min(o);
                    }
                }
            }
            if !any {
                return false;
            }
            for (n, &l) in need.iter_mut().zip(row.iter()) {
                *n += u64::from(self.rem[d]) * u64::from(l);
            }
        }
        let mut spare = vec![0u64; k];
        for ((s, &slack), &n) in spare.iter_mut().zip(&self.slack).zip(&need) {
            if n > slack {
                return false;
            }
            *s = slack - n;
        }

        // a candidate is usable if its excess over the least use fits the
        // spare capacity of every tracked set; branch on the demand with the
        // fewest usable candidates
        let usable = |d: usize, i: usize| -> bool {
            self.demands[d].masks[i] & self.full == 0
                && self.overlap[d][i * k..(i + 1) * k]
                    .iter()
                    .zip(&least[d * k..(d + 1) * k])
                    .zip(&spare)
                    .all(|((&o, &l), &s)| u64::from(o - l) <= s)
        };
        let mut pick = usize::MAX;
        let mut fewest = usize::MAX;
        for d in 0..self.demands.len() {
            if self.rem[d] == 0 {
                continue;
            }
            let count = (self.min_idx[d]..self.demands[d].masks.len())
                .filter(|&i| usable(d, i))
                .count();
            if count == 0 {
                return false;
            }
            if count < fewest {
                fewest = count;
                pick = d;
            }
        }

        let demand = &self.demands[pick];
        let mut order: Vec<(u64, usize)> = (self.min_idx[pick]..demand.masks.len())
            .filter(|&i| usable(pick, i))
            .map(|i| (bits(demand.masks[i]).map(|r| self.load[r]).sum(), i))
            .collect();
        order.sort_unstable();

        let saved_min = self.min_idx[pick];
        for (_, i) in order {
            self.apply(pick, i, true);
            self.min_idx[pick] = i;
            if self.dfs() {
                return true;
            }
            self.min_idx[pick] = saved_min;
            self.apply(pick, i, false);
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn apply(&mut self, d: usize, i: usize, add: bool) {
        let mask = self.demands[d].masks[i];
        for r in bits(mask) {
            if add {
                self.load[r] += 1;
                if self.load[r] == self.cap {
                    self.full |= 1 << r;
                }
            } else {
                self.load[r] -= 1;
                self.full &= !(1 << r);
            }
        }
        let k = self.sets.len();
        for (slack, &o) in self
            .slack
            .iter_mut()
            .zip(&self.overlap[d][i * k..(i + 1) * k])
        {
            if add {
                *slack -= u64::from(o);
            } else {
                *slack += u64::from(o);
            }
        }
        if add {
            self.rem[d] -= 1;
            self.units_left -= 1;
            self.chosen[d].push(i);
        } else {
            self.rem[d] += 1;
            self.units_left += 1;
            self.chosen[d].pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::routing::load_profile;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::undirected(n, &e).unwrap()
    }

    fn wheel7() -> Graph {
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend((0..6).map(|i| (i, 6)));
        Graph::undirected(7, &e).unwrap()
    }

    fn solve(g: &Graph, obj: Objective, mode: Mode) -> u64 {
        let r = exact_index(g, obj, mode, SearchLimits::default()).unwrap();
        assert_eq!(r.status, Status::Optimal);
        let p = load_profile(g, r.certificate.as_ref().unwrap()).unwrap();
        assert_eq!(r.value, if obj == Objective::Vertex { p.xi } else { p.pi });
        r.value
    }

    #[test]
    fn square() {
        assert_eq!(solve(&cycle(4), Objective::Vertex, Mode::General), 1);
        assert_eq!(solve(&cycle(4), Objective::Edge, Mode::General), 4);
    }

    #[test]
    fn wheel() {
        assert_eq!(solve(&wheel7(), Objective::Vertex, Mode::Minimal), 6);
        assert_eq!(solve(&wheel7(), Objective::Vertex, Mode::General), 3);
    }

    #[test]
    fn star() {
        let g = Graph::undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(solve(&g, Objective::Vertex, Mode::General), 12);
        assert_eq!(solve(&g, Objective::Edge, Mode::General), 8);
    }

    #[test]
    fn too_many_resources() {
        let g = cycle(130);
        assert!(matches!(
            exact_index(
                &g,
                Objective::Vertex,
                Mode::Minimal,
                SearchLimits::default()
            ),
            Err(Error::TooLarge { resources: 130, .. })
        ));
    }

    #[test]
    fn node_budget_reports_upper_bound() {
        // the bull-like graph below needs real search for its edge index
        let g = Graph::undirected(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 0),
                (0, 3),
            ],
        )
        .unwrap();
        let tight = SearchLimits {
            max_nodes: 1,
            ..SearchLimits::default()
        };
        let r = exact_index(&g, Objective::Edge, Mode::General, tight).unwrap();
        let full =
            exact_index(&g, Objective::Edge, Mode::General, SearchLimits::default()).unwrap();
        assert_eq!(full.status, Status::Optimal);
        assert!(r.value >= full.value);
        if r.status == Status::Optimal {
            assert_eq!(r.value, full.value);
        }
    }
}
