//! Candidate path pools for one ordered pair, reduced to non-dominated
//! resource sets.

use std::time::Instant;

use super::{Mode, Objective};
use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub mask: u128,
    pub path: Vec<usize>,
}

/// Paths from `x` to `y` whose resource sets are pairwise incomparable, in
/// nondecreasing length. Minimal mode keeps shortest paths only; general
/// mode keeps simple paths of at most `max_len` arcs. Gives up with `None`
/// once `deadline` passes.
#[allow(clippy::too_many_arguments)]
pub(crate) fn candidates(
    g: &Graph,
    objective: Objective,
    mode: Mode,
    dm: &DistanceMatrix,
    x: usize,
    y: usize,
    max_len: usize,
    deadline: Option<Instant>,
) -> Option<Vec<Candidate>> {
    let shortest = dm.get(x, y) as usize;
    let longest = match mode {
        Mode::Minimal => shortest,
        Mode::General => max_len.max(shortest),
    };
    let mut walk = Walk {
        g,
        objective,
        dm,
        y,
        path: vec![x],
        on_path: vec![false; g.n()],
        kept: Vec::new(),
        level_start: 0,
        steps: 0,
        deadline,
        expired: false,
    };
    walk.on_path[x] = true;
    for len in shortest..=longest {
        walk.level_start = walk.kept.len();
        walk.extend(len, 0);
        if walk.expired {
            return None;
        }
    }
    Some(walk.kept)
}

struct Walk<'a> {
    g: &'a Graph,
    objective: Objective,
    dm: &'a DistanceMatrix,
    y: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    kept: Vec<Candidate>,
    level_start: usize,
    steps: u64,
    deadline: Option<Instant>,
    expired: bool,
}

impl Walk<'_> {
    fn dominated(&self, mask: u128) -> bool {
        self.kept[..self.level_start]
            .iter()
            .any(|k| k.mask & !mask == 0)
    }

    /// Extends the current prefix to exactly `len` arcs ending at `y`.
    fn extend(&mut self, len: usize, prefix_mask: u128) {
        self.steps += 1;
        if self.steps.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                self.expired |= Instant::now() >= deadline;
            }
        }
        if self.expired {
            return;
        }
        let u = *self.path.last().unwrap();
        let depth = self.path.len() - 1;
        if u == self.y {
            if depth == len {
                let is_new = self.kept[self.level_start..]
                    .iter()
                    .all(|k| k.mask != prefix_mask);
                if is_new && !self.dominated(prefix_mask) {
                    self.kept.push(Candidate {
                        mask: prefix_mask,
                        path: self.path.clone(),
                    });
                }
            }
            return;
        }
        let left = len - depth;
        for i in 0..self.g.out_neighbors(u).len() {
            let v = self.g.out_neighbors(u)[i];
            if self.on_path[v] || self.dm.get(v, self.y) as usize > left - 1 {
                continue;
            }
            let mut mask = prefix_mask;
            match self.objective {
                Objective::Vertex if v != self.y => mask |= 1 << v,
                Objective::Vertex => {}
                Objective::Edge => mask |= 1 << self.g.edge_id(u, v).unwrap(),
            }
            if self.dominated(mask) {
                continue;
            }
            self.path.push(v);
            self.on_path[v] = true;
            self.extend(len, mask);
            self.on_path[v] = false;
            self.path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distances;

    fn masks(g: &Graph, obj: Objective, mode: Mode, x: usize, y: usize) -> Vec<u128> {
        let dm = distances(g);
        candidates(g, obj, mode, &dm, x, y, g.n() - 1, None)
            .unwrap()
            .into_iter()
            .map(|c| c.mask)
            .collect()
    }

    fn wheel7() -> Graph {
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend((0..6).map(|i| (i, 6)));
        Graph::undirected(7, &e).unwrap()
    }

    #[test]
    fn adjacent_pair_needs_no_transit() {
        let g = wheel7();
        assert_eq!(masks(&g, Objective::Vertex, Mode::General, 0, 1), vec![0]);
    }

    #[test]
    fn wheel_antipodes() {
        let g = wheel7();
        assert_eq!(
            masks(&g, Objective::Vertex, Mode::Minimal, 0, 3),
            vec![1 << 6]
        );
        // via the hub, or either way round the rim
        assert_eq!(
            masks(&g, Objective::Vertex, Mode::General, 0, 3),
            vec![1 << 6, 0b110, 0b110000]
        );
    }

    #[test]
    fn square_edges() {
        let g = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let m = masks(&g, Objective::Edge, Mode::General, 0, 2);
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|x| x.count_ones() == 2));
        // the long way round avoids the direct edge, so both survive
        assert_eq!(masks(&g, Objective::Edge, Mode::General, 0, 1).len(), 2);
        assert_eq!(masks(&g, Objective::Vertex, Mode::General, 0, 1), vec![0]);
    }

    #[test]
    fn directed_respects_orientation() {
        let g = Graph::directed(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = candidates(
            &g,
            Objective::Vertex,
            Mode::General,
            &distances(&g),
            0,
            3,
            3,
            None,
        )
        .unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].path, vec![0, 1, 2, 3]);
    }
}
