use std::collections::VecDeque;

use rayon::prelude::*;

use super::Graph;

/// All-pairs hop distances, row-major. `get(x, y)` follows arc direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
    row_sums: Vec<u64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Σ_y d(x, y) for every x.
    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    /// Σ over all ordered pairs of d(x, y).
    pub fn total(&self) -> u64 {
        self.row_sums.iter().sum()
    }

    /// Row sum when every row sum agrees.
    pub fn common_row_sum(&self) -> Option<u64> {
        let first = *self.row_sums.first()?;
        self.row_sums.iter().all(|&s| s == first).then_some(first)
    }
}

pub(crate) fn bfs_from(g: &Graph, src: usize, reverse: bool) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let next = if reverse {
            g.in_neighbors(u)
        } else {
            g.out_neighbors(u)
        };
        for &v in next {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Breadth-first distances from every vertex. Rows are computed in parallel.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let rows: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map(|s| bfs_from(g, s, false))
        .collect();
    let mut d = Vec::with_capacity(n * n);
    let mut row_sums = Vec::with_capacity(n);
    let mut diameter = 0;
    for row in rows {
        // the constructor guarantees (strong) connectivity
        debug_assert!(row.iter().all(|&x| x != u32::MAX));
        row_sums.push(row.iter().map(|&x| x as u64).sum());
        diameter = diameter.max(row.iter().copied().max().unwrap_or(0));
        d.extend(row);
    }
    DistanceMatrix {
        n,
        d,
        diameter,
        row_sums,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::undirected(n, &edges).unwrap()
    }

    #[test]
    fn pentagon() {
        let dm = distances(&cycle(5));
        assert!(dm.row_sums().iter().all(|&s| s == 6));
        assert_eq!(dm.diameter(), 2);
    }

    #[test]
    fn cube() {
        let edges: Vec<_> = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect();
        let dm = distances(&Graph::undirected(8, &edges).unwrap());
        assert_eq!(dm.common_row_sum(), Some(12));
        assert_eq!(dm.diameter(), 3);
    }

    #[test]
    fn complete() {
        let edges: Vec<_> = (0..4usize)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let dm = distances(&Graph::undirected(4, &edges).unwrap());
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(dm.get(x, y), u32::from(x != y));
            }
        }
        assert_eq!(dm.diameter(), 1);
    }

    #[test]
    fn directed_cycle_is_asymmetric() {
        let g = Graph::directed(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let dm = distances(&g);
        assert_eq!(dm.get(0, 3), 3);
        assert_eq!(dm.get(3, 0), 1);
        assert_eq!(dm.common_row_sum(), Some(6));
    }
}
