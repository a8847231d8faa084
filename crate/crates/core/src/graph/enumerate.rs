//! Exhaustive enumeration of small connected undirected graphs.
//!
//! Graph `mask` bit `k` is the k-th vertex pair `(u, v)`, `u < v`, in
//! lexicographic order. Disjoint mask ranges partition the search space, so
//! workers can each take a range.

use std::collections::HashSet;
use std::ops::Range;

use super::Graph;
use crate::error::{Error, Result};

/// Which degree statistic must equal the requested value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeConstraint {
    Any,
    MaxDegree(usize),
    MinDegree(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationConfig {
    /// Largest order accepted.
    pub limit: usize,
    /// Suppress isomorphic copies (first labeled representative wins).
    pub dedup: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            limit: 6,
            dedup: true,
        }
    }
}

/// Hard ceiling from the 64-bit mask representation.
const MAX_ORDER: usize = 11;

pub struct Enumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    constraint: DegreeConstraint,
    next: u64,
    end: u64,
    seen: Option<HashSet<u64>>,
}

impl Enumeration {
    pub fn new(n: usize, constraint: DegreeConstraint, config: EnumerationConfig) -> Result<Self> {
        let slots = n * n.saturating_sub(1) / 2;
        Self::with_range(n, constraint, config, 0..1u64 << slots)
    }

    /// Enumerate only masks in `range`.
    pub fn with_range(
        n: usize,
        constraint: DegreeConstraint,
        config: EnumerationConfig,
        range: Range<u64>,
    ) -> Result<Self> {
        let limit = config.limit.min(MAX_ORDER);
        if n > limit || n == 0 {
            return Err(Error::LimitExceeded { n, limit });
        }
        let pairs = pair_slots(n);
        let end = range.end.min(1u64 << pairs.len());
        Ok(Enumeration {
            n,
            pairs,
            constraint,
            next: range.start,
            end,
            seen: config.dedup.then(HashSet::new),
        })
    }

    pub fn mask_count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    fn accepts(&self, mask: u64) -> bool {
        let n = self.n;
        let mut adj = [0u16; MAX_ORDER];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let degrees = adj[..n].iter().map(|a| a.count_ones() as usize);
        let ok = match self.constraint {
            DegreeConstraint::Any => true,
            DegreeConstraint::MaxDegree(d) => degrees.max() == Some(d),
            DegreeConstraint::MinDegree(d) => degrees.min() == Some(d),
        };
        if !ok {
            return false;
        }
        let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
        let mut reached: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            for (v, &a) in adj[..n].iter().enumerate() {
                if frontier >> v & 1 == 1 {
                    next |= a;
                }
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached & full == full
    }

    fn build(&self, mask: u64) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::undirected(self.n, &edges)
            .expect("accepted masks are connected")
            .with_name(format!("g{}m{mask}", self.n))
    }
}

impl Iterator for Enumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if !self.accepts(mask) {
                continue;
            }
            if let Some(seen) = self.seen.as_mut() {
                if !seen.insert(canonical_mask(self.n, &self.pairs, mask)) {
                    continue;
                }
            }
            return Some(self.build(mask));
        }
        None
    }
}

/// Connected simple graphs on `n` labeled vertices whose maximum degree is
/// exactly `max_degree`, isomorphs suppressed, with the default limit.
pub fn enumerate_connected_graphs(n: usize, max_degree: usize) -> Result<Enumeration> {
    Enumeration::new(
        n,
        DegreeConstraint::MaxDegree(max_degree),
        EnumerationConfig::default(),
    )
}

/// Collects an enumeration.
pub fn connected_graphs(
    n: usize,
    constraint: DegreeConstraint,
    config: EnumerationConfig,
) -> Result<Vec<Graph>> {
    Ok(Enumeration::new(n, constraint, config)?.collect())
}

fn pair_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn canonical_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> u64 {
    let mut slot = vec![0usize; n * n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        slot[u * n + v] = k;
        slot[v * n + u] = k;
    }
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let image = edges
            .iter()
            .fold(0u64, |acc, &(u, v)| acc | 1 << slot[perm[u] * n + perm[v]]);
        best = best.min(image);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism-invariant key of an undirected graph with at most 11 vertices.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    if g.is_directed() || g.n() > MAX_ORDER {
        return Err(Error::LimitExceeded {
            n: g.n(),
            limit: MAX_ORDER,
        });
    }
    let pairs = pair_slots(g.n());
    let mask = pairs
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| g.has_arc(u, v))
        .fold(0u64, |acc, (k, _)| acc | 1 << k);
    Ok(canonical_mask(g.n(), &pairs, mask))
}
