#![allow(dead_code)]

use fwdix_core::families::{generate, Family, FamilySpec};
use fwdix_core::graph::cartesian_product;
use fwdix_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn family(f: Family, params: &[usize]) -> Graph {
    generate(&FamilySpec::new(f, params)).unwrap()
}

/// Named small graphs, undirected then directed, each with at most nine
/// vertices.
pub fn corpus() -> Vec<Graph> {
    use Family::*;
    let mut out = vec![];
    for n in 3..=6 {
        out.push(family(Complete, &[n]));
    }
    for n in 3..=6 {
        out.push(family(Path, &[n]));
    }
    for d in 3..=8 {
        out.push(family(Cycle, &[d]));
    }
    for n in 4..=6 {
        out.push(family(Star, &[n]));
    }
    for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
        out.push(family(CompleteBipartite, &[m, n]));
    }
    for n in 5..=7 {
        out.push(family(Wheel, &[n]));
    }
    out.push(family(Hypercube, &[3]));
    out.push(family(FoldedCube, &[3]));
    out.push(family(AugmentedCube, &[3]));
    out.push(family(CrossedCube, &[3]));
    let k3 = family(Complete, &[3]);
    out.push(cartesian_product(&k3, &k3).unwrap().with_name("C3xC3"));
    out.push(family(ToroidalMesh, &[3, 3]));
    out.push(petersen());
    for d in 3..=6 {
        out.push(family(DirectedCycle, &[d]));
    }
    out.push(family(DeBruijn, &[2, 2]));
    out.push(family(Kautz, &[2, 2]));
    out
}

pub fn petersen() -> Graph {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::undirected(10, &edges).unwrap().with_name("petersen")
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `density`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = vec![];
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let (u, v) = (parent.min(order[i]), parent.max(order[i]));
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, &edges).unwrap()
}

/// The fixed set of 50 random connected graphs with 4 to 7 vertices.
pub fn random_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..50)
        .map(|i| {
            let n = rng.gen_range(4..=7);
            let density = rng.gen_range(0.0..0.7);
            random_connected(&mut rng, n, density).with_name(format!("random{i}"))
        })
        .collect()
}
