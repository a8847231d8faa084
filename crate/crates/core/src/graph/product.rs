use super::Graph;
use crate::error::{Error, Result};

/// Cartesian product. Vertex `(u, x)` gets label `u * h.n() + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.is_directed() != h.is_directed() {
        return Err(Error::MixedDirectedness);
    }
    let m = h.n();
    let n = g.n() * m;
    let mut arcs = Vec::with_capacity(g.edge_count() * m + h.edge_count() * g.n());
    for &(u, v) in g.edges() {
        for x in 0..m {
            arcs.push((u * m + x, v * m + x));
        }
    }
    for &(x, y) in h.edges() {
        for u in 0..g.n() {
            arcs.push((u * m + x, u * m + y));
        }
    }
    let mut product = Graph::new(n, &arcs, g.is_directed())?;
    if let (Some(a), Some(b)) = (g.name(), h.name()) {
        product = product.with_name(format!("{a}x{b}"));
    }
    if let (Some(la), Some(lb)) = (g.labels(), h.labels()) {
        let labels = la
            .iter()
            .flat_map(|a| lb.iter().map(move |b| format!("{a},{b}")))
            .collect();
        product = product.with_labels(labels);
    }
    Ok(product)
}

/// Left-folded product of one or more factors.
pub fn cartesian_power(factors: &[Graph]) -> Result<Graph> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::BadParams {
        family: "product".into(),
        reason: "no factors".into(),
    })?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| cartesian_product(&acc, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distances;

    fn k(n: usize) -> Graph {
        let e: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::undirected(n, &e).unwrap()
    }

    #[test]
    fn square() {
        let c4 = cartesian_product(&k(2), &k(2)).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_regular() && c4.max_degree() == 2);
    }

    #[test]
    fn cube_by_iteration() {
        let q3 = cartesian_power(&[k(2), k(2), k(2)]).unwrap();
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.edge_count(), 12);
    }

    #[test]
    fn triangle_squared() {
        let g = cartesian_product(&k(3), &k(3)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 18));
        assert!(g.is_regular() && g.max_degree() == 4);
        assert_eq!(distances(&g).diameter(), 2);
    }

    #[test]
    fn mixed_directedness() {
        let d = Graph::directed(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(matches!(
            cartesian_product(&k(2), &d),
            Err(Error::MixedDirectedness)
        ));
    }
}
