//! The two hand-built routings of the seven-vertex wheel (rim `0..=5`,
//! hub 6) that show a minimal routing can be beaten.

use crate::routing::Routing;

const HUB: usize = 6;

/// Rim pairs two apart go round the rim, opposite pairs through the hub,
/// everything else direct. Hub load 6, rim loads 2.
pub fn wheel_minimal_routing() -> Routing {
    let mut r = Routing::empty(7);
    for x in 0..7 {
        for y in 0..7 {
            if x != y {
                r.set(x, y, vec![x, y]);
            }
        }
    }
    for i in 0..6 {
        let path = vec![i, (i + 1) % 6, (i + 2) % 6];
        r.set(path[2], i, path.iter().rev().copied().collect());
        r.set(i, path[2], path);
    }
    for i in 0..3 {
        r.set(i, i + 3, vec![i, HUB, i + 3]);
        r.set(i + 3, i, vec![i + 3, HUB, i]);
    }
    r
}

/// The minimal routing with the pair 2, 5 sent the long way round in both
/// directions. Hub load 4, vertices 2 and 5 load 2, the rest 3.
pub fn wheel_rerouted_routing() -> Routing {
    let mut r = wheel_minimal_routing();
    r.set(2, 5, vec![2, 1, 0, 5]);
    r.set(5, 2, vec![5, 4, 3, 2]);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};
    use crate::routing::load_profile;

    #[test]
    fn transcribed_loads() {
        let g = generate(&FamilySpec::new(Family::Wheel, &[7])).unwrap();
        let p = load_profile(&g, &wheel_minimal_routing()).unwrap();
        assert_eq!(p.vertex_load, vec![2, 2, 2, 2, 2, 2, 6]);
        let p = load_profile(&g, &wheel_rerouted_routing()).unwrap();
        assert_eq!(p.vertex_load, vec![3, 3, 2, 3, 3, 2, 4]);
        assert_eq!(p.xi, 4);
    }
}
