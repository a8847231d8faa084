use num_rational::Ratio;
use serde::Serialize;

use super::Objective;
use crate::error::{Error, Result};
use crate::graph::{distances, DistanceMatrix, Graph};

/// An exact rational bound and its integer ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalBound {
    pub value: Ratio<u64>,
    pub ceiling: u64,
}

impl RationalBound {
    fn new(num: u64, den: u64) -> Self {
        let value = Ratio::new(num, den);
        RationalBound {
            value,
            ceiling: value.ceil().to_integer(),
        }
    }
}

impl Serialize for RationalBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalBound", 2)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("ceiling", &self.ceiling)?;
        st.end()
    }
}

/// Average transit demand per vertex, `Σ (d(u,v) - 1) / n` over ordered pairs.
pub fn lower_bound_a(g: &Graph) -> RationalBound {
    lower_bound_a_from(&distances(g))
}

pub(crate) fn lower_bound_a_from(dm: &DistanceMatrix) -> RationalBound {
    let n = dm.n() as u64;
    RationalBound::new(dm.total() - n * (n - 1), n)
}

/// Average traversals per edge, `Σ d(u,v) / ε` over ordered pairs.
pub fn lower_bound_b(g: &Graph) -> RationalBound {
    lower_bound_b_from(g, &distances(g))
}

pub(crate) fn lower_bound_b_from(g: &Graph, dm: &DistanceMatrix) -> RationalBound {
    RationalBound::new(dm.total(), g.edge_count().max(1) as u64)
}

/// Ceiling of the averaging bound for the objective.
pub fn lower_bound(g: &Graph, objective: Objective) -> u64 {
    let dm = distances(g);
    match objective {
        Objective::Vertex => lower_bound_a_from(&dm).ceiling,
        Objective::Edge => lower_bound_b_from(g, &dm).ceiling,
    }
}

/// `Σ_y d(x,y) - (n - 1)`, the vertex index of a vertex-transitive graph.
/// Fails when row sums differ, since the formula then says nothing.
pub fn transitive_formula(g: &Graph) -> Result<u64> {
    let dm = distances(g);
    match dm.common_row_sum() {
        Some(s) => Ok(s - (g.n() as u64 - 1)),
        None => Err(Error::NotRowRegular {
            min: *dm.row_sums().iter().min().unwrap(),
            max: *dm.row_sums().iter().max().unwrap(),
        }),
    }
}
