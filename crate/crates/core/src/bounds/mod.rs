//! Catalog of published bounds, relations and closed-form minima for the
//! forwarding indices, each with a machine-checkable applicability test.
//!
//! Entry ids (`"T3.1a"`, `"T4.16b"`, ...) and citations are catalog data:
//! they name the statement an entry encodes so reports can be traced.

mod catalog;
mod minima;

use serde::Serialize;

use crate::graph::{connectivity, distances, Graph};

pub use catalog::{
    connectivity_bounds, degree_bounds, digraph_bounds, product_optimal, product_upper,
    relation_check, trivial_bounds, Factor,
};
pub use minima::{
    enumerative_min_index, generic_min_index_bounds, min_index_closed_forms, EnumerativeMin,
    Interval, MinIndexForms,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    Equality,
    Relation,
}

/// Which index an entry constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantity {
    #[serde(rename = "xi")]
    Xi,
    #[serde(rename = "xi_m")]
    XiM,
    #[serde(rename = "pi")]
    Pi,
    #[serde(rename = "pi_m")]
    PiM,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    /// Conditions hold; the value is a proven bound.
    Applies,
    /// Conditions fail; `condition` says which.
    Skipped,
    /// Stated only for sufficiently large orders, or characterizations that
    /// cannot be checked from the parameters; never asserted.
    Advisory,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundEntry {
    pub theorem_id: &'static str,
    pub kind: BoundKind,
    pub quantity: Option<Quantity>,
    pub condition: String,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    /// Known small counterexample to the statement as printed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disputed: Option<&'static str>,
    pub citation: &'static str,
}

impl BoundEntry {
    /// Whether the entry may be used in assertions.
    pub fn is_binding(&self) -> bool {
        self.status == EntryStatus::Applies && self.disputed.is_none()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.theorem_id == id)
    }

    pub fn extend(&mut self, other: BoundReport) {
        self.entries.extend(other.entries);
    }

    /// Fills `holds` for applicable bound entries whose index is known.
    pub fn check(&mut self, values: &IndexValues) {
        for e in &mut self.entries {
            if e.status != EntryStatus::Applies || e.kind == BoundKind::Relation {
                continue;
            }
            let (Some(q), Some(bound)) = (e.quantity, e.value) else {
                continue;
            };
            let Some(actual) = values.get(q) else {
                continue;
            };
            let actual = actual as i64;
            e.holds = Some(match e.kind {
                BoundKind::Lower => bound <= actual,
                BoundKind::Upper => actual <= bound,
                BoundKind::Equality => actual == bound,
                BoundKind::Relation => unreachable!(),
            });
        }
    }

    /// Binding entries that are contradicted.
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries
            .iter()
            .filter(|e| e.is_binding() && e.holds == Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Solved index values; `None` where not computed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IndexValues {
    pub xi: Option<u64>,
    pub xi_m: Option<u64>,
    pub pi: Option<u64>,
    pub pi_m: Option<u64>,
}

impl IndexValues {
    pub fn get(&self, q: Quantity) -> Option<u64> {
        match q {
            Quantity::Xi => self.xi,
            Quantity::XiM => self.xi_m,
            Quantity::Pi => self.pi,
            Quantity::PiM => self.pi_m,
        }
    }
}

/// Parameters the catalog conditions refer to.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub directed: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: u32,
    pub kappa: usize,
    pub lambda: usize,
    pub regular: bool,
    /// Common distance row sum, when all rows agree.
    pub row_sum: Option<u64>,
}

impl GraphStats {
    pub fn of(g: &Graph) -> Self {
        let dm = distances(g);
        let conn = connectivity(g);
        GraphStats {
            n: g.n(),
            edges: g.edge_count(),
            directed: g.is_directed(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            diameter: dm.diameter(),
            kappa: conn.kappa,
            lambda: conn.lambda,
            regular: g.is_regular(),
            row_sum: dm.common_row_sum(),
        }
    }
}

/// Every catalog entry that speaks about a single graph.
pub fn bound_report(g: &Graph) -> BoundReport {
    let stats = GraphStats::of(g);
    let mut report = catalog::general_bounds(g, &stats);
    if stats.directed {
        report.extend(digraph_bounds(&stats));
    } else {
        report.extend(connectivity_bounds(&stats));
        report.extend(degree_bounds(&stats));
    }
    report
}
