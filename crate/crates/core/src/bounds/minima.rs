//! Least forwarding index over all connected graphs of order `n` with a
//! prescribed maximum degree `Δ` or minimum degree `δ`: closed forms and
//! exhaustive computation.

#![allow(clippy::int_plus_one)]

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_graphs, DegreeConstraint, EnumerationConfig, Graph};
use crate::solver::{exact_index, Mode, Objective, SearchLimits, Status};

/// What the catalog pins for one minimum: `lower ≤ value ≤ upper`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: u64,
    pub upper: Option<u64>,
    pub citations: Vec<String>,
    /// Printed statements that apply here but were left out, with why.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub disputed: Vec<String>,
}

impl Interval {
    pub fn exact(&self) -> Option<u64> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lower <= v && self.upper.is_none_or(|u| v <= u)
    }

    fn at_least(&mut self, v: i64, cite: &str) {
        self.lower = self.lower.max(v.max(0) as u64);
        self.citations.push(cite.into());
    }

    fn at_most(&mut self, v: i64, cite: &str) {
        let v = v.max(0) as u64;
        self.upper = Some(self.upper.map_or(v, |u| u.min(v)));
        self.citations.push(cite.into());
    }

    fn equals(&mut self, v: i64, cite: &str) {
        self.at_least(v, cite);
        self.upper = Some(self.upper.map_or(v as u64, |u| u.min(v as u64)));
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MinIndexForms {
    pub n: usize,
    pub constraint: String,
    pub xi: Interval,
    pub pi: Interval,
}

fn constraint_label(c: DegreeConstraint) -> String {
    match c {
        DegreeConstraint::Any => "any".into(),
        DegreeConstraint::MaxDegree(d) => format!("max-degree={d}"),
        DegreeConstraint::MinDegree(d) => format!("min-degree={d}"),
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

fn bad(reason: impl Into<String>) -> Error {
    Error::BadParams {
        family: "degree-constrained minimum".into(),
        reason: reason.into(),
    }
}

/// Lower bounds valid for every `n` and `Δ ≥ 3`.
pub fn generic_min_index_bounds(n: usize, max_degree: usize) -> MinIndexForms {
    let (nn, d) = (n as i64, max_degree as i64);
    let mut xi = Interval::default();
    let mut pi = Interval::default();
    xi.at_least(nn - 1 - d, "Thm 4.5(d)");
    if nn % 2 == 1 && d % 2 == 1 {
        xi.at_least(nn - d, "Thm 4.5(f)");
    }
    if d >= 3 {
        pi.at_least(ceil_div(4 * (nn - 1), d) - 2, "Thm 4.7(a)");
        if nn % 2 == 1 && d % 2 == 1 {
            pi.at_least(ceil_div(4 * nn - 2, d) - 2, "Thm 4.7(c)");
        }
        // monotone in the degree, and the cycle value for degree 2
        pi.at_most(nn * nn / 4, "Thm 4.7(d) with Thm 4.3(b)");
    }
    MinIndexForms {
        n,
        constraint: constraint_label(DegreeConstraint::MaxDegree(max_degree)),
        xi,
        pi,
    }
}

/// The tightest values the catalog gives for `ξ` and `π` under `constraint`.
/// Fails with `OutOfCatalog` when only the generic lower bounds apply.
pub fn min_index_closed_forms(n: usize, constraint: DegreeConstraint) -> Result<MinIndexForms> {
    let nn = n as i64;
    match constraint {
        DegreeConstraint::Any => Err(bad("a degree constraint is required")),
        DegreeConstraint::MinDegree(delta) => {
            if delta == 0 || delta >= n {
                return Err(bad(format!(
                    "need n > delta >= 1, got n={n}, delta={delta}"
                )));
            }
            let d = delta as i64;
            let mut forms = MinIndexForms {
                n,
                constraint: constraint_label(constraint),
                xi: Interval::default(),
                pi: Interval::default(),
            };
            forms.xi.equals(ceil_div(2 * (nn - 1 - d), d), "Thm 4.16");
            forms.pi.equals(ceil_div(2 * (nn - 1), d), "Thm 4.16");
            Ok(forms)
        }
        DegreeConstraint::MaxDegree(dmax) => max_degree_forms(n, dmax),
    }
}

fn max_degree_forms(n: usize, dmax: usize) -> Result<MinIndexForms> {
    if n < 2 || dmax == 0 {
        return Err(bad(format!(
            "need n >= 2 and Delta >= 1, got n={n}, Delta={dmax}"
        )));
    }
    let label = constraint_label(DegreeConstraint::MaxDegree(dmax));
    if dmax + 1 >= n {
        let mut forms = MinIndexForms {
            n,
            constraint: label,
            xi: Interval::default(),
            pi: Interval::default(),
        };
        forms.xi.equals(0, "§4.1 complete graph");
        forms.pi.equals(2, "§4.1 complete graph");
        return Ok(forms);
    }
    let (nn, d) = (n as i64, dmax as i64);
    if dmax == 1 {
        return Err(bad(format!("no connected graph has n={n} and Delta=1")));
    }
    if dmax == 2 {
        // the connected (n, 2)-graphs are C_n and P_n, and C_n is smaller
        let mut forms = MinIndexForms {
            n,
            constraint: label,
            xi: Interval::default(),
            pi: Interval::default(),
        };
        forms.xi.equals(
            (nn - 2) * (nn - 2) / 4,
            "§6-item6 toroidal mesh with one dimension",
        );
        forms.xi.disputed.push(format!(
            "Thm 4.3(a) prints floor((n-1)^2/4) = {}, above the cycle's value",
            (nn - 1) * (nn - 1) / 4
        ));
        forms.pi.equals(nn * nn / 4, "Thm 4.3(b)");
        return Ok(forms);
    }

    let mut forms = generic_min_index_bounds(n, dmax);
    let mut specific = false;
    let mut xi_exact = |v: i64, cite: &str, f: &mut MinIndexForms| {
        f.xi.equals(v, cite);
        specific = true;
    };
    let (n_odd, d_odd) = (nn % 2 == 1, d % 2 == 1);
    if !(n_odd && d_odd) && (3 * d >= nn + 1 || ((n == 12 || n == 13) && dmax == 4)) {
        xi_exact(nn - 1 - d, "Thm 4.4(a)", &mut forms);
    }
    if n_odd && d_odd && (3 * d >= nn + 4 || (n == 13 && dmax == 5)) {
        xi_exact(nn - d, "Thm 4.4(b)", &mut forms);
    }
    let gap = nn - 1 - d;
    if gap >= 2 && gap % 2 == 0 {
        let p = gap / 2;
        if nn >= 3 * p + 2 {
            xi_exact(2 * p, "Thm 4.5(a)", &mut forms);
        }
    }
    if d_odd {
        let p = (d - 1) / 2;
        if n_odd && 2 * p + 1 <= nn && nn <= 6 * p - 1 {
            xi_exact(nn - 2 * p - 1, "Thm 4.5(b)", &mut forms);
        }
    } else {
        let p = d / 2;
        if p >= 3 && 2 * p + 1 <= nn && nn <= 6 * p - 1 {
            xi_exact(nn - 2 * p - 1, "Thm 4.5(c)", &mut forms);
        }
    }

    if dmax + 2 == n && n >= 5 {
        let v = if n == 5 || n == 7 { 4 } else { 3 };
        forms.pi.equals(v, "§4.3 degree n-2 values");
        specific = true;
    }
    if gap >= 2 && gap % 2 == 0 {
        let p = gap / 2;
        let third = ceil_div(p, 3);
        let two_thirds = ceil_div(2 * p, 3);
        let value = if nn >= 10 * p + 1 {
            Some(3)
        } else if nn >= 6 * p + 1 {
            Some(4)
        } else if 4 * p + 2 * third < nn && nn <= 6 * p {
            Some(5)
        } else if 4 * p < nn && nn <= 4 * p + two_thirds {
            Some(6)
        } else {
            None
        };
        if let Some(v) = value {
            forms.pi.equals(v, "Thm 4.8");
            specific = true;
        } else if 4 * p + two_thirds < nn && nn <= 4 * p + 2 * third {
            forms.pi.at_least(5, "Thm 4.8 undetermined range");
            forms.pi.at_most(6, "Thm 4.8 undetermined range");
            specific = true;
        }
    }
    let gap = nn - d;
    if gap >= 2 && gap % 2 == 0 {
        let p = gap / 2;
        let value = if nn >= 10 * p - 2 || nn == 10 * p - 4 {
            Some(3)
        } else if (6 * p < nn && nn < 10 * p - 4) || nn == 10 * p - 3 {
            Some(4)
        } else if 4 * p < nn && nn <= 4 * p + ceil_div(2 * p - 1, 3) - 2 {
            Some(6)
        } else {
            None
        };
        if let Some(v) = value {
            forms.pi.equals(v, "Thm 4.10");
            specific = true;
        }
    }
    if !specific {
        return Err(Error::OutOfCatalog {
            n,
            constraint: forms.constraint,
        });
    }
    Ok(forms)
}

/// Exhaustive minimum with the first graph (in enumeration order) that
/// attains it.
#[derive(Debug, Clone)]
pub struct EnumerativeMin {
    pub value: u64,
    pub witness: Graph,
    /// Non-isomorphic graphs examined.
    pub graphs: usize,
    /// False when some solve ran out of budget above the reported value's
    /// lower bound, so a smaller minimum cannot be ruled out.
    pub exact: bool,
}

/// Minimum general-mode index over every connected graph of order `n`
/// meeting `constraint`, solved in parallel.
pub fn enumerative_min_index(
    n: usize,
    constraint: DegreeConstraint,
    objective: Objective,
    enumeration: EnumerationConfig,
    limits: SearchLimits,
) -> Result<EnumerativeMin> {
    let graphs = connected_graphs(n, constraint, enumeration)?;
    if graphs.is_empty() {
        return Err(bad(format!(
            "no connected graph with n={n} and {}",
            constraint_label(constraint)
        )));
    }
    let results = graphs
        .par_iter()
        .map(|g| exact_index(g, objective, Mode::General, limits))
        .collect::<Result<Vec<_>>>()?;
    let (best, value) = results
        .iter()
        .enumerate()
        .min_by_key(|&(i, r)| (r.value, i))
        .map(|(i, r)| (i, r.value))
        .unwrap();
    let exact = results[best].status == Status::Optimal
        && results
            .iter()
            .all(|r| r.status == Status::Optimal || r.lower_bound >= value);
    Ok(EnumerativeMin {
        value,
        witness: graphs[best].clone(),
        graphs: graphs.len(),
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(n: usize, c: DegreeConstraint) -> MinIndexForms {
        min_index_closed_forms(n, c).unwrap()
    }

    #[test]
    fn min_degree_formula() {
        let f = forms(7, DegreeConstraint::MinDegree(2));
        assert_eq!((f.xi.exact(), f.pi.exact()), (Some(4), Some(6)));
        let f = forms(5, DegreeConstraint::MinDegree(2));
        assert_eq!((f.xi.exact(), f.pi.exact()), (Some(2), Some(4)));
        assert!(min_index_closed_forms(3, DegreeConstraint::MinDegree(3)).is_err());
    }

    #[test]
    fn complete_graph_case() {
        let f = forms(6, DegreeConstraint::MaxDegree(5));
        assert_eq!((f.xi.exact(), f.pi.exact()), (Some(0), Some(2)));
    }

    #[test]
    fn cycles() {
        let f = forms(5, DegreeConstraint::MaxDegree(2));
        assert_eq!((f.xi.exact(), f.pi.exact()), (Some(2), Some(6)));
        assert_eq!(f.xi.disputed.len(), 1);
        assert_eq!(forms(4, DegreeConstraint::MaxDegree(2)).xi.exact(), Some(1));
    }

    #[test]
    fn piecewise_edge_values() {
        // Δ = n - 3, p = 1
        assert_eq!(
            forms(11, DegreeConstraint::MaxDegree(8)).pi.exact(),
            Some(3)
        );
        assert_eq!(forms(8, DegreeConstraint::MaxDegree(5)).pi.exact(), Some(4));
        // p = 4: 6 up to n = 19, gap 20..=20, 5 from n = 21
        assert_eq!(
            forms(19, DegreeConstraint::MaxDegree(10)).pi.exact(),
            Some(6)
        );
        let gap = forms(20, DegreeConstraint::MaxDegree(11));
        assert_eq!((gap.pi.lower, gap.pi.upper), (5, Some(6)));
        assert_eq!(
            forms(21, DegreeConstraint::MaxDegree(12)).pi.exact(),
            Some(5)
        );
        // Δ = n - 2
        assert_eq!(forms(7, DegreeConstraint::MaxDegree(5)).pi.exact(), Some(4));
        assert_eq!(forms(9, DegreeConstraint::MaxDegree(7)).pi.exact(), Some(3));
    }

    #[test]
    fn degree_ranges_for_xi() {
        // n even, Δ >= (n+1)/3
        assert_eq!(forms(8, DegreeConstraint::MaxDegree(3)).xi.exact(), Some(4));
        // n and Δ odd, Δ >= (n+4)/3
        assert_eq!(forms(9, DegreeConstraint::MaxDegree(5)).xi.exact(), Some(4));
    }

    #[test]
    fn out_of_catalog() {
        // Δ = 3, n = 30: n - 1 - Δ and n - Δ both exceed every listed range
        assert!(matches!(
            min_index_closed_forms(30, DegreeConstraint::MaxDegree(3)),
            Err(Error::OutOfCatalog { .. })
        ));
        let g = generic_min_index_bounds(30, 3);
        assert_eq!(g.xi.lower, 26);
        assert_eq!(g.pi.lower, 37);
    }

    #[test]
    fn enumerated_minima() {
        let run = |n, c, obj| {
            enumerative_min_index(
                n,
                c,
                obj,
                EnumerationConfig::default(),
                SearchLimits::default(),
            )
            .unwrap()
        };
        let m = run(4, DegreeConstraint::MaxDegree(2), Objective::Vertex);
        assert_eq!(m.value, 1);
        assert_eq!(m.graphs, 2);
        assert!(m.exact);
        assert_eq!(m.witness.edge_count(), 4);
        assert_eq!(
            run(5, DegreeConstraint::MaxDegree(2), Objective::Vertex).value,
            2
        );
        assert_eq!(
            run(5, DegreeConstraint::MaxDegree(4), Objective::Vertex).value,
            0
        );
        assert_eq!(
            run(5, DegreeConstraint::MinDegree(2), Objective::Edge).value,
            4
        );
    }
}
