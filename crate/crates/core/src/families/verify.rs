//! Compares catalogued claims with solver output.

use std::collections::HashMap;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::{closed_form, generate, Claim, ClaimValue, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{
    cut_bound_edge, exact_index, heuristic_index, lower_bound, separator_bound_vertex,
    HeuristicConfig, Mode, Objective, SearchLimits, SolveResult, Status,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Solved to optimality and the claim holds.
    Confirmed,
    /// Solved to optimality and the claim fails.
    Refuted,
    /// Not solved exactly; the proven bounds do not contradict the claim.
    BoundConsistent,
    /// Not checked, or the bounds contradict the claim without an optimal
    /// solve; `reason` says which.
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::BoundConsistent => "bound-consistent",
            Verdict::Skipped => "skipped",
        }
    }
}

/// Which instances get which treatment.
#[derive(Debug, Clone, Copy)]
pub struct VerifyLimits {
    pub search: SearchLimits,
    /// Largest order solved exactly in general mode.
    pub general_max_order: usize,
    /// Largest order solved exactly in minimal mode.
    pub minimal_max_order: usize,
    /// Largest order given a heuristic upper bound when not solved exactly.
    pub heuristic_max_order: usize,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits {
            search: SearchLimits::default(),
            general_max_order: 8,
            minimal_max_order: 10,
            heuristic_max_order: 64,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimCheck {
    pub claim: Claim,
    pub computed: Option<SolveResult>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl ClaimCheck {
    /// The solved value, or `lower..upper` when not optimal.
    pub fn computed_text(&self) -> String {
        match &self.computed {
            None => String::new(),
            Some(r) if r.status == Status::Optimal => r.value.to_string(),
            Some(r) if r.status == Status::LowerBoundOnly => format!("{}..", r.lower_bound),
            Some(r) => format!("{}..{}", r.lower_bound, r.value),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationRecord {
    pub spec: FamilySpec,
    pub checks: Vec<ClaimCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationRecord {
    pub fn refuted(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Refuted)
    }
}

/// Checks every claim of `spec`. Generation or claim errors become a
/// record with `error` set and no checks.
pub fn verify_family(spec: &FamilySpec, limits: VerifyLimits) -> VerificationRecord {
    let failed = |e: Error| VerificationRecord {
        spec: spec.clone(),
        checks: Vec::new(),
        error: Some(e.to_string()),
    };
    let claims = match closed_form(spec) {
        Ok(c) => c,
        Err(e) => return failed(e),
    };
    let g = match generate(spec) {
        Ok(g) => g,
        Err(e) => return failed(e),
    };
    let mut solved: HashMap<(Objective, Mode), SolveResult> = HashMap::new();
    let checks = claims
        .into_iter()
        .map(|claim| {
            let key = (claim.objective, claim.mode);
            let result = solved
                .entry(key)
                .or_insert_with(|| solve(&g, key.0, key.1, &limits))
                .clone();
            let (verdict, reason) = judge(&claim.value, &result);
            ClaimCheck {
                claim,
                computed: Some(result),
                verdict,
                reason,
            }
        })
        .collect();
    VerificationRecord {
        spec: spec.clone(),
        checks,
        error: None,
    }
}

/// Verifies each spec in parallel; output order follows input order.
pub fn verify_all(specs: &[FamilySpec], limits: VerifyLimits) -> Vec<VerificationRecord> {
    specs.par_iter().map(|s| verify_family(s, limits)).collect()
}

fn solve(g: &Graph, objective: Objective, mode: Mode, limits: &VerifyLimits) -> SolveResult {
    let n = g.n();
    let exact_limit = match mode {
        Mode::General => limits.general_max_order,
        Mode::Minimal => limits.minimal_max_order,
    };
    if n <= exact_limit {
        if let Ok(r) = exact_index(g, objective, mode, limits.search) {
            return r;
        }
    }
    let mut lb = lower_bound(g, objective);
    if n <= limits.heuristic_max_order {
        lb = lb.max(match objective {
            Objective::Vertex => separator_bound_vertex(g),
            Objective::Edge => cut_bound_edge(g),
        });
        let config = HeuristicConfig {
            mode,
            ..Default::default()
        };
        let mut r = heuristic_index(g, objective, config);
        r.lower_bound = r.lower_bound.max(lb);
        if r.lower_bound == r.value {
            r.status = Status::Optimal;
        }
        return r;
    }
    let mut r = SolveResult::bound_only(g, objective, mode);
    r.lower_bound = lb;
    r.value = lb;
    r
}

fn judge(claim: &ClaimValue, r: &SolveResult) -> (Verdict, Option<String>) {
    if r.status == Status::Optimal {
        return if claim.admits(r.value) {
            (Verdict::Confirmed, None)
        } else {
            (
                Verdict::Refuted,
                Some(format!("optimal value {} outside claim {claim}", r.value)),
            )
        };
    }
    let lo = r.lower_bound;
    let hi = (r.status == Status::UpperBound).then_some(r.value);
    let (c_lo, c_hi) = match *claim {
        ClaimValue::Exact(c) => (Some(c), Some(c)),
        ClaimValue::Range { lower, upper } => (lower, upper),
    };
    if let Some(c) = c_hi.filter(|&c| lo > c) {
        return (
            Verdict::Skipped,
            Some(format!(
                "lower bound {lo} exceeds claimed {c} without an optimal solve"
            )),
        );
    }
    if let (Some(h), Some(c)) = (hi, c_lo) {
        if h < c {
            return (
                Verdict::Skipped,
                Some(format!(
                    "a routing with load {h} beats claimed {c} without an optimal solve"
                )),
            );
        }
    }
    (Verdict::BoundConsistent, None)
}

/// JSON list of family specs.
pub fn load_manifest(path: impl AsRef<Path>) -> Result<Vec<FamilySpec>> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// One row per claim:
/// `family,params,objective,mode,claimed,computed,verdict,citation`.
pub fn write_report_csv(records: &[VerificationRecord], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "family",
        "params",
        "objective",
        "mode",
        "claimed",
        "computed",
        "verdict",
        "citation",
    ])?;
    for rec in records {
        for c in &rec.checks {
            w.write_record([
                rec.spec.family.name().to_string(),
                rec.spec.params_text(),
                c.claim.objective.to_string(),
                c.claim.mode.to_string(),
                c.claim.value.to_string(),
                c.computed_text(),
                c.verdict.as_str().to_string(),
                c.claim.citation.clone(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
