//! Acceptance criteria 1 to 9, one line each. Runs without the test harness
//! so the lines are printed on success too.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fwdix_core::bounds::{
    enumerative_min_index, min_index_closed_forms, product_optimal, relation_check, Factor,
    IndexValues,
};
use fwdix_core::families::{
    closed_form, verify_family, wheel_minimal_routing, wheel_rerouted_routing, Family, FamilySpec,
    Verdict, VerifyLimits,
};
use fwdix_core::graph::{cartesian_product, distances, DegreeConstraint, EnumerationConfig};
use fwdix_core::routing::classify_routing;
use fwdix_core::solver::{lower_bound_a, lower_bound_b, transitive_formula, HeuristicConfig};
use fwdix_core::{
    exact_index, heuristic_index, load_profile, Graph, Mode, Objective, SearchLimits, SolveResult,
    Status,
};

use common::family;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn solve(g: &Graph, objective: Objective, mode: Mode) -> Result<SolveResult, String> {
    let r = exact_index(g, objective, mode, SearchLimits::default()).map_err(|e| e.to_string())?;
    let name = g.name().unwrap_or("graph");
    ensure!(
        r.status == Status::Optimal,
        "{name} {objective} {mode}: not solved to optimality"
    );
    let cert = r
        .certificate
        .as_ref()
        .ok_or(format!("{name}: no certificate"))?;
    let p = load_profile(g, cert).map_err(|e| format!("{name}: certificate rejected: {e}"))?;
    let load = match objective {
        Objective::Vertex => p.xi,
        Objective::Edge => p.pi,
    };
    ensure!(
        load == r.value,
        "{name}: certificate load {load} but value {}",
        r.value
    );
    Ok(r)
}

fn expect(
    g: &Graph,
    objective: Objective,
    mode: Mode,
    want: u64,
    budget: Duration,
) -> Result<(), String> {
    let started = Instant::now();
    let r = solve(g, objective, mode)?;
    let name = g.name().unwrap_or("graph");
    ensure!(
        r.value == want,
        "{name} {objective} {mode}: got {}, want {want}",
        r.value
    );
    ensure!(
        started.elapsed() < budget,
        "{name}: took {:?}",
        started.elapsed()
    );
    Ok(())
}

fn closed_form_confirmations() -> Outcome {
    use Objective::*;
    let minute = Duration::from_secs(60);
    let mut checked = 0;
    let mut check = |g: &Graph, obj, want| -> Result<(), String> {
        checked += 1;
        expect(g, obj, Mode::General, want, minute)
    };
    let k14 = family(Family::CompleteBipartite, &[1, 4]);
    check(&k14, Vertex, 12)?;
    check(&k14, Edge, 8)?;
    let p4 = family(Family::Path, &[4]);
    check(&p4, Vertex, 4)?;
    check(&p4, Edge, 8)?;
    let q3 = family(Family::Hypercube, &[3]);
    check(&q3, Vertex, 5)?;
    check(&q3, Edge, 8)?;
    for d in 3..=8u64 {
        check(&family(Family::Cycle, &[d as usize]), Edge, d * d / 4)?;
    }
    let (m, n) = (2u64, 2u64);
    check(
        &family(Family::CompleteBipartite, &[2, 2]),
        Vertex,
        (m * (m - 1)).div_ceil(n),
    )?;
    for d in 3..=6u64 {
        check(
            &family(Family::DirectedCycle, &[d as usize]),
            Vertex,
            (d - 1) * (d - 2) / 2,
        )?;
    }
    Ok(format!("{checked} exact values"))
}

fn discrepancy_ledger() -> Outcome {
    let mut cited = (false, false);
    for d in 3..=5usize {
        let rec = verify_family(
            &FamilySpec::new(Family::Cycle, &[d]),
            VerifyLimits::default(),
        );
        let oracle = ((d - 2) * (d - 2) / 4) as u64;
        let find = |cite: &str| {
            rec.checks
                .iter()
                .find(|c| {
                    c.claim.objective == Objective::Vertex
                        && c.claim.mode == Mode::General
                        && c.claim.citation == cite
                })
                .ok_or(format!("C{d}: no {cite} vertex claim"))
        };
        let printed = find("§6-item5")?;
        ensure!(
            printed.verdict == Verdict::Refuted,
            "C{d}: printed claim {:?}",
            printed.verdict
        );
        ensure!(
            printed.computed_text() == oracle.to_string(),
            "C{d}: computed {} want {oracle}",
            printed.computed_text()
        );
        let torus = find("§6-item6")?;
        ensure!(
            torus.verdict == Verdict::Confirmed,
            "C{d}: one-dimensional torus claim {:?}",
            torus.verdict
        );
        cited.0 |= printed.claim.citation == "§6-item5";
        cited.1 |= torus.claim.citation == "§6-item6";
    }
    ensure!(cited == (true, true), "citations missing");
    Ok("printed formula refuted at d=3,4,5 with 0,1,2; torus specialization confirmed".into())
}

fn wheel_reproduction() -> Outcome {
    let g = family(Family::Wheel, &[7]);
    let rm = load_profile(&g, &wheel_minimal_routing()).map_err(|e| e.to_string())?;
    ensure!(rm.vertex_load[6] == 6, "hub load {}", rm.vertex_load[6]);
    ensure!(
        rm.vertex_load[..6].iter().all(|&l| l == 2),
        "rim loads {:?}",
        &rm.vertex_load[..6]
    );
    let rerouted = wheel_rerouted_routing();
    let r = load_profile(&g, &rerouted).map_err(|e| e.to_string())?;
    ensure!(r.xi == 4, "rerouted max {}", r.xi);
    let class = classify_routing(&g, &rerouted, &distances(&g)).map_err(|e| e.to_string())?;
    ensure!(!class.minimal, "rerouted routing classified minimal");
    let started = Instant::now();
    expect(
        &g,
        Objective::Vertex,
        Mode::General,
        3,
        Duration::from_secs(300),
    )?;
    let general = started.elapsed();
    expect(
        &g,
        Objective::Vertex,
        Mode::Minimal,
        6,
        Duration::from_secs(300),
    )?;
    Ok(format!("loads 6/2 and 4; xi=3 in {general:.2?}; xi_m=6"))
}

fn transitive_suite() -> Outcome {
    let k3 = family(Family::Complete, &[3]);
    let graphs = [
        family(Family::Cycle, &[5]),
        family(Family::Cycle, &[6]),
        family(Family::Complete, &[5]),
        family(Family::CompleteBipartite, &[3, 3]),
        family(Family::Hypercube, &[3]),
        cartesian_product(&k3, &k3).unwrap().with_name("C3xC3"),
    ];
    let mut values = vec![];
    for g in &graphs {
        let formula = transitive_formula(g).map_err(|e| e.to_string())?;
        let r = solve(g, Objective::Vertex, Mode::Minimal)?;
        ensure!(
            r.value == formula,
            "{}: xi_m {} vs formula {formula}",
            g.name().unwrap(),
            r.value
        );
        values.push(formula.to_string());
    }
    Ok(format!("six equalities ({})", values.join(", ")))
}

fn product_formulas() -> Outcome {
    let factor = |g: &Graph| -> Result<Factor, String> {
        Ok(Factor {
            n: g.n(),
            xi: solve(g, Objective::Vertex, Mode::General)?.value,
            pi: solve(g, Objective::Edge, Mode::General)?.value,
        })
    };
    let k3 = family(Family::Complete, &[3]);
    let k2 = family(Family::Complete, &[2]);
    let cases = [
        (
            vec![factor(&k3)?; 2],
            cartesian_product(&k3, &k3).unwrap(),
            (4, 6),
        ),
        (
            vec![factor(&k2)?; 3],
            family(Family::Hypercube, &[3]),
            (5, 8),
        ),
    ];
    for (factors, product, want) in cases {
        let got = product_optimal(&factors).map_err(|e| e.to_string())?;
        ensure!(got == want, "product_optimal {got:?}, want {want:?}");
        let xi = solve(&product, Objective::Vertex, Mode::General)?.value;
        let pi = solve(&product, Objective::Edge, Mode::General)?.value;
        ensure!(
            (xi, pi) == got,
            "exact product ({xi}, {pi}) vs formula {got:?}"
        );
    }
    Ok("(4,6) on C3xC3 and (5,8) on Q3".into())
}

fn solved_values(g: &Graph) -> Result<IndexValues, String> {
    Ok(IndexValues {
        xi: Some(solve(g, Objective::Vertex, Mode::General)?.value),
        xi_m: Some(solve(g, Objective::Vertex, Mode::Minimal)?.value),
        pi: Some(solve(g, Objective::Edge, Mode::General)?.value),
        pi_m: Some(solve(g, Objective::Edge, Mode::Minimal)?.value),
    })
}

fn relations() -> Outcome {
    let mut count = 0;
    let mut tight = vec![];
    for g in common::corpus().iter().filter(|g| !g.is_directed()) {
        let v = solved_values(g)?;
        let report = relation_check(&v, g.n(), g.max_degree(), g.min_degree());
        for e in &report.entries {
            ensure!(
                e.holds == Some(true),
                "{}: {} fails",
                g.name().unwrap(),
                e.theorem_id
            );
        }
        let lhs = 2 * v.xi.unwrap() + 2 * (g.n() as u64 - 1);
        if lhs == g.max_degree() as u64 * v.pi.unwrap() {
            tight.push(g.name().unwrap().to_string());
        }
        count += 1;
    }
    ensure!(count >= 10, "only {count} graphs");
    for name in ["hypercube(3)", "cycle(5)"] {
        ensure!(tight.iter().any(|t| t == name), "no equality at {name}");
    }
    Ok(format!(
        "{count} graphs; 2xi + 2(n-1) = Delta pi on {} of them, including Q3 and C5",
        tight.len()
    ))
}

fn enumerative_minima() -> Outcome {
    let started = Instant::now();
    let config = EnumerationConfig::default();
    let limits = SearchLimits::default();
    let min = |n, c, obj| -> Result<u64, String> {
        let m = enumerative_min_index(n, c, obj, config, limits).map_err(|e| e.to_string())?;
        ensure!(m.exact, "n={n} {c:?}: budget ran out");
        Ok(m.value)
    };
    for (n, want) in [(4, 1), (5, 2)] {
        let got = min(n, DegreeConstraint::MaxDegree(2), Objective::Vertex)?;
        ensure!(got == want, "xi_(2,{n}) = {got}, want {want}");
    }
    let mut pairs = 0;
    for n in 3..=5usize {
        for delta in 2..n {
            let c = DegreeConstraint::MinDegree(delta);
            let forms = min_index_closed_forms(n, c).map_err(|e| e.to_string())?;
            let xi = min(n, c, Objective::Vertex)?;
            let pi = min(n, c, Objective::Edge)?;
            ensure!(
                forms.xi.exact() == Some(xi),
                "delta={delta} n={n}: xi {xi} vs {:?}",
                forms.xi
            );
            ensure!(
                forms.pi.exact() == Some(pi),
                "delta={delta} n={n}: pi {pi} vs {:?}",
                forms.pi
            );
            pairs += 1;
        }
    }
    for n in 3..=5usize {
        for dmax in 2..n {
            let c = DegreeConstraint::MaxDegree(dmax);
            let (nn, d) = (n as i64, dmax as i64);
            let xi = min(n, c, Objective::Vertex)? as i64;
            let pi = min(n, c, Objective::Edge)? as i64;
            ensure!(
                xi >= nn - 1 - d,
                "Delta={dmax} n={n}: xi {xi} below n-1-Delta"
            );
            let floor = (4 * (nn - 1) + d - 1) / d - 2;
            ensure!(pi >= floor, "Delta={dmax} n={n}: pi {pi} below {floor}");
        }
    }
    ensure!(
        started.elapsed() < Duration::from_secs(600),
        "took {:?}",
        started.elapsed()
    );
    Ok(format!(
        "{pairs} (delta, n) pairs match; lower bounds hold; {:.2?}",
        started.elapsed()
    ))
}

fn bracketing() -> Outcome {
    let mut graphs = common::corpus();
    graphs.extend(common::random_corpus());
    for g in &graphs {
        let name = g.name().unwrap();
        let v = solved_values(g)?;
        let (xi, xi_m, pi, pi_m) = (
            v.xi.unwrap(),
            v.xi_m.unwrap(),
            v.pi.unwrap(),
            v.pi_m.unwrap(),
        );
        let (a, b) = (lower_bound_a(g).ceiling, lower_bound_b(g).ceiling);
        ensure!(a <= xi && xi <= xi_m, "{name}: {a} <= {xi} <= {xi_m} fails");
        ensure!(b <= pi && pi <= pi_m, "{name}: {b} <= {pi} <= {pi_m} fails");
        for (obj, mode, exact) in [
            (Objective::Vertex, Mode::General, xi),
            (Objective::Vertex, Mode::Minimal, xi_m),
            (Objective::Edge, Mode::General, pi),
            (Objective::Edge, Mode::Minimal, pi_m),
        ] {
            let h = heuristic_index(
                g,
                obj,
                HeuristicConfig {
                    mode,
                    ..Default::default()
                },
            );
            ensure!(
                h.value >= exact,
                "{name}: heuristic {} below exact {exact} ({obj} {mode})",
                h.value
            );
        }
    }
    Ok(format!("{} graphs, four solves each", graphs.len()))
}

fn transitive_arithmetic() -> Outcome {
    for f in [Family::FoldedCube, Family::AugmentedCube] {
        for n in 2..=3 {
            let spec = FamilySpec::new(f, &[n]);
            let g = common::family(f, &[n]);
            let claims = closed_form(&spec).map_err(|e| e.to_string())?;
            let formula = transitive_formula(&g).map_err(|e| e.to_string())?;
            let b = lower_bound_b(&g).ceiling;
            for c in &claims {
                let want = match c.objective {
                    Objective::Vertex => formula,
                    Objective::Edge => b,
                };
                ensure!(
                    c.value.admits(want),
                    "{}: {} claim {} vs {want}",
                    spec.label(),
                    c.objective,
                    c.value
                );
            }
            if n == 2 {
                ensure!(
                    (formula, b) == (0, 2),
                    "{}: ({formula}, {b}) is not K4's (0, 2)",
                    spec.label()
                );
                ensure!(g.is_complete() && g.n() == 4, "{} is not K4", spec.label());
            }
        }
    }
    Ok("FQ2, FQ3, AQ2, AQ3 match; n=2 gives K4 (0, 2)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("closed-form confirmations", closed_form_confirmations),
        ("discrepancy ledger", discrepancy_ledger),
        ("W7 reproduction", wheel_reproduction),
        ("vertex-transitive equality", transitive_suite),
        ("product formulas", product_formulas),
        ("index relations", relations),
        ("enumerative minima", enumerative_minima),
        ("bound bracketing", bracketing),
        ("transitive arithmetic", transitive_arithmetic),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = started.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {} {title}: PASS ({detail}) [{elapsed:.2?}]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {} {title}: FAIL ({why}) [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    } else {
        println!("all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    }
}
