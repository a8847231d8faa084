//! Per-graph bound entries and the product formulas.

use super::{BoundEntry, BoundKind, BoundReport, EntryStatus, GraphStats, IndexValues, Quantity};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{lower_bound_a, lower_bound_b};

use BoundKind::{Equality, Lower, Relation, Upper};
use Quantity::{Pi, PiM, Xi, XiM};

/// Entries whose printed statement fails on a small graph.
const DISPUTED: &[(&str, &str)] = &[
    (
        "T3.4c",
        "K_n gives 0 but pi(K_n) = 2; C5 gives 5 but pi(C5) = 6; P3 gives 3 but pi(P3) = 4",
    ),
    (
        "T3.5b",
        "C5 (kappa 2, Delta 2) gives 5-3 = 2 but pi(C5) = 6",
    ),
    ("T3.13c", "directed C4 (k 1) gives 16-20+7 = 3 but pi_m = 6"),
];

fn disputed(id: &str) -> Option<&'static str> {
    DISPUTED.iter().find(|(d, _)| *d == id).map(|(_, why)| *why)
}

struct Stmt {
    id: &'static str,
    kind: BoundKind,
    quantity: Option<Quantity>,
    citation: &'static str,
}

const fn stmt(
    id: &'static str,
    kind: BoundKind,
    quantity: Quantity,
    citation: &'static str,
) -> Stmt {
    Stmt {
        id,
        kind,
        quantity: Some(quantity),
        citation,
    }
}

impl Stmt {
    fn entry(
        &self,
        condition: impl Into<String>,
        applies: bool,
        value: impl FnOnce() -> i64,
    ) -> BoundEntry {
        self.with_status(
            condition,
            if applies {
                EntryStatus::Applies
            } else {
                EntryStatus::Skipped
            },
            value,
        )
    }

    fn advisory(
        &self,
        condition: impl Into<String>,
        applies: bool,
        value: impl FnOnce() -> i64,
    ) -> BoundEntry {
        self.with_status(
            condition,
            if applies {
                EntryStatus::Advisory
            } else {
                EntryStatus::Skipped
            },
            value,
        )
    }

    fn with_status(
        &self,
        condition: impl Into<String>,
        status: EntryStatus,
        value: impl FnOnce() -> i64,
    ) -> BoundEntry {
        BoundEntry {
            theorem_id: self.id,
            kind: self.kind,
            quantity: self.quantity,
            condition: condition.into(),
            status,
            value: (status != EntryStatus::Skipped).then(value),
            holds: None,
            disputed: disputed(self.id),
            citation: self.citation,
        }
    }

    fn relation(&self, condition: impl Into<String>, holds: Option<bool>) -> BoundEntry {
        BoundEntry {
            theorem_id: self.id,
            kind: Relation,
            quantity: None,
            condition: condition.into(),
            status: if holds.is_some() {
                EntryStatus::Applies
            } else {
                EntryStatus::Skipped
            },
            value: None,
            holds,
            disputed: disputed(self.id),
            citation: self.citation,
        }
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

/// `⌈(n-k-1)/k⌉`.
fn spread(n: i64, k: i64) -> i64 {
    ceil_div(n - k - 1, k)
}

/// `((n-1)(n-2), ⌊n²/2⌋)`, the upper bounds valid for every connected graph.
pub fn trivial_bounds(n: usize) -> (u64, u64) {
    let n = n as u64;
    (n.saturating_sub(1) * n.saturating_sub(2), n * n / 2)
}

/// Averaging lower bounds, trivial upper bounds and the transitive
/// equality, for graphs and digraphs alike.
pub(super) fn general_bounds(g: &Graph, s: &GraphStats) -> BoundReport {
    let (xi_up, pi_up) = trivial_bounds(s.n);
    let any = "connected graph or strongly connected digraph";
    let mut entries = vec![
        stmt("T2.3a", Lower, Xi, "Thm 2.3").entry(any, true, || lower_bound_a(g).ceiling as i64),
        stmt("T2.3b", Upper, Xi, "Thm 2.3").entry(any, true, || xi_up as i64),
        stmt("T2.4a", Lower, Pi, "Thm 2.4").entry(any, true, || lower_bound_b(g).ceiling as i64),
        stmt("T2.4b", Upper, Pi, "Thm 2.4").entry(any, true, || pi_up as i64),
    ];
    // Only the distance condition is checkable; Cayley-ness is not.
    let n = s.n as i64;
    entries.push(stmt("T2.8", Equality, Xi, "Thm 2.8").advisory(
        "Cayley graph (checked: all distance row sums equal)",
        s.row_sum.is_some() && !s.directed,
        || s.row_sum.unwrap() as i64 - (n - 1),
    ));
    BoundReport { entries }
}

/// Relations between the four indices of one undirected graph.
pub fn relation_check(
    values: &IndexValues,
    n: usize,
    max_degree: usize,
    min_degree: usize,
) -> BoundReport {
    let (n, dmax, dmin) = (n as i64, max_degree as i64, min_degree as i64);
    let v = |x: Option<u64>| x.map(|x| x as i64);
    let (xi, pi, xim, pim) = (v(values.xi), v(values.pi), v(values.xi_m), v(values.pi_m));
    let both = |a: Option<i64>, b: Option<i64>, f: &dyn Fn(i64, i64) -> bool| Some(f(a?, b?));
    let entries = vec![
        stmt("T2.6a", Relation, Xi, "Thm 2.6(a)").relation(
            "2 xi + 2(n-1) <= Delta pi",
            both(xi, pi, &|x, p| 2 * x + 2 * (n - 1) <= dmax * p),
        ),
        stmt(
            "T2.6a-minimal",
            Relation,
            XiM,
            "Thm 2.6(a), minimal routings",
        )
        .relation(
            "2 xi_m + 2(n-1) <= Delta pi_m",
            both(xim, pim, &|x, p| 2 * x + 2 * (n - 1) <= dmax * p),
        ),
        stmt("T2.6b", Relation, Pi, "Thm 2.6(b)").relation(
            "pi <= xi + 2(n-1)",
            both(xi, pi, &|x, p| p <= x + 2 * (n - 1)),
        ),
        stmt("T2.6c", Relation, PiM, "Thm 2.6(c)").relation(
            "pi_m <= xi_m + 2(n-delta)",
            both(xim, pim, &|x, p| p <= x + 2 * (n - dmin)),
        ),
    ];
    BoundReport { entries }
}

/// Upper bounds for `G × G'` from the factors' orders and indices.
pub fn product_upper(
    n_g: usize,
    n_h: usize,
    xi_g: u64,
    xi_h: u64,
    pi_g: u64,
    pi_h: u64,
) -> Result<(u64, u64)> {
    if n_g < 2 || n_h < 2 {
        return Err(Error::BadParams {
            family: "product".into(),
            reason: "factors need at least two vertices".into(),
        });
    }
    let (n, m) = (n_g as u64, n_h as u64);
    Ok((
        n * xi_h + m * xi_g + (n - 1) * (m - 1),
        (n * pi_h).max(m * pi_g),
    ))
}

/// One factor of a cartesian product: order and its two indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub n: usize,
    pub xi: u64,
    pub pi: u64,
}

/// Exact indices of a product whose factors are vertex- and edge-optimal.
pub fn product_optimal(factors: &[Factor]) -> Result<(u64, u64)> {
    if factors.is_empty() {
        return Err(Error::BadParams {
            family: "product".into(),
            reason: "no factors".into(),
        });
    }
    let k = factors.len() as i128;
    let total: i128 = factors.iter().map(|f| f.n as i128).product();
    let mut xi = (k - 1) * total + 1;
    let mut pi = 0i128;
    for f in factors {
        let others = total / f.n as i128;
        xi += others * (f.xi as i128 - 1);
        pi = pi.max(others * f.pi as i128);
    }
    Ok((xi.max(0) as u64, pi as u64))
}

/// Upper bounds for undirected graphs from vertex and edge connectivity.
/// Where a statement holds for every `k ≤ κ`, the tightest admissible `k`
/// is used.
pub fn connectivity_bounds(s: &GraphStats) -> BoundReport {
    let n = s.n as i64;
    let kappa = s.kappa as i64;
    let dmax = s.max_degree as i64;
    let mut e = Vec::new();

    let two = kappa >= 2;
    e.push(
        stmt("T3.1a", Upper, Xi, "Thm 3.1(a)").entry("2-connected", two, || (n - 2) * (n - 3) / 2),
    );
    e.push(stmt("T3.1b", Upper, XiM, "Thm 3.1(b)").entry(
        "2-connected, n >= 6, diameter 2",
        two && n >= 6 && s.diameter == 2,
        || n * n - 7 * n + 12,
    ));
    e.push(stmt("T3.1c", Upper, XiM, "Thm 3.1(c)").entry(
        "2-connected, n >= 7",
        two && n >= 7,
        || n * n - 7 * n + 12,
    ));
    e.push(stmt("T3.1d", Upper, Pi, "Thm 3.1(d)").entry("2-connected", two, || n * n / 4));

    let k32 = kappa.min((n + 10) / 8);
    e.push(stmt("T3.2", Upper, Xi, "Thm 3.2").entry(
        format!("k-connected with 3 <= k <= kappa and n >= 8k-10 (k = {k32})"),
        k32 >= 3,
        || n * n - (2 * k32 + 1) * n + 2 * k32,
    ));

    let conn = kappa >= 1;
    let cond_k = format!("k-connected (k = kappa = {kappa})");
    e.push(
        stmt("T3.4a", Upper, Xi, "Thm 3.4(a)").entry(&cond_k, conn, || (n - 1) * spread(n, kappa)),
    );
    e.push(stmt("T3.4b", Upper, XiM, "Thm 3.4(b)").advisory(
        format!("{cond_k}, n sufficiently large"),
        conn,
        || (4 * n * n - 8 * (kappa - 1) * n + 3 * (kappa - 1) * (kappa - 1)) / 8,
    ));
    e.push(stmt("T3.4c", Upper, Pi, "Thm 3.4(c)").entry(&cond_k, conn, || n * spread(n, kappa)));
    e.push(
        stmt("T3.5a", Upper, Xi, "Thm 3.5").entry(&cond_k, conn, || {
            (n - 1) * spread(n, kappa) - (n - dmax - 1)
        }),
    );
    e.push(
        stmt("T3.5b", Upper, Pi, "Thm 3.5")
            .entry(&cond_k, conn, || n * spread(n, kappa) - (n - dmax)),
    );

    e.push(stmt("T3.7", Upper, Xi, "Thm 3.7").entry(
        "3-regular, 3-connected, n >= 4",
        s.regular && s.max_degree == 3 && kappa >= 3 && n >= 4,
        || ceil_div((n - 3) * (n - 4), 3),
    ));

    let two_edge = s.lambda >= 2;
    e.push(
        stmt("T3.8a", Upper, PiM, "Thm 3.8(a)")
            .entry("2-edge-connected", two_edge, || (n - 1) * (n - 1) / 2),
    );
    e.push(
        stmt("T3.8b", Upper, Pi, "Thm 3.8(b)").entry("2-edge-connected", two_edge, || n * n / 4),
    );

    let l = (3..=s.lambda as i64)
        .rev()
        .find(|&l| 2 * n >= (l + 1) * (l + 1) && n >= 3 * l + 3);
    e.push(stmt("T3.11", Upper, XiM, "Thm 3.11").entry(
        format!(
            "l-edge-connected with 3 <= l <= lambda, n >= max(3l+3, (l+1)^2/2) (l = {})",
            l.map_or("none".into(), |l| l.to_string())
        ),
        l.is_some(),
        || {
            let l = l.unwrap();
            ceil_div(n * n, 2) - n - 2 * (l - 1) * (l - 1)
        },
    ));
    BoundReport { entries: e }
}

/// Bounds for strongly connected digraphs, `k` being the strong vertex
/// connectivity.
pub fn digraph_bounds(s: &GraphStats) -> BoundReport {
    let n = s.n as i64;
    let kappa = s.kappa as i64;
    let d = s.min_degree as i64;
    let mut e = Vec::new();
    let strong = "strongly connected digraph";
    e.push(stmt("T3.12", Upper, PiM, "Thm 3.12").entry(strong, true, || (n - 1) * (n - 2) + 1));

    let k32 = kappa.min((n + 10) / 8);
    e.push(stmt("T3.2", Upper, Xi, "Thm 3.2, digraphs").entry(
        format!("k-connected with 3 <= k <= kappa and n >= 8k-10 (k = {k32})"),
        k32 >= 3,
        || n * n - (2 * k32 + 1) * n + 2 * k32,
    ));
    e.push(stmt("T3.13a", Upper, Pi, "Thm 3.13(a)").entry(
        format!("k-connected (k = kappa = {kappa}), n >= 3"),
        kappa >= 1 && n >= 3,
        || (n - 1) * spread(n, kappa) + 1,
    ));
    let kb = kappa.min((n - 1) / 2);
    e.push(stmt("T3.13b", Upper, XiM, "Thm 3.13(b)").entry(
        format!("k-connected with n >= 2k+1 (k = {kb})"),
        kb >= 1 && n >= 3,
        || n * n - (2 * kb + 1) * n + 2 * kb,
    ));
    let kc = kappa.min((n + 1) / 4);
    e.push(stmt("T3.13c", Upper, PiM, "Thm 3.13(c)").entry(
        format!("k-connected with n >= 4k-1 (k = {kc})"),
        kc >= 1 && n >= 3,
        || n * n - (3 * kc + 2) * n + 4 * kc + 3,
    ));
    e.push(stmt("T4.15a", Upper, XiM, "Thm 4.15(a)").entry(
        format!("minimum degree delta = {d}"),
        d >= 1,
        || n * n - (d + 2) * n + d + 1,
    ));
    e.push(stmt("T4.15b", Upper, PiM, "Thm 4.15(b)").advisory(
        format!("minimum degree delta = {d}, n sufficiently large"),
        d >= 1,
        || (n * n - 3 * n * d + 2 * d * d + d).max(n * n - (2 * d + 3) * n + d * d + 4 * d + 3),
    ));
    BoundReport { entries: e }
}

/// Upper bounds for undirected graphs from degree, size and diameter.
pub fn degree_bounds(s: &GraphStats) -> BoundReport {
    let n = s.n as i64;
    let dmax = s.max_degree as i64;
    let eps = s.edges as i64;
    let diam = s.diameter as i64;
    let mut e = Vec::new();
    e.push(
        stmt("T4.12", Upper, Xi, "Thm 4.12").entry("maximum degree Delta", dmax >= 1, || {
            let q = (n - 1) / dmax;
            (n - 1) * (n - 2) - (2 * n - 2 - dmax * (1 + q)) * q
        }),
    );
    e.push(
        stmt("T4.13a", Upper, XiM, "Thm 4.13(a)").entry("any connected graph", true, || {
            (n - 1) * (n - 2) - 2 * (eps - dmax)
        }),
    );
    e.push(
        stmt("T4.13b", Upper, XiM, "Thm 4.13(b)").entry("diameter d", true, || {
            let (lo, hi) = (diam / 2, diam - diam / 2);
            n * n - 3 * n - lo * lo - hi * hi + diam + 2
        }),
    );
    e.push(stmt("T4.14", Upper, PiM, "Thm 4.14").entry(
        "diameter 2, no end vertex",
        s.diameter == 2 && s.min_degree >= 2,
        || 2 * n - 4,
    ));
    BoundReport { entries: e }
}
