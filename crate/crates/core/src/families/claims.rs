//! Published index values for each family, as exact values or ranges.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{Family, FamilySpec};
use crate::error::{Error, Result};
use crate::solver::{Mode, Objective};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimValue {
    Exact(u64),
    Range {
        lower: Option<u64>,
        upper: Option<u64>,
    },
}

impl ClaimValue {
    pub fn admits(&self, v: u64) -> bool {
        match *self {
            ClaimValue::Exact(c) => c == v,
            ClaimValue::Range { lower, upper } => {
                lower.is_none_or(|l| l <= v) && upper.is_none_or(|u| v <= u)
            }
        }
    }

    fn at_least(v: u64) -> Self {
        ClaimValue::Range {
            lower: Some(v),
            upper: None,
        }
    }

    fn at_most(v: u64) -> Self {
        ClaimValue::Range {
            lower: None,
            upper: Some(v),
        }
    }
}

/// `7`, `5..6`, `5..` or `..42`.
impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClaimValue::Exact(c) => write!(f, "{c}"),
            ClaimValue::Range { lower, upper } => {
                if let Some(l) = lower {
                    write!(f, "{l}")?;
                }
                f.write_str("..")?;
                if let Some(u) = upper {
                    write!(f, "{u}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Claim {
    pub objective: Objective,
    pub mode: Mode,
    pub value: ClaimValue,
    pub citation: String,
    /// Why the printed statement is suspect, when it is.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disputed: Option<String>,
}

fn claim(objective: Objective, mode: Mode, value: ClaimValue, citation: &str) -> Claim {
    Claim {
        objective,
        mode,
        value,
        citation: citation.into(),
        disputed: None,
    }
}

fn exact(v: i128) -> ClaimValue {
    ClaimValue::Exact(u64::try_from(v.max(0)).unwrap_or(u64::MAX))
}

fn pow(b: usize, e: usize) -> i128 {
    (b as i128).pow(e as u32)
}

fn binomial(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn factorial(n: usize) -> i128 {
    (1..=n).map(|i| i as i128).product()
}

use Mode::{General, Minimal};
use Objective::{Edge, Vertex};

/// Claims for `spec`: its own `claims` if given, else the catalogued ones.
pub fn closed_form(spec: &FamilySpec) -> Result<Vec<Claim>> {
    if let Some(claims) = &spec.claims {
        return Ok(claims.clone());
    }
    let p = &spec.params;
    let need = |count: usize| -> Result<()> {
        if p.len() == count {
            Ok(())
        } else {
            Err(Error::BadParams {
                family: spec.family.name().into(),
                reason: format!("expected {}", spec.family.params_help()),
            })
        }
    };
    let mut out = Vec::new();
    match spec.family {
        Family::Complete => {
            need(1)?;
            out.push(claim(Vertex, General, exact(0), "§6-item1"));
            out.push(claim(Edge, General, exact(2), "§6-item1"));
        }
        Family::Star => {
            need(1)?;
            let n = p[0] as i128;
            out.push(claim(Vertex, General, exact((n - 1) * (n - 2)), "§6-item2"));
            out.push(claim(Edge, General, exact(2 * (n - 1)), "§6-item2"));
        }
        Family::Path => {
            need(1)?;
            let n = p[0] as i128;
            let (lo, hi) = (n / 2, (n + 1) / 2);
            out.push(claim(Vertex, General, exact(2 * lo * (hi - 1)), "§6-item3"));
            out.push(claim(Edge, General, exact(2 * lo * hi), "§6-item3"));
        }
        Family::Cycle => {
            need(1)?;
            let d = p[0] as i128;
            let printed = exact((d - 1) * (d - 1) / 4);
            out.push(claim(Vertex, General, printed, "§6-item5"));
            out.push(claim(Vertex, Minimal, printed, "§6-item5"));
            out.push(claim(Vertex, General, exact(d * d / 4 - d + 1), "§6-item6"));
            out.push(claim(Edge, General, exact(d * d / 4), "§6-item5"));
            out.push(claim(Edge, Minimal, exact(d * d / 4), "§6-item5"));
        }
        Family::DirectedCycle => {
            need(1)?;
            let d = p[0] as i128;
            out.push(claim(
                Vertex,
                General,
                exact((d - 1) * (d - 2) / 2),
                "§6-item5",
            ));
            out.push(claim(Edge, General, exact(d * (d - 1) / 2), "§6-item7"));
        }
        Family::CompleteBipartite => {
            need(2)?;
            let (m, n) = (p[0].max(p[1]) as i128, p[0].min(p[1]) as i128);
            let xi = exact((m * (m - 1) + n - 1) / n);
            out.push(claim(Vertex, General, xi, "§6-item4"));
            out.push(claim(Vertex, Minimal, xi, "§6-item4"));
            if n == 1 {
                out.push(claim(Edge, Minimal, exact(2 * m), "§6-item4"));
            } else {
                let num = 2 * m * (m - 1) + 2 * n * (n - 1);
                let lower = (num + m * n - 1) / (m * n) + 2;
                out.push(claim(
                    Edge,
                    Minimal,
                    ClaimValue::at_least(lower as u64),
                    "§6-item4",
                ));
                let mut upper = claim(
                    Edge,
                    Minimal,
                    ClaimValue::at_most(((m - 1 + n - 1) / n) as u64),
                    "§6-item4",
                );
                upper.disputed = Some(format!(
                    "printed upper end ceil((m-1)/n) lies below the printed lower end {lower}"
                ));
                out.push(upper);
                if m == n {
                    let v = exact(match n {
                        2 => 4,
                        3 | 4 => 5,
                        _ => 6,
                    });
                    out.push(claim(Edge, Minimal, v, "§6-item4"));
                    out.push(claim(Edge, General, v, "§6-item4"));
                }
            }
        }
        Family::Wheel | Family::CubeConnectedCycles => {}
        Family::Hypercube => {
            need(1)?;
            let n = p[0];
            out.push(claim(
                Vertex,
                General,
                exact((n as i128 - 2) * pow(2, n - 1) + 1),
                "§6-item8",
            ));
            out.push(claim(Edge, General, exact(pow(2, n)), "§6-item8"));
        }
        Family::GeneralizedHypercube => {
            let total: i128 = p.iter().map(|&d| d as i128).product();
            let k = p.len() as i128;
            let xi = -p.iter().map(|&d| total / d as i128).sum::<i128>() + (k - 1) * total + 1;
            let pi = p.iter().map(|&d| 2 * total / d as i128).max().unwrap_or(0);
            out.push(claim(Vertex, General, exact(xi), "§6-item8"));
            out.push(claim(Edge, General, exact(pi), "§6-item8"));
        }
        Family::DAryNCube => {
            need(2)?;
            let (d, n) = (p[0], p[1]);
            let q = (d * d / 4) as i128;
            out.push(claim(
                Vertex,
                General,
                exact(n as i128 * pow(d, n - 1) * q - (pow(d, n) - 1)),
                "§6-item6",
            ));
            out.push(claim(Edge, General, exact(pow(d, n - 1) * q), "§6-item6"));
        }
        Family::ToroidalMesh => {
            let total: i128 = p.iter().map(|&d| d as i128).product();
            let terms: Vec<i128> = p
                .iter()
                .map(|&d| total / d as i128 * (d * d / 4) as i128)
                .collect();
            out.push(claim(
                Vertex,
                General,
                exact(terms.iter().sum::<i128>() - total + 1),
                "§6-item6",
            ));
            out.push(claim(
                Edge,
                General,
                exact(*terms.iter().max().unwrap_or(&0)),
                "§6-item6",
            ));
        }
        Family::DirectedToroidalMesh => {
            let total: i128 = p.iter().map(|&d| d as i128).product();
            let k = p.len() as i128;
            let spread: i128 = p.iter().map(|&d| d as i128 - 3).sum();
            out.push(claim(
                Vertex,
                General,
                exact(spread * total / 2 + (k - 1) * total + 1),
                "§6-item7",
            ));
            let pi = p
                .iter()
                .map(|&d| total * (d as i128 - 1) / 2)
                .max()
                .unwrap_or(0);
            out.push(claim(Edge, General, exact(pi), "§6-item7"));
        }
        Family::FoldedCube => {
            need(1)?;
            let n = p[0];
            let c = binomial(n, n.div_ceil(2));
            let xi = exact((n as i128 - 1) * pow(2, n - 1) + 1 - (n as i128 + 1) * c / 2);
            let pi = exact(pow(2, n) - c);
            for mode in [General, Minimal] {
                out.push(claim(Vertex, mode, xi, "§6-item10"));
                out.push(claim(Edge, mode, pi, "§6-item10"));
            }
        }
        Family::AugmentedCube => {
            need(1)?;
            let n = p[0];
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let ninths = pow(2, n) + sign + 3 * n as i128 * pow(2, n);
            out.push(claim(
                Vertex,
                General,
                exact(ninths / 9 - pow(2, n) + 1),
                "§6-item11",
            ));
            out.push(claim(Edge, General, exact(pow(2, n - 1)), "§6-item11"));
        }
        Family::CrossedCube => {
            need(1)?;
            for mode in [General, Minimal] {
                out.push(claim(Edge, mode, exact(pow(2, p[0])), "§6-item9"));
            }
        }
        Family::WrappedButterfly => {
            need(2)?;
            let (k, n) = (p[0], p[1]);
            let kn = pow(k, n);
            let ni = n as i128;
            let xi = 3 * ni * (ni - 1) / 2 * kn - ni * (kn - 1) / (k as i128 - 1) + 1;
            out.push(claim(Vertex, General, exact(xi), "§6-item12"));
        }
        Family::DeBruijn => {
            need(2)?;
            let (d, n) = (p[0], p[1]);
            out.push(claim(
                Vertex,
                General,
                ClaimValue::at_most(((n as i128 - 1) * pow(d, n)) as u64),
                "§6-item15",
            ));
            out.push(claim(
                Edge,
                General,
                ClaimValue::at_most((2 * n as i128 * pow(d, n - 1)) as u64),
                "§6-item15",
            ));
        }
        Family::Kautz => {
            need(2)?;
            let (d, n) = (p[0], p[1]);
            out.push(claim(
                Vertex,
                General,
                ClaimValue::at_most(((n as i128 - 1) * pow(d, n)) as u64),
                "§6-item15",
            ));
            if n >= 2 {
                let pi = 2 * (n as i128 - 1) * pow(d, n - 2) * (d as i128 + 1);
                out.push(claim(
                    Edge,
                    General,
                    ClaimValue::at_most(pi as u64),
                    "§6-item15",
                ));
            }
        }
        Family::StarGraph => {
            need(1)?;
            let n = p[0];
            let alpha = (2..n).fold(Ratio::from_integer(0i128), |acc, i| {
                acc + Ratio::new((n - i) as i128, i as i128)
            }) * factorial(n - 2);
            let base = 2 * factorial(n - 1) * (n as i128 - 1);
            let lower = base + (alpha * 2).ceil().to_integer();
            let upper = base + 2 * alpha.ceil().to_integer();
            out.push(claim(
                Edge,
                General,
                ClaimValue::Range {
                    lower: Some(lower as u64),
                    upper: Some(upper as u64),
                },
                "§6-item13",
            ));
        }
        Family::CompleteTransposition => {
            need(1)?;
            let n = p[0];
            let beta = (3..=n).fold(Ratio::from_integer(0i128), |acc, i| {
                acc + Ratio::new(1, i as i128)
            }) * (2 * factorial(n - 2));
            let base = 2 * factorial(n - 2) * (2 * n as i128 - 3);
            let lower = base - (beta * 2).floor().to_integer();
            let upper = base - 2 * beta.floor().to_integer();
            out.push(claim(
                Edge,
                General,
                ClaimValue::Range {
                    lower: Some(lower as u64),
                    upper: Some(upper as u64),
                },
                "§6-item14",
            ));
        }
    }
    if out.is_empty() {
        return Err(Error::NoClaim(spec.family.name().into()));
    }
    Ok(out)
}
