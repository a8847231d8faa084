//! Named graph families with their published index claims.
//!
//! Vertex labels: bit strings for the cube variants (most significant bit
//! first), comma-separated coordinates for products, one-line permutations
//! for the star and transposition graphs, digit strings for de Bruijn and
//! Kautz, and `string/level` for butterflies and cube-connected cycles.

mod claims;
mod verify;
mod wheel;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cartesian_power, Graph};

pub use claims::{closed_form, Claim, ClaimValue};
pub use verify::{
    load_manifest, verify_all, verify_family, write_report_csv, ClaimCheck, Verdict,
    VerificationRecord, VerifyLimits,
};
pub use wheel::{wheel_minimal_routing, wheel_rerouted_routing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    DirectedCycle,
    CompleteBipartite,
    Wheel,
    Hypercube,
    GeneralizedHypercube,
    DAryNCube,
    ToroidalMesh,
    DirectedToroidalMesh,
    FoldedCube,
    AugmentedCube,
    CrossedCube,
    CubeConnectedCycles,
    WrappedButterfly,
    DeBruijn,
    Kautz,
    StarGraph,
    CompleteTransposition,
}

impl Family {
    pub const ALL: [Family; 21] = [
        Family::Complete,
        Family::Star,
        Family::Path,
        Family::Cycle,
        Family::DirectedCycle,
        Family::CompleteBipartite,
        Family::Wheel,
        Family::Hypercube,
        Family::GeneralizedHypercube,
        Family::DAryNCube,
        Family::ToroidalMesh,
        Family::DirectedToroidalMesh,
        Family::FoldedCube,
        Family::AugmentedCube,
        Family::CrossedCube,
        Family::CubeConnectedCycles,
        Family::WrappedButterfly,
        Family::DeBruijn,
        Family::Kautz,
        Family::StarGraph,
        Family::CompleteTransposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::DirectedCycle => "directed-cycle",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Wheel => "wheel",
            Family::Hypercube => "hypercube",
            Family::GeneralizedHypercube => "generalized-hypercube",
            Family::DAryNCube => "d-ary-n-cube",
            Family::ToroidalMesh => "toroidal-mesh",
            Family::DirectedToroidalMesh => "directed-toroidal-mesh",
            Family::FoldedCube => "folded-cube",
            Family::AugmentedCube => "augmented-cube",
            Family::CrossedCube => "crossed-cube",
            Family::CubeConnectedCycles => "cube-connected-cycles",
            Family::WrappedButterfly => "wrapped-butterfly",
            Family::DeBruijn => "de-bruijn",
            Family::Kautz => "kautz",
            Family::StarGraph => "star-graph",
            Family::CompleteTransposition => "complete-transposition",
        }
    }

    /// What the parameter list means.
    pub fn params_help(self) -> &'static str {
        match self {
            Family::Complete | Family::Star | Family::Path | Family::Wheel => "n (order)",
            Family::Cycle | Family::DirectedCycle => "d (length, >= 3)",
            Family::CompleteBipartite => "m,n (part sizes)",
            Family::Hypercube
            | Family::FoldedCube
            | Family::AugmentedCube
            | Family::CrossedCube
            | Family::CubeConnectedCycles => "n (dimension)",
            Family::GeneralizedHypercube => "d1,...,dn (clique orders, >= 2)",
            Family::DAryNCube => "d,n (cycle length >= 3, dimension)",
            Family::ToroidalMesh | Family::DirectedToroidalMesh => {
                "d1,...,dn (cycle lengths, >= 3)"
            }
            Family::WrappedButterfly => "k,n (alphabet, levels)",
            Family::DeBruijn | Family::Kautz => "d,n (degree, string length)",
            Family::StarGraph | Family::CompleteTransposition => "n (permuted symbols)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family member. `claims`, when given, replaces the catalogued claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claims: Option<Vec<Claim>>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        FamilySpec {
            family,
            params: params.to_vec(),
            claims: None,
        }
    }

    /// Whether every vertex sees the same distance distribution.
    pub fn transitive(&self) -> bool {
        match self.family {
            Family::Star | Family::Path | Family::Wheel | Family::CrossedCube => false,
            Family::DeBruijn | Family::Kautz => false,
            Family::CompleteBipartite => self.params.first() == self.params.get(1),
            _ => true,
        }
    }

    /// `params` joined by `;`, as written in reports.
    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn label(&self) -> String {
        format!(
            "{}({})",
            self.family,
            self.params
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn bad(family: Family, reason: impl Into<String>) -> Error {
    Error::BadParams {
        family: family.name().into(),
        reason: reason.into(),
    }
}

fn expect_params(spec: &FamilySpec, count: usize) -> Result<&[usize]> {
    if spec.params.len() != count {
        return Err(bad(
            spec.family,
            format!(
                "expected {} ({}), got {} values",
                count,
                spec.family.params_help(),
                spec.params.len()
            ),
        ));
    }
    Ok(&spec.params)
}

fn at_least(family: Family, what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(bad(
            family,
            format!("{what} must be at least {min}, got {value}"),
        ));
    }
    Ok(())
}

/// Largest order any generator will build.
pub const MAX_GENERATED_ORDER: usize = 1 << 16;

fn checked_order(family: Family, n: Option<usize>) -> Result<usize> {
    match n {
        Some(n) if n <= MAX_GENERATED_ORDER => Ok(n),
        _ => Err(bad(family, format!("order exceeds {MAX_GENERATED_ORDER}"))),
    }
}

/// Builds a graph from possibly repeated pairs, dropping loops and merging
/// parallel edges.
fn simple_graph(
    n: usize,
    pairs: impl IntoIterator<Item = (usize, usize)>,
    directed: bool,
) -> Result<Graph> {
    let set: BTreeSet<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(u, v)| u != v)
        .map(|(u, v)| if directed || u < v { (u, v) } else { (v, u) })
        .collect();
    let arcs: Vec<_> = set.into_iter().collect();
    Graph::new(n, &arcs, directed)
}

fn bits(x: usize, width: usize) -> String {
    (0..width)
        .rev()
        .map(|i| if x >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn digits(x: usize, base: usize, width: usize) -> Vec<usize> {
    let mut out = vec![0; width];
    let mut r = x;
    for slot in out.iter_mut().rev() {
        *slot = r % base;
        r /= base;
    }
    out
}

fn digit_string(ds: &[usize]) -> String {
    ds.iter()
        .map(|d| std::char::from_digit(*d as u32, 36).unwrap())
        .collect()
}

fn complete(n: usize) -> Result<Graph> {
    let e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::undirected(n, &e)
}

fn cycle(d: usize, directed: bool) -> Result<Graph> {
    let e: Vec<_> = (0..d).map(|i| (i, (i + 1) % d)).collect();
    Graph::new(d, &e, directed)
}

fn numbered(g: Graph) -> Graph {
    let labels = (0..g.n()).map(|i| i.to_string()).collect();
    g.with_labels(labels)
}

fn cube_like(n: usize, neighbors: impl Fn(usize) -> Vec<usize>) -> Result<Graph> {
    let order = 1usize << n;
    let g = simple_graph(
        order,
        (0..order).flat_map(|u| neighbors(u).into_iter().map(move |v| (u, v))),
        false,
    )?;
    Ok(g.with_labels((0..order).map(|x| bits(x, n)).collect()))
}

/// Builds the named graph.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let f = spec.family;
    let g = match f {
        Family::Complete => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 2)?;
            checked_order(f, Some(n))?;
            numbered(complete(n)?)
        }
        Family::Star => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 2)?;
            checked_order(f, Some(n))?;
            // centre 0
            let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
            numbered(Graph::undirected(n, &e)?)
        }
        Family::Path => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 2)?;
            checked_order(f, Some(n))?;
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            numbered(Graph::undirected(n, &e)?)
        }
        Family::Cycle | Family::DirectedCycle => {
            let d = expect_params(spec, 1)?[0];
            at_least(f, "d", d, 3)?;
            checked_order(f, Some(d))?;
            numbered(cycle(d, f == Family::DirectedCycle)?)
        }
        Family::CompleteBipartite => {
            let p = expect_params(spec, 2)?;
            let (m, n) = (p[0], p[1]);
            at_least(f, "m", m, 1)?;
            at_least(f, "n", n, 1)?;
            checked_order(f, m.checked_add(n))?;
            // parts 0..m and m..m+n
            let e: Vec<_> = (0..m)
                .flat_map(|u| (m..m + n).map(move |v| (u, v)))
                .collect();
            numbered(Graph::undirected(m + n, &e)?)
        }
        Family::Wheel => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 4)?;
            checked_order(f, Some(n))?;
            // rim 0..n-1 in cyclic order, hub n-1
            let rim = n - 1;
            let mut e: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
            e.extend((0..rim).map(|i| (i, rim)));
            let mut labels: Vec<String> = (0..rim).map(|i| i.to_string()).collect();
            labels.push("hub".into());
            Graph::undirected(n, &e)?.with_labels(labels)
        }
        Family::Hypercube => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 1)?;
            checked_order(f, 1usize.checked_shl(n as u32).filter(|_| n < 64))?;
            cube_like(n, |u| (0..n).map(|i| u ^ 1 << i).collect())?
        }
        Family::GeneralizedHypercube => {
            if spec.params.is_empty() {
                return Err(bad(f, "expected at least one clique order"));
            }
            for &d in &spec.params {
                at_least(f, "each d_i", d, 2)?;
            }
            product_of(f, &spec.params, |d| Ok(numbered(complete(d)?)))?
        }
        Family::DAryNCube => {
            let p = expect_params(spec, 2)?;
            let (d, n) = (p[0], p[1]);
            at_least(f, "d", d, 3)?;
            at_least(f, "n", n, 1)?;
            product_of(f, &vec![d; n], |d| Ok(numbered(cycle(d, false)?)))?
        }
        Family::ToroidalMesh | Family::DirectedToroidalMesh => {
            if spec.params.is_empty() {
                return Err(bad(f, "expected at least one cycle length"));
            }
            for &d in &spec.params {
                at_least(f, "each d_i", d, 3)?;
            }
            let directed = f == Family::DirectedToroidalMesh;
            product_of(f, &spec.params, |d| Ok(numbered(cycle(d, directed)?)))?
        }
        Family::FoldedCube => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 2)?;
            checked_order(f, 1usize.checked_shl(n as u32).filter(|_| n < 64))?;
            let all = (1usize << n) - 1;
            cube_like(n, |u| (0..n).map(|i| u ^ 1 << i).chain([u ^ all]).collect())?
        }
        Family::AugmentedCube => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 2)?;
            checked_order(f, 1usize.checked_shl(n as u32).filter(|_| n < 64))?;
            // flip one bit, or the lowest k >= 2 bits
            cube_like(n, |u| {
                (0..n)
                    .map(|i| u ^ 1 << i)
                    .chain((2..=n).map(|k| u ^ ((1 << k) - 1)))
                    .collect()
            })?
        }
        Family::CrossedCube => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 1)?;
            checked_order(f, 1usize.checked_shl(n as u32).filter(|_| n < 64))?;
            cube_like(n, |u| (0..n).map(|l| crossed_neighbor(u, l)).collect())?
        }
        Family::CubeConnectedCycles => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 3)?;
            let order = checked_order(
                f,
                1usize
                    .checked_shl(n as u32)
                    .filter(|_| n < 40)
                    .and_then(|c| c.checked_mul(n)),
            )?;
            let id = |x: usize, i: usize| x * n + i;
            let mut e = Vec::new();
            for x in 0..1usize << n {
                for i in 0..n {
                    e.push((id(x, i), id(x, (i + 1) % n)));
                    e.push((id(x, i), id(x ^ 1 << i, i)));
                }
            }
            let labels = (0..order)
                .map(|v| format!("{}/{}", bits(v / n, n), v % n))
                .collect();
            simple_graph(order, e, false)?.with_labels(labels)
        }
        Family::WrappedButterfly => {
            let p = expect_params(spec, 2)?;
            let (k, n) = (p[0], p[1]);
            at_least(f, "k", k, 2)?;
            at_least(f, "n", n, 2)?;
            let strings = checked_order(f, k.checked_pow(n as u32))?;
            let order = checked_order(f, strings.checked_mul(n))?;
            let id = |x: usize, i: usize| x * n + i;
            let mut e = Vec::new();
            for x in 0..strings {
                let ds = digits(x, k, n);
                for (i, &digit) in ds.iter().enumerate() {
                    // level i changes coordinate i on the way to level i+1
                    let place = k.pow((n - 1 - i) as u32);
                    let base = x - digit * place;
                    for a in 0..k {
                        e.push((id(x, i), id(base + a * place, (i + 1) % n)));
                    }
                }
            }
            let labels = (0..order)
                .map(|v| format!("{}/{}", digit_string(&digits(v / n, k, n)), v % n))
                .collect();
            simple_graph(order, e, false)?.with_labels(labels)
        }
        Family::DeBruijn => {
            let p = expect_params(spec, 2)?;
            let (d, n) = (p[0], p[1]);
            at_least(f, "d", d, 2)?;
            at_least(f, "n", n, 1)?;
            let order = checked_order(f, d.checked_pow(n as u32))?;
            let e = (0..order).flat_map(|x| (0..d).map(move |a| (x, (x * d) % order + a)));
            let labels = (0..order).map(|x| digit_string(&digits(x, d, n))).collect();
            simple_graph(order, e, false)?.with_labels(labels)
        }
        Family::Kautz => {
            let p = expect_params(spec, 2)?;
            let (d, n) = (p[0], p[1]);
            at_least(f, "d", d, 2)?;
            at_least(f, "n", n, 1)?;
            checked_order(
                f,
                d.checked_pow(n as u32 - 1)
                    .and_then(|x| x.checked_mul(d + 1)),
            )?;
            let words = kautz_words(d, n);
            let index = |w: &[usize]| words.binary_search_by(|x| x.as_slice().cmp(w)).unwrap();
            let mut e = Vec::new();
            for (i, w) in words.iter().enumerate() {
                for a in 0..=d {
                    if a != w[n - 1] {
                        let mut next = w[1..].to_vec();
                        next.push(a);
                        e.push((i, index(&next)));
                    }
                }
            }
            let labels = words.iter().map(|w| digit_string(w)).collect();
            simple_graph(words.len(), e, false)?.with_labels(labels)
        }
        Family::StarGraph | Family::CompleteTransposition => {
            let n = expect_params(spec, 1)?[0];
            at_least(f, "n", n, 3)?;
            checked_order(f, (1..=n).try_fold(1usize, |acc, i| acc.checked_mul(i)))?;
            let swaps: Vec<(usize, usize)> = if f == Family::StarGraph {
                (1..n).map(|i| (0, i)).collect()
            } else {
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect()
            };
            permutation_graph(n, &swaps)?
        }
    };
    Ok(g.with_name(spec.label()))
}

fn product_of(
    family: Family,
    dims: &[usize],
    factor: impl Fn(usize) -> Result<Graph>,
) -> Result<Graph> {
    let order = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    checked_order(family, order)?;
    let factors = dims
        .iter()
        .map(|&d| factor(d))
        .collect::<Result<Vec<_>>>()?;
    cartesian_power(&factors)
}

/// Neighbor of `u` across dimension `l` in the crossed cube: bits above `l`
/// agree, bit `l` differs, bit `l-1` agrees when `l` is odd, and the lower
/// bit pairs are pair-related.
fn crossed_neighbor(u: usize, l: usize) -> usize {
    let mut v = u ^ 1 << l;
    // pair-related: 00~00, 10~10, 01~11, 11~01 (high bit, low bit)
    for i in 0..l / 2 {
        let low = u >> (2 * i) & 1;
        if low == 1 {
            v ^= 1 << (2 * i + 1);
        }
    }
    v
}

fn kautz_words(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = (0..=d).map(|a| vec![a]).collect();
    for _ in 1..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().unwrap();
                (0..=d).filter(move |&a| a != last).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    words.sort();
    words
}

/// Cayley graph on the permutations of `0..n` (lexicographic order) with the
/// given position swaps as generators.
fn permutation_graph(n: usize, swaps: &[(usize, usize)]) -> Result<Graph> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    let index = |q: &[usize]| perms.binary_search_by(|x| x.as_slice().cmp(q)).unwrap();
    let mut e = Vec::new();
    for (u, perm) in perms.iter().enumerate() {
        for &(a, b) in swaps {
            let mut q = perm.clone();
            q.swap(a, b);
            e.push((u, index(&q)));
        }
    }
    let labels = perms
        .iter()
        .map(|q| digit_string(&q.iter().map(|x| x + 1).collect::<Vec<_>>()))
        .collect();
    Ok(simple_graph(perms.len(), e, false)?.with_labels(labels))
}
