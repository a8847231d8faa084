use std::io::Write;

use serde::Serialize;

use super::{validate_routing, Routing};
use crate::error::Result;
use crate::graph::Graph;

/// Transit loads per vertex and traversal counts per edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoadProfile {
    pub vertex_load: Vec<u64>,
    pub edge_load: Vec<u64>,
    pub xi: u64,
    pub pi: u64,
}

impl LoadProfile {
    /// `vertex,load` rows, then `edge,u,v,load` rows.
    pub fn write_csv<W: Write>(&self, g: &Graph, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        w.write_record(["vertex", "load"])?;
        for (v, load) in self.vertex_load.iter().enumerate() {
            w.write_record([v.to_string(), load.to_string()])?;
        }
        w.write_record(["edge", "u", "v", "load"])?;
        for (id, (&(u, v), load)) in g.edges().iter().zip(&self.edge_load).enumerate() {
            w.write_record([
                id.to_string(),
                u.to_string(),
                v.to_string(),
                load.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self, g: &Graph) -> String {
        let mut buf = Vec::new();
        self.write_csv(g, &mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

/// Loads of a routing. Endpoints are not counted; an undirected edge has one
/// counter shared by both directions.
pub fn load_profile(g: &Graph, r: &Routing) -> Result<LoadProfile> {
    validate_routing(g, r).into_result()?;
    Ok(profile_unchecked(g, r.iter().map(|(_, _, p)| p)))
}

/// Loads of already validated paths.
pub(crate) fn profile_unchecked<'a>(
    g: &Graph,
    paths: impl Iterator<Item = &'a [usize]>,
) -> LoadProfile {
    let mut vertex_load = vec![0u64; g.n()];
    let mut edge_load = vec![0u64; g.edge_count()];
    for p in paths {
        for &v in &p[1..p.len() - 1] {
            vertex_load[v] += 1;
        }
        for w in p.windows(2) {
            edge_load[g.edge_id(w[0], w[1]).expect("validated arc")] += 1;
        }
    }
    LoadProfile {
        xi: vertex_load.iter().copied().max().unwrap_or(0),
        pi: edge_load.iter().copied().max().unwrap_or(0),
        vertex_load,
        edge_load,
    }
}
