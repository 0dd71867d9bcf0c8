//! Search for graphs with equal U-polynomials but different extended
//! U-polynomials.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::graph6::to_graph6;
use crate::invariants::{specialize::ubar_to_u, u_poly, ubar, Limits};
use crate::multigraph::Multigraph;

/// A stable name for a graph: its graph6 string when it is simple, else
/// `sha256:` and the first 16 hex digits of the hash of its edge list.
pub fn graph_id(g: &Multigraph) -> String {
    match to_graph6(g) {
        Ok(s) if g.has_unit_weights() => s,
        _ => {
            let digest = Sha256::digest(g.to_edge_list().as_bytes());
            let mut out = String::from("sha256:");
            for b in &digest[..8] {
                let _ = write!(out, "{b:02x}");
            }
            out
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    pub limits: Limits,
    /// Drop graphs with loops before bucketing.
    pub loopless: bool,
}

/// Graphs sharing one U-polynomial, split by extended U-polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct Bucket {
    pub u_poly: String,
    pub graphs: Vec<String>,
    /// Graph ids grouped by equal extended U-polynomial.
    pub ubar_classes: Vec<Vec<String>>,
}

/// Two graphs with equal U and different extended U.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub first: String,
    pub second: String,
    pub first_edges: String,
    pub second_edges: String,
    pub u_poly: String,
    pub ubar_first: String,
    pub ubar_second: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchStats {
    pub graphs_read: usize,
    pub skipped_with_loops: usize,
    pub duplicates: usize,
    pub graphs_processed: usize,
    pub buckets: usize,
    pub colliding_buckets: usize,
    pub largest_bucket: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub stats: SearchStats,
    pub groups: Vec<Bucket>,
    pub counterexamples: Vec<Counterexample>,
}

fn edge_set_key(g: &Multigraph) -> (usize, Vec<(usize, usize)>, Vec<u32>) {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    (g.vertex_count(), edges, g.weights().to_vec())
}

/// Buckets `graphs` by U-polynomial and looks for extended-U
/// distinctions inside each bucket. Output order follows input order.
pub fn search(graphs: &[Multigraph], opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    let mut stats = SearchStats {
        graphs_read: graphs.len(),
        ..SearchStats::default()
    };
    let mut seen = HashSet::new();
    let mut kept = Vec::new();
    for g in graphs {
        if opts.loopless && !g.is_loopless() {
            stats.skipped_with_loops += 1;
        } else if !seen.insert(edge_set_key(g)) {
            stats.duplicates += 1;
        } else {
            kept.push(g);
        }
    }
    stats.graphs_processed = kept.len();

    let computed: Vec<(String, String, String)> = kept
        .par_iter()
        .map(|g| {
            let ub = ubar(g, &opts.limits)?;
            Ok((graph_id(g), ubar_to_u(&ub).to_string(), ub.to_string()))
        })
        .collect::<Result<_>>()?;

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, (_, u, _)) in computed.iter().enumerate() {
        let b = *index.entry(u.as_str()).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[b].push(i);
    }

    let mut groups = Vec::with_capacity(members.len());
    let mut counterexamples = Vec::new();
    for list in &members {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &i in list {
            match classes.iter_mut().find(|c| computed[c[0]].2 == computed[i].2) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                let (x, y) = (classes[a][0], classes[b][0]);
                counterexamples.push(Counterexample {
                    first: computed[x].0.clone(),
                    second: computed[y].0.clone(),
                    first_edges: kept[x].to_edge_list(),
                    second_edges: kept[y].to_edge_list(),
                    u_poly: computed[x].1.clone(),
                    ubar_first: computed[x].2.clone(),
                    ubar_second: computed[y].2.clone(),
                });
            }
        }
        stats.largest_bucket = stats.largest_bucket.max(list.len());
        if list.len() > 1 {
            stats.colliding_buckets += 1;
        }
        groups.push(Bucket {
            u_poly: computed[list[0]].1.clone(),
            graphs: list.iter().map(|&i| computed[i].0.clone()).collect(),
            ubar_classes: classes
                .iter()
                .map(|c| c.iter().map(|&i| computed[i].0.clone()).collect())
                .collect(),
        });
    }
    stats.buckets = groups.len();
    stats.elapsed = start.elapsed();
    Ok(SearchReport {
        stats,
        groups,
        counterexamples,
    })
}

impl SearchReport {
    /// Summary and counterexamples; the per-bucket listing is only in the
    /// JSON form.
    pub fn to_text(&self) -> String {
        let s = &self.stats;
        let mut out = String::new();
        let _ = writeln!(out, "graphs read: {}", s.graphs_read);
        let _ = writeln!(out, "skipped with loops: {}", s.skipped_with_loops);
        let _ = writeln!(out, "duplicates: {}", s.duplicates);
        let _ = writeln!(out, "graphs processed: {}", s.graphs_processed);
        let _ = writeln!(out, "u buckets: {}", s.buckets);
        let _ = writeln!(out, "colliding u buckets: {}", s.colliding_buckets);
        let _ = writeln!(out, "largest u bucket: {}", s.largest_bucket);
        let _ = writeln!(out, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            let _ = writeln!(out, "DISTINCT {} {}", c.first, c.second);
            let _ = writeln!(out, "  u: {}", c.u_poly);
            let _ = writeln!(out, "  ubar {}: {}", c.first, c.ubar_first);
            let _ = writeln!(out, "  ubar {}: {}", c.second, c.ubar_second);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Recomputes every counterexample from its edge lists, with the U
    /// polynomial taken from its own expansion. Returns the ids of pairs
    /// that fail to reproduce.
    pub fn verify(&self, limits: &Limits) -> Result<Vec<(String, String)>> {
        let mut bad = Vec::new();
        for c in &self.counterexamples {
            let g1 = Multigraph::parse_edge_list(&c.first_edges)?;
            let g2 = Multigraph::parse_edge_list(&c.second_edges)?;
            let same_u = u_poly(&g1, limits)? == u_poly(&g2, limits)?;
            let distinct_ubar = ubar(&g1, limits)? != ubar(&g2, limits)?;
            if !(same_u && distinct_ubar) {
                bad.push((c.first.clone(), c.second.clone()));
            }
        }
        Ok(bad)
    }
}
