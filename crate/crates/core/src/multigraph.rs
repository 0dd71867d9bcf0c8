//! Finite multigraphs with loops, parallel edges and positive vertex weights.
//!
//! Vertices are numbered `0..n` and edges are identified by their position in
//! the edge sequence, so two parallel edges are distinct objects. The text
//! edge-list format is 1-based; conversion happens at the parsing boundary.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partitions::PairPartition;

/// An undirected multigraph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

/// Statistics of one connected component of a spanning subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub vertices: usize,
    pub edges: usize,
    pub weight: u64,
}

impl Component {
    /// Edges minus vertices plus one; never negative for a connected component.
    pub fn nullity(&self) -> usize {
        self.edges + 1 - self.vertices
    }
}

/// Connected components of a (spanning sub)graph, ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub components: Vec<Component>,
}

impl ComponentSummary {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

impl Multigraph {
    /// Builds a unit-weight multigraph on `n` vertices.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count: n,
                    });
                }
            }
        }
        Ok(Multigraph {
            n,
            edges,
            weights: vec![1; n],
        })
    }

    /// Replaces the vertex weights. Every weight must be at least 1.
    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.n {
            return Err(Error::Malformed(format!(
                "expected {} weights, got {}",
                self.n,
                weights.len()
            )));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Malformed(format!("weight of vertex {pos} is zero")));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w)).sum()
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn is_loopless(&self) -> bool {
        self.edges.iter().all(|&(u, v)| u != v)
    }

    /// Loopless with no parallel edges.
    pub fn is_simple(&self) -> bool {
        if !self.is_loopless() {
            return false;
        }
        let mut seen: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn has_isolated_vertices(&self) -> bool {
        let mut touched = vec![false; self.n];
        for &(u, v) in &self.edges {
            touched[u] = true;
            touched[v] = true;
        }
        touched.iter().any(|t| !t)
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                index: e,
                edge_count: self.edges.len(),
            });
        }
        Ok(())
    }

    fn normalize_subset(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&last) = s.last() {
            self.check_edge(last)?;
        }
        Ok(s)
    }

    /// Keeps every vertex and only the edges whose indices are in `subset`,
    /// in their original order.
    pub fn spanning_subgraph(&self, subset: &[usize]) -> Result<Multigraph> {
        let subset = self.normalize_subset(subset)?;
        Ok(Multigraph {
            n: self.n,
            edges: subset.iter().map(|&e| self.edges[e]).collect(),
            weights: self.weights.clone(),
        })
    }

    pub fn components(&self) -> ComponentSummary {
        let mut dsu = DisjointSets::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        let mut slot = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for v in 0..self.n {
            let r = dsu.find(v);
            if slot[r] == usize::MAX {
                slot[r] = components.len();
                components.push(Component {
                    vertices: 0,
                    edges: 0,
                    weight: 0,
                });
            }
            let c = &mut components[slot[r]];
            c.vertices += 1;
            c.weight += u64::from(self.weights[v]);
        }
        for &(u, _) in &self.edges {
            components[slot[dsu.find(u)]].edges += 1;
        }
        ComponentSummary { components }
    }

    pub fn component_count(&self) -> usize {
        let mut dsu = DisjointSets::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.count()
    }

    /// `r(A) = |V| - k(G|A)`.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let subset = self.normalize_subset(subset)?;
        let mut dsu = DisjointSets::new(self.n);
        for e in subset {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        Ok(self.n - dsu.count())
    }

    pub fn delete_edge(&self, e: usize) -> Result<Multigraph> {
        self.check_edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Multigraph {
            n: self.n,
            edges,
            weights: self.weights.clone(),
        })
    }

    /// Removes edge `e` and identifies its endpoints. The merged vertex takes
    /// the smaller label and the sum of both weights; higher labels shift down
    /// by one. Other edges between the two endpoints become loops.
    pub fn contract_edge(&self, e: usize) -> Result<Multigraph> {
        self.check_edge(e)?;
        let (a, b) = self.edges[e];
        if a == b {
            return Err(Error::ContractLoop(e));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .collect();
        let mut weights = self.weights.clone();
        weights[keep] += weights[gone];
        weights.remove(gone);
        Ok(Multigraph {
            n: self.n - 1,
            edges,
            weights,
        })
    }

    /// The pair type of the component partition of `G|A`: one `(c_i, e_i)`
    /// per component, sorted lexicographically decreasing.
    pub fn component_signature(&self, subset: &[usize]) -> Result<PairPartition> {
        let sub = self.spanning_subgraph(subset)?;
        Ok(PairPartition::from_pairs(
            sub.components()
                .components
                .iter()
                .map(|c| (c.vertices as u32, c.edges as u32))
                .collect(),
        ))
    }

    /// Parses the text edge-list format:
    ///
    /// ```text
    /// n m
    /// u v        (m lines, 1-based endpoints)
    /// weights w1 ... wn   (optional)
    /// ```
    pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
        let head = parse_numbers(hline, header)?;
        let [n, m] = head[..] else {
            return Err(Error::parse(hline, "header must be \"n m\""));
        };
        let (n, m) = (n as usize, m as usize);

        let mut edges = Vec::with_capacity(m);
        let mut last_line = hline;
        for k in 0..m {
            let Some((lno, line)) = lines.next() else {
                return Err(Error::parse(
                    last_line + 1,
                    format!("expected {m} edges, found {k}"),
                ));
            };
            last_line = lno;
            if line.starts_with("weights") {
                return Err(Error::parse(
                    lno,
                    format!("expected {m} edges, found {k}"),
                ));
            }
            let nums = parse_numbers(lno, line)?;
            let [u, v] = nums[..] else {
                return Err(Error::parse(lno, "edge line must be \"u v\""));
            };
            for w in [u, v] {
                if w < 1 || w as usize > n {
                    return Err(Error::parse(
                        lno,
                        format!("endpoint {w} out of range 1..={n}"),
                    ));
                }
            }
            edges.push((u as usize - 1, v as usize - 1));
        }

        let mut weights = vec![1u32; n];
        if let Some((lno, line)) = lines.next() {
            let Some(rest) = line.strip_prefix("weights") else {
                return Err(Error::parse(
                    lno,
                    format!("unexpected line after {m} edges"),
                ));
            };
            let ws = parse_numbers(lno, rest)?;
            if ws.len() != n {
                return Err(Error::parse(
                    lno,
                    format!("expected {n} weights, found {}", ws.len()),
                ));
            }
            for (i, &w) in ws.iter().enumerate() {
                if w < 1 {
                    return Err(Error::parse(
                        lno,
                        format!("weight of vertex {} must be at least 1", i + 1),
                    ));
                }
                weights[i] = u32::try_from(w)
                    .map_err(|_| Error::parse(lno, format!("weight {w} too large")))?;
            }
            if let Some((lno, _)) = lines.next() {
                return Err(Error::parse(lno, "trailing content after weights line"));
            }
        }
        Ok(Multigraph { n, edges, weights })
    }

    /// Renders the edge-list format; the weights line is written only when
    /// some weight differs from 1.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        if !self.has_unit_weights() {
            out.push_str("weights");
            for w in &self.weights {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        out
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<u64>> {
    text.split_ascii_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::parse(line, format!("invalid integer {tok:?}")))
        })
        .collect()
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            count: n,
        }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.size.fill(1);
        self.count = self.parent.len();
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}
