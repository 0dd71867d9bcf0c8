//! Integer partitions, integer pair partitions and set partitions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntegerPartition(Vec<u32>);

impl IntegerPartition {
    /// Sorts the parts; zero parts are dropped.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, `k(tau)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A list of `(a_i, b_i)` pairs in lexicographically decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PairPartition(Vec<(u32, u32)>);

impl PairPartition {
    /// Sorts into canonical (lexicographically decreasing) order.
    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.sort_unstable_by(|a, b| b.cmp(a));
        PairPartition(pairs)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum a_i`.
    pub fn first_total(&self) -> u32 {
        self.0.iter().map(|p| p.0).sum()
    }

    /// `sum b_i`.
    pub fn second_total(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    /// Whether this is an integer pair partition of `(a, b)`.
    pub fn is_pair_partition_of(&self, a: u32, b: u32) -> bool {
        self.0.iter().all(|p| p.0 >= 1)
            && self.first_total() == a
            && self.second_total() <= b
            && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn first_parts(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.0.iter().map(|p| p.0).collect())
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// A partition of `{0, .., n-1}` into non-empty blocks. Blocks are sorted
/// internally and ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Validates that `blocks` partition `{0, .., n-1}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Malformed("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Malformed(format!("vertex {v} in two blocks")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Malformed(format!("vertex {v} not covered")));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        Ok(VertexPartition { blocks })
    }

    /// Builds the partition whose blocks are the classes of equal labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let next = blocks.len();
            let i = *slot.entry(l).or_insert(next);
            if i == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[i].push(v);
        }
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn element_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Integer partition formed by the block sizes.
    pub fn partition_type(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.blocks.iter().map(|b| b.len() as u32).collect())
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn integer_partitions(n: u32) -> Vec<IntegerPartition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if rem == 0 {
            out.push(IntegerPartition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All integer pair partitions of `(a, b)`, generated in lexicographically
/// decreasing order of the pair sequence. The second coordinates may sum to
/// anything from `0` to `b`.
pub fn integer_pair_partitions(a: u32, b: u32) -> Vec<PairPartition> {
    fn go(
        rem_a: u32,
        rem_b: u32,
        prev: (u32, u32),
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<PairPartition>,
    ) {
        if rem_a == 0 {
            out.push(PairPartition(cur.clone()));
            return;
        }
        for x in (1..=rem_a.min(prev.0)).rev() {
            let y_max = if x == prev.0 { prev.1.min(rem_b) } else { rem_b };
            for y in (0..=y_max).rev() {
                cur.push((x, y));
                go(rem_a - x, rem_b - y, (x, y), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if a > 0 {
        go(a, b, (a, b), &mut Vec::new(), &mut out);
    }
    out
}

/// Restricted growth strings of length `n`: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. Each one encodes a set partition.
///
/// Positions below the frozen prefix never change, which lets callers split
/// the enumeration into independent ranges.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    labels: Vec<usize>,
    // prefix_max[i] = max(labels[..=i])
    prefix_max: Vec<usize>,
    frozen: usize,
    started: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(n, &[])
    }

    /// Enumerates the strings extending `prefix`, which must itself be a
    /// restricted growth string.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Self {
        assert!(prefix.len() <= n, "prefix longer than the string");
        let mut labels = prefix.to_vec();
        labels.resize(n, 0);
        let mut prefix_max = Vec::with_capacity(n);
        let mut m = 0;
        for (i, &l) in labels.iter().enumerate() {
            assert!(i > 0 || l == 0, "restricted growth strings start at 0");
            assert!(i == 0 || l <= m + 1, "prefix is not a restricted growth string");
            m = m.max(l);
            prefix_max.push(m);
        }
        RestrictedGrowth {
            labels,
            prefix_max,
            frozen: prefix.len().max(1),
            started: false,
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }

    /// Moves to the next string; the first call yields the initial one.
    pub fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.labels.len();
        let mut i = n;
        while i > self.frozen {
            i -= 1;
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        false
    }
}

/// Iterator over all set partitions of `{0, .., k-1}`.
pub struct SetPartitions {
    rgs: RestrictedGrowth,
}

impl Iterator for SetPartitions {
    type Item = VertexPartition;

    fn next(&mut self) -> Option<VertexPartition> {
        self.rgs
            .advance()
            .then(|| VertexPartition::from_labels(self.rgs.labels()))
    }
}

/// Every set partition of a `k`-element set exactly once, in restricted
/// growth string order.
pub fn set_partitions(k: usize) -> SetPartitions {
    SetPartitions {
        rgs: RestrictedGrowth::new(k),
    }
}

/// All restricted growth strings of length `len`, used to split partition
/// enumerations into independent jobs.
pub(crate) fn growth_prefixes(len: usize) -> Vec<Vec<usize>> {
    let mut rgs = RestrictedGrowth::new(len);
    let mut out = Vec::new();
    while rgs.advance() {
        out.push(rgs.labels().to_vec());
    }
    out
}

/// `E(pi)`: per block, its size and the number of edges (loops included)
/// with both endpoints inside it.
pub fn pair_type_of_vertex_partition(g: &Multigraph, pi: &VertexPartition) -> Result<PairPartition> {
    let n = g.vertex_count();
    if pi.element_count() != n {
        return Err(Error::Precondition(format!(
            "partition covers {} elements but the graph has {n} vertices",
            pi.element_count()
        )));
    }
    let mut block_of = vec![usize::MAX; n];
    for (i, block) in pi.blocks().iter().enumerate() {
        for &v in block {
            if v >= n || block_of[v] != usize::MAX {
                return Err(Error::Precondition(
                    "not a partition of the vertex set".into(),
                ));
            }
            block_of[v] = i;
        }
    }
    let mut inside = vec![0u32; pi.blocks().len()];
    for &(u, v) in g.edges() {
        if block_of[u] == block_of[v] {
            inside[block_of[u]] += 1;
        }
    }
    Ok(PairPartition::from_pairs(
        pi.blocks()
            .iter()
            .zip(inside)
            .map(|(b, e)| (b.len() as u32, e))
            .collect(),
    ))
}

/// Number of coarsenings of type `target` of a fixed set partition of type
/// `tau`: partitions whose blocks are unions of blocks of the original.
pub fn coarsening_count(tau: &IntegerPartition, target: &IntegerPartition) -> Result<u64> {
    if tau.total() != target.total() {
        return Err(Error::Precondition(format!(
            "{tau} and {target} partition different totals"
        )));
    }
    Ok(coarsening_table(tau).get(target).copied().unwrap_or(0))
}

/// All coarsening counts `a_{tau, tau'}` for a fixed `tau`, keyed by `tau'`.
pub fn coarsening_table(tau: &IntegerPartition) -> BTreeMap<IntegerPartition, u64> {
    let parts = tau.parts();
    let mut table = BTreeMap::new();
    let mut rgs = RestrictedGrowth::new(parts.len());
    let mut sizes = Vec::new();
    while rgs.advance() {
        sizes.clear();
        sizes.resize(rgs.block_count(), 0u32);
        for (&label, &p) in rgs.labels().iter().zip(parts) {
            sizes[label] += p;
        }
        *table
            .entry(IntegerPartition::from_parts(sizes.clone()))
            .or_insert(0) += 1;
    }
    table
}
