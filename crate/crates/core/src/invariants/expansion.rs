//! Sums over all `2^m` spanning subgraphs.
//!
//! The mask range is split into contiguous chunks, each folded into a local
//! table of `key -> count`, and the tables are merged by addition. Counts are
//! exact, so the result does not depend on the schedule.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use rayon::prelude::*;
use smallvec::SmallVec;

use super::Limits;
use crate::equivalence::{PairedBasis, PairedCoefficientMap};
use crate::error::Result;
use crate::multigraph::{Component, DisjointSets, Multigraph};
use crate::partitions::PairPartition;
use crate::polyring::{var_minus, Monomial, Poly, Var};

/// What a key function sees for one edge subset `A`.
pub(crate) struct SubsetView<'a> {
    /// Number of edges in `A`.
    pub size: usize,
    /// Components of `G|A`, ordered by smallest vertex.
    pub components: &'a [Component],
}

impl SubsetView<'_> {
    /// `|A| - r(A)`, the nullity of `G|A`.
    pub fn nullity(&self) -> usize {
        self.components.iter().map(Component::nullity).sum()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.vertices - 1).sum()
    }
}

struct Scanner<'g> {
    g: &'g Multigraph,
    dsu: DisjointSets,
    slot: Vec<usize>,
    comps: Vec<Component>,
}

impl<'g> Scanner<'g> {
    fn new(g: &'g Multigraph) -> Self {
        Scanner {
            g,
            dsu: DisjointSets::new(g.vertex_count()),
            slot: vec![usize::MAX; g.vertex_count()],
            comps: Vec::with_capacity(g.vertex_count()),
        }
    }

    fn scan(&mut self, mask: u64) -> SubsetView<'_> {
        let edges = self.g.edges();
        let weights = self.g.weights();
        self.dsu.reset();
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = edges[e];
            self.dsu.union(u, v);
        }
        self.slot.fill(usize::MAX);
        self.comps.clear();
        for (v, &w) in weights.iter().enumerate() {
            let r = self.dsu.find(v);
            if self.slot[r] == usize::MAX {
                self.slot[r] = self.comps.len();
                self.comps.push(Component {
                    vertices: 0,
                    edges: 0,
                    weight: 0,
                });
            }
            let c = &mut self.comps[self.slot[r]];
            c.vertices += 1;
            c.weight += u64::from(w);
        }
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let r = self.dsu.find(edges[e].0);
            self.comps[self.slot[r]].edges += 1;
        }
        SubsetView {
            size: mask.count_ones() as usize,
            components: &self.comps,
        }
    }
}

const CHUNK_BITS: u32 = 12;

/// Folds every edge subset into counts per key.
pub(crate) fn scan_subsets<K, F>(
    g: &Multigraph,
    limits: &Limits,
    what: &'static str,
    key: F,
) -> Result<HashMap<K, u64>>
where
    K: Eq + Hash + Send,
    F: Fn(&SubsetView<'_>) -> K + Sync,
{
    let m = g.edge_count();
    limits.check_subsets(m, what)?;
    let total: u64 = 1u64 << m;
    let chunk: u64 = 1u64 << CHUNK_BITS.min(m as u32);
    let chunks = total / chunk;
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut scanner = Scanner::new(g);
            let mut local: HashMap<K, u64> = HashMap::new();
            for mask in c * chunk..(c + 1) * chunk {
                let view = scanner.scan(mask);
                *local.entry(key(&view)).or_insert(0) += 1;
            }
            local
        })
        .reduce(HashMap::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(merged)
}

type PairKey = SmallVec<[(u32, u32); 8]>;

fn sorted_pairs<I: Iterator<Item = (u32, u32)>>(it: I) -> PairKey {
    let mut k: PairKey = it.collect();
    k.sort_unstable();
    k
}

fn z_poly_from_counts(counts: HashMap<PairKey, u64>) -> Poly {
    Poly::from_terms(counts.into_iter().map(|(key, c)| {
        (
            Monomial::product(key.iter().map(|&(i, j)| Var::z(i, j))),
            BigInt::from(c),
        )
    }))
}

/// Extended U-polynomial: for each subset `A`, the product over components
/// of `G|A` of `z[c_i, e_i - c_i + 1]`. Vertex weights are ignored.
pub fn ubar(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let counts = scan_subsets(g, limits, "edge count", |v| {
        sorted_pairs(
            v.components
                .iter()
                .map(|c| (c.vertices as u32, c.nullity() as u32)),
        )
    })?;
    Ok(z_poly_from_counts(counts))
}

/// Weighted extended polynomial: like [`ubar`] with the first index replaced
/// by the component's total vertex weight.
pub fn wbar_expansion(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let counts = scan_subsets(g, limits, "edge count", |v| {
        sorted_pairs(
            v.components
                .iter()
                .map(|c| (c.weight as u32, c.nullity() as u32)),
        )
    })?;
    Ok(z_poly_from_counts(counts))
}

/// U-polynomial by the states-model expansion
/// `sum_A x[n_1] .. x[n_k] (y - 1)^(|A| - r(A))`.
pub fn u_poly(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let counts = scan_subsets(g, limits, "edge count", |v| {
        let mut sizes: SmallVec<[u32; 8]> = v.components.iter().map(|c| c.vertices as u32).collect();
        sizes.sort_unstable();
        (sizes, v.nullity() as u32)
    })?;
    let y1 = var_minus(Var::y(), 1);
    let mut powers: HashMap<u32, Poly> = HashMap::new();
    let mut out = Poly::zero();
    for ((sizes, j), c) in counts {
        let xs = Monomial::product(sizes.iter().map(|&s| Var::x(s)));
        let pw = powers.entry(j).or_insert_with(|| y1.pow(j));
        out += pw.mul_monomial(&xs).scale(&BigInt::from(c));
    }
    Ok(out)
}

/// Tutte polynomial in the scalars `X`, `Y` by the rank-nullity expansion.
pub fn tutte(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let full_rank = g.vertex_count() - g.component_count();
    let counts = scan_subsets(g, limits, "edge count", |v| {
        ((full_rank - v.rank()) as u32, v.nullity() as u32)
    })?;
    let x1 = var_minus(Var::tutte_x(), 1);
    let y1 = var_minus(Var::tutte_y(), 1);
    Ok(counts
        .into_iter()
        .map(|((a, b), c)| (&x1.pow(a) * &y1.pow(b)).scale(&BigInt::from(c)))
        .sum())
}

/// Chromatic polynomial in `lambda` by Whitney's expansion
/// `sum_A (-1)^|A| lambda^k(G|A)`.
pub fn chromatic(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let counts = scan_subsets(g, limits, "edge count", |v| {
        (v.components.len() as u32, v.size % 2 == 1)
    })?;
    Ok(Poly::from_terms(counts.into_iter().map(|((k, odd), c)| {
        let c = BigInt::from(c);
        (
            Monomial::from_factors([(Var::lambda(), k)]),
            if odd { -c } else { c },
        )
    })))
}

/// Extended Tutte symmetric function in the paired power-sum basis: the
/// coefficient of `pbar_E` is the number of subsets `A` whose component
/// pair type is `E`.
pub fn ybar_coefficients(g: &Multigraph, limits: &Limits) -> Result<PairedCoefficientMap> {
    let counts = scan_subsets(g, limits, "edge count", |v| {
        sorted_pairs(
            v.components
                .iter()
                .map(|c| (c.vertices as u32, c.edges as u32)),
        )
    })?;
    let mut map = PairedCoefficientMap::new(
        PairedBasis::PowerSum,
        g.vertex_count() as u32,
        g.edge_count() as u32,
    );
    for (key, c) in counts {
        map.add(PairPartition::from_pairs(key.to_vec()), BigInt::from(c))?;
    }
    Ok(map)
}

/// 2-polymatroid rank generating function
/// `sum_A u^(n - f(A)) v^(2|A| - f(A))`, where `f(A)` counts the vertices
/// incident with `A`.
pub fn two_polymatroid_direct(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    super::require_two_polymatroid_graph(g)?;
    let n = g.vertex_count();
    let counts = scan_subsets(g, limits, "edge count", |v| {
        let covered: usize = v
            .components
            .iter()
            .filter(|c| c.edges > 0)
            .map(|c| c.vertices)
            .sum();
        ((n - covered) as u32, (2 * v.size - covered) as u32)
    })?;
    Ok(Poly::from_terms(counts.into_iter().map(|((a, b), c)| {
        (
            Monomial::from_factors([(Var::u(), a), (Var::v(), b)]),
            BigInt::from(c),
        )
    })))
}
