//! Brute-force oracles written independently of the library internals.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gpoly_core::{Monomial, Multigraph, Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const K3: &str = "3 3\n1 2\n2 3\n3 1\n";
pub const PATH2: &str = "3 2\n1 2\n2 3\n";
pub const G1: &str = "3 3\n1 2\n2 3\n1 1\n";
pub const G2: &str = "3 3\n1 2\n2 3\n2 2\n";
pub const FIGURE: &str = "2 3\n1 2\n1 2\n1 1\n";

/// Brylawski's pair: vertices a..k numbered 1..11.
pub const BRYLAWSKI_1: &str = "11 18\n1 7\n1 8\n1 9\n2 3\n2 10\n2 11\n3 4\n6 3\n4 5\n7 10\n8 6\n9 11\n2 7\n3 10\n5 11\n5 6\n3 8\n5 9\n";
pub const BRYLAWSKI_2: &str = "11 18\n1 7\n1 8\n1 9\n2 3\n2 10\n2 11\n3 4\n6 3\n4 5\n8 10\n9 6\n7 11\n2 7\n3 10\n5 11\n5 6\n3 8\n5 9\n";

pub fn graph(text: &str) -> Multigraph {
    Multigraph::parse_edge_list(text).unwrap()
}

pub fn poly(text: &str) -> Poly {
    text.parse().unwrap()
}

/// Component label of every vertex of the spanning subgraph on `mask`.
fn component_labels(g: &Multigraph, mask: u64) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label: Vec<usize> = (0..n).collect();
    // repeated relaxation; tiny graphs only
    loop {
        let mut changed = false;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                let m = label[u].min(label[v]);
                if label[u] != m || label[v] != m {
                    label[u] = m;
                    label[v] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

/// Per component of `G|A`: (vertex count, edge count, weight sum).
pub fn components_of(g: &Multigraph, mask: u64) -> Vec<(u32, u32, u32)> {
    let label = component_labels(g, mask);
    let mut comps: BTreeMap<usize, (u32, u32, u32)> = BTreeMap::new();
    for (v, &l) in label.iter().enumerate() {
        let e = comps.entry(l).or_default();
        e.0 += 1;
        e.2 += g.weights()[v];
    }
    for (i, &(u, _)) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            comps.get_mut(&label[u]).unwrap().1 += 1;
        }
    }
    comps.into_values().collect()
}

/// `sum_A prod_components z[w, e - v + 1]`, with `w` the vertex count or the
/// weight sum.
fn subset_sum(g: &Multigraph, weighted: bool) -> Poly {
    let mut out = Poly::zero();
    for mask in 0..1u64 << g.edge_count() {
        let vars = components_of(g, mask)
            .into_iter()
            .map(|(v, e, w)| Var::z(if weighted { w } else { v }, e + 1 - v));
        out.add_term(Monomial::product(vars), BigInt::one());
    }
    out
}

pub fn oracle_ubar(g: &Multigraph) -> Poly {
    subset_sum(g, false)
}

pub fn oracle_wbar(g: &Multigraph) -> Poly {
    subset_sum(g, true)
}

/// Every set partition of `0..n` as a block label per element.
pub fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur[i] = b;
            go(i + 1, blocks.max(b + 1), cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, 0, &mut vec![0; n], &mut out);
    out
}

/// Extended polychromate straight from the partition sum.
pub fn oracle_ext_polychromate(g: &Multigraph) -> Poly {
    let mut out = Poly::zero();
    for labels in all_set_partitions(g.vertex_count()) {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut size = vec![0u32; k];
        let mut inside = vec![0u32; k];
        for &l in &labels {
            size[l] += 1;
        }
        for &(u, v) in g.edges() {
            if labels[u] == labels[v] {
                inside[labels[u]] += 1;
            }
        }
        let vars = (0..k).map(|b| Var::x2(size[b], inside[b]));
        out.add_term(Monomial::product(vars), BigInt::one());
    }
    out
}

pub fn proper_colourings(g: &Multigraph, colours: u32) -> u64 {
    let n = g.vertex_count() as u32;
    let total = (colours as u64).pow(n);
    (0..total)
        .filter(|&code| {
            let colour = |v: usize| code / (colours as u64).pow(v as u32) % colours as u64;
            g.edges().iter().all(|&(u, v)| colour(u) != colour(v))
        })
        .count() as u64
}

pub fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-7..=7);
    let den: i64 = rng.gen_range(1..=5);
    BigRational::new(num.into(), den.into())
}

pub fn pbar_value(pairs: &[(u32, u32)], x: &[BigRational], t: &[BigRational]) -> BigRational {
    let mut prod = BigRational::one();
    for &(a, b) in pairs {
        let mut s = BigRational::zero();
        for (xi, ti) in x.iter().zip(t) {
            s += num_traits::pow(xi.clone(), a as usize) * num_traits::pow(ti.clone(), b as usize);
        }
        prod *= s;
    }
    prod
}

/// `mbar` by literal enumeration of ordered tuples of distinct indices.
pub fn mbar_value(pairs: &[(u32, u32)], x: &[BigRational], t: &[BigRational]) -> BigRational {
    fn go(
        pairs: &[(u32, u32)],
        x: &[BigRational],
        t: &[BigRational],
        used: &mut Vec<bool>,
        acc: BigRational,
    ) -> BigRational {
        let Some((&(a, b), rest)) = pairs.split_first() else {
            return acc;
        };
        let mut total = BigRational::zero();
        for i in 0..x.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let f = num_traits::pow(x[i].clone(), a as usize)
                * num_traits::pow(BigRational::one() + &t[i], b as usize);
            total += go(rest, x, t, used, &acc * f);
            used[i] = false;
        }
        total
    }
    go(pairs, x, t, &mut vec![false; x.len()], BigRational::one())
}
