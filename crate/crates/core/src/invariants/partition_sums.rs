//! Sums over all partitions of the vertex set.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use rayon::prelude::*;
use smallvec::SmallVec;

use super::Limits;
use crate::error::Result;
use crate::multigraph::Multigraph;
use crate::partitions::{growth_prefixes, RestrictedGrowth};
use crate::polyring::{Monomial, Poly, Var};

const PREFIX_LEN: usize = 5;

/// Folds every vertex partition into counts per key. The key function gets
/// the size of each block and the number of edges inside it.
fn scan_partitions<K, F>(g: &Multigraph, limits: &Limits, key: F) -> Result<HashMap<K, u64>>
where
    K: Eq + Hash + Send,
    F: Fn(&[u32], &[u32]) -> K + Sync,
{
    let n = g.vertex_count();
    limits.check_partitions(n, "vertex count for a partition sum")?;
    let prefixes = growth_prefixes(n.min(PREFIX_LEN));
    let merged = prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut rgs = RestrictedGrowth::with_prefix(n, &prefix);
            let mut local: HashMap<K, u64> = HashMap::new();
            let mut sizes = Vec::with_capacity(n);
            let mut inside = Vec::with_capacity(n);
            while rgs.advance() {
                let labels = rgs.labels();
                sizes.clear();
                sizes.resize(rgs.block_count(), 0u32);
                inside.clear();
                inside.resize(rgs.block_count(), 0u32);
                for &l in labels {
                    sizes[l] += 1;
                }
                for &(u, v) in g.edges() {
                    if labels[u] == labels[v] {
                        inside[labels[u]] += 1;
                    }
                }
                *local.entry(key(&sizes, &inside)).or_insert(0) += 1;
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

/// Polychromate: `sum_pi y^e(pi) x[tau(pi)]`, where `e(pi)` counts edges
/// inside blocks and `x[tau]` is the product of `x[size]` over blocks.
pub fn polychromate(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let counts = scan_partitions(g, limits, |sizes, inside| {
        let mut s: SmallVec<[u32; 8]> = sizes.into();
        s.sort_unstable();
        (s, inside.iter().sum::<u32>())
    })?;
    Ok(Poly::from_terms(counts.into_iter().map(|((sizes, e), c)| {
        let m = Monomial::from_factors(
            sizes
                .iter()
                .map(|&s| (Var::x(s), 1))
                .chain([(Var::y(), e)]),
        );
        (m, BigInt::from(c))
    })))
}

/// Extended polychromate: `sum_pi prod_blocks x2[size, inside edges]`.
pub fn extended_polychromate(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    let counts = scan_partitions(g, limits, |sizes, inside| {
        let mut k: SmallVec<[(u32, u32); 8]> =
            sizes.iter().copied().zip(inside.iter().copied()).collect();
        k.sort_unstable();
        k
    })?;
    Ok(Poly::from_terms(counts.into_iter().map(|(key, c)| {
        (
            Monomial::product(key.iter().map(|&(a, b)| Var::x2(a, b))),
            BigInt::from(c),
        )
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn g(text: &str) -> Multigraph {
        Multigraph::parse_edge_list(text).unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    const K3: &str = "3 3\n1 2\n2 3\n3 1\n";
    const PATH: &str = "3 2\n1 2\n2 3\n";

    #[test]
    fn polychromate_examples() {
        let lim = Limits::default();
        assert_eq!(
            polychromate(&g(K3), &lim).unwrap(),
            p("x[1]^3 + 3*y*x[2]*x[1] + y^3*x[3]")
        );
        assert_eq!(polychromate(&g("1 0"), &lim).unwrap(), p("x[1]"));
        assert_eq!(
            polychromate(&g(PATH), &lim).unwrap(),
            p("x[1]^3 + 2*y*x[2]*x[1] + x[2]*x[1] + y^2*x[3]")
        );
    }

    #[test]
    fn extended_polychromate_examples() {
        let lim = Limits::default();
        assert_eq!(
            extended_polychromate(&g(K3), &lim).unwrap(),
            p("x2[1,0]^3 + 3*x2[2,1]*x2[1,0] + x2[3,3]")
        );
        assert_eq!(
            extended_polychromate(&g(PATH), &lim).unwrap(),
            p("x2[1,0]^3 + 2*x2[2,1]*x2[1,0] + x2[2,0]*x2[1,0] + x2[3,2]")
        );
        assert_eq!(
            extended_polychromate(&g("2 0"), &lim).unwrap(),
            p("x2[1,0]^2 + x2[2,0]")
        );
    }

    #[test]
    fn bell_guard() {
        let big = Multigraph::new(14, vec![]).unwrap();
        assert!(matches!(
            polychromate(&big, &Limits::default()),
            Err(Error::GuardExceeded { size: 14, limit: 13, .. })
        ));
    }

    #[test]
    fn polychromate_term_count_sums_to_bell_number() {
        // Bell(7) = 877, via the Bell triangle
        let mut row = vec![1u64];
        for _ in 0..7 {
            let mut next = vec![*row.last().unwrap()];
            for &r in &row {
                next.push(next.last().unwrap() + r);
            }
            row = next;
        }
        let bell7 = row[0];
        let poly = polychromate(&Multigraph::new(7, vec![(0, 1), (2, 3)]).unwrap(), &Limits::default())
            .unwrap();
        let total: BigInt = poly.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(bell7));
        assert_eq!(bell7, 877);
    }
}
