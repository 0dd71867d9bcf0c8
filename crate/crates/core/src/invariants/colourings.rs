//! Brute-force sums over vertex colourings and stable sets. These are the
//! definitions the faster routes are checked against.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{require_loopless, Limits};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::polyring::{var_minus, Monomial, Poly, Var};

const CHUNK: u128 = 1 << 12;

/// Folds all `colours^n` colourings into counts per key.
fn scan_colourings<K, F>(
    g: &Multigraph,
    colours: usize,
    limits: &Limits,
    key: F,
) -> Result<HashMap<K, u64>>
where
    K: Eq + Hash + Send,
    F: Fn(&[usize]) -> Option<K> + Sync,
{
    if colours == 0 {
        return Err(Error::Precondition("need at least one colour".into()));
    }
    let n = g.vertex_count();
    limits.check_colourings(colours, n)?;
    let total = (colours as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::Precondition("colouring count overflows".into()))?;
    let chunks = total.div_ceil(CHUNK);
    let merged = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut chi = vec![0usize; n];
            let mut rest = start;
            for c in chi.iter_mut() {
                *c = (rest % colours as u128) as usize;
                rest /= colours as u128;
            }
            let mut local = HashMap::new();
            for _ in start..end {
                if let Some(k) = key(&chi) {
                    *local.entry(k).or_insert(0u64) += 1;
                }
                for c in chi.iter_mut() {
                    *c += 1;
                    if *c < colours {
                        break;
                    }
                    *c = 0;
                }
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

/// Per-colour vertex counts followed by per-colour monochromatic edge counts.
fn colour_profile(g: &Multigraph, colours: usize, chi: &[usize]) -> Vec<u32> {
    let mut profile = vec![0u32; 2 * colours];
    for &c in chi {
        profile[c] += 1;
    }
    for &(u, v) in g.edges() {
        if chi[u] == chi[v] {
            profile[colours + chi[u]] += 1;
        }
    }
    profile
}

/// The extended Tutte symmetric function evaluated from its colouring-sum
/// definition with colours `1..=N`: `sum_chi prod_v x[chi(v)] *
/// prod_i (1 + t[i])^b_i(chi)`, where `b_i` counts edges of colour `i`.
pub fn ybar_evaluate_oracle(
    g: &Multigraph,
    x: &[BigRational],
    t: &[BigRational],
    limits: &Limits,
) -> Result<BigRational> {
    if x.len() != t.len() {
        return Err(Error::Precondition(format!(
            "{} x-values but {} t-values",
            x.len(),
            t.len()
        )));
    }
    let colours = x.len();
    let counts = scan_colourings(g, colours, limits, |chi| {
        Some(colour_profile(g, colours, chi))
    })?;
    let one = BigRational::one();
    let mut total = BigRational::zero();
    for (profile, c) in counts {
        let mut term = BigRational::from_integer(BigInt::from(c));
        for i in 0..colours {
            term *= num_traits::pow(x[i].clone(), profile[i] as usize);
            term *= num_traits::pow(&one + &t[i], profile[colours + i] as usize);
        }
        total += term;
    }
    Ok(total)
}

/// Stanley's Tutte symmetric function from its definition: every `t[i]`
/// equal to the scalar `t`.
pub fn tutte_symmetric_oracle(
    g: &Multigraph,
    x: &[BigRational],
    t: &BigRational,
    limits: &Limits,
) -> Result<BigRational> {
    ybar_evaluate_oracle(g, x, &vec![t.clone(); x.len()], limits)
}

/// Chromatic symmetric function in `x[1..=N]` as a sum over proper
/// colourings with `N` colours.
pub fn chromatic_symmetric_direct(g: &Multigraph, colours: usize, limits: &Limits) -> Result<Poly> {
    let counts = scan_colourings(g, colours, limits, |chi| {
        if g.edges().iter().any(|&(u, v)| chi[u] == chi[v]) {
            return None;
        }
        let mut used = vec![0u32; colours];
        for &c in chi {
            used[c] += 1;
        }
        Some(used)
    })?;
    Ok(Poly::from_terms(counts.into_iter().map(|(used, c)| {
        let m = Monomial::from_factors(
            used.iter()
                .enumerate()
                .map(|(i, &e)| (Var::x(i as u32 + 1), e)),
        );
        (m, BigInt::from(c))
    })))
}

/// Stability polynomial `sum_S p^|S| (1 - p)^(n - |S|)` over the stable
/// vertex sets `S`.
pub fn stability_direct(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    require_loopless(g, "the stability polynomial")?;
    let n = g.vertex_count();
    limits.check_subsets(n, "vertex count")?;
    let mut adjacent = vec![0u64; n];
    for &(u, v) in g.edges() {
        adjacent[u] |= 1 << v;
        adjacent[v] |= 1 << u;
    }
    let by_size: Vec<u64> = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, set| {
                let stable = (0..n).all(|v| set >> v & 1 == 0 || adjacent[v] & set == 0);
                if stable {
                    acc[set.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let p = Poly::var(Var::p());
    let one_minus = -var_minus(Var::p(), 1);
    Ok(by_size
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(s, &c)| {
            (&p.pow(s as u32) * &one_minus.pow((n - s) as u32)).scale(&BigInt::from(c))
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Multigraph {
        Multigraph::parse_edge_list(text).unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    const K3: &str = "3 3\n1 2\n2 3\n3 1\n";

    #[test]
    fn ybar_oracle_examples() {
        let lim = Limits::default();
        let k3 = g(K3);
        assert_eq!(ybar_evaluate_oracle(&k3, &[q(1)], &[q(0)], &lim).unwrap(), q(1));
        assert_eq!(ybar_evaluate_oracle(&k3, &[q(1)], &[q(1)], &lim).unwrap(), q(8));
        let ones = vec![q(1); 3];
        let zeros = vec![q(0); 3];
        assert_eq!(ybar_evaluate_oracle(&k3, &ones, &zeros, &lim).unwrap(), q(27));
        assert!(ybar_evaluate_oracle(&k3, &ones, &zeros[..2], &lim).is_err());
        assert!(ybar_evaluate_oracle(&k3, &[], &[], &lim).is_err());
    }

    #[test]
    fn tutte_symmetric_triangle_with_three_colours() {
        // 6 proper colourings, 18 with exactly one monochromatic edge,
        // 3 constant ones: 6 + 18 * 2 + 3 * 8
        let got = tutte_symmetric_oracle(&g(K3), &vec![q(1); 3], &q(1), &Limits::default())
            .unwrap();
        assert_eq!(got, q(66));
    }

    #[test]
    fn chromatic_symmetric_examples() {
        let lim = Limits::default();
        assert_eq!(
            chromatic_symmetric_direct(&g(K3), 3, &lim).unwrap(),
            p("6*x[1]*x[2]*x[3]")
        );
        assert_eq!(
            chromatic_symmetric_direct(&g("1 0"), 2, &lim).unwrap(),
            p("x[1] + x[2]")
        );
        assert!(chromatic_symmetric_direct(&g("1 1\n1 1\n"), 3, &lim)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn stability_examples() {
        let lim = Limits::default();
        assert_eq!(stability_direct(&g("1 0"), &lim).unwrap(), p("1"));
        assert_eq!(stability_direct(&g("2 1\n1 2\n"), &lim).unwrap(), p("1 - p^2"));
        assert_eq!(stability_direct(&g(K3), &lim).unwrap(), p("1 - 3*p^2 + 2*p^3"));
        assert!(matches!(
            stability_direct(&g("1 1\n1 1\n"), &lim),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn colouring_guard() {
        let big = Multigraph::new(13, vec![]).unwrap();
        assert!(matches!(
            chromatic_symmetric_direct(&big, 4, &Limits::default()),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
