mod common;

use common::{oracle_ext_polychromate, oracle_ubar, oracle_wbar, proper_colourings};
use gpoly_core::equivalence::{
    to_augmented_monomial, ubar_to_ybar, ybar_to_extended_polychromate, ybar_to_ubar,
};
use gpoly_core::graph6::{parse_graph6, to_graph6};
use gpoly_core::invariants::{self, specialize, Limits, PivotPolicy};
use gpoly_core::{Monomial, Multigraph, Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_var() -> impl Strategy<Value = Var> {
    prop_oneof![
        (1u32..=3).prop_map(Var::x),
        Just(Var::y()),
        (1u32..=2, 0u32..=1).prop_map(|(i, j)| Var::z(i, j)),
    ]
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec((small_var(), 1u32..=3), 0..3), -5i64..=5),
        0..5,
    )
    .prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(f, c)| (Monomial::from_factors(f), BigInt::from(c))),
        )
    })
}

/// Up to 5 vertices and 6 edges, loops and parallel edges allowed.
fn small_graph() -> impl Strategy<Value = Multigraph> {
    (1usize..=5).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((0..n, 0..n), 0..=6),
            prop::collection::vec(1u32..=3, n),
        )
            .prop_map(|(n, edges, w)| Multigraph::new(n, edges).unwrap().with_weights(w).unwrap())
    })
}

fn small_simple_graph() -> impl Strategy<Value = Multigraph> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Multigraph::new(n, edges).unwrap()
        })
    })
}

fn unit(g: &Multigraph) -> Multigraph {
    g.clone().with_weights(vec![1; g.vertex_count()]).unwrap()
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn text_and_json_round_trip(p in small_poly()) {
        let parsed: Poly = p.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn substitution_is_a_ring_map(a in small_poly(), b in small_poly(), img in small_poly()) {
        let rule = |v: Var| (v == Var::y()).then(|| img.clone());
        prop_assert_eq!((&a * &b).substitute(rule), &a.substitute(rule) * &b.substitute(rule));
        prop_assert_eq!((&a + &b).substitute(rule), &a.substitute(rule) + &b.substitute(rule));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), vals in prop::collection::vec(-4i64..=4, 8)) {
        let at = |v: Var| {
            let i = match (v.family().name(), v.indices()) {
                ("x", [i]) => *i as usize - 1,
                ("y", []) => 3,
                (_, [i, j]) => 4 + 2 * (*i as usize - 1) + *j as usize,
                _ => unreachable!(),
            };
            Some(int(vals[i]))
        };
        let (ea, eb) = (a.evaluate(at).unwrap(), b.evaluate(at).unwrap());
        prop_assert_eq!((&a * &b).evaluate(at).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(at).unwrap(), ea + eb);
    }

    #[test]
    fn rank_plus_components_is_vertex_count(g in small_graph(), mask in any::<u8>()) {
        let subset: Vec<usize> = (0..g.edge_count()).filter(|i| mask >> i & 1 == 1).collect();
        let sub = g.spanning_subgraph(&subset).unwrap();
        prop_assert_eq!(g.rank(&subset).unwrap() + sub.component_count(), g.vertex_count());
    }

    #[test]
    fn ubar_matches_oracle(g in small_graph()) {
        let l = Limits::default();
        prop_assert_eq!(invariants::ubar(&g, &l).unwrap(), oracle_ubar(&g));
        prop_assert_eq!(invariants::wbar_expansion(&g, &l).unwrap(), oracle_wbar(&g));
    }

    #[test]
    fn ubar_ignores_edge_order_and_labels(g in small_graph(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
        // deterministic shuffles from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        for i in (1..edges.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            edges.swap(i, (s >> 33) as usize % (i + 1));
        }
        let relabeled: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (perm[v], perm[u])).collect();
        let h = Multigraph::new(n, relabeled).unwrap();
        let l = Limits::default();
        prop_assert_eq!(invariants::ubar(&g, &l).unwrap(), invariants::ubar(&h, &l).unwrap());
    }

    #[test]
    fn recurrence_matches_expansion(g in small_graph()) {
        let l = Limits::default();
        let want = invariants::wbar_expansion(&g, &l).unwrap();
        for policy in [PivotPolicy::LowestIndex, PivotPolicy::HighestIndex] {
            prop_assert_eq!(&invariants::wbar_recurrence(&g, &l, policy).unwrap(), &want);
        }
    }

    #[test]
    fn deletion_contraction_on_a_non_loop(g in small_graph(), pick in any::<usize>()) {
        let l = Limits::default();
        let candidates: Vec<usize> = (0..g.edge_count()).filter(|&e| !g.is_loop(e)).collect();
        prop_assume!(!candidates.is_empty());
        let e = candidates[pick % candidates.len()];
        let lhs = invariants::wbar_expansion(&g, &l).unwrap();
        let rhs = invariants::wbar_expansion(&g.delete_edge(e).unwrap(), &l).unwrap()
            + invariants::wbar_expansion(&g.contract_edge(e).unwrap(), &l).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extended_forms_agree(g in small_graph()) {
        let l = Limits::default();
        let g = unit(&g);
        let ub = invariants::ubar(&g, &l).unwrap();
        let ybar = ubar_to_ybar(&ub).unwrap();
        prop_assert_eq!(&ybar_to_ubar(&ybar).unwrap(), &ub);
        prop_assert_eq!(ybar_to_extended_polychromate(&ybar), oracle_ext_polychromate(&g));
        prop_assert_eq!(to_augmented_monomial(&ybar).n(), g.vertex_count() as u32);
    }

    #[test]
    fn specializations_hold(g in small_graph()) {
        let l = Limits::default();
        let g = unit(&g);
        let u = invariants::u_poly(&g, &l).unwrap();
        prop_assert_eq!(&specialize::ubar_to_u(&invariants::ubar(&g, &l).unwrap()), &u);
        let t = invariants::tutte(&g, &l).unwrap();
        prop_assert_eq!(&specialize::u_to_tutte(&u, g.component_count()).unwrap(), &t);
        // T(2, 2) counts edge subsets
        let t22 = t.evaluate(|_| Some(int(2))).unwrap();
        prop_assert_eq!(t22, int(1 << g.edge_count()));
        let p = invariants::chromatic(&g, &l).unwrap();
        for lambda in 0..=3u32 {
            let value = p.evaluate(|_| Some(int(lambda.into()))).unwrap();
            prop_assert_eq!(value, int(proper_colourings(&g, lambda) as i64));
        }
    }

    #[test]
    fn graph6_round_trip(g in small_simple_graph()) {
        let s = to_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        let sorted = |h: &Multigraph| {
            let mut e: Vec<_> = h.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            e.sort_unstable();
            e
        };
        prop_assert_eq!(sorted(&back), sorted(&g));
        prop_assert_eq!(to_graph6(&back).unwrap(), s);
    }

    #[test]
    fn edge_list_round_trip(g in small_graph()) {
        let back = Multigraph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.weights(), g.weights());
    }
}
