//! Deletion–contraction evaluation of the weighted extended polynomial and
//! of the universal V-function.

use num_bigint::BigInt;
use num_integer::binomial;

use super::Limits;
use crate::error::Result;
use crate::multigraph::Multigraph;
use crate::polyring::{Monomial, Poly, Var};

/// Which non-loop edge to split on at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotPolicy {
    #[default]
    LowestIndex,
    HighestIndex,
}

impl PivotPolicy {
    fn pick(self, g: &Multigraph) -> Option<usize> {
        let non_loop = |&e: &usize| !g.is_loop(e);
        match self {
            PivotPolicy::LowestIndex => (0..g.edge_count()).find(non_loop),
            PivotPolicy::HighestIndex => (0..g.edge_count()).rev().find(non_loop),
        }
    }
}

/// Loops attached to each vertex.
fn loop_counts(g: &Multigraph) -> Vec<u32> {
    let mut loops = vec![0u32; g.vertex_count()];
    for &(u, _) in g.edges() {
        loops[u] += 1;
    }
    loops
}

fn deletion_contraction<B>(g: &Multigraph, policy: PivotPolicy, base: &B) -> Poly
where
    B: Fn(&Multigraph) -> Poly,
{
    match policy.pick(g) {
        None => base(g),
        Some(e) => {
            let deleted = g.delete_edge(e).expect("pivot is a valid edge");
            let contracted = g.contract_edge(e).expect("pivot is not a loop");
            deletion_contraction(&deleted, policy, base)
                + deletion_contraction(&contracted, policy, base)
        }
    }
}

/// Weighted extended polynomial by deletion–contraction. A graph whose only
/// edges are loops evaluates to `prod_i sum_j C(e_i, j) z[w_i, j]`, with
/// `e_i` loops and weight `w_i` at vertex `i`.
pub fn wbar_recurrence(g: &Multigraph, limits: &Limits, policy: PivotPolicy) -> Result<Poly> {
    limits.check_subsets(g.edge_count(), "edge count")?;
    let base = |h: &Multigraph| {
        let mut acc = Poly::one();
        for (&w, &e) in h.weights().iter().zip(&loop_counts(h)) {
            let factor = Poly::from_terms((0..=e).map(|j| {
                (
                    Monomial::var(Var::z(w, j)),
                    binomial(BigInt::from(e), BigInt::from(j)),
                )
            }));
            acc = &acc * &factor;
        }
        acc
    };
    Ok(deletion_contraction(g, policy, &base))
}

/// Tutte's V-function in `yk[0..=m]` by its defining recurrence; a
/// loops-only graph evaluates to `prod_i yk[e_i]`.
pub fn v_function_recursive(g: &Multigraph, limits: &Limits) -> Result<Poly> {
    limits.check_subsets(g.edge_count(), "edge count")?;
    let base = |h: &Multigraph| {
        Poly::term(
            Monomial::product(loop_counts(h).into_iter().map(Var::yk)),
            1,
        )
    };
    Ok(deletion_contraction(g, PivotPolicy::LowestIndex, &base))
}
