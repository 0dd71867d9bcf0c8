//! Exhaustive generation of small labeled graphs and multigraphs.

use crate::multigraph::Multigraph;

/// Vertex pairs `(u, v)` with `u < v` in lexicographic order.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Every labeled simple graph on `n` vertices, ordered by edge bitmask
/// over the pairs in lexicographic order.
pub fn simple_graphs(n: usize) -> impl Iterator<Item = Multigraph> {
    assert!(n <= 11, "too many vertices for labeled enumeration");
    let pairs = vertex_pairs(n);
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Multigraph::new(n, edges).expect("pairs are in range")
    })
}

/// Every labeled connected simple graph on `n` vertices.
pub fn connected_simple_graphs(n: usize) -> Vec<Multigraph> {
    simple_graphs(n)
        .filter(|g| is_connected(n, g.edges()))
        .collect()
}

/// Connected simple graphs on `1..=max_n` vertices, smallest first.
pub fn connected_simple_graphs_up_to(max_n: usize) -> Vec<Multigraph> {
    (1..=max_n).flat_map(connected_simple_graphs).collect()
}

/// Every multigraph on `1..=max_vertices` vertices with at most `max_edges`
/// edges, loops and parallel edges included. Each multiset of edges
/// appears once, with edges listed in pair order.
pub fn small_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    fn go(
        n: usize,
        slots: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Multigraph>,
    ) {
        out.push(Multigraph::new(n, cur.clone()).expect("slots are in range"));
        if left == 0 {
            return;
        }
        for i in start..slots.len() {
            cur.push(slots[i]);
            go(n, slots, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u..n).map(move |v| (u, v)))
            .collect();
        go(n, &slots, 0, max_edges, &mut Vec::new(), &mut out);
    }
    out
}

/// All weight vectors of length `n` with entries from `choices`.
pub fn weight_assignments(n: usize, choices: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                choices.iter().map(move |&c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}
