//! Independent oracles for the acceptance tests. Everything here is
//! deliberately naive — straight-line reimplementations from the
//! definitions, sharing no code path with the library algorithms.

use nbcx_core::graph::{Graph, Vertex, VertexSet};
use nbcx_core::wcol::Ordering;

/// Weak reachability by exhaustive simple-path enumeration:
/// `u` is weakly r-reachable from `v` when some simple path from `v`
/// to `u` of length at most `r` has `u` as its minimum-rank vertex.
pub fn wreach_oracle(g: &Graph, order: &Ordering, r: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut reach: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        let mut found = vec![false; n];
        let mut path = vec![v];
        enumerate_paths(g, r, &mut path, &mut |path| {
            let u = *path.last().unwrap();
            if !found[u] && path.iter().all(|&w| order.rank(u) <= order.rank(w)) {
                found[u] = true;
            }
        });
        reach[v] = (0..n).filter(|&u| found[u]).collect();
    }
    reach.into_iter().map(VertexSet::new).collect()
}

/// Calls `f` on every simple path (as a vertex list) extending
/// `path` by at most `budget` further edges, including `path` itself.
fn enumerate_paths(g: &Graph, budget: usize, path: &mut Vec<Vertex>, f: &mut impl FnMut(&[Vertex])) {
    f(path);
    if budget == 0 {
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbours(last) {
        if !path.contains(&w) {
            path.push(w);
            enumerate_paths(g, budget - 1, path, f);
            path.pop();
        }
    }
}

/// Maximum subgraph density by enumerating every non-empty vertex
/// subset (the optimum is attained on an induced subgraph). Returns
/// (edges, vertices) of the best subset in first-found order.
pub fn densest_subgraph_oracle(g: &Graph) -> (usize, usize) {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential in n");
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut best = (0usize, 1usize);
    for mask in 1u64..1 << n {
        let e = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let k = mask.count_ones() as usize;
        // Compare e/k > best.0/best.1 in integers.
        if e * best.1 > best.0 * k {
            best = (e, k);
        }
    }
    best
}

/// Closed r-ball traces on X recomputed from scratch (hand-rolled BFS
/// over an adjacency rebuilt from the edge list).
pub fn trace_oracle(g: &Graph, x: &VertexSet, r: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n)
        .map(|v| {
            let mut dist = vec![usize::MAX; n];
            dist[v] = 0;
            let mut frontier = vec![v];
            for d in 1..=r {
                let mut next = Vec::new();
                for &u in &frontier {
                    for &w in &adj[u] {
                        if dist[w] == usize::MAX {
                            dist[w] = d;
                            next.push(w);
                        }
                    }
                }
                frontier = next;
            }
            x.iter().filter(|&u| dist[u] != usize::MAX).collect()
        })
        .collect()
}
