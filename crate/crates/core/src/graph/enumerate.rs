//! Exhaustive enumeration of labelled graphs on few vertices, used for
//! theorem verification over complete corpora.

use super::Graph;
use crate::{Error, Result};
use std::collections::HashSet;

/// Hard cap: 2^21 labelled graphs at n = 7 is the most we enumerate.
pub const MAX_ENUM_N: usize = 7;

/// Streams every labelled graph on `n` vertices in a fixed order
/// (ascending edge-mask, edges ordered lexicographically). With
/// `connected_only`, disconnected graphs are skipped.
pub fn enumerate_small_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUM_N {
        return Err(Error::guard(format!(
            "labelled enumeration is capped at n <= {MAX_ENUM_N} (requested n = {n})"
        )));
    }
    let pairs = vertex_pairs(n);
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("pair edges are valid");
        if connected_only && !g.is_connected() {
            None
        } else {
            Some(g)
        }
    }))
}

/// One representative per isomorphism class, deduplicated by the
/// canonical edge-mask. Feasible for n <= 7; prefer `max_m` to keep the
/// corpus small for expensive downstream checks.
pub fn enumerate_small_graphs_iso(
    n: usize,
    connected_only: bool,
    max_m: Option<usize>,
) -> Result<Vec<Graph>> {
    if n > MAX_ENUM_N {
        return Err(Error::guard(format!(
            "isomorphism-deduplicated enumeration is capped at n <= {MAX_ENUM_N}"
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in enumerate_small_graphs(n, connected_only)? {
        if let Some(cap) = max_m {
            if g.m() > cap {
                continue;
            }
        }
        if seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Minimum edge-mask over all vertex relabellings: equal codes iff
/// isomorphic. Only for graphs small enough to enumerate permutations.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical code enumerates all {n}! permutations");
    let pairs = vertex_pairs(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if g.has_edge(p[u], p[v]) {
                code |= 1 << i;
            }
        }
        if code < best {
            best = code;
        }
    });
    best
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_two_vertices() {
        assert_eq!(enumerate_small_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_small_graphs(2, true).unwrap().count(), 1);
    }

    #[test]
    fn counts_for_three_vertices() {
        // P3 in three labellings plus K3.
        assert_eq!(enumerate_small_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_small_graphs(3, false).unwrap().count(), 8);
    }

    #[test]
    fn single_vertex() {
        let gs: Vec<_> = enumerate_small_graphs(1, true).unwrap().collect();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].n(), 1);
    }

    #[test]
    fn guard_refuses_large_n() {
        assert!(enumerate_small_graphs(8, false).is_err());
    }

    #[test]
    fn iso_classes_of_connected_graphs() {
        // Known counts of connected graphs up to isomorphism.
        assert_eq!(enumerate_small_graphs_iso(4, true, None).unwrap().len(), 6);
        assert_eq!(enumerate_small_graphs_iso(5, true, None).unwrap().len(), 21);
    }

    #[test]
    fn canonical_code_identifies_isomorphs() {
        let p3a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let k3 = super::super::complete(3);
        assert_eq!(canonical_code(&p3a), canonical_code(&p3b));
        assert_ne!(canonical_code(&p3a), canonical_code(&k3));
    }
}
