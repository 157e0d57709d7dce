//! Shallow topological minors: embedding certificates and their
//! validator, exact maximum subgraph density at depth 0 via max-flow,
//! brute-force top-grad at half-integer depths on tiny graphs, and the
//! density-versus-neighbourhood-complexity inequality checks.
//!
//! Half-integer depths are carried as `twice_r` (so `twice_r = 1`
//! means depth 1/2); paths realising a pattern edge may have up to
//! `twice_r + 1` edges.

use crate::complexity::{nu_exact, Rational};
use crate::graph::{write_edge_list, Graph, Vertex, VertexSet};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use rayon::prelude::*;
use std::fmt::Write as _;

/// A topological-minor embedding: `phi_v` maps pattern vertices to
/// host branch vertices and `phi_e` maps each pattern edge to a host
/// path between the corresponding branch vertices.
#[derive(Clone, Debug)]
pub struct EmbeddingCertificate {
    pub pattern: Graph,
    pub phi_v: Vec<Vertex>,
    /// Pattern edge (u < v) together with its host path, listed from
    /// `phi_v[u]` to `phi_v[v]`.
    pub phi_e: Vec<((Vertex, Vertex), Vec<Vertex>)>,
}

impl EmbeddingCertificate {
    /// Depth doubled: the longest path has `twice_depth + 1` edges.
    pub fn twice_depth(&self) -> usize {
        self.phi_e
            .iter()
            .map(|(_, p)| p.len().saturating_sub(2))
            .max()
            .unwrap_or(0)
    }

    /// Pattern density ||H|| / |H|.
    pub fn density(&self) -> Rational {
        Rational::new(self.pattern.m() as u64, self.pattern.n() as u64)
    }

    pub fn to_text(&self) -> String {
        let mut out = write_edge_list(&self.pattern);
        for (u, &x) in self.phi_v.iter().enumerate() {
            writeln!(out, "phiV {u} -> {x}").unwrap();
        }
        for ((u, v), path) in &self.phi_e {
            let steps: Vec<String> = path.iter().map(|x| x.to_string()).collect();
            writeln!(out, "phiE {u} {v} : {}", steps.join(" ")).unwrap();
        }
        out
    }

    /// The embedding of an induced subgraph into its host: every
    /// pattern edge is a single host edge.
    pub fn identity(g: &Graph, vertices: &[Vertex]) -> EmbeddingCertificate {
        let spec = crate::graph::SubgraphSpec::induced(g, VertexSet::new(vertices.to_vec()));
        let (pattern, phi_v) = g.realize_subgraph(&spec).expect("induced spec is valid");
        let phi_e = pattern
            .edges()
            .map(|(u, v)| ((u, v), vec![phi_v[u], phi_v[v]]))
            .collect();
        EmbeddingCertificate { pattern, phi_v, phi_e }
    }
}

#[derive(Clone, Debug)]
pub struct EmbeddingVerdict {
    pub valid: bool,
    pub violation: Option<String>,
}

fn reject(msg: String) -> EmbeddingVerdict {
    EmbeddingVerdict { valid: false, violation: Some(msg) }
}

/// Checks every certificate invariant against the host graph `g`,
/// reporting the first violation found.
pub fn validate_embedding(g: &Graph, cert: &EmbeddingCertificate) -> EmbeddingVerdict {
    let h = &cert.pattern;
    if cert.phi_v.len() != h.n() {
        return reject(format!(
            "phiV has {} entries for a pattern on {} vertices",
            cert.phi_v.len(),
            h.n()
        ));
    }
    if let Some(&x) = cert.phi_v.iter().find(|&&x| x >= g.n()) {
        return reject(format!("phiV image {x} outside the host graph"));
    }
    for i in 0..cert.phi_v.len() {
        for j in i + 1..cert.phi_v.len() {
            if cert.phi_v[i] == cert.phi_v[j] {
                return reject(format!("phiV is not injective: {i} and {j} both map to {}", cert.phi_v[i]));
            }
        }
    }
    let mut pattern_edges: Vec<(Vertex, Vertex)> = h.edges().collect();
    let mut mapped: Vec<(Vertex, Vertex)> = cert.phi_e.iter().map(|&(e, _)| e).collect();
    pattern_edges.sort_unstable();
    mapped.sort_unstable();
    if pattern_edges != mapped {
        return reject("phiE does not cover the pattern edge set exactly".into());
    }
    let branch: Vec<Vertex> = cert.phi_v.clone();
    let mut internals_seen: Vec<Vertex> = Vec::new();
    for ((u, v), path) in &cert.phi_e {
        if path.len() < 2 {
            return reject(format!("path for pattern edge ({u}, {v}) has fewer than two vertices"));
        }
        let (a, b) = (cert.phi_v[*u], cert.phi_v[*v]);
        let (first, last) = (path[0], *path.last().unwrap());
        if !((first, last) == (a, b) || (first, last) == (b, a)) {
            return reject(format!(
                "path for pattern edge ({u}, {v}) runs {first}..{last}, expected endpoints {a}, {b}"
            ));
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return reject(format!("path step {}-{} is not a host edge", w[0], w[1]));
            }
        }
        for (i, &x) in path.iter().enumerate() {
            if path[i + 1..].contains(&x) {
                return reject(format!("path for pattern edge ({u}, {v}) repeats vertex {x}"));
            }
        }
        for &x in &path[1..path.len() - 1] {
            if branch.contains(&x) {
                return reject(format!("internal path vertex {x} is a branch vertex"));
            }
            if internals_seen.contains(&x) {
                return reject(format!("internal vertex {x} is shared by two paths"));
            }
            internals_seen.push(x);
        }
    }
    EmbeddingVerdict { valid: true, violation: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradMode {
    Exact,
    LowerBound,
}

/// A top-grad value at a given doubled depth, with the embedding that
/// attains it.
#[derive(Clone, Debug)]
pub struct GradReport {
    pub value: Rational,
    pub twice_r: usize,
    pub mode: GradMode,
    pub witness: EmbeddingCertificate,
}

// --- depth 0: densest subgraph via max-flow ---

struct Dinic {
    // (to, cap, rev index)
    adj: Vec<Vec<(usize, i64, usize)>>,
    level: Vec<i32>,
    it: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Dinic {
        Dinic { adj: vec![Vec::new(); n], level: vec![0; n], it: vec![0; n] }
    }

    fn add_edge(&mut self, u: usize, v: usize, cap: i64) {
        let ru = self.adj[v].len();
        let rv = self.adj[u].len();
        self.adj[u].push((v, cap, ru));
        self.adj[v].push((u, 0, rv));
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(v, cap, _) in &self.adj[u] {
                if cap > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.it[u] < self.adj[u].len() {
            let (v, cap, rev) = self.adj[u][self.it[u]];
            if cap > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(cap));
                if d > 0 {
                    self.adj[u][self.it[u]].1 -= d;
                    self.adj[v][rev].1 += d;
                    return d;
                }
            }
            self.it[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.it.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(v, cap, _) in &self.adj[u] {
                if cap > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Finds a vertex set whose induced density strictly exceeds `p/q`, or
/// None if no subgraph is that dense. Classic flow construction: the
/// min cut for source side `{s} ∪ S` equals `2mq − 2(q·e(S) − p·|S|)`.
fn denser_than(g: &Graph, p: u64, q: u64) -> Option<Vec<Vertex>> {
    let n = g.n();
    let m = g.m() as i64;
    let (s, t) = (n, n + 1);
    let mut net = Dinic::new(n + 2);
    for v in 0..n {
        net.add_edge(s, v, q as i64 * g.degree(v) as i64);
        net.add_edge(v, t, 2 * p as i64);
    }
    for (u, v) in g.edges() {
        net.add_edge(u, v, q as i64);
        net.add_edge(v, u, q as i64);
    }
    let flow = net.max_flow(s, t);
    if flow >= 2 * m * q as i64 {
        return None;
    }
    let side = net.source_side(s);
    let set: Vec<Vertex> = (0..n).filter(|&v| side[v]).collect();
    assert!(!set.is_empty(), "cut below 2mq must leave a non-empty source side");
    Some(set)
}

fn induced_edge_count(g: &Graph, set: &[Vertex]) -> usize {
    g.edges().filter(|&(u, v)| set.contains(&u) && set.contains(&v)).count()
}

/// Exact maximum subgraph density max ||H|| / |H| (the top-grad at
/// depth 0). The optimum is always attained by an induced subgraph, so
/// the search climbs through strictly improving flow witnesses.
pub fn grad0_exact(g: &Graph) -> Result<GradReport> {
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let mut best_set = vec![0];
    let mut best = Rational::new(0, 1);
    loop {
        match denser_than(g, *best.numer(), *best.denom()) {
            Some(set) => {
                let e = induced_edge_count(g, &set);
                let value = Rational::new(e as u64, set.len() as u64);
                assert!(value > best, "flow witness must strictly improve density");
                best = value;
                best_set = set;
            }
            None => break,
        }
    }
    Ok(GradReport {
        value: best,
        twice_r: 0,
        mode: GradMode::Exact,
        witness: EmbeddingCertificate::identity(g, &best_set),
    })
}

// --- brute force at positive half-integer depth ---

pub const GRAD_GUARD_N: usize = 8;

/// All simple paths from `a` to `b` with at most `max_edges` edges and
/// all internal vertices outside `forbidden`.
fn paths_between(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    max_edges: usize,
    forbidden: u64,
) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut stack = vec![a];
    fn go(
        g: &Graph,
        b: Vertex,
        max_edges: usize,
        forbidden: u64,
        stack: &mut Vec<Vertex>,
        visited: u64,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let u = *stack.last().unwrap();
        if u == b {
            out.push(stack.clone());
            return;
        }
        if stack.len() > max_edges {
            return;
        }
        for &w in g.neighbours(u) {
            if visited >> w & 1 == 1 {
                continue;
            }
            // Internal vertices must avoid the branch set; the target
            // endpoint is allowed through.
            if w != b && forbidden >> w & 1 == 1 {
                continue;
            }
            stack.push(w);
            go(g, b, max_edges, forbidden, stack, visited | 1 << w, out);
            stack.pop();
        }
    }
    go(g, b, max_edges, forbidden, &mut stack, 1 << a, &mut out);
    out
}

/// Packs internally vertex-disjoint paths, one per realised pattern
/// edge, maximising the number of realised edges. Returns the chosen
/// (pair index, path index) list.
fn pack_paths(pairs: &[Vec<Vec<Vertex>>], idx: usize, used: u64, best: &mut (usize, Vec<(usize, usize)>), chosen: &mut Vec<(usize, usize)>) {
    if chosen.len() + (pairs.len() - idx) <= best.0 && best.0 > 0 {
        return; // cannot beat the incumbent
    }
    if idx == pairs.len() {
        if chosen.len() > best.0 {
            *best = (chosen.len(), chosen.clone());
        }
        return;
    }
    for (pi, path) in pairs[idx].iter().enumerate() {
        let internals: u64 = path[1..path.len() - 1].iter().fold(0, |m, &v| m | 1 << v);
        if internals & used != 0 {
            continue;
        }
        chosen.push((idx, pi));
        pack_paths(pairs, idx + 1, used | internals, best, chosen);
        chosen.pop();
    }
    // Leaving this pattern edge unrealised is always an option.
    pack_paths(pairs, idx + 1, used, best, chosen);
}

/// Top-grad at doubled depth `twice_r` by exhaustive search over
/// branch sets and path packings. Guarded at n <= 8.
pub fn gradr_bruteforce(g: &Graph, twice_r: usize) -> Result<GradReport> {
    if g.n() > GRAD_GUARD_N {
        return Err(Error::guard(format!(
            "brute-force top-grad is capped at n <= {GRAD_GUARD_N} (n = {})",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let n = g.n();
    let max_edges = twice_r + 1;
    let best = (1u64..1 << n)
        .into_par_iter()
        .map(|bmask| {
            let branch: Vec<Vertex> = (0..n).filter(|&v| bmask >> v & 1 == 1).collect();
            let k = branch.len();
            let mut pair_ids: Vec<(usize, usize)> = Vec::new();
            let mut pair_paths: Vec<Vec<Vec<Vertex>>> = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    let paths = paths_between(g, branch[i], branch[j], max_edges, bmask);
                    if !paths.is_empty() {
                        pair_ids.push((i, j));
                        pair_paths.push(paths);
                    }
                }
            }
            let mut packed = (0usize, Vec::new());
            let mut chosen = Vec::new();
            pack_paths(&pair_paths, 0, 0, &mut packed, &mut chosen);
            let value = Rational::new(packed.0 as u64, k as u64);
            let phi_e: Vec<((Vertex, Vertex), Vec<Vertex>)> = packed
                .1
                .iter()
                .map(|&(pair, pi)| {
                    let (i, j) = pair_ids[pair];
                    let mut path = pair_paths[pair][pi].clone();
                    if path[0] != branch[i] {
                        path.reverse();
                    }
                    ((i, j), path)
                })
                .collect();
            let pattern_edges: Vec<(Vertex, Vertex)> = phi_e.iter().map(|&(e, _)| e).collect();
            let pattern = Graph::from_edges(k, &pattern_edges).expect("pattern edges are valid");
            (value, bmask, EmbeddingCertificate { pattern, phi_v: branch, phi_e })
        })
        .reduce_with(|a, b| {
            // Deterministic: prefer the denser pattern, then the
            // smallest branch mask.
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        })
        .expect("at least one branch set");
    Ok(GradReport { value: best.0, twice_r, mode: GradMode::Exact, witness: best.2 })
}

// --- bipartite structure and the inequality checks ---

/// A proper 2-colouring, if one exists: side 0 takes the least vertex
/// of each component.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut colour = vec![usize::MAX; g.n()];
    for start in 0..g.n() {
        if colour[start] != usize::MAX {
            continue;
        }
        colour[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbours(u) {
                if colour[v] == usize::MAX {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if colour[v] == colour[u] {
                    return None;
                }
            }
        }
    }
    let a = (0..g.n()).filter(|&v| colour[v] == 0).collect();
    let b = (0..g.n()).filter(|&v| colour[v] == 1).collect();
    Some((a, b))
}

fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Smallest k >= 0 with 2^k >= value; requires value >= 1.
fn ceil_log2(value: Rational) -> u32 {
    assert!(*value.numer() >= *value.denom(), "ceil_log2 needs value >= 1");
    let mut k = 0u32;
    let mut pow = BigInt::one();
    let target = BigRational::new(BigInt::from(*value.numer()), BigInt::from(*value.denom()));
    while BigRational::from(pow.clone()) < target {
        pow *= 2;
        k += 1;
    }
    k
}

/// A conservative rational lower bound on log2(value)^2, floored at
/// 10^-12 granularity (so a true inequality can only be reported
/// false, never the reverse).
fn log2_squared_lower(value: Rational) -> BigRational {
    let v = *value.numer() as f64 / *value.denom() as f64;
    if v <= 1.0 {
        return BigRational::zero();
    }
    let t = v.log2().powi(2);
    let scaled = (t * 1e12).floor() as i128 - 1;
    if scaled <= 0 {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(scaled), BigInt::from(1_000_000_000_000u64))
}

#[derive(Clone, Debug)]
pub struct InequalityReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub holds: bool,
}

/// Min-degree bound for bipartite graphs:
/// `delta(G) < 4 nu_1 (2 ceil(log nu_1) + 1) (64 nu_1^3 ceil(log nu_1) + 16 nu_1^2 + 1)`,
/// evaluated with exact rationals (logs base 2, ceiled to integers).
pub fn lemma13_check(g: &Graph) -> Result<InequalityReport> {
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    if bipartition(g).is_none() {
        return Err(Error::contract("min-degree bound applies to bipartite graphs only"));
    }
    let delta = (0..g.n()).map(|v| g.degree(v)).min().unwrap();
    let nu1 = big(nu_exact(g, 1)?.value);
    let log = BigRational::from(BigInt::from(ceil_log2(nu_exact(g, 1)?.value)));
    let two = BigRational::from(BigInt::from(2));
    let rhs = BigRational::from(BigInt::from(4))
        * nu1.clone()
        * (two * log.clone() + BigRational::one())
        * (BigRational::from(BigInt::from(64)) * nu1.clone() * nu1.clone() * nu1.clone() * log
            + BigRational::from(BigInt::from(16)) * nu1.clone() * nu1
            + BigRational::one());
    let lhs = BigRational::from(BigInt::from(delta));
    Ok(InequalityReport { holds: lhs < rhs, lhs, rhs })
}

/// Skewed bipartite selection: given sides (A, B) where every vertex
/// of B has at least `r` neighbours in A, finds A' of size `s` and
/// B' = {b : deg_{A'}(b) >= r*s/|A|} with |B'| >= |B|/2. Exhaustive
/// over A' subsets, so |A| is capped at 16.
pub fn lemma12_oracle(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    r: usize,
    s: usize,
) -> Result<Option<(VertexSet, VertexSet)>> {
    if a.len() > 16 {
        return Err(Error::guard(format!("side A is capped at 16 vertices (got {})", a.len())));
    }
    if !a.is_disjoint_from(b) || a.len() + b.len() != g.n() {
        return Err(Error::contract("A and B must partition the vertex set"));
    }
    for (u, v) in g.edges() {
        if a.contains(u) == a.contains(v) {
            return Err(Error::contract(format!("edge ({u}, {v}) does not cross the bipartition")));
        }
    }
    if !(1 <= r && r <= s && s <= a.len()) {
        return Err(Error::contract("need 1 <= r <= s <= |A|"));
    }
    if b.iter().any(|v| g.degree(v) < r) {
        return Err(Error::contract(format!("every vertex of B needs degree at least {r}")));
    }
    let a_list: Vec<Vertex> = a.iter().collect();
    for mask in 0u64..1 << a_list.len() {
        if mask.count_ones() as usize != s {
            continue;
        }
        let a_prime: VertexSet =
            a_list.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let b_prime: VertexSet = b
            .iter()
            .filter(|&v| {
                let deg = g.neighbours(v).iter().filter(|&&u| a_prime.contains(u)).count();
                deg * a.len() >= r * s
            })
            .collect();
        if 2 * b_prime.len() >= b.len() {
            return Ok(Some((a_prime, b_prime)));
        }
    }
    Ok(None)
}

/// The depth-0 density bound `grad_0(G) < 5445 nu_1^4 log^2 nu_1`.
/// Fails as stated on a single vertex (both sides are zero).
pub fn corollary14_check(g: &Graph) -> Result<InequalityReport> {
    let lhs = big(grad0_exact(g)?.value);
    let nu1 = nu_exact(g, 1)?.value;
    let nu1_big = big(nu1);
    let rhs = BigRational::from(BigInt::from(5445))
        * nu1_big.clone()
        * nu1_big.clone()
        * nu1_big.clone()
        * nu1_big
        * log2_squared_lower(nu1);
    Ok(InequalityReport { holds: lhs < rhs, lhs, rhs })
}

#[derive(Clone, Debug)]
pub struct DepthDensityReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub holds: bool,
    /// nu_1 .. nu_k exact values entering the right-hand side.
    pub nu_values: Vec<Rational>,
    pub witness: EmbeddingCertificate,
}

/// The general depth bound
/// `grad_r(G) <= (2r+1) max{5445 nu_1^4 log^2 nu_1, nu_2, ..., nu_ceil(r+1/2)}`,
/// with the left side from brute force and every nu exact. Subject to
/// the brute-force and enumeration guards (n <= 8, m <= 14).
pub fn theorem15_check(g: &Graph, twice_r: usize) -> Result<DepthDensityReport> {
    if twice_r == 0 {
        return Err(Error::contract("depth must be at least 1/2; use corollary14_check at depth 0"));
    }
    let grad = gradr_bruteforce(g, twice_r)?;
    let lhs = big(grad.value);
    let k_max = (twice_r + 2) / 2;
    let nu_values: Vec<Rational> =
        (1..=k_max).map(|i| nu_exact(g, i).map(|rep| rep.value)).collect::<Result<_>>()?;
    let nu1 = nu_values[0];
    let mut inner = BigRational::from(BigInt::from(5445))
        * big(nu1)
        * big(nu1)
        * big(nu1)
        * big(nu1)
        * log2_squared_lower(nu1);
    for &nu in &nu_values[1..] {
        inner = inner.max(big(nu));
    }
    let rhs = BigRational::from(BigInt::from(twice_r as u64 + 1)) * inner;
    Ok(DepthDensityReport { holds: lhs <= rhs, lhs, rhs, nu_values, witness: grad.witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, Graph};

    #[test]
    fn identity_certificate_validates() {
        let g = complete(4);
        let cert = EmbeddingCertificate::identity(&g, &[0, 1, 2]);
        assert_eq!(cert.twice_depth(), 0);
        assert_eq!(cert.density(), Rational::new(3, 3));
        assert!(validate_embedding(&g, &cert).valid);
    }

    #[test]
    fn c6_contains_half_shallow_k3() {
        // Triangle pattern, each edge a two-edge path in C6.
        let g = cycle(6);
        let cert = EmbeddingCertificate {
            pattern: complete(3),
            phi_v: vec![0, 2, 4],
            phi_e: vec![
                ((0, 1), vec![0, 1, 2]),
                ((0, 2), vec![0, 5, 4]),
                ((1, 2), vec![2, 3, 4]),
            ],
        };
        assert!(validate_embedding(&g, &cert).valid);
        assert_eq!(cert.twice_depth(), 1);
    }

    #[test]
    fn shared_internal_vertex_rejected() {
        let g = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3), (0, 1)]).unwrap();
        let cert = EmbeddingCertificate {
            pattern: Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap(),
            phi_v: vec![0, 1, 2],
            phi_e: vec![((0, 1), vec![0, 3, 1]), ((0, 2), vec![0, 3, 2])],
        };
        let verdict = validate_embedding(&g, &cert);
        assert!(!verdict.valid);
        assert!(verdict.violation.unwrap().contains("shared"));
    }

    #[test]
    fn non_injective_phi_v_rejected() {
        let g = complete(3);
        let cert = EmbeddingCertificate {
            pattern: Graph::edgeless(2),
            phi_v: vec![0, 0],
            phi_e: vec![],
        };
        assert!(!validate_embedding(&g, &cert).valid);
    }

    #[test]
    fn grad0_tree() {
        let g = path(5);
        let report = grad0_exact(&g).unwrap();
        assert_eq!(report.value, Rational::new(4, 5));
        assert!(validate_embedding(&g, &report.witness).valid);
    }

    #[test]
    fn grad0_k4_with_pendant() {
        let mut edges: Vec<(Vertex, Vertex)> =
            complete(4).edges().collect();
        edges.push((0, 4));
        let g = Graph::from_edges(5, &edges).unwrap();
        let report = grad0_exact(&g).unwrap();
        assert_eq!(report.value, Rational::new(3, 2));
        assert_eq!(report.witness.pattern.n(), 4);
    }

    #[test]
    fn grad0_edgeless() {
        let report = grad0_exact(&Graph::edgeless(3)).unwrap();
        assert_eq!(report.value, Rational::new(0, 1));
    }

    #[test]
    fn gradr_matches_grad0_at_depth_half_on_a_tree() {
        let g = path(6);
        let d0 = grad0_exact(&g).unwrap().value;
        let dh = gradr_bruteforce(&g, 1).unwrap().value;
        assert_eq!(d0, dh);
        assert!(dh < Rational::new(1, 1));
    }

    #[test]
    fn gradr_c6_reaches_triangle_density() {
        let g = cycle(6);
        let report = gradr_bruteforce(&g, 1).unwrap();
        assert_eq!(report.value, Rational::new(1, 1));
        assert!(validate_embedding(&g, &report.witness).valid);
    }

    #[test]
    fn gradr_monotone_in_depth() {
        let g = cycle(5);
        let a = gradr_bruteforce(&g, 1).unwrap().value;
        let b = gradr_bruteforce(&g, 2).unwrap().value;
        assert!(a <= b);
    }

    #[test]
    fn gradr_guard() {
        assert!(gradr_bruteforce(&path(9), 1).is_err());
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let (a, b) = bipartition(&cycle(6)).unwrap();
        assert_eq!(a, VertexSet::new(vec![0, 2, 4]));
        assert_eq!(b, VertexSet::new(vec![1, 3, 5]));
        assert!(bipartition(&cycle(5)).is_none());
    }

    #[test]
    fn min_degree_bound_small_bipartite() {
        for g in [complete_bipartite(1, 1), complete_bipartite(1, 5), path(4)] {
            assert!(lemma13_check(&g).unwrap().holds);
        }
        assert!(lemma13_check(&complete(3)).is_err());
    }

    #[test]
    fn skewed_selection_identity_case() {
        let g = complete_bipartite(2, 3);
        let a = VertexSet::new(vec![0, 1]);
        let b = VertexSet::new(vec![2, 3, 4]);
        let (ap, bp) = lemma12_oracle(&g, &a, &b, 2, 2).unwrap().unwrap();
        assert_eq!(ap, a);
        assert_eq!(bp, b);
    }

    #[test]
    fn skewed_selection_rejects_bad_inputs() {
        let g = complete_bipartite(2, 2);
        let a = VertexSet::new(vec![0, 1]);
        let b = VertexSet::new(vec![2, 3]);
        assert!(lemma12_oracle(&g, &a, &b, 3, 3).is_err()); // s > |A|... r > s
        assert!(lemma12_oracle(&complete(3), &VertexSet::new(vec![0]), &VertexSet::new(vec![1, 2]), 1, 1).is_err());
    }

    #[test]
    fn density_bound_holds_on_small_graphs() {
        for g in [path(4), cycle(5), complete(4)] {
            assert!(corollary14_check(&g).unwrap().holds);
        }
    }

    #[test]
    fn density_bound_vacuously_fails_on_one_vertex() {
        assert!(!corollary14_check(&Graph::edgeless(1)).unwrap().holds);
    }

    #[test]
    fn depth_bound_holds_on_k4() {
        let report = theorem15_check(&complete(4), 2).unwrap();
        assert!(report.holds);
        assert_eq!(report.nu_values.len(), 2);
    }

    #[test]
    fn depth_bound_edgeless() {
        let report = theorem15_check(&Graph::edgeless(3), 1).unwrap();
        assert!(report.lhs.is_zero() || report.holds);
        assert!(report.holds);
    }

    #[test]
    fn certificate_text_round_shape() {
        let g = cycle(6);
        let report = gradr_bruteforce(&g, 1).unwrap();
        let text = report.witness.to_text();
        assert!(text.contains("phiV"));
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(Rational::new(1, 1)), 0);
        assert_eq!(ceil_log2(Rational::new(2, 1)), 1);
        assert_eq!(ceil_log2(Rational::new(5, 2)), 2);
        assert_eq!(ceil_log2(Rational::new(8, 1)), 3);
    }
}
