//! Weak reachability, wcol_r under a given order, exact wcol_r by
//! branch-and-bound, ordering heuristics, and the witness-set
//! construction that backs the wcol-based neighbourhood-complexity
//! bound.

use crate::complexity::trace_table;
use crate::graph::{Graph, Vertex, VertexSet, INFINITY};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A linear order on the vertices, represented as an injective rank
/// function onto `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordering {
    rank: Vec<usize>,
}

impl Ordering {
    pub fn new(rank: Vec<usize>) -> Result<Ordering> {
        let n = rank.len();
        let mut seen = vec![false; n];
        for &r in &rank {
            if r >= n || seen[r] {
                return Err(Error::contract("rank function must be a bijection onto 0..n"));
            }
            seen[r] = true;
        }
        Ok(Ordering { rank })
    }

    /// From a permutation listing vertices in increasing rank.
    pub fn from_sequence(seq: &[Vertex]) -> Result<Ordering> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in seq.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::contract("sequence must be a permutation of 0..n"));
            }
            rank[v] = pos;
        }
        Ok(Ordering { rank })
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering { rank: (0..n).collect() }
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Ordering {
        let mut seq: Vec<Vertex> = (0..n).collect();
        seq.shuffle(rng);
        Ordering::from_sequence(&seq).expect("shuffle preserves the permutation")
    }

    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[v]
    }

    pub fn n(&self) -> usize {
        self.rank.len()
    }

    /// Vertices in increasing rank.
    pub fn sequence(&self) -> Vec<Vertex> {
        let mut seq = vec![0; self.n()];
        for v in 0..self.n() {
            seq[self.rank[v]] = v;
        }
        seq
    }

    /// The induced order on a subset of vertices (relative ranks
    /// preserved, compacted to 0..k). `vertices[i]` is the old id of
    /// new vertex `i`, as produced by subgraph realisation.
    pub fn restrict(&self, vertices: &[Vertex]) -> Ordering {
        let mut idx: Vec<usize> = (0..vertices.len()).collect();
        idx.sort_by_key(|&i| self.rank[vertices[i]]);
        let mut rank = vec![0; vertices.len()];
        for (pos, &i) in idx.iter().enumerate() {
            rank[i] = pos;
        }
        Ordering { rank }
    }

    /// Serialises as a single permutation line, increasing rank.
    pub fn to_text(&self) -> String {
        self.sequence()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Per-vertex weakly-r-reachable sets under a fixed order.
#[derive(Clone, Debug)]
pub struct WReachIndex {
    sets: Vec<VertexSet>,
    pub radius: usize,
}

impl WReachIndex {
    pub fn set(&self, v: Vertex) -> &VertexSet {
        &self.sets[v]
    }

    pub fn max_size(&self) -> usize {
        self.sets.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Union form over a vertex set.
    pub fn union_over(&self, x: &VertexSet) -> VertexSet {
        x.iter().fold(VertexSet::empty(), |acc, v| acc.union(&self.sets[v]))
    }
}

/// Computes weak r-reachability: `u` is weakly r-reachable from `v` when
/// a path of length at most r connects them on which `u` has minimum
/// rank. Computed by one BFS per source `u`, restricted to vertices of
/// rank at least `rank(u)` — on such paths `u` is automatically the
/// minimum.
pub fn wreach(g: &Graph, order: &Ordering, r: usize) -> Result<WReachIndex> {
    if order.n() != g.n() {
        return Err(Error::contract("order does not match graph"));
    }
    let mut sets: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    for u in g.vertices() {
        // BFS from u in the subgraph induced by ranks >= rank(u).
        let mut dist = vec![INFINITY; g.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        sets[u].push(u);
        while let Some(w) = queue.pop_front() {
            if dist[w] == r {
                continue;
            }
            for &x in g.neighbours(w) {
                if dist[x] == INFINITY && order.rank(x) >= order.rank(u) {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                    if x != u {
                        sets[x].push(u);
                    }
                }
            }
        }
    }
    Ok(WReachIndex {
        sets: sets.into_iter().map(VertexSet::new).collect(),
        radius: r,
    })
}

/// `max_v |WReach_r[v]|` for the given order.
pub fn wcol_given_order(g: &Graph, order: &Ordering, r: usize) -> Result<usize> {
    Ok(wreach(g, order, r)?.max_size())
}

pub const WCOL_GUARD_N: usize = 11;

/// Exact weak r-colouring number with a witness order, by
/// branch-and-bound over order prefixes. Returns the lexicographically
/// least optimal order (as a rank-increasing vertex sequence).
pub fn wcol_exact(g: &Graph, r: usize) -> Result<(usize, Ordering)> {
    if g.n() > WCOL_GUARD_N {
        return Err(Error::guard(format!(
            "exact wcol search is capped at n <= {WCOL_GUARD_N} (n = {}); \
             use wcol_heuristic for an upper bound",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let n = g.n();
    let mut best_value = usize::MAX;
    let mut best_seq: Vec<Vertex> = Vec::new();
    let mut prefix: Vec<Vertex> = Vec::new();
    let mut placed = vec![false; n];
    branch(g, r, n, &mut prefix, &mut placed, &mut best_value, &mut best_seq);
    let order = Ordering::from_sequence(&best_seq)?;
    Ok((best_value, order))
}

fn branch(
    g: &Graph,
    r: usize,
    n: usize,
    prefix: &mut Vec<Vertex>,
    placed: &mut Vec<bool>,
    best_value: &mut usize,
    best_seq: &mut Vec<Vertex>,
) {
    if prefix.len() == n {
        let order = Ordering::from_sequence(prefix).expect("prefix is a permutation");
        let value = wreach(g, &order, r).expect("order matches graph").max_size();
        if value < *best_value {
            *best_value = value;
            *best_seq = prefix.clone();
        }
        return;
    }
    // Lower bound for every completion: a prefix vertex u is weakly
    // reachable from v whenever a path of length <= r connects them
    // using only u, later prefix vertices, or unplaced vertices
    // (unplaced vertices always end up ranked after u).
    let lb = prefix_lower_bound(g, r, prefix, placed);
    if lb > *best_value {
        return;
    }
    for v in 0..n {
        if !placed[v] {
            placed[v] = true;
            prefix.push(v);
            branch(g, r, n, prefix, placed, best_value, best_seq);
            prefix.pop();
            placed[v] = false;
        }
    }
}

fn prefix_lower_bound(g: &Graph, r: usize, prefix: &[Vertex], placed: &[bool]) -> usize {
    let n = g.n();
    let mut count = vec![0usize; n];
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in prefix.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &u) in prefix.iter().enumerate() {
        // Restricted BFS from u over vertices ranked >= i (unplaced count
        // as ranked later than every prefix vertex).
        let mut dist = vec![INFINITY; n];
        let mut queue = std::collections::VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            if dist[w] == r {
                continue;
            }
            for &x in g.neighbours(w) {
                let admissible = !placed[x] || pos[x] >= i;
                if dist[x] == INFINITY && admissible {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                    count[x] += 1;
                }
            }
        }
        count[u] += 1; // u reaches itself
    }
    // Unplaced vertices additionally reach themselves in any completion.
    (0..n)
        .map(|v| count[v] + if placed[v] { 0 } else { 1 })
        .max()
        .unwrap_or(0)
}

/// Heuristic strategies for producing vertex orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Degeneracy order: repeatedly peel a minimum-degree vertex and
    /// give it the highest remaining rank.
    SmallestDegreeLast,
    /// Rank vertices by descending degree.
    DescendingDegree,
    /// Adjacent-transposition hill climbing from the degeneracy order.
    /// `budget = 0` uses the default of 200 * n trials.
    LocalSearch { seed: u64, budget: usize },
}

/// Upper bound on wcol_r via a heuristic order. The returned value is
/// `wcol_given_order` of the returned order, hence always an upper
/// bound on `wcol_r(G)`.
pub fn wcol_heuristic(g: &Graph, r: usize, strategy: Strategy) -> Result<(usize, Ordering)> {
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let order = match strategy {
        Strategy::SmallestDegreeLast => degeneracy_order(g),
        Strategy::DescendingDegree => {
            let mut seq: Vec<Vertex> = g.vertices().collect();
            seq.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            Ordering::from_sequence(&seq)?
        }
        Strategy::LocalSearch { seed, budget } => {
            let budget = if budget == 0 { 200 * g.n() } else { budget };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut seq = degeneracy_order(g).sequence();
            let mut value = wcol_given_order(g, &Ordering::from_sequence(&seq)?, r)?;
            for _ in 0..budget {
                if g.n() < 2 {
                    break;
                }
                let i = rng.gen_range(0..g.n() - 1);
                seq.swap(i, i + 1);
                let cand = wcol_given_order(g, &Ordering::from_sequence(&seq)?, r)?;
                if cand <= value {
                    value = cand;
                } else {
                    seq.swap(i, i + 1);
                }
            }
            Ordering::from_sequence(&seq)?
        }
    };
    let value = wcol_given_order(g, &order, r)?;
    Ok((value, order))
}

/// Degeneracy of `g` and its peel order: repeatedly remove a
/// minimum-degree vertex; the degeneracy is the largest degree seen at
/// removal time.
pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_with_order(g).0
}

fn degeneracy_with_order(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut peel = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        d = d.max(deg[v]);
        removed[v] = true;
        peel.push(v);
        for &w in g.neighbours(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (d, peel)
}

/// Peel order turned into ranks: the first vertex peeled gets the
/// highest rank.
fn degeneracy_order(g: &Graph) -> Ordering {
    let (_, peel) = degeneracy_with_order(g);
    let mut seq = peel;
    seq.reverse();
    Ordering::from_sequence(&seq).expect("peel is a permutation")
}

/// Witness objects for one non-empty-trace equivalence class.
#[derive(Clone, Debug)]
pub struct ClassWitness {
    /// Members of the class.
    pub class: VertexSet,
    /// Least-id representative.
    pub rep: Vertex,
    /// Vertices of the shortest-path closure graph around the
    /// representative (old ids in the host graph).
    pub closure_vertices: VertexSet,
    /// The witness set Y for this class.
    pub y: VertexSet,
    /// The member of Y that comes last in the order.
    pub gamma: Vertex,
}

/// The full bundle of proof objects for a graph, order, set X and radius.
#[derive(Clone, Debug)]
pub struct WitnessBundle {
    pub classes: Vec<ClassWitness>,
    /// Union of all Y sets.
    pub y_union: VertexSet,
}

/// Builds the witness bundle: the (X, r)-twin classes with non-empty
/// trace, a least-id representative per class, the union of all
/// shortest representative-to-X paths of length at most r, and the
/// witness sets `Y = WReach_r[closure, v] ∩ WReach_r[G, L, N^r[v] ∩ X]`.
pub fn witness_bundle(
    g: &Graph,
    order: &Ordering,
    x: &VertexSet,
    r: usize,
) -> Result<WitnessBundle> {
    if x.is_empty() {
        return Err(Error::contract("witness bundle requires non-empty X"));
    }
    if order.n() != g.n() {
        return Err(Error::contract("order does not match graph"));
    }
    let table = trace_table(g, x, r)?;
    let wr_global = wreach(g, order, r)?;
    let dist = g.distance_matrix();

    let mut classes = Vec::new();
    let mut y_union = VertexSet::empty();
    for class in table.partition.classes() {
        let rep = class[0];
        let trace = g.closed_ball(rep, r).intersection(x);
        if trace.is_empty() {
            continue; // the empty-trace class is dropped
        }
        // Closure graph: w lies on a shortest rep-x path of length <= r
        // iff dist(rep,w) + dist(w,x) = dist(rep,x) <= r for some x in
        // the trace.
        let closure_vertices: VertexSet = (0..g.n())
            .filter(|&w| {
                trace.iter().any(|xv| {
                    dist[rep][w] != INFINITY
                        && dist[w][xv] != INFINITY
                        && dist[rep][w] + dist[w][xv] == dist[rep][xv]
                        && dist[rep][xv] <= r
                })
            })
            .collect();
        let (sub, old_ids) = g.induced(&closure_vertices);
        let sub_order = order.restrict(&old_ids);
        let new_rep = old_ids.iter().position(|&v| v == rep).expect("rep is in its closure");
        let wr_local = wreach(&sub, &sub_order, r)?;
        let local_reach: VertexSet =
            wr_local.set(new_rep).iter().map(|i| old_ids[i]).collect();
        let global_reach = wr_global.union_over(&trace);
        let y = local_reach.intersection(&global_reach);
        let gamma = y
            .iter()
            .max_by_key(|&v| order.rank(v))
            .ok_or_else(|| Error::contract("witness set is unexpectedly empty"))?;
        y_union = y_union.union(&y);
        classes.push(ClassWitness {
            class: VertexSet::from_sorted(class.clone()),
            rep,
            closure_vertices,
            y,
            gamma,
        });
    }
    Ok(WitnessBundle { classes, y_union })
}
