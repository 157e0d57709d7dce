//! Verification and construction of r-centred colourings, exact chi_r on
//! tiny graphs, and treedepth machinery for upper bounds.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::signatures::Colouring;
use crate::{Error, Result};

/// Result of verifying the centred-colouring condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentredVerdict {
    pub is_centred: bool,
    /// A connected vertex set with no uniquely-coloured vertex and
    /// fewer than r colours, when one exists.
    pub witness: Option<VertexSet>,
}

const CENTRED_GUARD_N: usize = 16;

/// Calls `f` on every non-empty connected vertex subset of `g`, as a
/// sorted slice. Enumeration expands incrementally from each
/// minimum-id anchor, so every subset is produced exactly once.
pub fn for_each_connected_subset(g: &Graph, mut f: impl FnMut(&[Vertex])) {
    assert!(g.n() <= 64);
    let mut subset: Vec<Vertex> = Vec::new();
    for anchor in g.vertices() {
        subset.push(anchor);
        let candidates: Vec<Vertex> =
            g.neighbours(anchor).iter().copied().filter(|&w| w > anchor).collect();
        extend_subset(g, anchor, &mut subset, 1u64 << anchor, &candidates, 0, &mut f);
        subset.pop();
    }
}

fn extend_subset(
    g: &Graph,
    anchor: Vertex,
    subset: &mut Vec<Vertex>,
    mask: u64,
    candidates: &[Vertex],
    banned: u64,
    f: &mut impl FnMut(&[Vertex]),
) {
    let mut sorted = subset.clone();
    sorted.sort_unstable();
    f(&sorted);
    // Branch on each candidate; once a candidate is skipped it joins
    // the banned mask and stays excluded in every later branch, so no
    // subset repeats.
    let mut banned = banned;
    for (i, &u) in candidates.iter().enumerate() {
        let mut next: Vec<Vertex> = candidates[i + 1..].to_vec();
        for &w in g.neighbours(u) {
            if w > anchor && mask >> w & 1 == 0 && banned >> w & 1 == 0 && !next.contains(&w) {
                next.push(w);
            }
        }
        subset.push(u);
        extend_subset(g, anchor, subset, mask | 1 << u, &next, banned, f);
        subset.pop();
        banned |= 1 << u;
    }
}

/// Checks whether `c` is an r-centred colouring of `g`: every connected
/// (induced) subgraph either has a colour used exactly once or sees at
/// least r colours. Induced subgraphs suffice: connectivity and the
/// colour multiset depend only on the vertex set, and adding edges of
/// `g` preserves both.
pub fn is_r_centred(g: &Graph, c: &Colouring, r: usize) -> Result<CentredVerdict> {
    is_r_centred_guarded(g, c, r, false)
}

/// Like `is_r_centred` with an explicit override for the n <= 16
/// enumeration guard. Expect exponential blow-up past it.
pub fn is_r_centred_guarded(
    g: &Graph,
    c: &Colouring,
    r: usize,
    override_guard: bool,
) -> Result<CentredVerdict> {
    if c.n() != g.n() {
        return Err(Error::contract("colouring does not match graph"));
    }
    if g.n() > CENTRED_GUARD_N && !override_guard {
        return Err(Error::guard(format!(
            "centred verification enumerates connected subsets; n = {} exceeds {CENTRED_GUARD_N}",
            g.n()
        )));
    }
    let mut witness: Option<VertexSet> = None;
    let palette = c.palette() as usize;
    let mut counts = vec![0usize; palette];
    for_each_connected_subset(g, |subset| {
        if witness.is_some() {
            return;
        }
        for &v in subset {
            counts[c.colour(v) as usize] += 1;
        }
        let mut distinct = 0;
        let mut has_centre = false;
        for &cnt in counts.iter() {
            if cnt > 0 {
                distinct += 1;
                if cnt == 1 {
                    has_centre = true;
                }
            }
        }
        if !has_centre && distinct < r {
            witness = Some(VertexSet::from_sorted(subset.to_vec()));
        }
        for &v in subset {
            counts[c.colour(v) as usize] = 0;
        }
    });
    Ok(CentredVerdict { is_centred: witness.is_none(), witness })
}

pub const CHI_GUARD_N: usize = 10;

/// Exact r-centred colouring number: the least palette size admitting an
/// r-centred colouring, with a witness. Iterative deepening over the
/// palette size with backtracking; symmetry broken by forcing colours to
/// first appear in ascending order.
pub fn chi_r_exact(g: &Graph, r: usize) -> Result<(u32, Colouring)> {
    if g.n() > CHI_GUARD_N {
        return Err(Error::guard(format!(
            "exact chi_r search is capped at n <= {CHI_GUARD_N} (n = {})",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    // Vertices in descending degree order for earlier pruning.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in 1..=g.n() as u32 {
        let mut colours = vec![u32::MAX; g.n()];
        if assign_colours(g, r, k, &order, 0, &mut colours, 0) {
            let c = Colouring::new(k, colours)?;
            debug_assert!(is_r_centred(g, &c, r)?.is_centred);
            return Ok((k, c));
        }
    }
    unreachable!("an injective colouring is always r-centred");
}

fn assign_colours(
    g: &Graph,
    r: usize,
    k: u32,
    order: &[Vertex],
    pos: usize,
    colours: &mut Vec<u32>,
    used: u32,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let limit = k.min(used + 1);
    for colour in 0..limit {
        colours[v] = colour;
        if !partial_violation(g, r, colours, v) {
            let next_used = used.max(colour + 1);
            if assign_colours(g, r, k, order, pos + 1, colours, next_used) {
                return true;
            }
        }
    }
    colours[v] = u32::MAX;
    false
}

/// Does some connected subset of the already-coloured vertices that
/// contains `v` violate the centred condition? A violating subset stays
/// violating no matter how the rest is coloured, so this prunes safely.
fn partial_violation(g: &Graph, r: usize, colours: &[u32], v: Vertex) -> bool {
    let coloured: u64 = colours
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != u32::MAX)
        .fold(0u64, |m, (i, _)| m | 1 << i);
    let mut violated = false;
    // Grow connected subsets containing v inside the coloured set.
    let mut stack = vec![(1u64 << v, {
        let mut ext: Vec<Vertex> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&w| coloured >> w & 1 == 1)
            .collect();
        ext.sort_unstable();
        ext.dedup();
        ext
    })];
    while let Some((mask, ext)) = stack.pop() {
        if subset_violates(g, r, colours, mask) {
            violated = true;
            break;
        }
        for (i, &u) in ext.iter().enumerate() {
            let mut next: Vec<Vertex> = ext[i + 1..].to_vec();
            for &w in g.neighbours(u) {
                if coloured >> w & 1 == 1
                    && mask >> w & 1 == 0
                    && !next.contains(&w)
                    && !ext[..=i].contains(&w)
                {
                    next.push(w);
                }
            }
            stack.push((mask | 1 << u, next));
        }
    }
    violated
}

fn subset_violates(g: &Graph, r: usize, colours: &[u32], mask: u64) -> bool {
    let mut counts = std::collections::HashMap::new();
    for v in 0..g.n() {
        if mask >> v & 1 == 1 {
            *counts.entry(colours[v]).or_insert(0usize) += 1;
        }
    }
    let has_centre = counts.values().any(|&c| c == 1);
    !has_centre && counts.len() < r
}

/// A rooted forest on the vertices of a graph whose ancestor-descendant
/// closure contains every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationForest {
    /// `parent[v] = None` marks a root.
    parent: Vec<Option<Vertex>>,
}

impl EliminationForest {
    pub fn new(parent: Vec<Option<Vertex>>) -> Result<EliminationForest> {
        let f = EliminationForest { parent };
        // Acyclicity: depth computation fails on a cycle.
        f.depths()?;
        Ok(f)
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn roots(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.parent[v].is_none()).collect()
    }

    /// Depth of each vertex, roots at depth 1.
    pub fn depths(&self) -> Result<Vec<usize>> {
        let n = self.parent.len();
        let mut depth = vec![0usize; n];
        for v in 0..n {
            let mut u = v;
            let mut steps = 0;
            while depth[u] == 0 {
                match self.parent[u] {
                    None => {
                        depth[u] = 1;
                    }
                    Some(p) => {
                        steps += 1;
                        if steps > n {
                            return Err(Error::contract("parent mapping contains a cycle"));
                        }
                        u = p;
                    }
                }
            }
            // Walk back down filling depths.
            let mut u2 = v;
            let mut chain = Vec::new();
            while depth[u2] == 0 {
                chain.push(u2);
                u2 = self.parent[u2].expect("chain ends at a depth-labelled vertex");
            }
            let mut d = depth[u2];
            for &w in chain.iter().rev() {
                d += 1;
                depth[w] = d;
            }
        }
        Ok(depth)
    }

    pub fn height(&self) -> usize {
        self.depths().expect("validated at construction").into_iter().max().unwrap_or(0)
    }

    /// Is `a` an ancestor of `b` (or equal)?
    fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        let mut u = b;
        loop {
            if u == a {
                return true;
            }
            match self.parent[u] {
                Some(p) => u = p,
                None => return false,
            }
        }
    }

    /// Every edge of `g` must connect an ancestor-descendant pair.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::contract("forest does not match graph"));
        }
        for (u, v) in g.edges() {
            if !self.is_ancestor(u, v) && !self.is_ancestor(v, u) {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) is not an ancestor-descendant pair"
                )));
            }
        }
        Ok(())
    }

    /// Serialises as "v parent depth" lines, roots with parent `-`.
    pub fn to_text(&self) -> String {
        let depths = self.depths().expect("validated at construction");
        let mut out = String::new();
        for v in 0..self.n() {
            match self.parent[v] {
                Some(p) => out.push_str(&format!("{v} {p} {}\n", depths[v])),
                None => out.push_str(&format!("{v} - {}\n", depths[v])),
            }
        }
        out
    }
}

const TREEDEPTH_GUARD_N: usize = 20;

/// Exact treedepth with a witness elimination forest, by recursive
/// component splitting memoised on the component's vertex bitmask.
pub fn treedepth_exact(g: &Graph) -> Result<(usize, EliminationForest)> {
    if g.n() > TREEDEPTH_GUARD_N {
        return Err(Error::guard(format!(
            "exact treedepth is capped at n <= {TREEDEPTH_GUARD_N} (n = {}); \
             use treedepth_heuristic for an upper bound",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let mut memo: std::collections::HashMap<u64, (usize, Vertex)> = Default::default();
    let full: u64 = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut parent = vec![None; g.n()];
    let td = td_build(g, full, None, &mut parent, &mut memo);
    Ok((td, EliminationForest::new(parent)?))
}

fn td_components(g: &Graph, mask: u64) -> Vec<u64> {
    let mut comps = Vec::new();
    let mut remaining = mask;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbours(u) {
                if mask >> w & 1 == 1 && comp >> w & 1 == 0 {
                    comp |= 1 << w;
                    stack.push(w);
                }
            }
        }
        comps.push(comp);
        remaining &= !comp;
    }
    comps
}

/// Treedepth of the connected component `mask`, choosing the best root.
fn td_connected(
    g: &Graph,
    mask: u64,
    memo: &mut std::collections::HashMap<u64, (usize, Vertex)>,
) -> (usize, Vertex) {
    if mask.count_ones() == 1 {
        return (1, mask.trailing_zeros() as usize);
    }
    if let Some(&hit) = memo.get(&mask) {
        return hit;
    }
    let mut best = (usize::MAX, 0);
    for v in 0..g.n() {
        if mask >> v & 1 == 0 {
            continue;
        }
        let rest = mask & !(1 << v);
        let sub = td_components(g, rest)
            .into_iter()
            .map(|comp| td_connected(g, comp, memo).0)
            .max()
            .unwrap_or(0);
        if 1 + sub < best.0 {
            best = (1 + sub, v);
        }
    }
    memo.insert(mask, best);
    best
}

fn td_build(
    g: &Graph,
    mask: u64,
    parent_of_roots: Option<Vertex>,
    parent: &mut Vec<Option<Vertex>>,
    memo: &mut std::collections::HashMap<u64, (usize, Vertex)>,
) -> usize {
    td_components(g, mask)
        .into_iter()
        .map(|comp| {
            let (depth, root) = td_connected(g, comp, memo);
            parent[root] = parent_of_roots;
            if comp.count_ones() > 1 {
                td_build(g, comp & !(1 << root), Some(root), parent, memo);
            }
            depth
        })
        .max()
        .unwrap_or(0)
}

/// Greedy treedepth upper bound: root each component at its
/// maximum-degree vertex and recurse.
pub fn treedepth_heuristic(g: &Graph) -> Result<(usize, EliminationForest)> {
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    assert!(g.n() <= 64);
    let full: u64 = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut parent = vec![None; g.n()];
    fn go(g: &Graph, mask: u64, par: Option<Vertex>, parent: &mut Vec<Option<Vertex>>) -> usize {
        td_components(g, mask)
            .into_iter()
            .map(|comp| {
                let root = (0..g.n())
                    .filter(|&v| comp >> v & 1 == 1)
                    .max_by_key(|&v| {
                        g.neighbours(v).iter().filter(|&&w| comp >> w & 1 == 1).count()
                    })
                    .expect("component is non-empty");
                parent[root] = par;
                1 + go(g, comp & !(1 << root), Some(root), parent)
            })
            .max()
            .unwrap_or(0)
    }
    let h = go(g, full, None, &mut parent);
    Ok((h, EliminationForest::new(parent)?))
}

/// Depth labels of an elimination forest as a colouring. The result is
/// r-centred for every r: any connected induced subgraph has a unique
/// minimum-depth vertex on its enclosing root path, which is a centre.
pub fn centred_colouring_from_forest(g: &Graph, forest: &EliminationForest) -> Result<Colouring> {
    forest.validate_for(g)?;
    let depths = forest.depths()?;
    let palette = depths.iter().max().copied().unwrap_or(1) as u32;
    Colouring::new(palette, depths.iter().map(|&d| d as u32 - 1).collect())
}
