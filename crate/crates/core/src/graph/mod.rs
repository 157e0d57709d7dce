//! Graph representation, neighbourhoods, products, subgraph extraction,
//! parsing and deterministic generators.
//!
//! Vertices are dense integer ids `0..n`. Graphs are immutable after
//! construction and kept in canonical form: sorted adjacency, no
//! self-loops, no parallel edges.

mod enumerate;
mod generate;
mod parse;

pub use enumerate::{canonical_code, enumerate_small_graphs, enumerate_small_graphs_iso};
pub use generate::{
    complete, complete_bipartite, cycle, erdos_renyi, grid, path, random_bounded_degree,
};
pub use parse::{parse_dimacs, parse_edge_list, write_edge_list};

use crate::{Error, Result};

pub type Vertex = usize;

/// Distance value for unreachable vertices.
pub const INFINITY: usize = usize::MAX;

/// An immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops are rejected, out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Graph { adj })
    }

    /// Single-vertex graphs and larger, without edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n())
            .flat_map(move |u| self.adj[u].iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// BFS distances from `v`; `INFINITY` marks unreachable vertices.
    pub fn bfs_distances(&self, v: Vertex) -> Vec<usize> {
        let mut dist = vec![INFINITY; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == INFINITY {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.bfs_distances(v)).collect()
    }

    /// The closed r-neighbourhood: vertices at distance at most `r` from `v`.
    pub fn closed_ball(&self, v: Vertex, r: usize) -> VertexSet {
        let dist = self.bfs_distances(v);
        VertexSet::from_sorted(
            (0..self.n()).filter(|&w| dist[w] <= r).collect(),
        )
    }

    /// Vertices at distance exactly `r` from `v`.
    pub fn exact_sphere(&self, v: Vertex, r: usize) -> VertexSet {
        let dist = self.bfs_distances(v);
        VertexSet::from_sorted(
            (0..self.n()).filter(|&w| dist[w] == r).collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != INFINITY)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for v in 0..self.n() {
            if seen[v] {
                continue;
            }
            let dist = self.bfs_distances(v);
            let comp: Vec<Vertex> =
                (0..self.n()).filter(|&w| dist[w] != INFINITY).collect();
            for &w in &comp {
                seen[w] = true;
            }
            comps.push(comp);
        }
        comps
    }

    /// The subgraph induced on `vertices`, relabelled to `0..k`.
    /// Returns the graph together with the new-id -> old-id map.
    pub fn induced(&self, vertices: &VertexSet) -> (Graph, Vec<Vertex>) {
        let spec = SubgraphSpec {
            vertices: vertices.clone(),
            edges: self
                .edges()
                .filter(|&(u, v)| vertices.contains(u) && vertices.contains(v))
                .collect(),
        };
        self.realize_subgraph(&spec).expect("induced spec is always valid")
    }

    /// Realises an arbitrary subgraph (not necessarily induced) as a
    /// standalone graph with contiguous ids. Returns the new-id -> old-id map.
    pub fn realize_subgraph(&self, spec: &SubgraphSpec) -> Result<(Graph, Vec<Vertex>)> {
        spec.validate(self)?;
        let old: Vec<Vertex> = spec.vertices.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<(Vertex, Vertex)> = spec
            .edges
            .iter()
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = Graph::from_edges(old.len(), &edges)?;
        Ok((g, old))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.adj.iter().map(|a| a.len()).collect();
        ds.sort_unstable();
        ds
    }
}

/// A sorted, duplicate-free set of vertex identifiers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(mut members: Vec<Vertex>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// The caller promises sortedness and absence of duplicates.
    pub fn from_sorted(members: Vec<Vertex>) -> VertexSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn singleton(v: Vertex) -> VertexSet {
        VertexSet(vec![v])
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    /// For graphs on at most 64 vertices.
    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.0.iter().all(|&v| v < 64), "vertex id too large for mask");
        self.0.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut m: Vec<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        m.sort_unstable();
        m.dedup();
        VertexSet(m)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// A subgraph of a host graph: a vertex set plus a subset of the host's
/// edges with both endpoints inside it. Not necessarily induced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSpec {
    pub vertices: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl SubgraphSpec {
    /// The induced subgraph spec on `vertices`.
    pub fn induced(g: &Graph, vertices: VertexSet) -> SubgraphSpec {
        let edges = g
            .edges()
            .filter(|&(u, v)| vertices.contains(u) && vertices.contains(v))
            .collect();
        SubgraphSpec { vertices, edges }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for v in self.vertices.iter() {
            if v >= g.n() {
                return Err(Error::contract(format!("vertex {v} not in host graph")));
            }
        }
        for &(u, v) in &self.edges {
            if !self.vertices.contains(u) || !self.vertices.contains(v) {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) has an endpoint outside the vertex set"
                )));
            }
            if !g.has_edge(u, v) {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) is not an edge of the host graph"
                )));
            }
        }
        Ok(())
    }
}

/// The lexicographic product of a base graph with an edgeless graph on
/// `copies` vertices: `copies` copies of each base vertex, with copy
/// `(u,i)` adjacent to `(v,j)` exactly when `uv` is a base edge.
#[derive(Clone, Debug)]
pub struct BlowupGraph {
    base: Graph,
    copies: usize,
}

impl BlowupGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Flat id of copy `i` (1-based) of base vertex `v`.
    pub fn vertex_id(&self, v: Vertex, i: usize) -> Vertex {
        debug_assert!((1..=self.copies).contains(&i));
        v * self.copies + (i - 1)
    }

    /// Inverse of `vertex_id`: `(base vertex, copy index)` with the
    /// copy index 1-based.
    pub fn base_of(&self, id: Vertex) -> (Vertex, usize) {
        (id / self.copies, id % self.copies + 1)
    }

    /// The blow-up as a plain graph on `n * copies` vertices.
    pub fn graph(&self) -> Graph {
        let r = self.copies;
        let mut edges = Vec::new();
        for (u, v) in self.base.edges() {
            for i in 1..=r {
                for j in 1..=r {
                    edges.push((self.vertex_id(u, i), self.vertex_id(v, j)));
                }
            }
        }
        Graph::from_edges(self.base.n() * r, &edges).expect("blow-up edges are valid")
    }
}

/// Builds the blow-up of `g` with `r >= 1` copies per vertex.
pub fn blowup(g: &Graph, r: usize) -> Result<BlowupGraph> {
    if r == 0 {
        return Err(Error::contract("blow-up copy count must be at least 1"));
    }
    Ok(BlowupGraph { base: g.clone(), copies: r })
}
