//! Colour signatures, sigma-neighbourhoods and the equivalence
//! refinement machinery built on top of them: the dichotomy and
//! laminarity checks, trace partitions, the blow-up colouring and the
//! three-step refinement chain.

mod partition;

pub use partition::Partition;

use crate::graph::{blowup, Graph, Vertex, VertexSet};
use crate::{Error, Result};
use num::BigUint;

/// A sequence of colour identifiers over a palette `[0, xi)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Signature {
    entries: Vec<u32>,
}

impl Signature {
    pub fn new(entries: Vec<u32>) -> Result<Signature> {
        if entries.is_empty() {
            return Err(Error::contract("signatures have length at least 1"));
        }
        Ok(Signature { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 0-based access; the i-th colour of the signature.
    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// True when all entries are pairwise distinct.
    pub fn is_proper(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.entries.iter().all(|c| seen.insert(c))
    }

    pub fn reversed(&self) -> Signature {
        let mut entries = self.entries.clone();
        entries.reverse();
        Signature { entries }
    }
}

/// All signatures over palette `[0, palette)` of length `1..=max_len`,
/// in (length, lexicographic) order.
pub fn all_signatures(palette: u32, max_len: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<u32>> = vec![vec![]];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for prefix in &current {
            for c in 0..palette {
                let mut s = prefix.clone();
                s.push(c);
                next.push(s);
            }
        }
        for s in &next {
            out.push(Signature { entries: s.clone() });
        }
        current = next;
    }
    out
}

/// The proper signatures among `all_signatures(palette, max_len)`.
pub fn proper_signatures(palette: u32, max_len: usize) -> Vec<Signature> {
    all_signatures(palette, max_len)
        .into_iter()
        .filter(Signature::is_proper)
        .collect()
}

/// A total colouring of a graph's vertices with palette `[0, palette)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Colouring {
    palette: u32,
    colours: Vec<u32>,
}

impl Colouring {
    pub fn new(palette: u32, colours: Vec<u32>) -> Result<Colouring> {
        if let Some(&c) = colours.iter().find(|&&c| c >= palette) {
            return Err(Error::contract(format!(
                "colour {c} outside palette of size {palette}"
            )));
        }
        Ok(Colouring { palette, colours })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colour(&self, v: Vertex) -> u32 {
        self.colours[v]
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    /// Injective colouring on `n` vertices.
    pub fn injective(n: usize) -> Colouring {
        Colouring { palette: n as u32, colours: (0..n as u32).collect() }
    }
}

/// Engine choice for sigma-neighbourhood queries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaMode {
    /// Enumerate simple paths by DFS with colour-prefix pruning. The
    /// general-purpose oracle; exponential in the signature length.
    Paths,
    /// Layered walk propagation. Only sound for proper signatures: a
    /// walk whose colours are pairwise distinct cannot repeat a vertex,
    /// so it is a simple path.
    WalkDp,
}

/// The endpoints of sigma-paths starting at `v`, i.e. vertices `w` such
/// that some simple path from `v` to `w` has colour trace exactly `sig`.
pub fn sigma_neighbourhood(
    g: &Graph,
    c: &Colouring,
    v: Vertex,
    sig: &Signature,
    mode: SigmaMode,
) -> Result<VertexSet> {
    check_colouring(g, c)?;
    if v >= g.n() {
        return Err(Error::contract(format!("vertex {v} out of range")));
    }
    match mode {
        SigmaMode::Paths => Ok(sigma_nb_paths(g, c, v, sig)),
        SigmaMode::WalkDp => {
            if !sig.is_proper() {
                return Err(Error::contract(
                    "walk-dp mode requires a proper signature",
                ));
            }
            Ok(sigma_nb_walk_dp(g, c, v, sig))
        }
    }
}

/// Vertices `w` with a sigma-path from `w` to `v` whose trace, read from
/// `w`, equals `sig`. On undirected graphs this is the
/// reversed-signature out-neighbourhood.
pub fn sigma_in_neighbourhood(
    g: &Graph,
    c: &Colouring,
    v: Vertex,
    sig: &Signature,
    mode: SigmaMode,
) -> Result<VertexSet> {
    sigma_neighbourhood(g, c, v, &sig.reversed(), mode)
}

fn sigma_nb_paths(g: &Graph, c: &Colouring, v: Vertex, sig: &Signature) -> VertexSet {
    if c.colour(v) != sig.entry(0) {
        return VertexSet::empty();
    }
    let mut on_path = vec![false; g.n()];
    let mut found = vec![false; g.n()];
    on_path[v] = true;
    dfs_paths(g, c, sig, v, 1, &mut on_path, &mut found);
    VertexSet::from_sorted((0..g.n()).filter(|&w| found[w]).collect())
}

fn dfs_paths(
    g: &Graph,
    c: &Colouring,
    sig: &Signature,
    u: Vertex,
    depth: usize,
    on_path: &mut Vec<bool>,
    found: &mut Vec<bool>,
) {
    if depth == sig.len() {
        found[u] = true;
        return;
    }
    for &w in g.neighbours(u) {
        if !on_path[w] && c.colour(w) == sig.entry(depth) {
            on_path[w] = true;
            dfs_paths(g, c, sig, w, depth + 1, on_path, found);
            on_path[w] = false;
        }
    }
}

fn sigma_nb_walk_dp(g: &Graph, c: &Colouring, v: Vertex, sig: &Signature) -> VertexSet {
    if c.colour(v) != sig.entry(0) {
        return VertexSet::empty();
    }
    let mut layer = vec![false; g.n()];
    layer[v] = true;
    for i in 1..sig.len() {
        let mut next = vec![false; g.n()];
        for u in 0..g.n() {
            if layer[u] {
                for &w in g.neighbours(u) {
                    if c.colour(w) == sig.entry(i) {
                        next[w] = true;
                    }
                }
            }
        }
        layer = next;
    }
    VertexSet::from_sorted((0..g.n()).filter(|&w| layer[w]).collect())
}

/// Outcome of a dichotomy check over all unordered vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DichotomyVerdict {
    Holds,
    /// First pair (in lexicographic order) whose sigma-neighbourhoods
    /// are neither disjoint nor equal.
    Counterexample(Vertex, Vertex),
}

/// For a proper signature, the sigma-neighbourhoods of any two vertices
/// must be disjoint or equal, provided the colouring is suitably
/// centred. Without that hypothesis the verdict is informational only.
pub fn check_dichotomy(g: &Graph, c: &Colouring, sig: &Signature) -> Result<DichotomyVerdict> {
    if !sig.is_proper() {
        return Err(Error::contract("dichotomy check expects a proper signature"));
    }
    let nbs: Vec<VertexSet> = (0..g.n())
        .map(|v| sigma_neighbourhood(g, c, v, sig, SigmaMode::WalkDp))
        .collect::<Result<_>>()?;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if nbs[u] != nbs[v] && !nbs[u].is_disjoint_from(&nbs[v]) {
                return Ok(DichotomyVerdict::Counterexample(u, v));
            }
        }
    }
    Ok(DichotomyVerdict::Holds)
}

/// Outcome of a laminarity check between the class families of two
/// proper signatures over their common ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaminarityVerdict {
    Holds,
    /// Two classes that overlap without either containing the other.
    Counterexample {
        class_of_first: VertexSet,
        class_of_second: VertexSet,
    },
}

/// Checks that the trace partitions of `sig1` and `sig2` over the
/// ground set `Y = N^{-sig1}(X) ∩ N^{-sig2}(X)` form a laminar family.
pub fn check_laminarity(
    g: &Graph,
    c: &Colouring,
    sig1: &Signature,
    sig2: &Signature,
    x: &VertexSet,
) -> Result<LaminarityVerdict> {
    if !sig1.is_proper() || !sig2.is_proper() {
        return Err(Error::contract("laminarity check expects proper signatures"));
    }
    let traces1: Vec<VertexSet> = (0..g.n())
        .map(|v| Ok(sigma_neighbourhood(g, c, v, sig1, SigmaMode::WalkDp)?.intersection(x)))
        .collect::<Result<_>>()?;
    let traces2: Vec<VertexSet> = (0..g.n())
        .map(|v| Ok(sigma_neighbourhood(g, c, v, sig2, SigmaMode::WalkDp)?.intersection(x)))
        .collect::<Result<_>>()?;
    let ground: Vec<Vertex> = (0..g.n())
        .filter(|&v| !traces1[v].is_empty() && !traces2[v].is_empty())
        .collect();
    let classes1 = group_by_trace(&ground, |v| traces1[v].clone());
    let classes2 = group_by_trace(&ground, |v| traces2[v].clone());
    for c1 in &classes1 {
        for c2 in &classes2 {
            let inter = c1.intersection(c2);
            if !inter.is_empty() && inter != *c1 && inter != *c2 {
                return Ok(LaminarityVerdict::Counterexample {
                    class_of_first: c1.clone(),
                    class_of_second: c2.clone(),
                });
            }
        }
    }
    Ok(LaminarityVerdict::Holds)
}

fn group_by_trace(ground: &[Vertex], trace: impl Fn(Vertex) -> VertexSet) -> Vec<VertexSet> {
    let mut map: std::collections::BTreeMap<VertexSet, Vec<Vertex>> = Default::default();
    for &v in ground {
        map.entry(trace(v)).or_default().push(v);
    }
    let mut classes: Vec<VertexSet> = map.into_values().map(VertexSet::new).collect();
    classes.sort();
    classes
}

/// Partition of `ground` by equality of the full trace tuple
/// `(N^sig(v) ∩ X)` over the given signature family. The empty family
/// yields a single class.
pub fn trace_partition_sigma_family(
    g: &Graph,
    c: &Colouring,
    x: &VertexSet,
    sigs: &[Signature],
    ground: &VertexSet,
) -> Result<Partition> {
    let keys: Vec<Vec<VertexSet>> = ground
        .iter()
        .map(|v| {
            sigs.iter()
                .map(|s| {
                    let mode = if s.is_proper() { SigmaMode::WalkDp } else { SigmaMode::Paths };
                    Ok(sigma_neighbourhood(g, c, v, s, mode)?.intersection(x))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(Partition::from_keys(ground.iter().collect(), &keys))
}

/// The blow-up colouring: copy `(v, i)` receives the pair colour
/// `(c(v), i)`, serialised as the flat colour `c(v) * r + (i - 1)`.
pub fn hatted_colouring(g: &Graph, c: &Colouring, r: usize) -> Result<Colouring> {
    check_colouring(g, c)?;
    if r == 0 {
        return Err(Error::contract("blow-up needs at least one copy"));
    }
    let b = blowup(g, r)?;
    let colours: Vec<u32> = (0..g.n() * r)
        .map(|id| {
            let (v, i) = b.base_of(id);
            c.colour(v) * r as u32 + (i as u32 - 1)
        })
        .collect();
    Colouring::new(c.palette() * r as u32, colours)
}

/// Lifts a signature to its proper blow-up form: entry `sig[i]` becomes
/// the pair colour `(sig[i], i)`, which is distinct for every position.
pub fn hatted_signature(sig: &Signature, r: usize) -> Result<Signature> {
    if sig.len() > r {
        return Err(Error::contract(format!(
            "signature of length {} cannot be lifted into a blow-up with {r} copies",
            sig.len()
        )));
    }
    let entries: Vec<u32> = sig
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &col)| col * r as u32 + i as u32)
        .collect();
    Signature::new(entries)
}

/// Result of checking the three-step refinement chain.
#[derive(Clone, Debug)]
pub struct ChainReport {
    /// (X, r-1)-twin partition of V(G).
    pub twin_classes: usize,
    /// Trace partition over all signatures of length <= r.
    pub sigma_classes: usize,
    /// Trace partition over hatted signatures on the blow-up.
    pub hatted_classes: usize,
    /// `None` when the chain holds; otherwise the first offending pair
    /// together with which link broke.
    pub violation: Option<(String, Vertex, Vertex)>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Builds the three partitions of V(G) — by (X, r-1)-twin equivalence,
/// by traces over all signatures of length <= r, and by hatted traces on
/// the blow-up — and checks that each refines the previous.
pub fn refinement_chain_check(
    g: &Graph,
    c: &Colouring,
    x: &VertexSet,
    r: usize,
) -> Result<ChainReport> {
    check_colouring(g, c)?;
    if r == 0 {
        return Err(Error::contract("refinement chain needs r >= 1"));
    }
    let ground = VertexSet::full(g.n());

    // P1: (X, r-1)-twin equivalence.
    let twin_keys: Vec<VertexSet> =
        (0..g.n()).map(|v| g.closed_ball(v, r - 1).intersection(x)).collect();
    let p1 = Partition::from_keys((0..g.n()).collect(), &twin_keys);

    // P2: traces over all signatures of length <= r.
    let sigs = all_signatures(c.palette(), r);
    let p2 = trace_partition_sigma_family(g, c, x, &sigs, &ground)?;

    // P3: hatted traces N_Ĝ^{σ̂}(v¹) ∩ X^{|σ̂|} on the blow-up.
    let b = blowup(g, r)?;
    let bg = b.graph();
    let hc = hatted_colouring(g, c, r)?;
    let hatted_keys: Vec<Vec<VertexSet>> = (0..g.n())
        .map(|v| {
            sigs.iter()
                .map(|s| {
                    let hs = hatted_signature(s, r)?;
                    let x_level: VertexSet =
                        x.iter().map(|u| b.vertex_id(u, s.len())).collect();
                    let nb = sigma_neighbourhood(
                        &bg,
                        &hc,
                        b.vertex_id(v, 1),
                        &hs,
                        SigmaMode::WalkDp,
                    )?;
                    Ok(nb.intersection(&x_level))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let p3 = Partition::from_keys((0..g.n()).collect(), &hatted_keys);

    let violation = match p3.refines(&p2) {
        Err((u, v)) => Some(("hatted does not refine sigma".to_string(), u, v)),
        Ok(()) => match p2.refines(&p1) {
            Err((u, v)) => Some(("sigma does not refine twin".to_string(), u, v)),
            Ok(()) => None,
        },
    };
    Ok(ChainReport {
        twin_classes: p1.class_count(),
        sigma_classes: p2.class_count(),
        hatted_classes: p3.class_count(),
        violation,
    })
}

/// Verdict of the proper-signature class-count bound.
#[derive(Clone, Debug)]
pub struct CountVerdict {
    pub classes: usize,
    pub bound: BigUint,
    pub holds: bool,
}

/// For a non-empty family of proper signatures, the vertices with a
/// non-empty sigma-neighbourhood in `X` for every family member fall
/// into at most `|family| * |X|` trace classes.
pub fn lemma7_count_check(
    g: &Graph,
    c: &Colouring,
    x: &VertexSet,
    family: &[Signature],
) -> Result<CountVerdict> {
    if family.is_empty() {
        return Err(Error::contract(
            "the class-count bound is stated for non-empty signature families",
        ));
    }
    if let Some(s) = family.iter().find(|s| !s.is_proper()) {
        return Err(Error::contract(format!(
            "family contains a non-proper signature {:?}",
            s.entries()
        )));
    }
    let traces: Vec<Vec<VertexSet>> = (0..g.n())
        .map(|v| {
            family
                .iter()
                .map(|s| {
                    Ok(sigma_neighbourhood(g, c, v, s, SigmaMode::WalkDp)?.intersection(x))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let ground: Vec<Vertex> =
        (0..g.n()).filter(|&v| traces[v].iter().all(|t| !t.is_empty())).collect();
    let keys: Vec<&Vec<VertexSet>> = ground.iter().map(|&v| &traces[v]).collect();
    let p = Partition::from_keys(ground.clone(), &keys);
    let bound = BigUint::from(family.len()) * BigUint::from(x.len());
    Ok(CountVerdict {
        classes: p.class_count(),
        holds: BigUint::from(p.class_count()) <= bound,
        bound,
    })
}

/// The aggregate bound on the index of the hatted relation:
/// `|V(G) / hatted| <= r * 2^(xi^(r+1)) * |X|`.
pub fn lemma9_aggregate_check(
    g: &Graph,
    c: &Colouring,
    x: &VertexSet,
    r: usize,
) -> Result<CountVerdict> {
    let report = refinement_chain_check(g, c, x, r)?;
    let exponent = (c.palette() as u64)
        .checked_pow(r as u32 + 1)
        .filter(|&e| e <= 1_000_000)
        .ok_or_else(|| Error::guard("aggregate bound exponent too large to materialise"))?;
    let bound = BigUint::from(r)
        * BigUint::from(2u32).pow(exponent as u32)
        * BigUint::from(x.len());
    Ok(CountVerdict {
        classes: report.hatted_classes,
        holds: BigUint::from(report.hatted_classes) <= bound,
        bound,
    })
}

fn check_colouring(g: &Graph, c: &Colouring) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::contract(format!(
            "colouring covers {} vertices, graph has {}",
            c.n(),
            g.n()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn p3_aba() -> (Graph, Colouring) {
        (path(3), Colouring::new(2, vec![0, 1, 0]).unwrap())
    }

    fn sig(entries: &[u32]) -> Signature {
        Signature::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn sigma_single_path() {
        let (g, c) = p3_aba();
        let nb = sigma_neighbourhood(&g, &c, 0, &sig(&[0, 1]), SigmaMode::Paths).unwrap();
        assert_eq!(nb, VertexSet::singleton(1));
    }

    #[test]
    fn sigma_length_one_is_self() {
        let (g, c) = p3_aba();
        for v in g.vertices() {
            let s = sig(&[c.colour(v)]);
            let nb = sigma_neighbourhood(&g, &c, v, &s, SigmaMode::Paths).unwrap();
            assert_eq!(nb, VertexSet::singleton(v));
        }
    }

    #[test]
    fn sigma_empty_when_first_colour_mismatches() {
        let (g, c) = p3_aba();
        let nb = sigma_neighbourhood(&g, &c, 0, &sig(&[1, 0]), SigmaMode::Paths).unwrap();
        assert!(nb.is_empty());
    }

    #[test]
    fn sigma_in_endpoint_mismatch() {
        let (g, c) = p3_aba();
        // Paths wPv with trace (a,b) must end at a b-coloured v; vertex 2
        // has colour a.
        let nb = sigma_in_neighbourhood(&g, &c, 2, &sig(&[0, 1]), SigmaMode::Paths).unwrap();
        assert!(nb.is_empty());
    }

    #[test]
    fn sigma_in_both_sides_of_centre() {
        let (g, c) = p3_aba();
        let nb = sigma_in_neighbourhood(&g, &c, 1, &sig(&[0, 1]), SigmaMode::Paths).unwrap();
        assert_eq!(nb, VertexSet::new(vec![0, 2]));
    }

    #[test]
    fn walk_dp_rejects_non_proper() {
        let (g, c) = p3_aba();
        assert!(sigma_neighbourhood(&g, &c, 0, &sig(&[0, 1, 0]), SigmaMode::WalkDp).is_err());
    }

    #[test]
    fn walk_dp_agrees_with_paths_on_proper() {
        let g = cycle(5);
        let c = Colouring::new(3, vec![0, 1, 2, 0, 1]).unwrap();
        for s in proper_signatures(3, 3) {
            for v in g.vertices() {
                let a = sigma_neighbourhood(&g, &c, v, &s, SigmaMode::Paths).unwrap();
                let b = sigma_neighbourhood(&g, &c, v, &s, SigmaMode::WalkDp).unwrap();
                assert_eq!(a, b, "sig {:?} v {v}", s.entries());
            }
        }
    }

    #[test]
    fn reversal_duality() {
        let g = cycle(5);
        let c = Colouring::new(3, vec![0, 1, 2, 0, 1]).unwrap();
        for s in all_signatures(3, 3) {
            for v in g.vertices() {
                let nb = sigma_neighbourhood(&g, &c, v, &s, SigmaMode::Paths).unwrap();
                for w in nb.iter() {
                    let back =
                        sigma_neighbourhood(&g, &c, w, &s.reversed(), SigmaMode::Paths).unwrap();
                    assert!(back.contains(v));
                }
            }
        }
    }

    #[test]
    fn dichotomy_on_p3() {
        let (g, c) = p3_aba();
        assert_eq!(check_dichotomy(&g, &c, &sig(&[0, 1])).unwrap(), DichotomyVerdict::Holds);
    }

    #[test]
    fn dichotomy_length_one_always_holds() {
        let g = complete(4);
        let c = Colouring::new(2, vec![0, 0, 1, 1]).unwrap();
        assert_eq!(check_dichotomy(&g, &c, &sig(&[0])).unwrap(), DichotomyVerdict::Holds);
        assert_eq!(check_dichotomy(&g, &c, &sig(&[1])).unwrap(), DichotomyVerdict::Holds);
    }

    #[test]
    fn dichotomy_on_alternating_c4() {
        let g = cycle(4);
        let c = Colouring::new(2, vec![0, 1, 0, 1]).unwrap();
        // N^(a,b)(0) = {1,3} = N^(a,b)(2): equal, not a counterexample.
        assert_eq!(check_dichotomy(&g, &c, &sig(&[0, 1])).unwrap(), DichotomyVerdict::Holds);
    }

    #[test]
    fn laminarity_identical_signatures() {
        let g = path(4);
        let c = Colouring::new(4, vec![0, 1, 2, 3]).unwrap();
        let x = VertexSet::new(vec![0, 3]);
        let s = sig(&[0, 1]);
        assert_eq!(
            check_laminarity(&g, &c, &s, &s, &x).unwrap(),
            LaminarityVerdict::Holds
        );
    }

    #[test]
    fn laminarity_on_rainbow_p4() {
        let g = path(4);
        let c = Colouring::new(4, vec![0, 1, 2, 3]).unwrap();
        let x = VertexSet::new(vec![0, 3]);
        assert_eq!(
            check_laminarity(&g, &c, &sig(&[1, 0]), &sig(&[2, 3]), &x).unwrap(),
            LaminarityVerdict::Holds
        );
    }

    #[test]
    fn trace_partition_empty_family_single_class() {
        let (g, c) = p3_aba();
        let p = trace_partition_sigma_family(
            &g,
            &c,
            &VertexSet::full(3),
            &[],
            &VertexSet::full(3),
        )
        .unwrap();
        assert_eq!(p.class_count(), 1);
    }

    #[test]
    fn trace_partition_hand_example() {
        let (g, c) = p3_aba();
        let x = VertexSet::singleton(0);
        let p = trace_partition_sigma_family(
            &g,
            &c,
            &x,
            &[sig(&[0]), sig(&[0, 1])],
            &VertexSet::full(3),
        )
        .unwrap();
        // Vertex 0 has traces ({0}, {}); vertices 1 and 2 have ({}, {}).
        assert_eq!(p.class_count(), 2);
        assert_eq!(p.class_of(0), Some(0));
        assert_eq!(p.class_of(1), p.class_of(2));
    }

    #[test]
    fn hatted_colouring_r1_relabels() {
        let (g, c) = p3_aba();
        let hc = hatted_colouring(&g, &c, 1).unwrap();
        assert_eq!(hc.colours(), c.colours());
    }

    #[test]
    fn hatted_colouring_p3_r2_uses_four_colours() {
        let (g, c) = p3_aba();
        let hc = hatted_colouring(&g, &c, 2).unwrap();
        assert_eq!(hc.n(), 6);
        let used: std::collections::HashSet<u32> = hc.colours().iter().copied().collect();
        assert_eq!(used.len(), 4);
    }

    #[test]
    fn hatted_signature_is_proper() {
        let s = sig(&[0, 0, 1]);
        let hs = hatted_signature(&s, 3).unwrap();
        assert!(hs.is_proper());
        // Entry at position i lifts to col * r + i, mirroring the
        // blow-up colouring of copy i + 1.
        assert_eq!(hs.entries(), &[0, 1, 5]);
    }

    #[test]
    fn chain_on_single_vertex() {
        let g = Graph::edgeless(1);
        let c = Colouring::new(1, vec![0]).unwrap();
        let report =
            refinement_chain_check(&g, &c, &VertexSet::singleton(0), 1).unwrap();
        assert!(report.holds());
        assert_eq!(report.twin_classes, 1);
        assert_eq!(report.sigma_classes, 1);
        assert_eq!(report.hatted_classes, 1);
    }

    #[test]
    fn chain_on_p3() {
        let (g, c) = p3_aba();
        let x = VertexSet::new(vec![0, 2]);
        let report = refinement_chain_check(&g, &c, &x, 1).unwrap();
        assert!(report.holds());
        assert!(report.hatted_classes >= report.sigma_classes);
        assert!(report.sigma_classes >= report.twin_classes);
    }

    #[test]
    fn chain_r1_twin_partition_matches_r0_balls() {
        let (g, c) = p3_aba();
        let x = VertexSet::new(vec![0, 2]);
        let report = refinement_chain_check(&g, &c, &x, 1).unwrap();
        // (X,0)-twin classes: {0}, {2} singleton traces, {1} empty trace.
        assert_eq!(report.twin_classes, 3);
    }

    #[test]
    fn lemma7_rejects_empty_family() {
        let (g, c) = p3_aba();
        assert!(lemma7_count_check(&g, &c, &VertexSet::full(3), &[]).is_err());
    }

    #[test]
    fn lemma7_single_signature() {
        let (g, c) = p3_aba();
        let v = lemma7_count_check(&g, &c, &VertexSet::full(3), &[sig(&[0, 1])]).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn lemma7_p3_instance() {
        let (g, c) = p3_aba();
        let x = VertexSet::new(vec![0, 2]);
        let v = lemma7_count_check(&g, &c, &x, &[sig(&[0]), sig(&[0, 1])]).unwrap();
        assert!(v.holds);
    }
}
