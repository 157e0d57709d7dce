//! Trace partitions for the (X, r)-twin equivalence, exact
//! r-neighbourhood complexity on tiny graphs by full subgraph
//! enumeration, randomised lower-bound search, and evaluation of the
//! theorem bounds with exact arithmetic.

use crate::graph::{Graph, SubgraphSpec, Vertex, VertexSet};
use crate::signatures::Partition;
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::{BigUint, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub type Rational = Ratio<u64>;

/// Per-vertex traces `N^r[v] ∩ X` and the induced partition.
#[derive(Clone, Debug)]
pub struct TraceTable {
    pub traces: Vec<VertexSet>,
    pub partition: Partition,
}

impl TraceTable {
    pub fn class_count(&self) -> usize {
        self.partition.class_count()
    }
}

/// Builds the trace table of `g` for a non-empty `X` at radius `r`.
pub fn trace_table(g: &Graph, x: &VertexSet, r: usize) -> Result<TraceTable> {
    if x.is_empty() {
        return Err(Error::contract("the twin equivalence requires non-empty X"));
    }
    if let Some(v) = x.iter().find(|&v| v >= g.n()) {
        return Err(Error::contract(format!("X contains out-of-range vertex {v}")));
    }
    let traces: Vec<VertexSet> =
        (0..g.n()).map(|v| g.closed_ball(v, r).intersection(x)).collect();
    let partition = Partition::from_keys((0..g.n()).collect(), &traces);
    Ok(TraceTable { traces, partition })
}

/// Class count over |X| at the fixed instance (H = G).
pub fn nu_fixed(g: &Graph, x: &VertexSet, r: usize) -> Result<Rational> {
    let t = trace_table(g, x, r)?;
    Ok(Rational::new(t.class_count() as u64, x.len() as u64))
}

/// How a reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuMode {
    Exact,
    LowerBound,
    FixedInstance,
}

impl NuMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            NuMode::Exact => "exact",
            NuMode::LowerBound => "lower-bound",
            NuMode::FixedInstance => "fixed-instance",
        }
    }
}

/// A neighbourhood-complexity value together with the witness attaining
/// it.
#[derive(Clone, Debug)]
pub struct NuReport {
    pub value: Rational,
    pub mode: NuMode,
    pub witness_subgraph: SubgraphSpec,
    pub witness_x: VertexSet,
    pub seed: Option<u64>,
    pub budget: Option<usize>,
}

pub const NU_GUARD_N: usize = 9;
pub const NU_GUARD_M: usize = 14;

/// Exact nu_r by enumerating every subgraph (vertex subset plus edge
/// subset) and every non-empty X. Guarded: the search space is
/// `sum_S 2^(e(S)) * 2^|S|`.
pub fn nu_exact(g: &Graph, r: usize) -> Result<NuReport> {
    nu_exact_inner(g, r, false)
}

/// Restricting the maximum to induced subgraphs gives a lower bound on
/// the true nu_r (the definition quantifies over all subgraphs).
pub fn nu_exact_induced(g: &Graph, r: usize) -> Result<NuReport> {
    nu_exact_inner(g, r, true)
}

fn nu_exact_inner(g: &Graph, r: usize, induced_only: bool) -> Result<NuReport> {
    if g.n() > NU_GUARD_N || g.m() > NU_GUARD_M {
        return Err(Error::guard(format!(
            "exact nu enumeration is capped at n <= {NU_GUARD_N}, m <= {NU_GUARD_M} \
             (n = {}, m = {}); use nu_lower_bound for a witnessed bound",
            g.n(),
            g.m()
        )));
    }
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let n = g.n();
    let all_edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    // Workers split on the vertex subset; the reduction keeps the
    // lexicographically least witness among maximal values.
    let best = (1u64..1 << n)
        .into_par_iter()
        .map(|vmask| {
            let vertices: Vec<Vertex> = (0..n).filter(|&v| vmask >> v & 1 == 1).collect();
            let inner_edges: Vec<(Vertex, Vertex)> = all_edges
                .iter()
                .copied()
                .filter(|&(u, v)| vmask >> u & 1 == 1 && vmask >> v & 1 == 1)
                .collect();
            let mut best: Option<(Rational, SubgraphSpec, VertexSet)> = None;
            let emask_count: u64 = 1 << inner_edges.len();
            let emasks: Box<dyn Iterator<Item = u64>> = if induced_only {
                Box::new(std::iter::once(emask_count - 1))
            } else {
                Box::new(0..emask_count)
            };
            for emask in emasks {
                let edges: Vec<(Vertex, Vertex)> = inner_edges
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| emask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let spec = SubgraphSpec {
                    vertices: VertexSet::from_sorted(vertices.clone()),
                    edges,
                };
                let (h, old_ids) = g.realize_subgraph(&spec).expect("spec is valid");
                let balls: Vec<u64> =
                    (0..h.n()).map(|v| h.closed_ball(v, r).to_mask()).collect();
                for xmask in 1u64..1 << h.n() {
                    let mut seen: Vec<u64> = Vec::with_capacity(h.n());
                    for &b in &balls {
                        let t = b & xmask;
                        if !seen.contains(&t) {
                            seen.push(t);
                        }
                    }
                    let value =
                        Rational::new(seen.len() as u64, xmask.count_ones() as u64);
                    if best.as_ref().map_or(true, |(b, _, _)| value > *b) {
                        let x: VertexSet = (0..h.n())
                            .filter(|&v| xmask >> v & 1 == 1)
                            .map(|v| old_ids[v])
                            .collect();
                        best = Some((value, spec.clone(), x));
                    }
                }
            }
            best
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (None, x) | (x, None) => x,
                (Some(a), Some(b)) => {
                    if b.0 > a.0 {
                        Some(b)
                    } else {
                        Some(a)
                    }
                }
            },
        )
        .expect("at least one non-empty vertex subset");
    Ok(NuReport {
        value: best.0,
        mode: if induced_only { NuMode::LowerBound } else { NuMode::Exact },
        witness_subgraph: best.1,
        witness_x: best.2,
        seed: None,
        budget: None,
    })
}

/// Randomised hill-climbing lower bound on nu_r: mutate (induced vertex
/// set, deleted edges, X) and keep improvements; restart on stagnation.
/// The result is a genuine witness, so it never exceeds the true nu_r.
pub fn nu_lower_bound(g: &Graph, r: usize, seed: u64, budget: usize) -> Result<NuReport> {
    if g.n() == 0 {
        return Err(Error::contract("graph must be non-empty"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all_edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let n = g.n();

    let evaluate = |vset: &[bool], removed: &[bool], xset: &[bool]| -> Option<(Rational, SubgraphSpec, VertexSet)> {
        let vertices: VertexSet = (0..n).filter(|&v| vset[v]).collect();
        if vertices.is_empty() {
            return None;
        }
        let x: VertexSet = (0..n).filter(|&v| xset[v] && vset[v]).collect();
        if x.is_empty() {
            return None;
        }
        let edges: Vec<(Vertex, Vertex)> = all_edges
            .iter()
            .enumerate()
            .filter(|&(i, &(u, v))| !removed[i] && vset[u] && vset[v])
            .map(|(_, &e)| e)
            .collect();
        let spec = SubgraphSpec { vertices: vertices.clone(), edges };
        let (h, old_ids) = g.realize_subgraph(&spec).ok()?;
        let hx: VertexSet = x
            .iter()
            .map(|v| old_ids.iter().position(|&o| o == v).expect("x inside vertices"))
            .collect();
        let value = nu_fixed(&h, &hx, r).ok()?;
        Some((value, spec, x))
    };

    // Start from the whole graph with X = best single vertex.
    let vset = vec![true; n];
    let removed = vec![false; all_edges.len()];
    let mut xset = vec![false; n];
    xset[0] = true;
    let mut best = evaluate(&vset, &removed, &xset)
        .expect("initial state is evaluable");
    let mut current = best.clone();
    let mut cur_state = (vset.clone(), removed.clone(), xset.clone());
    let mut stale = 0usize;
    for _ in 0..budget {
        let (ref mut vs, ref mut rm, ref mut xs) = cur_state;
        // One random move: toggle X membership, toggle an edge, or
        // toggle a vertex.
        let kind = rng.gen_range(0..3);
        let undo: Box<dyn Fn(&mut Vec<bool>, &mut Vec<bool>, &mut Vec<bool>)> = match kind {
            0 => {
                let v = rng.gen_range(0..n);
                xs[v] = !xs[v];
                Box::new(move |_, _, xs| xs[v] = !xs[v])
            }
            1 if !all_edges.is_empty() => {
                let e = rng.gen_range(0..all_edges.len());
                rm[e] = !rm[e];
                Box::new(move |_, rm, _| rm[e] = !rm[e])
            }
            _ => {
                let v = rng.gen_range(0..n);
                vs[v] = !vs[v];
                Box::new(move |vs, _, _| vs[v] = !vs[v])
            }
        };
        match evaluate(vs, rm, xs) {
            Some(cand) if cand.0 >= current.0 => {
                current = cand;
                if current.0 > best.0 {
                    best = current.clone();
                    stale = 0;
                }
            }
            _ => {
                undo(vs, rm, xs);
                stale += 1;
            }
        }
        if stale > 50 {
            // Restart from a random induced subgraph and singleton X.
            for v in 0..n {
                vs[v] = rng.gen_bool(0.8);
            }
            for e in rm.iter_mut() {
                *e = false;
            }
            for v in 0..n {
                xs[v] = false;
            }
            xs[rng.gen_range(0..n)] = true;
            if let Some(cand) = evaluate(vs, rm, xs) {
                current = cand;
            }
            stale = 0;
        }
    }
    Ok(NuReport {
        value: best.0,
        mode: NuMode::LowerBound,
        witness_subgraph: best.1,
        witness_x: best.2,
        seed: Some(seed),
        budget: Some(budget),
    })
}

/// Re-evaluates a report's witness; used to confirm the invariant that
/// witnesses reproduce their value.
pub fn reevaluate_witness(g: &Graph, report: &NuReport, r: usize) -> Result<Rational> {
    let (h, old_ids) = g.realize_subgraph(&report.witness_subgraph)?;
    let hx: VertexSet = report
        .witness_x
        .iter()
        .map(|v| {
            old_ids
                .iter()
                .position(|&o| o == v)
                .ok_or_else(|| Error::contract("witness X outside witness subgraph"))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    nu_fixed(&h, &hx, r)
}

/// Right-hand side of the centred-colouring bound:
/// `(r+1) * 2^(chi^(r+2))`, exactly.
pub fn centred_bound_rhs(r: usize, chi: u32) -> Result<BigUint> {
    let exponent = (chi as u64)
        .checked_pow(r as u32 + 2)
        .filter(|&e| e <= 4_000_000)
        .ok_or_else(|| Error::guard("centred bound exponent too large to materialise"))?;
    Ok(BigUint::from(r as u64 + 1) * BigUint::from(2u32).pow(exponent as u32))
}

/// Right-hand side of the weak-colouring bound:
/// `(1/2) (2r+2)^w * w + 1`, exactly.
pub fn wcol_bound_rhs(r: usize, w: usize) -> BigRational {
    let base = BigInt::from(2 * r + 2);
    let pow = num::pow::pow(base, w);
    BigRational::new(pow * BigInt::from(w), BigInt::from(2)) + BigRational::one()
}

/// Comparison of a neighbourhood-complexity value against the two
/// theorem bounds, with exact arithmetic throughout.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub nu_value: Rational,
    pub nu_mode: NuMode,
    /// `(chi_{2r+2}, rhs, holds)` when a chi value was supplied.
    pub centred: Option<(u32, BigUint, bool)>,
    /// `(wcol_{2r}, rhs, holds)` when a wcol value was supplied.
    pub wcol: Option<(usize, BigRational, bool)>,
    /// True when the supplied parameters were exact, making the
    /// comparison a genuine theorem check rather than informational.
    pub exact_inputs: bool,
}

/// Evaluates both theorem right-hand sides against a nu_r value.
/// `chi` must be chi_{2r+2}(G) and `w` must be wcol_{2r}(G); pass
/// `exact_inputs = false` when they are mere upper bounds.
pub fn theorem_bounds(
    nu: &NuReport,
    r: usize,
    chi: Option<u32>,
    w: Option<usize>,
    exact_inputs: bool,
) -> Result<BoundsReport> {
    let nu_big = BigRational::new(
        BigInt::from(*nu.value.numer()),
        BigInt::from(*nu.value.denom()),
    );
    let centred = match chi {
        Some(chi) => {
            let rhs = centred_bound_rhs(r, chi)?;
            let holds = nu_big <= BigRational::from(BigInt::from(rhs.clone()));
            Some((chi, rhs, holds))
        }
        None => None,
    };
    let wcol = match w {
        Some(w) => {
            let rhs = wcol_bound_rhs(r, w);
            let holds = nu_big <= rhs;
            Some((w, rhs, holds))
        }
        None => None,
    };
    Ok(BoundsReport { nu_value: nu.value, nu_mode: nu.mode, centred, wcol, exact_inputs })
}

/// Exact class count |V(G) / twin(X, r)|, used by the theorem suites.
pub fn twin_class_count(g: &Graph, x: &VertexSet, r: usize) -> Result<usize> {
    Ok(trace_table(g, x, r)?.class_count())
}

/// True when `classes <= bound` for a rational bound.
pub fn count_within(classes: usize, bound: &BigRational) -> bool {
    BigRational::from(BigInt::from(classes)) <= *bound && !bound.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, Graph};

    #[test]
    fn trace_table_star_leaves() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let x = VertexSet::new(vec![1, 2, 3]);
        let t = trace_table(&star, &x, 1).unwrap();
        assert_eq!(t.class_count(), 4);
        assert_eq!(nu_fixed(&star, &x, 1).unwrap(), Rational::new(4, 3));
    }

    #[test]
    fn trace_table_full_x_large_radius() {
        let g = path(4);
        let x = VertexSet::full(4);
        let t = trace_table(&g, &x, 3).unwrap();
        assert_eq!(t.class_count(), 1);
    }

    #[test]
    fn trace_table_radius_zero() {
        let g = path(4);
        let x = VertexSet::new(vec![0, 2]);
        let t = trace_table(&g, &x, 0).unwrap();
        // Singletons for members of X plus one empty-trace class.
        assert_eq!(t.class_count(), 3);
        assert_eq!(nu_fixed(&g, &x, 0).unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn trace_table_rejects_empty_x() {
        assert!(trace_table(&path(3), &VertexSet::empty(), 1).is_err());
    }

    #[test]
    fn nu_exact_k1() {
        let report = nu_exact(&Graph::edgeless(1), 1).unwrap();
        assert_eq!(report.value, Rational::new(1, 1));
    }

    #[test]
    fn nu_exact_k2_is_two() {
        let report = nu_exact(&complete(2), 1).unwrap();
        assert_eq!(report.value, Rational::new(2, 1));
        assert_eq!(reevaluate_witness(&complete(2), &report, 1).unwrap(), report.value);
    }

    #[test]
    fn nu_exact_edgeless_pair_r0() {
        let report = nu_exact(&Graph::edgeless(2), 0).unwrap();
        assert_eq!(report.value, Rational::new(2, 1));
    }

    #[test]
    fn nu_guard_refuses_large() {
        let g = complete(6); // 15 edges
        assert!(nu_exact(&g, 1).is_err());
    }

    #[test]
    fn nu_lower_bound_reaches_two_on_k2() {
        let report = nu_lower_bound(&complete(2), 1, 3, 50).unwrap();
        assert_eq!(report.value, Rational::new(2, 1));
        assert_eq!(reevaluate_witness(&complete(2), &report, 1).unwrap(), report.value);
    }

    #[test]
    fn nu_lower_bound_never_exceeds_exact() {
        for seed in 0..5 {
            let g = crate::graph::cycle(5);
            let exact = nu_exact(&g, 1).unwrap();
            let lb = nu_lower_bound(&g, 1, seed, 200).unwrap();
            assert!(lb.value <= exact.value);
        }
    }

    #[test]
    fn nu_induced_is_lower_bound() {
        let g = crate::graph::cycle(5);
        let full = nu_exact(&g, 1).unwrap();
        let ind = nu_exact_induced(&g, 1).unwrap();
        assert!(ind.value <= full.value);
    }

    #[test]
    fn nu_subgraph_monotone() {
        let g = crate::graph::path(5);
        let h = crate::graph::path(4);
        assert!(nu_exact(&h, 1).unwrap().value <= nu_exact(&g, 1).unwrap().value);
    }

    #[test]
    fn centred_bound_small_values() {
        // r=1, chi=2: 2 * 2^(2^3) = 512.
        assert_eq!(centred_bound_rhs(1, 2).unwrap(), BigUint::from(512u32));
    }

    #[test]
    fn wcol_bound_small_values() {
        // r=1, w=2: (1/2) * 16 * 2 + 1 = 17.
        assert_eq!(wcol_bound_rhs(1, 2), BigRational::from(BigInt::from(17)));
    }

    #[test]
    fn theorem_bounds_k2() {
        let report = nu_exact(&complete(2), 1).unwrap();
        let b = theorem_bounds(&report, 1, Some(2), Some(2), true).unwrap();
        assert!(b.centred.unwrap().2);
        assert!(b.wcol.unwrap().2);
    }
}
