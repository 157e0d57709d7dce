//! Verification suites: each runs one of the library's inequality or
//! structure checks over an exhaustive (or seeded, where exhaustion is
//! out of reach) corpus of small graphs and reports violations. A
//! violation in any suite means an implementation bug — the properties
//! themselves are theorems.

use crate::centred::{centred_colouring_from_forest, is_r_centred, treedepth_exact};
use crate::complexity::{centred_bound_rhs, twin_class_count, wcol_bound_rhs};
use crate::expansion::{bipartition, corollary14_check, lemma13_check, theorem15_check};
use crate::graph::{enumerate_small_graphs, enumerate_small_graphs_iso, Graph, VertexSet};
use crate::signatures::{
    check_dichotomy, check_laminarity, lemma7_count_check, lemma9_aggregate_check,
    proper_signatures, refinement_chain_check, Colouring, DichotomyVerdict, LaminarityVerdict,
    Signature,
};
use crate::wcol::{wcol_exact, witness_bundle, wreach, Ordering};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub corpus: String,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} over {} ({} cases, {} violations)",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.corpus,
            self.cases,
            self.violations.len()
        )
    }
}

fn desc(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(","))
}

fn labelled_graphs(max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_small_graphs(n, connected_only)?);
    }
    Ok(out)
}

fn all_x(n: usize) -> Vec<VertexSet> {
    (1u64..1 << n).map(VertexSet::from_mask).collect()
}

fn random_x(n: usize, rng: &mut impl Rng) -> VertexSet {
    loop {
        let mask = rng.gen_range(1..1u64 << n);
        if mask != 0 {
            return VertexSet::from_mask(mask);
        }
    }
}

fn per_graph_rng(seed: u64, idx: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Parallel fan-out over the corpus with order-stable aggregation.
fn run<F>(name: &str, corpus_desc: String, corpus: &[Graph], check: F) -> SuiteReport
where
    F: Fn(usize, &Graph) -> Result<(usize, Vec<String>)> + Sync,
{
    let per_graph: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .enumerate()
        .map(|(idx, g)| match check(idx, g) {
            Ok(pair) => pair,
            Err(e) => (1, vec![format!("{}: suite error: {e}", desc(g))]),
        })
        .collect();
    let mut cases = 0;
    let mut violations = Vec::new();
    for (c, mut v) in per_graph {
        cases += c;
        violations.append(&mut v);
    }
    SuiteReport { name: name.to_string(), corpus: corpus_desc, cases, violations }
}

const SAMPLED_X_PER_GRAPH: usize = 100;

/// Class-count bound via the weak colouring number:
/// `|V / twin(X, r)| <= ((1/2)(2r+2)^w * w + 1) |X|` with
/// `w = wcol_2r` exact, over every connected graph up to `max_n`.
/// X ranges over all non-empty subsets up to n = 5, then 100 seeded
/// samples per graph.
pub fn theorem3_suite(max_n: usize, seed: u64) -> Result<SuiteReport> {
    if max_n > 6 {
        return Err(Error::guard(format!(
            "wcol class-count suite is capped at n <= 6 (requested {max_n})"
        )));
    }
    let corpus = labelled_graphs(max_n, true)?;
    Ok(run(
        "theorem3",
        format!("all connected labelled graphs n <= {max_n}, r in {{1, 2}}"),
        &corpus,
        |idx, g| {
            let mut cases = 0;
            let mut violations = Vec::new();
            for r in [1usize, 2] {
                let (w, _) = wcol_exact(g, 2 * r)?;
                let per_x = wcol_bound_rhs(r, w);
                let xs: Vec<VertexSet> = if g.n() <= 5 {
                    all_x(g.n())
                } else {
                    let mut rng = per_graph_rng(seed, idx);
                    (0..SAMPLED_X_PER_GRAPH).map(|_| random_x(g.n(), &mut rng)).collect()
                };
                for x in xs {
                    let classes = twin_class_count(g, &x, r)?;
                    let bound = per_x.clone() * BigRational::from(BigInt::from(x.len()));
                    cases += 1;
                    if BigRational::from(BigInt::from(classes)) > bound {
                        violations.push(format!(
                            "{}: r={r} X={:?} classes={classes} exceeds {bound} (wcol_{}={w})",
                            desc(g),
                            x.as_slice(),
                            2 * r
                        ));
                    }
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// Class-count bound via the centred colouring number:
/// `|V / twin(X, 1)| <= 2 * 2^(chi_4^3) * |X|` with chi_4 exact, over
/// every connected graph up to `max_n` and every non-empty X.
pub fn theorem2_suite(max_n: usize) -> Result<SuiteReport> {
    if max_n > 5 {
        return Err(Error::guard(format!(
            "centred class-count suite is capped at n <= 5 (requested {max_n})"
        )));
    }
    let corpus = labelled_graphs(max_n, true)?;
    Ok(run(
        "theorem2",
        format!("all connected labelled graphs n <= {max_n}, r = 1"),
        &corpus,
        |_, g| {
            let mut cases = 0;
            let mut violations = Vec::new();
            let (chi, _) = crate::centred::chi_r_exact(g, 4)?;
            let per_x = centred_bound_rhs(1, chi)?;
            for x in all_x(g.n()) {
                let classes = twin_class_count(g, &x, 1)?;
                let bound = per_x.clone() * BigUint::from(x.len());
                cases += 1;
                if BigUint::from(classes) > bound {
                    violations.push(format!(
                        "{}: X={:?} classes={classes} exceeds {bound} (chi_4={chi})",
                        desc(g),
                        x.as_slice()
                    ));
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// A 4-centred colouring from the exact elimination forest, verified.
fn verified_colouring(g: &Graph) -> Result<Colouring> {
    let (_, forest) = treedepth_exact(g)?;
    let c = centred_colouring_from_forest(g, &forest)?;
    let verdict = is_r_centred(g, &c, 4)?;
    if !verdict.is_centred {
        return Err(Error::contract(format!(
            "forest colouring of {} failed the 4-centred verification",
            desc(g)
        )));
    }
    Ok(c)
}

const COLOURED_SUITE_CAP: usize = 5;

fn coloured_corpus_guard(max_n: usize) -> Result<()> {
    if max_n > COLOURED_SUITE_CAP {
        return Err(Error::guard(format!(
            "coloured suites are capped at n <= {COLOURED_SUITE_CAP} (requested {max_n})"
        )));
    }
    Ok(())
}

/// Dichotomy of sigma-neighbourhoods under a verified centred
/// colouring: for every proper signature of length <= 3, any two
/// vertices have disjoint or equal sigma-neighbourhoods.
pub fn lemma4_suite(max_n: usize) -> Result<SuiteReport> {
    coloured_corpus_guard(max_n)?;
    let corpus = labelled_graphs(max_n, false)?;
    Ok(run(
        "lemma4",
        format!("all labelled graphs n <= {max_n}, forest colourings, |sigma| <= 3"),
        &corpus,
        |_, g| {
            let c = verified_colouring(g)?;
            let mut cases = 0;
            let mut violations = Vec::new();
            for sig in proper_signatures(c.palette(), 3) {
                cases += 1;
                if let DichotomyVerdict::Counterexample(u, v) = check_dichotomy(g, &c, &sig)? {
                    violations.push(format!(
                        "{}: sigma={:?} vertices {u},{v} neither disjoint nor equal",
                        desc(g),
                        sig.entries()
                    ));
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// Laminarity of trace classes for pairs of proper signatures over the
/// common reach set, under a verified centred colouring.
pub fn lemma5_suite(max_n: usize, seed: u64) -> Result<SuiteReport> {
    coloured_corpus_guard(max_n)?;
    let corpus = labelled_graphs(max_n, false)?;
    Ok(run(
        "lemma5",
        format!("all labelled graphs n <= {max_n}, forest colourings, signature pairs |sigma| <= 2"),
        &corpus,
        |idx, g| {
            let c = verified_colouring(g)?;
            let sigs = proper_signatures(c.palette(), 2);
            let xs: Vec<VertexSet> = if g.n() <= 4 {
                all_x(g.n())
            } else {
                let mut rng = per_graph_rng(seed, idx);
                (0..8).map(|_| random_x(g.n(), &mut rng)).collect()
            };
            let mut cases = 0;
            let mut violations = Vec::new();
            for i in 0..sigs.len() {
                for j in i..sigs.len() {
                    for x in &xs {
                        cases += 1;
                        if let LaminarityVerdict::Counterexample { class_of_first, class_of_second } =
                            check_laminarity(g, &c, &sigs[i], &sigs[j], x)?
                        {
                            violations.push(format!(
                                "{}: sigmas {:?}/{:?} X={:?} classes {:?} and {:?} cross",
                                desc(g),
                                sigs[i].entries(),
                                sigs[j].entries(),
                                x.as_slice(),
                                class_of_first.as_slice(),
                                class_of_second.as_slice()
                            ));
                        }
                    }
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// Class-count bound for proper signature families: the common
/// reachers of X fall into at most `|family| * |X|` trace classes.
pub fn lemma7_suite(max_n: usize, seed: u64) -> Result<SuiteReport> {
    coloured_corpus_guard(max_n)?;
    let corpus = labelled_graphs(max_n, false)?;
    Ok(run(
        "lemma7",
        format!("all labelled graphs n <= {max_n}, forest colourings, signature families"),
        &corpus,
        |idx, g| {
            let c = verified_colouring(g)?;
            let sigs = proper_signatures(c.palette(), 3);
            let short_sigs = proper_signatures(c.palette(), 2);
            let mut rng = per_graph_rng(seed, idx);
            let mut families: Vec<Vec<Signature>> =
                sigs.iter().map(|s| vec![s.clone()]).collect();
            families.push(short_sigs.clone());
            for _ in 0..5 {
                let size = rng.gen_range(1..=4.min(sigs.len()));
                let mut family = Vec::new();
                for _ in 0..size {
                    family.push(sigs[rng.gen_range(0..sigs.len())].clone());
                }
                family.dedup();
                families.push(family);
            }
            let xs: Vec<VertexSet> = if g.n() <= 4 {
                all_x(g.n())
            } else {
                (0..8).map(|_| random_x(g.n(), &mut rng)).collect()
            };
            let mut cases = 0;
            let mut violations = Vec::new();
            for family in &families {
                for x in &xs {
                    cases += 1;
                    let verdict = lemma7_count_check(g, &c, x, family)?;
                    if !verdict.holds {
                        violations.push(format!(
                            "{}: family of {} X={:?}: {} classes exceed bound {}",
                            desc(g),
                            family.len(),
                            x.as_slice(),
                            verdict.classes,
                            verdict.bound
                        ));
                    }
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// Aggregate class-count bound for the blow-up trace relation:
/// `|V / hatted| <= r * 2^(xi^(r+1)) * |X|` at r = 1.
pub fn lemma9_suite(max_n: usize) -> Result<SuiteReport> {
    coloured_corpus_guard(max_n)?;
    let corpus = labelled_graphs(max_n, false)?;
    Ok(run(
        "lemma9",
        format!("all labelled graphs n <= {max_n}, forest colourings, all X, r = 1"),
        &corpus,
        |_, g| {
            let c = verified_colouring(g)?;
            let mut cases = 0;
            let mut violations = Vec::new();
            for x in all_x(g.n()) {
                cases += 1;
                let verdict = lemma9_aggregate_check(g, &c, &x, 1)?;
                if !verdict.holds {
                    violations.push(format!(
                        "{}: X={:?}: {} classes exceed aggregate bound {}",
                        desc(g),
                        x.as_slice(),
                        verdict.classes,
                        verdict.bound
                    ));
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// The three-step refinement chain (blow-up traces refine sigma traces
/// refine twin classes) at r = 1 on every labelled graph and X.
pub fn chain_suite(max_n: usize) -> Result<SuiteReport> {
    coloured_corpus_guard(max_n)?;
    let corpus = labelled_graphs(max_n, false)?;
    Ok(run(
        "chain",
        format!("all labelled graphs n <= {max_n}, forest colourings, all X, r = 1"),
        &corpus,
        |_, g| {
            let c = verified_colouring(g)?;
            let mut cases = 0;
            let mut violations = Vec::new();
            for x in all_x(g.n()) {
                cases += 1;
                let report = refinement_chain_check(g, &c, &x, 1)?;
                if let Some((link, u, v)) = report.violation {
                    violations.push(format!(
                        "{}: X={:?}: {link} at pair ({u}, {v})",
                        desc(g),
                        x.as_slice()
                    ));
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// Witness-set properties behind the wcol class-count bound, checked on
/// seeded random (order, X) pairs per connected graph at r = 1:
/// (a) each witness set has at most wcol_2r(order) members;
/// (b) each witness set hits every short shortest path from its
///     representative into the trace;
/// (c) each witness set is weakly 2r-reachable from its last member;
/// (d) distinct classes never share both witness set and distances;
/// (e) the union of witness sets is weakly r-reachable from X.
pub fn wcol_witness_suite(max_n: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    if max_n > 6 {
        return Err(Error::guard(format!(
            "witness suite is capped at n <= 6 (requested {max_n})"
        )));
    }
    let corpus = labelled_graphs(max_n, true)?;
    let r = 1usize;
    Ok(run(
        "wcol-witness",
        format!("all connected labelled graphs n <= {max_n}, {samples} seeded (order, X) pairs"),
        &corpus,
        |idx, g| {
            let mut rng = per_graph_rng(seed, idx);
            let mut cases = 0;
            let mut violations = Vec::new();
            let dist = g.distance_matrix();
            for _ in 0..samples {
                let order = Ordering::random(g.n(), &mut rng);
                let x = random_x(g.n(), &mut rng);
                cases += 1;
                let bundle = witness_bundle(g, &order, &x, r)?;
                let wr_r = wreach(g, &order, r)?;
                let wr_2r = wreach(g, &order, 2 * r)?;
                let ctx = || format!("{}: order={:?} X={:?}", desc(g), order.sequence(), x.as_slice());
                for cw in &bundle.classes {
                    if cw.y.len() > wr_2r.max_size() {
                        violations.push(format!("{}: (a) |Y|={} > wcol bound {}", ctx(), cw.y.len(), wr_2r.max_size()));
                    }
                    let trace = g.closed_ball(cw.rep, r).intersection(&x);
                    for xv in trace.iter() {
                        if !shortest_paths_hit(g, &dist, cw.rep, xv, r, &cw.y) {
                            violations.push(format!(
                                "{}: (b) some shortest {}-{xv} path avoids Y={:?}",
                                ctx(),
                                cw.rep,
                                cw.y.as_slice()
                            ));
                        }
                    }
                    if !cw.y.is_subset_of(wr_2r.set(cw.gamma)) {
                        violations.push(format!(
                            "{}: (c) Y={:?} not weakly {}-reachable from gamma={}",
                            ctx(),
                            cw.y.as_slice(),
                            2 * r,
                            cw.gamma
                        ));
                    }
                }
                for i in 0..bundle.classes.len() {
                    for j in i + 1..bundle.classes.len() {
                        let (a, b) = (&bundle.classes[i], &bundle.classes[j]);
                        if a.y == b.y {
                            let da: Vec<usize> = a.y.iter().map(|y| dist[a.rep][y]).collect();
                            let db: Vec<usize> = b.y.iter().map(|y| dist[b.rep][y]).collect();
                            if da == db {
                                violations.push(format!(
                                    "{}: (d) classes of {} and {} share Y and distances",
                                    ctx(),
                                    a.rep,
                                    b.rep
                                ));
                            }
                        }
                    }
                }
                if !bundle.y_union.is_subset_of(&wr_r.union_over(&x)) {
                    violations.push(format!(
                        "{}: (e) Y union {:?} escapes WReach_{r}[X]",
                        ctx(),
                        bundle.y_union.as_slice()
                    ));
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// True when every shortest `a`-`b` path of length <= `r` meets `y`.
fn shortest_paths_hit(
    g: &Graph,
    dist: &[Vec<usize>],
    a: usize,
    b: usize,
    r: usize,
    y: &VertexSet,
) -> bool {
    if dist[a][b] > r {
        return true; // no such paths
    }
    // DFS down the shortest-path DAG from a towards b.
    fn go(g: &Graph, dist: &[Vec<usize>], cur: usize, b: usize, y: &VertexSet, hit: bool) -> bool {
        let hit = hit || y.contains(cur);
        if cur == b {
            return hit;
        }
        g.neighbours(cur)
            .iter()
            .filter(|&&w| dist[cur][b] == dist[w][b] + 1)
            .all(|&w| go(g, dist, w, b, y, hit))
    }
    go(g, dist, a, b, y, false)
}

fn iso_corpus(max_n: usize, max_m: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_small_graphs_iso(n, connected_only, Some(max_m))?);
    }
    Ok(out)
}

/// Depth-r density against the neighbourhood-complexity bound, at
/// depths 1/2 and 1, over connected graphs up to isomorphism.
pub fn theorem15_suite(max_n: usize, max_m: usize) -> Result<SuiteReport> {
    if max_n > 7 || max_m > 14 {
        return Err(Error::guard(format!(
            "density suite is capped at n <= 7, m <= 14 (requested n <= {max_n}, m <= {max_m})"
        )));
    }
    let corpus = iso_corpus(max_n, max_m, true)?;
    Ok(run(
        "theorem15",
        format!("connected graphs up to isomorphism, n <= {max_n}, m <= {max_m}, depth in {{1/2, 1}}"),
        &corpus,
        |_, g| {
            let mut cases = 0;
            let mut violations = Vec::new();
            for twice_r in [1usize, 2] {
                cases += 1;
                let report = theorem15_check(g, twice_r)?;
                if !report.holds {
                    violations.push(format!(
                        "{}: twice_r={twice_r} lhs={} rhs={}",
                        desc(g),
                        report.lhs,
                        report.rhs
                    ));
                }
            }
            Ok((cases, violations))
        },
    ))
}

/// Depth-0 density strictly below the nu_1 bound, over connected
/// graphs up to isomorphism. A single vertex is excluded: both sides
/// are zero there and the strict inequality is vacuously false.
pub fn corollary14_suite(max_n: usize, max_m: usize) -> Result<SuiteReport> {
    if max_n > 7 || max_m > 14 {
        return Err(Error::guard(format!(
            "density suite is capped at n <= 7, m <= 14 (requested n <= {max_n}, m <= {max_m})"
        )));
    }
    let corpus: Vec<Graph> =
        iso_corpus(max_n, max_m, true)?.into_iter().filter(|g| g.n() >= 2).collect();
    Ok(run(
        "corollary14",
        format!("connected graphs up to isomorphism, 2 <= n <= {max_n}, m <= {max_m}"),
        &corpus,
        |_, g| {
            let report = corollary14_check(g)?;
            let violations = if report.holds {
                Vec::new()
            } else {
                vec![format!("{}: lhs={} rhs={}", desc(g), report.lhs, report.rhs)]
            };
            Ok((1, violations))
        },
    ))
}

/// Min-degree bound on bipartite graphs over the bipartite members of
/// the isomorphism corpus.
pub fn lemma13_suite(max_n: usize) -> Result<SuiteReport> {
    if max_n > 7 {
        return Err(Error::guard(format!(
            "bipartite min-degree suite is capped at n <= 7 (requested {max_n})"
        )));
    }
    let corpus: Vec<Graph> = iso_corpus(max_n, 14, true)?
        .into_iter()
        .filter(|g| bipartition(g).is_some())
        .collect();
    Ok(run(
        "lemma13",
        format!("connected bipartite graphs up to isomorphism, n <= {max_n}, m <= 14"),
        &corpus,
        |_, g| {
            let report = lemma13_check(g)?;
            let violations = if report.holds {
                Vec::new()
            } else {
                vec![format!("{}: delta={} rhs={}", desc(g), report.lhs, report.rhs)]
            };
            Ok((1, violations))
        },
    ))
}

/// Looks up a suite by its CLI name.
pub fn run_suite(name: &str, max_n: usize, seed: u64) -> Result<SuiteReport> {
    match name {
        "theorem3" => theorem3_suite(max_n, seed),
        "theorem2" => theorem2_suite(max_n.min(5)),
        "lemma4" => lemma4_suite(max_n.min(5)),
        "lemma5" => lemma5_suite(max_n.min(5), seed),
        "lemma7" => lemma7_suite(max_n.min(5), seed),
        "lemma9" => lemma9_suite(max_n.min(5)),
        "chain" => chain_suite(max_n.min(5)),
        "wcol-witness" => wcol_witness_suite(max_n, 20, seed),
        "theorem15" => theorem15_suite(max_n, 12),
        "corollary14" => corollary14_suite(max_n, 12),
        "lemma13" => lemma13_suite(max_n),
        other => Err(Error::contract(format!("unknown suite '{other}'"))),
    }
}

/// The canonical suite names accepted by `run_suite`.
pub const SUITE_NAMES: [&str; 11] = [
    "lemma4",
    "lemma5",
    "chain",
    "lemma7",
    "lemma9",
    "wcol-witness",
    "theorem2",
    "theorem3",
    "lemma13",
    "corollary14",
    "theorem15",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem3_tiny() {
        let report = theorem3_suite(4, 7).unwrap();
        assert!(report.passed(), "{:?}", report.violations.first());
        assert!(report.cases > 0);
    }

    #[test]
    fn theorem2_tiny() {
        let report = theorem2_suite(4).unwrap();
        assert!(report.passed(), "{:?}", report.violations.first());
    }

    #[test]
    fn coloured_suites_tiny() {
        for report in [
            lemma4_suite(4).unwrap(),
            lemma5_suite(4, 11).unwrap(),
            lemma7_suite(4, 11).unwrap(),
            lemma9_suite(4).unwrap(),
            chain_suite(4).unwrap(),
        ] {
            assert!(report.passed(), "{}: {:?}", report.name, report.violations.first());
        }
    }

    #[test]
    fn witness_suite_tiny() {
        let report = wcol_witness_suite(4, 5, 23).unwrap();
        assert!(report.passed(), "{:?}", report.violations.first());
    }

    #[test]
    fn density_suites_tiny() {
        let t = theorem15_suite(4, 6).unwrap();
        assert!(t.passed(), "{:?}", t.violations.first());
        let c = corollary14_suite(4, 6).unwrap();
        assert!(c.passed(), "{:?}", c.violations.first());
        let l = lemma13_suite(4).unwrap();
        assert!(l.passed(), "{:?}", l.violations.first());
    }

    #[test]
    fn guards_refuse_oversized_corpora() {
        assert!(theorem3_suite(9, 0).is_err());
        assert!(theorem15_suite(9, 12).is_err());
        assert!(run_suite("theorem15", 9, 0).is_err());
    }

    #[test]
    fn unknown_suite_name() {
        assert!(run_suite("nope", 4, 0).is_err());
    }

    #[test]
    fn suite_lookup_covers_all_names() {
        for name in SUITE_NAMES {
            // n = 3 keeps every suite fast; all must run clean.
            let report = run_suite(name, 3, 5).unwrap();
            assert!(report.passed(), "{}: {:?}", name, report.violations.first());
        }
    }
}
