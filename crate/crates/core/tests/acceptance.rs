//! End-to-end acceptance gate: every test prints one pass/fail line
//! for the property it guards and fails loudly on the first violation.

mod common;

use nbcx_core::centred::chi_r_exact;
use nbcx_core::complexity::{nu_exact, trace_table, Rational};
use nbcx_core::expansion::grad0_exact;
use nbcx_core::graph::{
    complete, enumerate_small_graphs, enumerate_small_graphs_iso, erdos_renyi, Graph, VertexSet,
};
use nbcx_core::signatures::{proper_signatures, sigma_neighbourhood, Colouring, SigmaMode};
use nbcx_core::suites;
use nbcx_core::wcol::{degeneracy, wcol_exact, wreach, Ordering};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report_line(label: &str, passed: bool, detail: &str) {
    println!("{label}: {} ({detail})", if passed { "pass" } else { "FAIL" });
}

fn assert_suite(label: &str, report: &suites::SuiteReport) {
    report_line(label, report.passed(), &format!("{} cases", report.cases));
    assert!(
        report.passed(),
        "{label}: {} violations, first: {}",
        report.violations.len(),
        report.violations[0]
    );
}

/// Mixed corpus for oracle comparisons: every connected graph up to
/// isomorphism for small n, seeded random graphs above that.
fn oracle_corpus(iso_max_n: usize, random_ns: &[usize], per_n: usize, seed: u64) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 1..=iso_max_n {
        graphs.extend(enumerate_small_graphs_iso(n, true, None).unwrap());
    }
    for &n in random_ns {
        for k in 0..per_n {
            let s = seed ^ (n as u64) << 32 ^ k as u64;
            graphs.push(erdos_renyi(n, 0.45, s).unwrap());
        }
    }
    graphs
}

#[test]
fn class_count_bound_via_wcol() {
    let report = suites::theorem3_suite(6, 0xA11CE).unwrap();
    assert_suite("wcol class-count bound, connected n<=6, r in {1,2}", &report);
}

#[test]
fn class_count_bound_via_centred_colouring() {
    let report = suites::theorem2_suite(5).unwrap();
    assert_suite("centred class-count bound, connected n<=5, r=1", &report);
}

#[test]
fn signature_lemma_suites() {
    assert_suite("sigma-neighbourhood dichotomy, n<=5", &suites::lemma4_suite(5).unwrap());
    assert_suite("trace-class laminarity, n<=5", &suites::lemma5_suite(5, 0xBEE).unwrap());
    assert_suite("signature-family class count, n<=5", &suites::lemma7_suite(5, 0xBEE).unwrap());
    assert_suite("aggregate blow-up class count, n<=5", &suites::lemma9_suite(5).unwrap());
}

#[test]
fn refinement_chain() {
    let report = suites::chain_suite(5).unwrap();
    assert_suite("twin/sigma/blow-up refinement chain, n<=5", &report);
}

#[test]
fn witness_bundle_properties() {
    let report = suites::wcol_witness_suite(6, 20, 0xCAB).unwrap();
    assert_suite("witness-bundle properties (a)-(e), connected n<=6", &report);
}

#[test]
fn density_bounds() {
    let t = suites::theorem15_suite(6, 12).unwrap();
    assert_suite("depth-r density bound, connected n<=6 m<=12", &t);
    let c = suites::corollary14_suite(6, 12).unwrap();
    assert_suite("depth-0 density bound, connected 2<=n<=6 m<=12", &c);
}

#[test]
fn oracle_equivalence_wreach() {
    let corpus = oracle_corpus(5, &[6, 7], 10, 0x51u64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0517);
    let mut cases = 0;
    for g in &corpus {
        for _ in 0..50 {
            let order = Ordering::random(g.n(), &mut rng);
            for r in 1..=3 {
                let fast = wreach(g, &order, r).unwrap();
                let slow = common::wreach_oracle(g, &order, r);
                for v in 0..g.n() {
                    cases += 1;
                    assert_eq!(
                        fast.set(v),
                        &slow[v],
                        "weak reachability mismatch at v={v}, r={r}, n={}",
                        g.n()
                    );
                }
            }
        }
    }
    report_line("weak reachability vs path enumeration", true, &format!("{cases} cases"));
}

#[test]
fn oracle_equivalence_sigma_modes() {
    let corpus = oracle_corpus(5, &[6], 10, 0x33u64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x3307);
    let sigs = proper_signatures(4, 4);
    let mut cases = 0;
    for g in &corpus {
        for _ in 0..3 {
            let colours: Vec<u32> = (0..g.n()).map(|_| rng.gen_range(0..4)).collect();
            let c = Colouring::new(4, colours).unwrap();
            for sig in &sigs {
                for v in 0..g.n() {
                    cases += 1;
                    let dp = sigma_neighbourhood(g, &c, v, sig, SigmaMode::WalkDp).unwrap();
                    let paths = sigma_neighbourhood(g, &c, v, sig, SigmaMode::Paths).unwrap();
                    assert_eq!(dp, paths, "sigma mode mismatch at v={v}, sigma={:?}", sig.entries());
                }
            }
        }
    }
    report_line("sigma-neighbourhood walk-dp vs paths", true, &format!("{cases} cases"));
}

#[test]
fn oracle_equivalence_densest_subgraph() {
    let mut corpus = Vec::new();
    for n in 1..=6 {
        corpus.extend(enumerate_small_graphs_iso(n, false, None).unwrap());
    }
    for n in 7..=9 {
        for k in 0..10 {
            corpus.push(erdos_renyi(n, 0.4, 0x99 ^ (n as u64) << 16 ^ k).unwrap());
        }
    }
    let mut cases = 0;
    for g in &corpus {
        cases += 1;
        let flow = grad0_exact(g).unwrap();
        let (e, k) = common::densest_subgraph_oracle(g);
        assert_eq!(
            flow.value,
            Rational::new(e as u64, k as u64),
            "densest-subgraph mismatch on n={} m={}",
            g.n(),
            g.m()
        );
    }
    report_line("densest subgraph flow vs enumeration", true, &format!("{cases} cases"));
}

#[test]
fn oracle_equivalence_trace_table() {
    let corpus = oracle_corpus(5, &[6, 7, 8], 10, 0x77u64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x7707);
    let mut cases = 0;
    for g in &corpus {
        for _ in 0..10 {
            let mask = rng.gen_range(1..1u64 << g.n());
            let x = VertexSet::from_mask(mask);
            for r in 0..=3 {
                cases += 1;
                let table = trace_table(g, &x, r).unwrap();
                let slow = common::trace_oracle(g, &x, r);
                assert_eq!(table.traces, slow, "trace mismatch at r={r}, n={}", g.n());
            }
        }
    }
    report_line("trace table vs fresh BFS", true, &format!("{cases} cases"));
}

#[test]
fn known_values_wcol1_is_degeneracy_plus_one() {
    let mut corpus = Vec::new();
    for n in 1..=5 {
        corpus.extend(enumerate_small_graphs(n, false).unwrap());
    }
    for n in 6..=8 {
        for k in 0..100 {
            corpus.push(erdos_renyi(n, 0.45, 0xD0 ^ (n as u64) << 24 ^ k).unwrap());
        }
    }
    let mut cases = 0;
    for g in &corpus {
        cases += 1;
        let (w, _) = wcol_exact(g, 1).unwrap();
        assert_eq!(
            w,
            degeneracy(g) + 1,
            "wcol_1 vs degeneracy mismatch on n={} m={}",
            g.n(),
            g.m()
        );
    }
    report_line("wcol_1 = degeneracy + 1", true, &format!("{cases} cases"));
}

#[test]
fn known_values_centred_number_of_cliques() {
    for r in 2..=4 {
        for n in 1..=6 {
            let (chi, _) = chi_r_exact(&complete(n), r).unwrap();
            assert_eq!(chi as usize, n, "chi_{r}(K_{n}) should be {n}");
        }
    }
    report_line("chi_r(K_n) = n for r >= 2", true, "18 cases");
}

#[test]
fn known_values_neighbourhood_complexity() {
    let k2 = complete(2);
    assert_eq!(nu_exact(&k2, 1).unwrap().value, Rational::new(2, 1));

    let mut cases = 1;
    for n in 1..=5 {
        for g in enumerate_small_graphs_iso(n, false, None).unwrap() {
            cases += 1;
            let nu0 = nu_exact(&g, 0).unwrap().value;
            assert!(
                nu0 <= Rational::new(2, 1),
                "nu_0 exceeded 2 on n={} m={}",
                g.n(),
                g.m()
            );
        }
    }
    report_line("nu_1(K_2) = 2 and nu_0 <= 2", true, &format!("{cases} cases"));
}
