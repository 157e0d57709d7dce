//! `nbcx` — analyse sparse-graph parameters, run the verification
//! suites, generate corpora, and benchmark.
//!
//! Exit codes: 0 success, 1 I/O or parse failure, 2 usage or guard
//! refusal, 3 property violation.
//!
//! Reports are line-oriented JSON. Every line is a single object with
//! a `record` key; the `clock` record carries wall-clock data and is
//! the only non-deterministic line — byte-compare reports after
//! dropping it.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::time::Instant;

use nbcx_core::centred::{centred_colouring_from_forest, chi_r_exact, treedepth_heuristic, CHI_GUARD_N};
use nbcx_core::complexity::{nu_exact, nu_lower_bound, NuReport, NU_GUARD_M, NU_GUARD_N};
use nbcx_core::expansion::{grad0_exact, gradr_bruteforce, GRAD_GUARD_N};
use nbcx_core::graph::{
    complete, complete_bipartite, cycle, grid, parse_dimacs, parse_edge_list, path,
    random_bounded_degree, write_edge_list, Graph,
};
use nbcx_core::suites::{run_suite, SUITE_NAMES};
use nbcx_core::wcol::{wcol_exact, wcol_heuristic, Strategy, WCOL_GUARD_N};
use nbcx_core::Error;

#[derive(Parser)]
#[command(name = "nbcx", version, about = "Sparse-graph parameter toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Dimacs,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute parameters of a single graph.
    Analyze {
        file: PathBuf,
        /// Radius: an integer or a half-integer written "k/2".
        #[arg(long, default_value = "1")]
        r: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Refuse to fall back to bounds: every value exact or exit 2.
        #[arg(long)]
        exact_all: bool,
        /// Prefer cheap bounds over exact search.
        #[arg(long)]
        heuristics: bool,
        /// Tighten the exact-search vertex guard below the built-in cap.
        #[arg(long)]
        guard_n: Option<usize>,
        /// Tighten the exact-search edge guard below the built-in cap.
        #[arg(long)]
        guard_m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over an exhaustive small corpus.
    Verify {
        suite: String,
        /// Largest corpus vertex count.
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated graph.
    Gen {
        /// path | cycle | grid | complete | complete-bipartite | random
        kind: String,
        /// Size arguments (e.g. `grid 3 4`, `random n max_deg`).
        args: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time one parameter over a corpus of graph files; CSV on stdout.
    Bench {
        /// nu | wcol | chi | grad0
        parameter: String,
        #[arg(long, default_value = "1")]
        r: String,
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Parse { .. } => 1,
                Error::Guard(_) | Error::Contract(_) => 2,
            }
        }
    });
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Analyze { file, r, seed, exact_all, heuristics, guard_n, guard_m, format, out } => {
            if exact_all && heuristics {
                return Err(Error::contract("--exact-all and --heuristics conflict"));
            }
            let twice_r = parse_radius(&r)?;
            let bytes = std::fs::read(&file)?;
            let g = parse_graph(&bytes, format)?;
            let report = analyze(&g, twice_r, seed, exact_all, heuristics, guard_n, guard_m, &digest(&bytes))?;
            emit(&report, out.as_deref())?;
            Ok(0)
        }
        Cmd::Verify { suite, n, seed, out } => {
            if !SUITE_NAMES.contains(&suite.as_str()) {
                return Err(Error::contract(format!(
                    "unknown suite '{suite}'; available: {}",
                    SUITE_NAMES.join(", ")
                )));
            }
            let result = run_suite(&suite, n, seed)?;
            let mut lines = vec![
                meta_line("verify", seed, &format!("suite:{suite}:n<={n}")),
                clock_line(),
                json!({
                    "record": "verdict",
                    "suite": result.name,
                    "corpus": result.corpus,
                    "cases": result.cases,
                    "passed": result.passed(),
                    "violations": result.violations.len(),
                })
                .to_string(),
            ];
            for v in &result.violations {
                lines.push(json!({"record": "violation", "detail": v}).to_string());
            }
            emit(&lines, out.as_deref())?;
            Ok(if result.passed() { 0 } else { 3 })
        }
        Cmd::Gen { kind, args, seed, format, out } => {
            let g = generate(&kind, &args, seed)?;
            let text = match format {
                Format::EdgeList => write_edge_list(&g),
                Format::Dimacs => write_dimacs(&g),
            };
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Bench { parameter, r, files, format, out } => {
            let twice_r = parse_radius(&r)?;
            let mut csv = String::from("graph,n,m,parameter,mode,value,millis\n");
            for file in &files {
                let bytes = std::fs::read(file)?;
                let g = parse_graph(&bytes, format)?;
                let start = Instant::now();
                let (mode, value) = bench_one(&g, &parameter, twice_r)?;
                let millis = start.elapsed().as_millis();
                csv.push_str(&format!(
                    "{},{},{},{parameter},{mode},{value},{millis}\n",
                    file.display(),
                    g.n(),
                    g.m()
                ));
            }
            match out {
                Some(p) => std::fs::write(p, csv)?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
    }
}

/// "k" or "k/2" -> doubled radius.
fn parse_radius(text: &str) -> Result<usize, Error> {
    if let Some(head) = text.strip_suffix("/2") {
        let k: usize = head
            .parse()
            .map_err(|_| Error::contract(format!("bad radius '{text}'")))?;
        Ok(k)
    } else {
        let k: usize = text
            .parse()
            .map_err(|_| Error::contract(format!("bad radius '{text}'")))?;
        Ok(2 * k)
    }
}

fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph, Error> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| Error::Parse { line: 0, msg: "input is not UTF-8".into() })?;
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

fn meta_line(command: &str, seed: u64, input: &str) -> String {
    json!({
        "record": "meta",
        "tool": "nbcx",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "seed": seed,
        "input": input,
    })
    .to_string()
}

/// The only non-deterministic report line; drop it when comparing runs.
fn clock_line() -> String {
    let unix_ms = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0);
    json!({"record": "clock", "unix_ms": unix_ms as u64}).to_string()
}

fn emit(lines: &[String], out: Option<&std::path::Path>) -> Result<(), Error> {
    let text = lines.join("\n") + "\n";
    print!("{text}");
    if let Some(p) = out {
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn rational(r: nbcx_core::complexity::Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[allow(clippy::too_many_arguments)]
fn analyze(
    g: &Graph,
    twice_r: usize,
    seed: u64,
    exact_all: bool,
    heuristics: bool,
    guard_n: Option<usize>,
    guard_m: Option<usize>,
    input_digest: &str,
) -> Result<Vec<String>, Error> {
    let r_display = if twice_r % 2 == 0 { format!("{}", twice_r / 2) } else { format!("{twice_r}/2") };
    let mut lines = vec![
        json!({
            "record": "meta",
            "tool": "nbcx",
            "version": env!("CARGO_PKG_VERSION"),
            "command": "analyze",
            "seed": seed,
            "input_digest": input_digest,
            "r": r_display,
            "n": g.n(),
            "m": g.m(),
        })
        .to_string(),
        clock_line(),
    ];
    let cap = |builtin: usize| guard_n.unwrap_or(builtin).min(builtin);
    let cap_m = guard_m.unwrap_or(NU_GUARD_M).min(NU_GUARD_M);
    let require_exact = |what: &str| -> Result<(), Error> {
        if exact_all {
            Err(Error::guard(format!("--exact-all set but {what} exceeds its exact guard")))
        } else {
            Ok(())
        }
    };

    if twice_r % 2 == 0 {
        let r = twice_r / 2;

        // Neighbourhood complexity.
        if !heuristics && g.n() <= cap(NU_GUARD_N) && g.m() <= cap_m {
            let rep = nu_exact(g, r)?;
            lines.push(nu_line(r, &rep));
        } else {
            require_exact("nu")?;
            let rep = nu_lower_bound(g, r, seed, 2000 * g.n().max(1))?;
            lines.push(nu_line(r, &rep));
        }

        // Weak colouring number at radius 2r.
        if !heuristics && g.n() <= cap(WCOL_GUARD_N) {
            let (w, order) = wcol_exact(g, 2 * r)?;
            lines.push(json!({
                "record": "param", "name": format!("wcol_{}", 2 * r), "mode": "exact",
                "value": w, "witness_order": order.to_text(),
            }).to_string());
        } else {
            require_exact("wcol")?;
            let (w, order) = wcol_heuristic(g, 2 * r, Strategy::SmallestDegreeLast)?;
            lines.push(json!({
                "record": "param", "name": format!("wcol_{}", 2 * r), "mode": "upper-bound",
                "value": w, "witness_order": order.to_text(),
            }).to_string());
        }

        // Centred colouring number at 2r + 2.
        if !heuristics && g.n() <= cap(CHI_GUARD_N) {
            let (chi, c) = chi_r_exact(g, 2 * r + 2)?;
            lines.push(json!({
                "record": "param", "name": format!("chi_{}", 2 * r + 2), "mode": "exact",
                "value": chi, "witness_colours": c.colours(),
            }).to_string());
        } else {
            require_exact("chi")?;
            let (_, forest) = treedepth_heuristic(g)?;
            let c = centred_colouring_from_forest(g, &forest)?;
            lines.push(json!({
                "record": "param", "name": format!("chi_{}", 2 * r + 2), "mode": "upper-bound",
                "value": c.palette(), "witness_colours": c.colours(),
            }).to_string());
        }
    }

    // Depth-0 density is exact at any size.
    let grad0 = grad0_exact(g)?;
    lines.push(json!({
        "record": "param", "name": "grad_0", "mode": "exact",
        "value": rational(grad0.value),
        "witness_vertices": grad0.witness.phi_v,
    }).to_string());

    if twice_r >= 1 {
        if g.n() <= cap(GRAD_GUARD_N) && !heuristics {
            let grad = gradr_bruteforce(g, twice_r)?;
            lines.push(json!({
                "record": "param", "name": format!("grad_{r_display}"), "mode": "exact",
                "value": rational(grad.value),
                "witness_certificate": grad.witness.to_text(),
            }).to_string());
        } else if twice_r % 2 == 1 {
            // At a genuine half-integer depth there is no fallback.
            require_exact("grad_r")?;
            lines.push(json!({
                "record": "note",
                "detail": format!("grad_{r_display} skipped: exact search capped at n <= {GRAD_GUARD_N}"),
            }).to_string());
        }
    }
    Ok(lines)
}

fn nu_line(r: usize, rep: &NuReport) -> String {
    json!({
        "record": "param",
        "name": format!("nu_{r}"),
        "mode": rep.mode.as_str(),
        "value": rational(rep.value),
        "witness_vertices": rep.witness_subgraph.vertices.as_slice(),
        "witness_edges": rep.witness_subgraph.edges.iter().map(|&(u, v)| format!("{u}-{v}")).collect::<Vec<_>>(),
        "witness_x": rep.witness_x.as_slice(),
    })
    .to_string()
}

fn generate(kind: &str, args: &[usize], seed: u64) -> Result<Graph, Error> {
    let want = |k: usize| -> Result<(), Error> {
        if args.len() != k {
            Err(Error::contract(format!("'{kind}' takes {k} size argument(s), got {}", args.len())))
        } else {
            Ok(())
        }
    };
    match kind {
        "path" => {
            want(1)?;
            Ok(path(args[0]))
        }
        "cycle" => {
            want(1)?;
            Ok(cycle(args[0]))
        }
        "grid" => {
            want(2)?;
            Ok(grid(args[0], args[1]))
        }
        "complete" => {
            want(1)?;
            Ok(complete(args[0]))
        }
        "complete-bipartite" => {
            want(2)?;
            Ok(complete_bipartite(args[0], args[1]))
        }
        "random" => {
            want(2)?;
            random_bounded_degree(args[0], args[1], seed)
        }
        other => Err(Error::contract(format!(
            "unknown generator '{other}'; available: path, cycle, grid, complete, complete-bipartite, random"
        ))),
    }
}

fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn bench_one(g: &Graph, parameter: &str, twice_r: usize) -> Result<(&'static str, String), Error> {
    let r = (twice_r + 1) / 2;
    match parameter {
        "nu" => {
            if g.n() <= NU_GUARD_N && g.m() <= NU_GUARD_M {
                Ok(("exact", rational(nu_exact(g, r)?.value)))
            } else {
                Ok(("lower-bound", rational(nu_lower_bound(g, r, 0, 2000 * g.n())?.value)))
            }
        }
        "wcol" => {
            if g.n() <= WCOL_GUARD_N {
                Ok(("exact", wcol_exact(g, 2 * r)?.0.to_string()))
            } else {
                Ok(("upper-bound", wcol_heuristic(g, 2 * r, Strategy::SmallestDegreeLast)?.0.to_string()))
            }
        }
        "chi" => {
            if g.n() <= CHI_GUARD_N {
                Ok(("exact", chi_r_exact(g, 2 * r + 2)?.0.to_string()))
            } else {
                let (_, forest) = treedepth_heuristic(g)?;
                Ok(("upper-bound", centred_colouring_from_forest(g, &forest)?.palette().to_string()))
            }
        }
        "grad0" => Ok(("exact", rational(grad0_exact(g)?.value))),
        other => Err(Error::contract(format!(
            "unknown parameter '{other}'; available: nu, wcol, chi, grad0"
        ))),
    }
}
