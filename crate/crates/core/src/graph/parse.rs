use super::Graph;
use crate::{Error, Result};

/// Edge-list format: first non-comment line `n m`, then `m` lines `u v`
/// with 0-based vertex ids. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = numbered_lines(text, "#");
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "empty input".into() })?;
    let (n, m) = parse_two(&header, lineno, "expected header \"n m\"")?;
    if n == 0 {
        return Err(Error::Parse { line: lineno, msg: "graph must be non-empty".into() });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("expected {m} edge lines") })?;
        let (u, v) = parse_two(&line, lineno, "expected edge \"u v\"")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex id out of range (n = {n})"),
            });
        }
        if u == v {
            return Err(Error::Parse { line: lineno, msg: format!("self-loop at vertex {u}") });
        }
        edges.push((u, v));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse { line: lineno, msg: "trailing data after edge list".into() });
    }
    Graph::from_edges(n, &edges)
}

/// DIMACS format: `p edge n m` header, `e u v` lines with 1-based ids,
/// `c` comment lines.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            Some(&"p") => {
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected \"p edge n m\"".into(),
                    });
                }
                let nv: usize = fields[2]
                    .parse()
                    .map_err(|_| Error::Parse { line: lineno, msg: "bad vertex count".into() })?;
                n = Some(nv);
            }
            Some(&"e") => {
                let nv = n.ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: "edge before problem line".into(),
                })?;
                if fields.len() != 3 {
                    return Err(Error::Parse { line: lineno, msg: "expected \"e u v\"".into() });
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| Error::Parse { line: lineno, msg: "bad endpoint".into() })?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| Error::Parse { line: lineno, msg: "bad endpoint".into() })?;
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex id out of range 1..={nv}"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(Error::Parse { line: lineno, msg: format!("unknown line: {line}") });
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse { line: 0, msg: "missing problem line".into() })?;
    if n == 0 {
        return Err(Error::Parse { line: 0, msg: "graph must be non-empty".into() });
    }
    Graph::from_edges(n, &edges)
}

/// Serialises a graph in the edge-list format accepted by `parse_edge_list`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn numbered_lines<'a>(
    text: &'a str,
    comment: &'a str,
) -> impl Iterator<Item = (usize, String)> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let line = match raw.find(comment) {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line.to_string()))
        }
    })
}

fn parse_two(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line: lineno, msg: what.into() });
    }
    let a = fields[0]
        .parse()
        .map_err(|_| Error::Parse { line: lineno, msg: format!("{what}: bad number") })?;
    let b = fields[1]
        .parse()
        .map_err(|_| Error::Parse { line: lineno, msg: format!("{what}: bad number") })?;
    Ok((a, b))
}
