use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

/// Reads a DIMACS `p edge` file: `c` comment lines, one `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-based vertex ids.
pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut edges_seen = 0usize;
    let mut declared = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "duplicate problem line".into(),
                    });
                }
                let fmt = parts.next().unwrap_or("");
                if fmt != "edge" && fmt != "col" {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("expected 'p edge', got 'p {fmt}'"),
                    });
                }
                let n = parse_num(parts.next(), lineno, "vertex count")?;
                declared = parse_num(parts.next(), lineno, "edge count")?;
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: "edge before problem line".into(),
                })?;
                let u = parse_num(parts.next(), lineno, "endpoint")?;
                let v = parse_num(parts.next(), lineno, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "vertex ids are 1-based".into(),
                    });
                }
                g.add_edge(u - 1, v - 1).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                edges_seen += 1;
            }
            Some(tok) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unexpected token '{tok}'"),
                })
            }
            None => unreachable!(),
        }
    }
    let g = graph.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    if edges_seen != declared {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {declared} edges, found {edges_seen}"),
        });
    }
    Ok(g)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {what}"),
    })
}

/// Writes `g` in DIMACS format; edges are listed with `u < v` in
/// lexicographic order and 1-based ids.
pub fn write_dimacs<W: Write>(writer: &mut W, g: &Graph, comment: Option<&str>) -> Result<()> {
    if let Some(c) = comment {
        writeln!(writer, "c {c}")?;
    }
    writeln!(writer, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(writer, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn roundtrip_families() {
        for spec in [
            FamilySpec::path(5),
            FamilySpec::cycle(6),
            FamilySpec::complete(4),
            FamilySpec::empty(3),
            FamilySpec::star(3),
            FamilySpec::complete_bipartite(2, 3),
        ] {
            let g = spec.generate().unwrap();
            let mut buf = Vec::new();
            write_dimacs(&mut buf, &g, Some(&spec.name())).unwrap();
            let back = read_dimacs(&buf[..]).unwrap();
            assert_eq!(g, back, "roundtrip failed for {}", spec.name());
        }
    }

    #[test]
    fn parse_error_reports_line() {
        let text = "p edge 3 1\ne 1 5\n";
        match read_dimacs(text.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_count_mismatch_rejected() {
        let text = "p edge 3 2\ne 1 2\n";
        assert!(read_dimacs(text.as_bytes()).is_err());
    }
}
