//! ```text
//! c optional comment lines
//! p <vertices> <edges>
//! e <u> <v> [w]
//! ```
//!
//! Vertices are 1-based, loops are `e u u`, and the weight defaults to 1.

use std::fmt::Write as _;
use std::path::Path;

use cycle_bound_core::pseudograph::{Pseudograph, WeightedPseudograph};

use crate::error::{LabError, Result};

fn number<T: std::str::FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| LabError::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| LabError::parse(line, format!("{what} `{token}` is not a nonnegative integer")))
}

pub fn parse_graph(text: &str) -> Result<WeightedPseudograph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut last_line = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(LabError::parse(line, "second `p` line"));
                }
                let n = number(tokens.next(), line, "vertex count")?;
                let m = number(tokens.next(), line, "edge count")?;
                header = Some((n, m));
                edges.reserve(m);
            }
            Some("e") => {
                let (n, m) = header.ok_or_else(|| LabError::parse(line, "edge before the `p` line"))?;
                if edges.len() == m {
                    return Err(LabError::parse(line, format!("more than the {m} declared edges")));
                }
                let u: usize = number(tokens.next(), line, "endpoint")?;
                let v: usize = number(tokens.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(LabError::parse(line, format!("vertex {x} is outside 1..={n}")));
                    }
                }
                let w = match tokens.next() {
                    None => 1,
                    t => number::<u64>(t, line, "weight")?,
                };
                if w == 0 {
                    return Err(LabError::parse(line, "weights must be positive"));
                }
                edges.push((u - 1, v - 1));
                weights.push(w);
            }
            Some(other) => return Err(LabError::parse(line, format!("unknown record `{other}`"))),
        }
        if let Some(extra) = tokens.next() {
            return Err(LabError::parse(line, format!("unexpected `{extra}`")));
        }
    }
    let (n, m) = header.ok_or_else(|| LabError::parse(last_line.max(1), "missing `p` line"))?;
    if edges.len() != m {
        return Err(LabError::parse(
            last_line.max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Pseudograph::new(n, edges)?;
    Ok(WeightedPseudograph::new(graph, weights)?)
}

/// Weights are written only when some weight differs from 1, so
/// `format_graph(parse_graph(format_graph(g)))` reproduces the same bytes.
pub fn format_graph(g: &WeightedPseudograph) -> String {
    let graph = g.graph();
    let weighted = g.weights().iter().any(|&w| w != 1);
    let mut out = format!("p {} {}\n", graph.vertex_count(), graph.edge_count());
    for (&(u, v), &w) in graph.edges().iter().zip(g.weights()) {
        if weighted {
            writeln!(out, "e {} {} {w}", u + 1, v + 1).expect("writing to a String");
        } else {
            writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
        }
    }
    out
}

pub fn read_graph(path: &Path) -> Result<WeightedPseudograph> {
    let text = std::fs::read_to_string(path).map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text).map_err(|e| e.in_file(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_loops_weights_and_comments() {
        let g = parse_graph("c theta plus loop\np 2 4\ne 1 2\ne 1 2 5\n\ne 2 1\ne 2 2 3\n").unwrap();
        assert_eq!(g.graph().edges(), &[(0, 1), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(g.weights(), &[1, 5, 1, 3]);
        assert_eq!(g.graph().degree(1), 5);
    }

    #[test]
    fn errors_carry_line_numbers() {
        for (text, line) in [
            ("p 3 1\ne 1 4\n", 2),
            ("e 1 2\n", 1),
            ("p 3 1\ne 1 2 0\n", 2),
            ("p 3 1\ne 1 x\n", 2),
            ("p 3 2\ne 1 2\n", 2),
            ("p 3 1\ne 1 2\ne 2 3\n", 3),
            ("p 3 1\nq\n", 2),
            ("p 3 1\ne 1 2 1 1\n", 2),
            ("p 2 0\np 2 0\n", 2),
            ("", 1),
        ] {
            match parse_graph(text) {
                Err(LabError::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn unit_weights_are_omitted() {
        let text = "p 3 3\ne 1 2\ne 2 3\ne 3 1\n";
        assert_eq!(format_graph(&parse_graph(text).unwrap()), text);
        let text = "p 3 3\ne 1 2 1\ne 2 3 7\ne 3 3 1\n";
        assert_eq!(format_graph(&parse_graph(text).unwrap()), text);
    }
}
