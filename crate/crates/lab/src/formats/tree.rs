//! `tree k=5; edges: 1-2,1-3,1-4,4-5,4-6; bias: 0.1721,0.1721,0.3116,0.1721,0.1721`
//!
//! Vertices are 1-based and biases follow edge order. Without a `bias:`
//! clause every edge gets `1/k`.

use std::fmt::Write as _;

use cycle_bound_core::biased_tree::{BiasedTree, TreeShape, BIAS_SUM_TOLERANCE};

use crate::error::{LabError, Result};

/// Biases written to a few decimals rarely sum to 1 exactly; sums within
/// this distance of 1, but outside the core's own tolerance, are rescaled.
pub const BIAS_RESCALE_TOLERANCE: f64 = 1e-6;

fn bad(message: impl Into<String>) -> LabError {
    LabError::parse(1, message)
}

pub fn parse_tree_literal(text: &str) -> Result<BiasedTree> {
    let mut clauses = text.trim().split(';').map(str::trim).filter(|c| !c.is_empty());
    let head = clauses.next().ok_or_else(|| bad("empty tree literal"))?;
    let k: usize = head
        .strip_prefix("tree")
        .map(str::trim)
        .and_then(|rest| rest.strip_prefix("k="))
        .ok_or_else(|| bad(format!("expected `tree k=<edges>`, got `{head}`")))?
        .trim()
        .parse()
        .map_err(|_| bad(format!("bad edge count in `{head}`")))?;
    let mut edges = None;
    let mut biases = None;
    for clause in clauses {
        let (key, value) = clause
            .split_once(':')
            .ok_or_else(|| bad(format!("expected `key: value`, got `{clause}`")))?;
        match key.trim() {
            "edges" => {
                let list = value
                    .split(',')
                    .map(|pair| {
                        let (u, v) = pair
                            .trim()
                            .split_once('-')
                            .ok_or_else(|| bad(format!("edge `{}` is not `u-v`", pair.trim())))?;
                        let parse = |s: &str| -> Result<usize> {
                            match s.trim().parse::<usize>() {
                                Ok(x) if x >= 1 => Ok(x - 1),
                                _ => Err(bad(format!("vertex `{}` is not a positive integer", s.trim()))),
                            }
                        };
                        Ok((parse(u)?, parse(v)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                edges = Some(list);
            }
            "bias" => {
                let list = value
                    .split(',')
                    .map(|b| {
                        b.trim()
                            .parse::<f64>()
                            .map_err(|_| bad(format!("bias `{}` is not a number", b.trim())))
                    })
                    .collect::<Result<Vec<_>>>()?;
                biases = Some(list);
            }
            other => return Err(bad(format!("unknown clause `{other}`"))),
        }
    }
    let edges = edges.ok_or_else(|| bad("missing `edges:` clause"))?;
    if edges.len() != k {
        return Err(bad(format!("k={k} but {} edges listed", edges.len())));
    }
    let vertex_count = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let shape = TreeShape::new(vertex_count, edges)?;
    match biases {
        None => Ok(BiasedTree::uniform(shape)),
        Some(b) => {
            let sum: f64 = b.iter().sum();
            let b = if (sum - 1.0).abs() <= BIAS_RESCALE_TOLERANCE && (sum - 1.0).abs() > BIAS_SUM_TOLERANCE {
                let mut scaled: Vec<f64> = b.iter().map(|x| x / sum).collect();
                let rest: f64 = scaled[1..].iter().sum();
                scaled[0] = 1.0 - rest;
                scaled
            } else {
                b
            };
            Ok(BiasedTree::new(shape, b)?)
        }
    }
}

/// Biases are written in shortest round-trip form.
pub fn format_tree_literal(tree: &BiasedTree) -> String {
    let shape = tree.shape();
    let mut out = format!("tree k={}; edges: ", shape.edge_count());
    for (i, &(u, v)) in shape.edges().iter().enumerate() {
        let sep = if i == 0 { "" } else { "," };
        write!(out, "{sep}{}-{}", u + 1, v + 1).expect("writing to a String");
    }
    out.push_str("; bias: ");
    for (i, b) in tree.biases().iter().enumerate() {
        let sep = if i == 0 { "" } else { "," };
        write!(out, "{sep}{b}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_literal() {
        let t = parse_tree_literal("tree k=5; edges: 1-2,1-3,1-4,4-5,4-6; bias: 0.1721,0.1721,0.3116,0.1721,0.1721")
            .unwrap();
        assert_eq!(t.edge_count(), 5);
        assert_eq!(t.shape().edges()[3], (3, 4));
        assert!((t.biases()[2] - 0.3116).abs() < 1e-12);
    }

    #[test]
    fn round_trip_and_defaults() {
        let t = parse_tree_literal("tree k=3; edges: 1-2,1-3,1-4").unwrap();
        assert!(t.biases().iter().all(|&b| (b - 1.0 / 3.0).abs() < 1e-15));
        let text = format_tree_literal(&t);
        let again = parse_tree_literal(&text).unwrap();
        assert_eq!(again.biases(), t.biases());
        assert_eq!(format_tree_literal(&again), text);
    }

    #[test]
    fn rejections() {
        for text in [
            "",
            "tree k=3",
            "tree k=4; edges: 1-2,1-3,1-4",
            "tree k=3; edges: 1-2,2-3,3-4",
            "tree k=3; edges: 1-2,1-3,1-4; bias: 0.5,0.5",
            "tree k=3; edges: 1-2,1-3,1-4; bias: 0.5,0.4,0.05",
            "tree k=3; edges: 0-2,1-3,1-4",
            "tree k=3; edges: 1-2,1-3,1-4; colour: red",
        ] {
            assert!(parse_tree_literal(text).is_err(), "{text:?}");
        }
    }
}
