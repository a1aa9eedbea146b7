//! Text formats: weighted pseudographs, tree literals and degree sequences.

mod degrees;
mod graph;
mod tree;

pub use degrees::{format_degree_sequence, parse_degree_sequence};
pub use graph::{format_graph, parse_graph, read_graph};
pub use tree::{format_tree_literal, parse_tree_literal};
