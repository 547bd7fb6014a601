//! Graphviz export.

use std::fmt::Write as _;

use ktree_core::Graph;

/// Undirected DOT text listing every vertex, then every edge.
pub fn to_dot(graph: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for e in graph.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}
