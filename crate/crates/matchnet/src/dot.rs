//! DOT renderings: matched graphs with bold blue matching edges, proof
//! structures with ax/⊗/⅋ labels, and Hasse diagrams of link orderings.

use std::fmt::Write;

use crate::graph::{Graph, Matching};
use crate::kingdom::KingdomOrder;
use crate::proofnet::{LinkKind, ProofStructure};

pub fn graph_dot(g: &Graph, matching: Option<&Matching>) -> String {
    let mut out = String::from("graph {\n  node [shape=point];\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  v{v};").unwrap();
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let matched = matching.is_some_and(|m| m.contains(id));
        let style = if matched {
            " [color=blue, penwidth=2.5]"
        } else {
            " [color=red]"
        };
        writeln!(out, "  v{u} -- v{v}{style}; // e{id}").unwrap();
    }
    out.push_str("}\n");
    out
}

fn kind_label(kind: LinkKind) -> &'static str {
    match kind {
        LinkKind::Ax => "ax",
        LinkKind::Tensor => "⊗",
        LinkKind::Par => "⅋",
    }
}

pub fn net_dot(ps: &ProofStructure) -> String {
    let mut out = String::from("digraph {\n  rankdir=TB;\n  node [shape=circle];\n");
    for l in 0..ps.link_count() {
        writeln!(out, "  l{l} [label=\"{}\"];", kind_label(ps.kind(l))).unwrap();
    }
    for (id, &(src, tgt)) in ps.edges().iter().enumerate() {
        writeln!(out, "  l{src} -> l{tgt}; // e{id}").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram: the transitive reduction of the closure, drawn upward.
pub fn hasse_dot(order: &KingdomOrder, ps: &ProofStructure) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n  node [shape=box];\n");
    for l in 0..ps.link_count() {
        writeln!(out, "  l{l} [label=\"{} #{l}\"];", kind_label(ps.kind(l))).unwrap();
    }
    for &(p, q) in &order.closure {
        let implied = order
            .closure
            .iter()
            .any(|&(a, b)| a == p && order.closure.contains(&(b, q)) && b != q && a != b);
        if !implied {
            writeln!(out, "  l{p} -> l{q};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
