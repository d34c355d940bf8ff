//! Graphviz DOT rendering for graphs and covers.  Output is fully
//! deterministic: vertices ascending, edges in edge order.

use crate::cover::Cover;
use crate::transversal::Transversal;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Plain undirected DOT.  `names` replaces the numeric labels when given.
pub fn graph_to_dot(g: &crate::graph::Graph, names: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let label = match names {
            Some(ns) if v < ns.len() => ns[v].clone(),
            _ => v.to_string(),
        };
        out.push_str(&format!("  {v} [label={}];\n", quote(&label)));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// The cover graph: one cluster per vertex list, list edges inside clusters,
/// matching edges between them.  Witness slots are filled when given.
pub fn cover_to_dot(cover: &Cover, witness: Option<&Transversal>) -> String {
    let t = cover.fold();
    let node = |v: usize, s: usize| format!("v{v}s{s}");
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..cover.base().n() {
        out.push_str(&format!("  subgraph cluster_{v} {{\n    label={};\n", quote(&v.to_string())));
        for s in 0..t {
            let chosen = witness.is_some_and(|w| w.slots[v] == Some(s as u8));
            let style = if chosen {
                " style=filled fillcolor=gray"
            } else {
                ""
            };
            out.push_str(&format!(
                "    {} [label={}{style}];\n",
                node(v, s),
                quote(&s.to_string())
            ));
        }
        for a in 0..t {
            for b in a + 1..t {
                out.push_str(&format!("    {} -- {};\n", node(v, a), node(v, b)));
            }
        }
        out.push_str("  }\n");
    }
    for (e, &(u, v)) in cover.base().edges().iter().enumerate() {
        for (a, &m) in cover.matching(e).iter().enumerate() {
            if let Some(b) = m {
                out.push_str(&format!("  {} -- {};\n", node(u, a), node(v, b as usize)));
            }
        }
    }
    out.push_str("}\n");
    out
}
