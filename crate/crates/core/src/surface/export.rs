use std::fmt::Write as _;

use super::ribbon::{RibbonComplex, VertexKind};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn write_graph(out: &mut String, r: &RibbonComplex, prefix: &str, color: &str) {
    for (i, v) in r.vertices().iter().enumerate() {
        let id = quote(&format!("{prefix}{i}"));
        let attrs = match v.kind {
            VertexKind::Orbifold => format!("shape=point, orbifold=true, xlabel={}, color={color}", quote(&v.label)),
            VertexKind::Puncture => format!("shape=circle, puncture=true, label={}, color={color}", quote(&v.label)),
            VertexKind::Marked => format!("shape=box, label={}, color={color}", quote(&v.label)),
        };
        let _ = writeln!(out, "  {id} [{attrs}];");
    }
    for e in 0..r.edge_count() {
        let a = r.owner(2 * e).0;
        let b = r.owner(2 * e + 1).0;
        let style = if r.is_special_edge(e) { ", style=dashed, special=true" } else { "" };
        let _ = writeln!(
            out,
            "  {} -- {} [label={}, color={color}{style}];",
            quote(&format!("{prefix}{a}")),
            quote(&format!("{prefix}{b}")),
            quote(r.edge_name(e))
        );
    }
}

/// Graphviz rendering of a ribbon graph. Orbifold points are drawn as points
/// carrying `orbifold=true`; special edges are dashed.
pub fn to_dot(r: &RibbonComplex) -> String {
    let mut out = String::from("graph ribbon {\n");
    write_graph(&mut out, r, "v", "black");
    out.push_str("}\n");
    out
}

/// A dissection and its dual in one picture, the dual drawn in red.
pub fn to_dot_with_dual(r: &RibbonComplex, dual: &RibbonComplex) -> String {
    let mut out = String::from("graph dissection {\n");
    write_graph(&mut out, r, "v", "black");
    write_graph(&mut out, dual, "d", "red");
    out.push_str("}\n");
    out
}
