//! Minimal DOT export: vertex names are "<family><index>", colors are
//! carried as an integer `colorid` node attribute.

use crate::graph::{Coloring, Graph};

pub fn to_dot(g: &Graph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        match coloring {
            Some(c) => {
                out.push_str(&format!("  {} [colorid={}];\n", g.label(v), c.color(v)));
            }
            None => out.push_str(&format!("  {};\n", g.label(v))),
        }
    }
    for &(a, b) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", g.label(a), g.label(b)));
    }
    out.push_str("}\n");
    out
}
