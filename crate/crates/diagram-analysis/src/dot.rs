use std::fmt::Write;

use coxsp_core::{CoxeterSystem, Label};

/// Graphviz text for the complete labeled diagram. Odd labels are blue, even
/// labels orange, infinite labels black and dashed.
pub fn to_dot(system: &CoxeterSystem) -> String {
    let mut out = String::from("graph coxeter {\n  node [shape=circle];\n");
    for i in 0..system.rank() {
        let _ = writeln!(out, "  n{} [label={:?}];", i + 1, system.name(i));
    }
    for (i, j) in system.pairs() {
        let l = system.label(i, j);
        let style = match l {
            Label::Infinite => "color=black, style=dashed",
            l if l.is_odd() => "color=blue",
            _ => "color=orange",
        };
        let _ = writeln!(out, "  n{} -- n{} [label=\"{}\", {}];", i + 1, j + 1, l, style);
    }
    out.push_str("}\n");
    out
}
