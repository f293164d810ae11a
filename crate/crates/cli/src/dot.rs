//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use lattik::topology::{specialization_order, FiniteSpace};
use lattik::{Poset, Result};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Cover edges only, drawn bottom to top; nodes in declaration order.
pub fn export_dot(name: &str, p: &Poset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for n in p.names() {
        writeln!(out, "  {};", quote(n)).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(out, "  {} -> {};", quote(p.name(a)), quote(p.name(b))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The specialization order of a T0 space.
pub fn export_space_dot(name: &str, x: &FiniteSpace) -> Result<String> {
    if x.is_empty() {
        return Ok(format!("digraph {} {{\n  rankdir=BT;\n}}\n", quote(name)));
    }
    Ok(export_dot(name, &specialization_order(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattik::corpus::named;
    use lattik::topology::sp_space;
    use lattik::SizeGuard;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn two_and_b2() {
        let d = export_dot("2", named::two().poset());
        assert_eq!(d, "digraph \"2\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n");
        let d = export_dot("B2", named::b2().poset());
        assert_eq!(edges(&d), 4);
        assert_eq!(d.lines().filter(|l| l.ends_with("\";") && !l.contains("->")).count(), 4);
    }

    #[test]
    fn sp_of_chain_is_a_chain() {
        let sp = sp_space(&named::c3(), SizeGuard::default()).unwrap();
        let d = export_space_dot("Sp(C3)", &sp.space).unwrap();
        assert_eq!(edges(&d), 2);
        assert!(d.contains("\"{0}\" -> \"{0,m}\""));
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
