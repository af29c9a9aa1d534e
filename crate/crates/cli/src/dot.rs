//! Graphviz rendering of the box poset.

use std::fmt::Write;

use equimon::BoxDecomposition;

/// One node per class in `Conj_G(X)`, one edge per covering relation,
/// pointing from the smaller class to the larger.
pub fn box_poset(b: &BoxDecomposition) -> String {
    let mut out = String::from("digraph box_poset {\n    rankdir=BT;\n    node [shape=box];\n");
    for &c in b.classes() {
        writeln!(
            out,
            "    c{c} [label=\"[H{c}]: |H|={}, α={}, [N:H]={}\"];",
            b.representative(c).size(),
            b.alpha(c),
            b.normalizer_index(c)
        )
        .unwrap();
    }
    for (a, c) in b.covering_relations() {
        writeln!(out, "    c{a} -> c{c};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Node and edge counts, for tests.
pub fn count_nodes_and_edges(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    (nodes, edges)
}
