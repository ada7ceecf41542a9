//! Graphviz output for rooted trees.

use std::fmt::Write;

use semiexp::tree::RootedTree;

/// Nodes are named `v_<depth>_<index within the level>`; edges go from
/// father to son. Vertices deeper than `depth_cap` are left out.
pub fn render(tree: &RootedTree, label: impl Fn(usize) -> String, with_labels: bool, depth_cap: Option<usize>) -> String {
    let cap = depth_cap.unwrap_or(usize::MAX);
    let mut names = vec![String::new(); tree.len()];
    let mut per_level: Vec<usize> = Vec::new();
    for v in 0..tree.len() {
        let k = tree.depth(v);
        if per_level.len() <= k {
            per_level.resize(k + 1, 0);
        }
        names[v] = format!("v_{k}_{}", per_level[k]);
        per_level[k] += 1;
    }
    let mut order: Vec<usize> = (0..tree.len()).filter(|&v| tree.depth(v) <= cap).collect();
    order.sort_by_key(|&v| (tree.depth(v), v));

    let mut out = String::from("digraph tree {\n");
    for &v in &order {
        if with_labels {
            let text = label(v).replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(out, "  {} [label=\"{text}\"];", names[v]).unwrap();
        } else {
            writeln!(out, "  {};", names[v]).unwrap();
        }
    }
    for &v in &order {
        if let Some(p) = tree.parent(v) {
            writeln!(out, "  {} -> {};", names[p], names[v]).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
