use std::fmt::Write;

use super::analysis::Analysis;

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

fn nodes(out: &mut String, labels: &[String]) {
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).expect("string write");
    }
}

fn copoint_labels(a: &Analysis) -> Vec<String> {
    a.copoints.iter().map(|c| c.render(&a.geometry)).collect()
}

/// Undirected copoint graph.
pub fn copoint_graph_dot(a: &Analysis) -> String {
    let mut out = String::from("graph copoints {\n");
    nodes(&mut out, &copoint_labels(a));
    for &(i, j) in &a.graph.edges {
        writeln!(out, "  n{i} -- n{j};").expect("string write");
    }
    out.push_str("}\n");
    out
}

/// Critical digraph, one node per critical pair labelled by its copoint.
pub fn critical_digraph_dot(a: &Analysis) -> String {
    let mut out = String::from("digraph critical {\n");
    let labels: Vec<String> = a
        .pairs
        .iter()
        .map(|p| a.copoints[p.copoint].render(&a.geometry))
        .collect();
    nodes(&mut out, &labels);
    for (i, j) in a.digraph.edges() {
        writeln!(out, "  n{i} -> n{j};").expect("string write");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the copoints under inclusion, smaller sets at the bottom.
pub fn copoint_poset_dot(a: &Analysis) -> String {
    let mut out = String::from("digraph copoint_poset {\n  rankdir=BT;\n");
    nodes(&mut out, &copoint_labels(a));
    let sets: Vec<_> = a.copoints.iter().map(|c| c.set).collect();
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            let covers = sets[i].is_proper_subset(sets[j])
                && !(0..sets.len()).any(|k| {
                    sets[i].is_proper_subset(sets[k]) && sets[k].is_proper_subset(sets[j])
                });
            if covers {
                writeln!(out, "  n{i} -> n{j};").expect("string write");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::analysis::{analyze_points, AnalysisOptions};
    use crate::geometry::fixtures::triangle;

    #[test]
    fn triangle_dot() {
        let a = analyze_points(&triangle(), &AnalysisOptions::default()).unwrap();
        let g = copoint_graph_dot(&a);
        assert!(g.starts_with("graph copoints {"));
        assert_eq!(g.matches(" -- ").count(), 3);
        assert!(g.contains("[label=\"{a,b}@c\"]"), "{g}");
        let poset = copoint_poset_dot(&a);
        assert_eq!(poset.matches(" -> ").count(), 0);
        assert_eq!(critical_digraph_dot(&a).matches(" -> ").count(), 6);
    }
}
