//! JSON and Graphviz renderings of a Cayley table.

use std::fmt::Write as _;

use quandle_core::{components, CayleyTable};
use serde::Serialize;

#[derive(Debug, Serialize)]
struct RepJson {
    base: String,
    word: String,
}

#[derive(Debug, Serialize)]
struct TableJson<'a> {
    generators: &'a [String],
    size: usize,
    action: Vec<&'a [usize]>,
    reps: Vec<RepJson>,
    components: Vec<Vec<usize>>,
}

/// Serializes the full action table, representatives and component
/// membership. Output depends only on the table.
pub fn to_json(t: &CayleyTable) -> String {
    let names = t.generators();
    let doc = TableJson {
        generators: names,
        size: t.size(),
        action: (0..t.size()).map(|v| t.row(v)).collect(),
        reps: t
            .reps()
            .iter()
            .map(|r| RepJson {
                base: names[r.base].clone(),
                word: r.word.render(names),
            })
            .collect(),
        components: components(t).members,
    };
    let mut s = serde_json::to_string(&doc).expect("table serializes");
    s.push('\n');
    s
}

/// `g^word` label of an element, or just `g` for a generator seed.
pub fn element_label(t: &CayleyTable, v: usize) -> String {
    let rep = &t.reps()[v];
    let base = &t.generators()[rep.base];
    if rep.word.is_empty() {
        base.clone()
    } else {
        format!("{base}^{}", rep.word.render(t.generators()))
    }
}

/// Undirected multigraph with one edge per unordered pair and generator;
/// generator seeds are drawn larger.
pub fn to_dot(t: &CayleyTable) -> String {
    let mut out =
        String::from("graph quandle {\n    node [shape=circle, width=0.15, fontsize=9];\n");
    for v in 0..t.size() {
        let seed = t.seeds().contains(&v);
        let style = if seed {
            ", width=0.4, style=filled, fillcolor=gray80, penwidth=2"
        } else {
            ""
        };
        let _ = writeln!(out, "    {v} [label=\"{}\"{style}];", element_label(t, v));
    }
    for v in 0..t.size() {
        for (j, name) in t.generators().iter().enumerate() {
            let u = t.act(v, j);
            if u >= v {
                let _ = writeln!(out, "    {v} -- {u} [label=\"{name}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use quandle_core::{enumerate, parse_presentation, EnumerationBudget};

    fn trefoil() -> CayleyTable {
        let p = parse_presentation("gens: a b c; rels: a^b = c; b^c = a; c^a = b;").unwrap();
        enumerate(&p, EnumerationBudget::default())
            .into_table()
            .unwrap()
    }

    #[test]
    fn json_has_expected_keys() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&trefoil())).unwrap();
        assert_eq!(v["size"], 3);
        assert_eq!(v["generators"], serde_json::json!(["a", "b", "c"]));
        assert_eq!(v["action"].as_array().unwrap().len(), 3);
        assert_eq!(v["reps"][0], serde_json::json!({"base": "a", "word": ""}));
        assert_eq!(v["components"], serde_json::json!([[0, 1, 2]]));
    }

    #[test]
    fn dot_counts_edges_once() {
        let dot = to_dot(&trefoil());
        // three loops and three two-cycles, one per generator
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert_eq!(dot.matches("penwidth=2").count(), 3);
    }
}
