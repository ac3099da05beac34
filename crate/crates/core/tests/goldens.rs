//! Checked-in layouts, graphs and oracle results. Set `TRVG_BLESS=1` to
//! rewrite them from the current code.

mod common;

use std::path::Path;

use serde_json::json;
use trvg::analysis::Verdict;
use trvg::io::{graph_to_json, layout_to_json};
use trvg::search::is_trvg_exact;

fn bless() -> bool {
    std::env::var_os("TRVG_BLESS").is_some()
}

fn check_or_write(path: &Path, text: &str) {
    if bless() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(path, text).unwrap();
        return;
    }
    let on_disk = std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("{}: {e} (run with TRVG_BLESS=1 to create it)", path.display()));
    assert_eq!(on_disk, text, "{} is out of date", path.display());
}

#[test]
fn layouts_and_graphs_match_the_builders() {
    let dir = common::goldens_dir();
    for (name, layout, graph) in common::golden_cases() {
        check_or_write(&dir.join("layouts").join(format!("{name}.json")), &(layout_to_json(&layout) + "\n"));
        check_or_write(&dir.join("graphs").join(format!("{name}.json")), &(graph_to_json(&graph) + "\n"));
    }
}

pub fn oracle_table() -> serde_json::Value {
    let mut rows = Vec::new();
    for n in 0..=4 {
        for g in common::unlabeled_graphs(n) {
            let c = is_trvg_exact(&g, 4).unwrap();
            let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect();
            rows.push(json!({
                "vertices": n,
                "edges": edges,
                "verdict": c.verdict.name(),
            }));
            assert_eq!(c.verdict, Verdict::Trvg);
        }
    }
    json!(rows)
}

#[test]
fn oracle_results_are_pinned() {
    let text = serde_json::to_string_pretty(&oracle_table()).unwrap() + "\n";
    check_or_write(&common::goldens_dir().join("oracle_small.json"), &text);
}
