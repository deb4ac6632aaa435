//! DIMACS export with a label sidecar, and the round trip back.

use codebounds::structures::{constant_weight_graph, label_sidecar, parse_dimacs, to_dimacs};

fn main() -> codebounds::Result<()> {
    let g = constant_weight_graph(6, 4, 3)?;
    let text = to_dimacs(&g);
    let labels = label_sidecar(&g).unwrap_or_default();
    print!("{}", text.lines().take(4).map(|l| format!("{l}\n")).collect::<String>());
    println!("...");
    println!("first labels: {}", labels.lines().take(4).collect::<Vec<_>>().join(" "));

    let back = parse_dimacs(&text)?;
    let n = g.vertex_count();
    let same = back.vertex_count() == n && (0..n).all(|u| (0..n).all(|v| back.has_edge(u, v) == g.has_edge(u, v)));
    println!("round trip preserves the graph: {same}");
    Ok(())
}
