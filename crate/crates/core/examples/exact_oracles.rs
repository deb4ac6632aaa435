//! Exact clique, independence and chromatic numbers with verified witnesses.

use codebounds::oracles::{
    chromatic_number, chromatic_number_certified, exact_code_size, max_independent_set, OracleConfig,
};
use codebounds::structures::witness::deletion_homomorphism;
use codebounds::structures::{hamming_graph, Builder, ParamKey};

fn main() -> codebounds::Result<()> {
    let config = OracleConfig::default();
    for key in [
        ParamKey::code(2, 8, 4)?,
        ParamKey::code(3, 4, 3)?,
        ParamKey::constant_weight(7, 4, 4)?,
        ParamKey::doubly(1, 4, 2, 4, 4, false)?,
    ] {
        let r = exact_code_size(key, &config)?;
        println!("{key} = {:<3} ({} nodes, {:?})", r.value, r.nodes_explored, r.elapsed);
    }

    let g = hamming_graph(3, 3, 3)?;
    let alpha = max_independent_set(&g, &config)?;
    let chi = chromatic_number(&g, &config)?;
    println!("H_3(3,3): alpha = {}, chi = {}", alpha.value, chi.value);

    // chi(H_3(3,2)): the deletion map to K_9 colours it, and 27 / alpha = 9 forces 9 colours
    let (source, _, map) = deletion_homomorphism(3, 3, 2, &Builder::default())?;
    let alpha = max_independent_set(&source, &config)?.value;
    let lower = source.vertex_count().div_ceil(alpha);
    let chi = chromatic_number_certified(&source, &map, lower)?;
    println!("H_3(3,2): alpha = {alpha}, chi = {} (certified)", chi.value);
    Ok(())
}
