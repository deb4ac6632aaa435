//! Builds the distance graphs behind the code families and checks their symmetry.

use codebounds::structures::witness::{permutation_taking, subset_permutation_map};
use codebounds::structures::{
    constant_weight_graph, doubly_graph, hamming_connection_set, hamming_graph, verify_automorphism,
    verify_translation_automorphism, Builder, Label, Word,
};

fn main() -> codebounds::Result<()> {
    let h = hamming_graph(2, 4, 2)?;
    println!("H_2(4,2): {} vertices, {} edges", h.vertex_count(), h.edge_count());

    // H_q(n,d) is the Cayley graph of Z_q^n on the words of weight >= d
    let cayley = Builder::default().cayley(3, 3, &hamming_connection_set(3, 3, 2))?;
    let direct = hamming_graph(3, 3, 2)?;
    let same = (0..27).all(|u| (0..27).all(|v| cayley.has_edge(u, v) == direct.has_edge(u, v)));
    println!("H_3(3,2) equals its Cayley construction: {same}");

    let u = Word::parse(3, "012")?;
    let v = Word::parse(3, "220")?;
    println!("translation 012 -> 220 is an automorphism: {}", verify_translation_automorphism(3, 3, 2, &u, &v));

    // K(5,4,2) is the Petersen graph; a permutation of [5] moves any pair to any other
    let k = constant_weight_graph(5, 4, 2)?;
    let (Label::Subset(p), Label::Subset(q)) = (k.label(0).unwrap(), k.label(7).unwrap()) else {
        unreachable!()
    };
    let perm = permutation_taking(p, q)?;
    let map = subset_permutation_map(&k, &perm).expect("labels are subsets");
    println!("K(5,4,2): {} vertices, degree {}; {p} -> {q} by {perm:?}: {}", k.vertex_count(), k.degree(0), verify_automorphism(&k, &map));

    let t = doubly_graph(1, 3, 1, 3, 2, false)?;
    let t_bounded = doubly_graph(1, 3, 1, 3, 2, true)?;
    println!("doubly graphs on (1,3,1,3): exact split {} vertices, bounded split {}", t.vertex_count(), t_bounded.vertex_count());
    Ok(())
}
