//! Lovász theta by ADMM, with the product identity on vertex-transitive graphs.

use codebounds::oracles::{max_clique, max_independent_set, OracleConfig};
use codebounds::structures::{constant_weight_graph, hamming_graph, Graph};
use codebounds::theta::{capacity_family_check, check_multiplicativity, lovasz_theta, ThetaConfig};

fn main() -> codebounds::Result<()> {
    let c5 = Graph::cycle(5);
    let r = lovasz_theta(&c5)?;
    println!("theta(C5) = {:.6} (sqrt 5 = {:.6}), {} iterations, dual gap {:.1e}", r.value, 5f64.sqrt(), r.iterations, r.dual_gap_estimate);

    let petersen = constant_weight_graph(5, 4, 2)?;
    let m = check_multiplicativity(&petersen, &ThetaConfig::default())?;
    println!("Petersen: theta = {:.4}, complement {:.4}, product {:.4}", m.theta, m.theta_complement, m.product);

    // theta of the complement bounds the clique number, i.e. the code size
    let h = hamming_graph(2, 6, 3)?;
    let t = lovasz_theta(&h.complement())?;
    println!("A_2(6,3) <= theta(complement of H_2(6,3)) = {:.4}", t.value);

    let config = OracleConfig::default();
    for (name, g) in [("H_3(2,2)", hamming_graph(3, 2, 2)?), ("H_3(3,3)", hamming_graph(3, 3, 3)?), ("C5", c5)] {
        let a = max_independent_set(&g, &config)?.value;
        let w = max_clique(&g, &config)?.value;
        let cap = capacity_family_check(&g, a, w, &ThetaConfig::default())?;
        println!("{name}: alpha = {a}, alpha(complement) = {w}, theta = {:.4}, capacity equals alpha: {}", cap.theta, cap.holds());
    }
    Ok(())
}
