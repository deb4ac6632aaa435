use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::oracles::{chromatic_number, max_independent_set, OracleConfig};
use crate::structures::{constant_weight_graph, hamming_graph};

/// `-n λ_min / (λ_max - λ_min)` of the adjacency matrix, which is `ϑ` for
/// edge-transitive regular graphs.
fn spectral_theta(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let a = SymMatrix::from_fn(n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let ev = a.eigh().values;
    let max = ev.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = ev.iter().cloned().fold(f64::INFINITY, f64::min);
    -(n as f64) * min / (max - min)
}

fn theta(g: &Graph) -> f64 {
    lovasz_theta(g).unwrap().value
}

#[test]
fn known_values() {
    let c5 = Graph::cycle(5);
    let r = lovasz_theta(&c5).unwrap();
    assert!((r.value - 5f64.sqrt()).abs() < 1e-3, "{r:?}");
    assert!((r.value - spectral_theta(&c5)).abs() < 1e-5);
    assert!(r.primal_residual <= 1e-7);
    assert!(r.dual_gap_estimate.abs() < 1e-4, "{r:?}");

    let petersen = constant_weight_graph(5, 4, 2).unwrap();
    assert!((theta(&petersen) - 4.0).abs() < 1e-3);
    assert!((theta(&petersen) - spectral_theta(&petersen)).abs() < 1e-5);

    assert!((theta(&Graph::complete(7)) - 1.0).abs() < 1e-4);
    assert!((theta(&Graph::empty(6)) - 6.0).abs() < 1e-4);
    assert_eq!(theta(&Graph::empty(0)), 0.0);
}

#[test]
fn multiplicativity() {
    let cfg = ThetaConfig::default();
    for g in [hamming_graph(3, 2, 2).unwrap(), Graph::cycle(5), constant_weight_graph(5, 4, 2).unwrap()] {
        let m = check_multiplicativity(&g, &cfg).unwrap();
        assert!(m.deviation < 1e-2, "{m:?}");
    }
    let m = check_multiplicativity(&constant_weight_graph(5, 4, 2).unwrap(), &cfg).unwrap();
    assert!((m.theta - 4.0).abs() < 1e-3 && (m.theta_complement - 2.5).abs() < 1e-3);
}

#[test]
fn capacity_families() {
    let cfg = ThetaConfig::default();
    let oc = OracleConfig::default();
    for g in [hamming_graph(3, 2, 2).unwrap(), hamming_graph(2, 2, 2).unwrap(), hamming_graph(3, 3, 3).unwrap()] {
        let a = max_independent_set(&g, &oc).unwrap().value;
        let b = max_independent_set(&g.complement(), &oc).unwrap().value;
        let r = capacity_family_check(&g, a, b, &cfg).unwrap();
        assert!(r.holds(), "{r:?}");
    }
    // a vertex-transitive graph outside the families: C5 has α(G) α(Ḡ) = 4 < 5
    let r = capacity_family_check(&Graph::cycle(5), 2, 2, &cfg).unwrap();
    assert!(!r.alpha_product_is_order && !r.holds());
}

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

#[test]
fn sandwich() {
    let oc = OracleConfig::default();
    let mut graphs = vec![
        hamming_graph(2, 3, 2).unwrap(),
        hamming_graph(2, 4, 3).unwrap(),
        hamming_graph(3, 2, 1).unwrap(),
        constant_weight_graph(6, 4, 3).unwrap(),
        Graph::cycle(7),
    ];
    graphs.extend((0..6).map(|s| random_graph(10, 0.4, 40 + s)));
    for g in &graphs {
        let t = theta(g);
        let alpha = max_independent_set(g, &oc).unwrap().value as f64;
        let chi_bar = chromatic_number(&g.complement(), &oc).unwrap().value as f64;
        assert!(alpha <= t + 1e-4 && t <= chi_bar + 1e-4, "α={alpha} ϑ={t} χ̄={chi_bar}");
    }
}

#[test]
fn monotone_under_edge_deletion() {
    for seed in 0..10 {
        let g = random_graph(12, 0.35, 100 + seed);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        if edges.is_empty() {
            continue;
        }
        let (a, b) = edges[seed as usize % edges.len()];
        let h = Graph::from_fn(12, |u, v| g.has_edge(u, v) && (u, v) != (a, b));
        let (th, tg) = (theta(&h), theta(&g));
        // entrywise residuals of 1e-7 allow an error of order n·1e-7 in the sum of entries
        assert!(th >= tg - 1e-5, "{th} < {tg}");
    }
}

#[test]
fn iteration_cap_is_respected() {
    let g = Graph::cycle(5);
    let tight = ThetaConfig {
        max_iterations: 3,
        ..ThetaConfig::default()
    };
    assert!(matches!(lovasz_theta_with(&g, &tight), Err(Error::NonConvergence { iterations: 3, .. })));
    let base = lovasz_theta(&g).unwrap();
    let doubled = lovasz_theta_with(
        &g,
        &ThetaConfig {
            max_iterations: 400_000,
            ..ThetaConfig::default()
        },
    )
    .unwrap();
    assert!((base.value - doubled.value).abs() <= 1e-5);
    let small = ThetaConfig {
        max_vertices: 4,
        ..ThetaConfig::default()
    };
    assert!(matches!(lovasz_theta_with(&g, &small), Err(Error::VertexCap { .. })));
}
