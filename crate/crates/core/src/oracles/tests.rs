use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::structures::{constant_weight_graph, hamming_graph, ParamKey};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Exhaustive clique number over all vertex subsets.
fn brute_clique(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| {
            let vs: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Exhaustive chromatic number over all colorings with k colors.
fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let x = c % k;
                    c /= k;
                    x
                })
                .collect();
            if g.is_proper_coloring(&colors) {
                return k;
            }
        }
    }
    0
}

#[test]
fn clique_examples() {
    let r = max_clique(&hamming_graph(2, 7, 3).unwrap(), &cfg()).unwrap();
    assert_eq!(r.value, 16);
    let r = max_clique(&hamming_graph(2, 8, 4).unwrap(), &cfg()).unwrap();
    assert_eq!(r.value, 16);
    assert_eq!(r.witness.len(), 16);
    assert_eq!(max_clique(&Graph::complete(9), &cfg()).unwrap().value, 9);
    assert_eq!(max_clique(&Graph::empty(0), &cfg()).unwrap().value, 0);
    assert_eq!(max_clique(&Graph::empty(3), &cfg()).unwrap().value, 1);
}

#[test]
fn independence_examples() {
    assert_eq!(max_independent_set(&hamming_graph(2, 4, 3).unwrap(), &cfg()).unwrap().value, 5);
    assert_eq!(max_independent_set(&hamming_graph(3, 2, 2).unwrap(), &cfg()).unwrap().value, 3);
    assert_eq!(max_independent_set(&Graph::empty(7), &cfg()).unwrap().value, 7);
}

#[test]
fn chromatic_examples() {
    assert_eq!(chromatic_number(&Graph::cycle(5), &cfg()).unwrap().value, 3);
    assert_eq!(chromatic_number(&hamming_graph(3, 2, 2).unwrap(), &cfg()).unwrap().value, 3);
    assert_eq!(chromatic_number(&Graph::complete(6), &cfg()).unwrap().value, 6);
    assert_eq!(chromatic_number(&Graph::empty(4), &cfg()).unwrap().value, 1);
    assert_eq!(chromatic_number(&Graph::empty(0), &cfg()).unwrap().value, 0);
    let petersen = constant_weight_graph(5, 4, 2).unwrap();
    assert_eq!(chromatic_number(&petersen, &cfg()).unwrap().value, 3);
}

#[test]
fn extremal_examples() {
    let m = |n, w, t| exhaustive_extremal_family(ExtremalKind::M { n, w, t }, &cfg()).unwrap().value;
    assert_eq!(m(4, 2, 1), 3);
    assert_eq!(m(7, 4, 3), 5);
    assert_eq!(m(6, 3, 3), 1);
    let n = |q, n, t| exhaustive_extremal_family(ExtremalKind::N { q, n, t }, &cfg()).unwrap().value;
    assert_eq!(n(2, 3, 1), 4);
    assert_eq!(n(3, 2, 1), 3);
    let t = exhaustive_extremal_family(ExtremalKind::T { w1: 1, n1: 2, w2: 1, n2: 2, d: 4 }, &cfg()).unwrap();
    assert_eq!(t.value, 2);
    let tp = exhaustive_extremal_family(ExtremalKind::TPrime { w1: 1, n1: 2, w2: 1, n2: 1, d: 2 }, &cfg()).unwrap();
    assert_eq!(tp.value, 2);
}

#[test]
fn extremal_rejects_bad_params() {
    assert!(exhaustive_extremal_family(ExtremalKind::M { n: 4, w: 2, t: 3 }, &cfg()).is_err());
    assert!(exhaustive_extremal_family(ExtremalKind::N { q: 2, n: 3, t: 0 }, &cfg()).is_err());
    assert!(matches!(
        exhaustive_extremal_family(ExtremalKind::N { q: 2, n: 11, t: 3 }, &cfg()),
        Err(Error::VertexCap { .. })
    ));
}

#[test]
fn anticode_routes_agree() {
    for (q, n) in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)] {
        for t in 1..=n {
            let a = anticode_number(q, n, t, AnticodeRoute::HammingGraph, &cfg()).unwrap();
            let b = anticode_number(q, n, t, AnticodeRoute::DownSet, &cfg()).unwrap();
            assert_eq!(a.value, b.value, "q={q} n={n} t={t}");
            let h = hamming_graph(q, n, n - t + 1).unwrap();
            assert!(h.is_independent(&a.witness) && h.is_independent(&b.witness));
        }
    }
}

#[test]
fn clique_matches_brute_force() {
    for seed in 0..30 {
        let g = random_graph(12, 0.3 + 0.02 * seed as f64, seed);
        let r = max_clique(&g, &cfg()).unwrap();
        assert_eq!(r.value, brute_clique(&g), "seed {seed}");
        assert!(g.is_clique(&r.witness));
    }
}

#[test]
fn clique_equals_independence_of_complement() {
    for seed in 0..50 {
        let g = random_graph(20, 0.5, 1000 + seed);
        let a = max_clique(&g, &cfg()).unwrap();
        let b = max_independent_set(&g.complement(), &cfg()).unwrap();
        assert_eq!(a.value, b.value);
    }
}

#[test]
fn symmetry_does_not_change_values() {
    for (q, n) in [(2, 5), (2, 6), (3, 3), (3, 4), (4, 3)] {
        for d in 1..=n {
            let g = hamming_graph(q, n, d).unwrap();
            let sym = Symmetry::hamming(&g).unwrap();
            for h in [g.clone(), g.complement()] {
                let plain = max_clique(&h, &cfg()).unwrap();
                let reduced = max_clique_with(&h, &cfg(), Some(&sym)).unwrap();
                assert_eq!(plain.value, reduced.value, "q={q} n={n} d={d}");
                assert!(h.is_clique(&reduced.witness));
            }
        }
    }
}

#[test]
fn searches_are_deterministic() {
    let g = hamming_graph(2, 7, 3).unwrap();
    let a = max_clique(&g, &cfg()).unwrap();
    let b = max_clique(&g, &cfg()).unwrap();
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.nodes_explored, b.nodes_explored);
}

#[test]
fn chromatic_matches_brute_force() {
    for seed in 0..25 {
        let g = random_graph(7, 0.5, 500 + seed);
        let r = chromatic_number(&g, &cfg()).unwrap();
        assert_eq!(r.value, brute_chromatic(&g), "seed {seed}");
        assert!(g.is_proper_coloring(&r.witness));
    }
}

#[test]
fn chromatic_respects_fractional_lower_bound() {
    let graphs = [
        hamming_graph(3, 2, 2).unwrap(),
        hamming_graph(2, 4, 2).unwrap(),
        hamming_graph(3, 3, 3).unwrap(),
        constant_weight_graph(5, 4, 2).unwrap(),
        Graph::cycle(7),
        random_graph(16, 0.4, 7),
    ];
    for g in &graphs {
        let chi = chromatic_number(g, &cfg()).unwrap().value;
        let alpha = max_independent_set(g, &cfg()).unwrap().value;
        assert!(chi * alpha >= g.vertex_count());
    }
}

#[test]
fn certified_coloring() {
    let g = Graph::cycle(6);
    assert_eq!(chromatic_number_certified(&g, &[0, 1, 0, 1, 0, 1], 2).unwrap().value, 2);
    assert!(chromatic_number_certified(&g, &[0, 1, 2, 0, 1, 2], 2).is_err());
    assert!(chromatic_number_certified(&g, &[0, 0, 1, 0, 1, 0], 2).is_err());
}

#[test]
fn caps_and_timeouts_are_errors() {
    let small = OracleConfig {
        max_vertices: 100,
        ..cfg()
    };
    assert!(matches!(
        max_clique(&hamming_graph(2, 7, 3).unwrap(), &small),
        Err(Error::VertexCap { requested: 128, cap: 100 })
    ));
    assert!(matches!(chromatic_number(&Graph::empty(65), &cfg()), Err(Error::VertexCap { .. })));
    let hurried = OracleConfig {
        timeout: Duration::from_millis(20),
        ..cfg()
    };
    let hard = hamming_graph(2, 8, 7).unwrap().complement();
    assert!(matches!(max_clique(&hard, &hurried), Err(Error::Timeout(_))));
}

#[test]
fn upper_bound_only_shortens_the_search() {
    for seed in 0..20 {
        let g = random_graph(18, 0.5, 100 + seed);
        let exact = brute_clique(&g);
        for upper in [exact, exact + 1, usize::MAX] {
            let r = max_clique_bounded(&g, &cfg(), None, upper).unwrap();
            assert_eq!(r.value, exact, "seed {seed}, upper {upper}");
            assert!(g.is_clique(&r.witness));
        }
    }
    // A_2(n, 2) = 2^(n-1) reaches the shortening bound at once
    let r = exact_code_size(ParamKey::code(2, 8, 2).unwrap(), &cfg()).unwrap();
    assert_eq!(r.value, 128);
}
