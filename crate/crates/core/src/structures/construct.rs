//! Builders for the distance graphs whose cliques are codes.
//!
//! Vertices are always listed in lexicographic order of their labels: words
//! by symbol sequence (first coordinate most significant) and subsets by their
//! sorted element lists. DIMACS exports and traces depend on this order.

use super::graph::{Graph, Label};
use super::word::{Subset, Word};
use crate::error::{Error, Result};
use crate::exactnum::binomial;
use num_traits::ToPrimitive;

pub const DEFAULT_VERTEX_CAP: usize = 4096;

/// Graph builder with a vertex cap checked before any allocation.
#[derive(Clone, Copy, Debug)]
pub struct Builder {
    pub vertex_cap: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Builder {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl Builder {
    pub fn with_cap(vertex_cap: usize) -> Self {
        Builder { vertex_cap }
    }

    fn check_cap(&self, requested: u128) -> Result<usize> {
        if requested > self.vertex_cap as u128 {
            return Err(Error::VertexCap {
                requested,
                cap: self.vertex_cap,
            });
        }
        Ok(requested as usize)
    }

    /// `H_q(n, d)`: all `q`-ary words of length `n`, adjacent iff their distance is at least `d`.
    pub fn hamming(&self, q: u32, n: u32, d: u32) -> Result<Graph> {
        check_code_params(q, n, d)?;
        let count = (q as u128).checked_pow(n).unwrap_or(u128::MAX);
        self.check_cap(count)?;
        let labels = Word::all(q as u8, n as usize).map(Label::Word).collect();
        Ok(Graph::from_labels(labels, |a, b| {
            a.to_word().distance(&b.to_word()) >= d as usize
        }))
    }

    /// `K(n, d, w)` with `d = 2δ`: `w`-subsets of `[n]`, adjacent iff `|P ∩ Q| <= w - δ`.
    pub fn constant_weight(&self, n: u32, d: u32, w: u32) -> Result<Graph> {
        if !d.is_multiple_of(2) {
            return Err(Error::domain(format!("constant-weight distance must be even, got {d}")));
        }
        if w > n {
            return Err(Error::domain(format!("need w <= n, got n={n} w={w}")));
        }
        let count = binomial(n as u64, w as i64).to_u128().unwrap_or(u128::MAX);
        self.check_cap(count)?;
        let delta = (d / 2) as i64;
        let labels = Subset::all(n as usize, w as usize)
            .into_iter()
            .map(Label::Subset)
            .collect();
        Ok(Graph::from_labels(labels, |a, b| match (a, b) {
            (Label::Subset(p), Label::Subset(q)) => {
                (p.intersection_size(q) as i64) <= w as i64 - delta
            }
            _ => unreachable!(),
        }))
    }

    /// Doubly-constant-weight graph: binary words of length `n1 + n2` and weight
    /// `w1 + w2` whose first `n1` coordinates carry exactly `w1` ones (at most `w1`
    /// when `bounded`), adjacent iff their distance is at least `d`.
    pub fn doubly(&self, w1: u32, n1: u32, w2: u32, n2: u32, d: u32, bounded: bool) -> Result<Graph> {
        if w1 > n1 || w2 > n2 {
            return Err(Error::domain(format!(
                "need w1 <= n1 and w2 <= n2, got ({w1},{n1},{w2},{n2})"
            )));
        }
        let (n1u, n2u) = (n1 as u64, n2 as u64);
        let total = (w1 + w2) as i64;
        let lo = if bounded { 0 } else { w1 as i64 };
        let count: num_bigint::BigInt = (lo..=w1 as i64)
            .map(|i| binomial(n1u, i) * binomial(n2u, total - i))
            .sum();
        self.check_cap(count.to_u128().unwrap_or(u128::MAX))?;

        let n = (n1 + n2) as usize;
        let mut labels = Vec::new();
        for s in Subset::all(n, total as usize) {
            let first = s.elems().iter().filter(|&&e| e <= n1 as usize).count() as i64;
            if first <= w1 as i64 && first >= lo {
                labels.push(s.to_word());
            }
        }
        labels.sort();
        let labels = labels.into_iter().map(Label::Word).collect();
        Ok(Graph::from_labels(labels, |a, b| {
            a.to_word().distance(&b.to_word()) >= d as usize
        }))
    }

    /// Cayley graph on `(Z_q^n, +)` with connection set `connection`:
    /// `g ~ h` iff `h - g` lies in the set.
    pub fn cayley(&self, q: u32, n: u32, connection: &[Word]) -> Result<Graph> {
        if q < 2 {
            return Err(Error::domain("alphabet size must be at least 2"));
        }
        let count = (q as u128).checked_pow(n).unwrap_or(u128::MAX);
        self.check_cap(count)?;
        if connection.iter().any(|s| s.len() != n as usize || s.q() as u32 != q) {
            return Err(Error::domain("connection set word has the wrong shape"));
        }
        if connection.iter().any(|s| s.weight() == 0) {
            return Err(Error::domain("connection set contains the identity"));
        }
        let set: std::collections::HashSet<&Word> = connection.iter().collect();
        if connection.iter().any(|s| !set.contains(&s.neg())) {
            return Err(Error::domain("connection set is not closed under inversion"));
        }
        let labels = Word::all(q as u8, n as usize).map(Label::Word).collect();
        Ok(Graph::from_labels(labels, |a, b| {
            let (g, h) = (a.to_word(), b.to_word());
            set.contains(&h.sub(&g))
        }))
    }
}

fn check_code_params(q: u32, n: u32, d: u32) -> Result<()> {
    if !(2..=255).contains(&q) {
        return Err(Error::domain(format!("alphabet size {q} outside 2..=255")));
    }
    if d < 1 || d > n {
        return Err(Error::domain(format!("need 1 <= d <= n, got n={n} d={d}")));
    }
    Ok(())
}

/// `S_{n,d} = { s in Z_q^n : wt(s) >= d }`.
pub fn hamming_connection_set(q: u32, n: u32, d: u32) -> Vec<Word> {
    Word::all(q as u8, n as usize)
        .filter(|w| w.weight() >= d as usize)
        .collect()
}

pub fn hamming_graph(q: u32, n: u32, d: u32) -> Result<Graph> {
    Builder::default().hamming(q, n, d)
}

pub fn constant_weight_graph(n: u32, d: u32, w: u32) -> Result<Graph> {
    Builder::default().constant_weight(n, d, w)
}

pub fn doubly_graph(w1: u32, n1: u32, w2: u32, n2: u32, d: u32, bounded: bool) -> Result<Graph> {
    Builder::default().doubly(w1, n1, w2, n2, d, bounded)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word_labels(g: &Graph) -> Vec<String> {
        g.labels().unwrap().iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn hamming_small_cases() {
        let g = hamming_graph(2, 2, 2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        assert_eq!(word_labels(&g), ["00", "01", "10", "11"]);

        let g = hamming_graph(2, 3, 3).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!((0..8).all(|v| g.degree(v) == 1 && g.has_edge(v, 7 - v)));

        let g = hamming_graph(3, 2, 1).unwrap();
        assert_eq!(g, Graph::complete(9).with_labels(g.labels().unwrap().to_vec()).unwrap());
    }

    #[test]
    fn hamming_rejects_bad_input() {
        assert!(hamming_graph(1, 3, 1).is_err());
        assert!(hamming_graph(2, 3, 0).is_err());
        assert!(hamming_graph(2, 3, 4).is_err());
        assert!(matches!(hamming_graph(2, 13, 2), Err(Error::VertexCap { requested: 8192, .. })));
        assert!(Builder::with_cap(8192).hamming(2, 13, 13).is_ok());
    }

    #[test]
    fn petersen_from_constant_weight() {
        let g = constant_weight_graph(5, 4, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        let labels = g.labels().unwrap();
        for u in 0..10 {
            assert_eq!(g.degree(u), 3);
            for v in 0..10 {
                if let (Label::Subset(p), Label::Subset(q)) = (&labels[u], &labels[v]) {
                    assert_eq!(g.has_edge(u, v), u != v && p.intersection_size(q) == 0);
                }
            }
        }
    }

    #[test]
    fn constant_weight_degenerate_cases() {
        let g = constant_weight_graph(4, 2, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 15);
        let g = constant_weight_graph(3, 6, 3).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(constant_weight_graph(5, 3, 2).is_err());
    }

    #[test]
    fn constant_weight_matches_distance_predicate() {
        for n in 1..=7 {
            for w in 0..=n {
                for delta in 0..=w {
                    let g = constant_weight_graph(n, 2 * delta, w).unwrap();
                    let labels = g.labels().unwrap();
                    for u in 0..g.vertex_count() {
                        for v in 0..g.vertex_count() {
                            if u == v {
                                continue;
                            }
                            let dist = labels[u].to_word().distance(&labels[v].to_word());
                            assert_eq!(g.has_edge(u, v), dist >= 2 * delta as usize);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn doubly_examples() {
        let g = doubly_graph(1, 2, 1, 2, 2, false).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);

        // brute-force distance table over the 4 words 0101, 0110, 1001, 1010
        let g = doubly_graph(1, 2, 1, 2, 4, false).unwrap();
        assert_eq!(word_labels(&g), ["0101", "0110", "1001", "1010"]);
        let words: Vec<Word> = g.labels().unwrap().iter().map(Label::to_word).collect();
        let mut expected = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if words[i].distance(&words[j]) >= 4 {
                    expected.push((i, j));
                }
            }
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
        assert_eq!(expected, vec![(0, 3), (1, 2)]);

        let g = doubly_graph(1, 2, 1, 1, 2, true).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(word_labels(&g), ["011", "101"]);
    }

    #[test]
    fn cayley_matches_distance_graph() {
        for (q, n) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3), (4, 4)] {
            for d in 1..=n {
                let s = hamming_connection_set(q, n, d);
                assert!(s.iter().all(|w| w.weight() > 0));
                assert!(s.iter().all(|w| s.contains(&w.neg())));
                let c = Builder::default().cayley(q, n, &s).unwrap();
                assert_eq!(c, hamming_graph(q, n, d).unwrap(), "q={q} n={n} d={d}");
            }
        }
    }

    #[test]
    fn cayley_rejects_bad_connection_sets() {
        let zero = Word::zero(3, 2);
        assert!(Builder::default().cayley(3, 2, &[zero]).is_err());
        let one = Word::parse(3, "10").unwrap();
        assert!(Builder::default().cayley(3, 2, std::slice::from_ref(&one)).is_err());
        assert!(Builder::default().cayley(3, 2, &[one.clone(), one.neg()]).is_ok());
    }
}
