//! Exact chromatic number by DSATUR branch and bound.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::structures::Graph;

use super::{max_clique, OracleConfig, SearchResult};

/// Graphs up to this many vertices are colored exactly without certificates.
pub const EXACT_COLORING_LIMIT: usize = 64;

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<Option<usize>>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
    nodes: u64,
    start: Instant,
    timeout: Duration,
    timed_out: bool,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        let mut seen = Vec::new();
        for u in self.g.neighbors(v).iter() {
            if let Some(c) = self.colors[u] {
                if !seen.contains(&c) {
                    seen.push(c);
                }
            }
        }
        seen.len()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn search(&mut self, used: usize) {
        self.nodes += 1;
        if self.nodes & 0xff == 0 && self.start.elapsed() > self.timeout {
            self.timed_out = true;
        }
        if self.timed_out || used >= self.best_count || self.best_count == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best_count = used;
            self.best = self.colors.iter().map(|c| c.unwrap()).collect();
            return;
        };
        // a fresh color is only tried once, as color `used`
        for c in 0..=used {
            if c + 1 >= self.best_count {
                break;
            }
            if self.g.neighbors(v).iter().any(|u| self.colors[u] == Some(c)) {
                continue;
            }
            self.colors[v] = Some(c);
            self.search(used.max(c + 1));
            self.colors[v] = None;
        }
    }
}

/// Exact chromatic number with a proper coloring (`witness[v]` is the color of `v`).
pub fn chromatic_number(g: &Graph, config: &OracleConfig) -> Result<SearchResult> {
    if g.vertex_count() > EXACT_COLORING_LIMIT {
        return Err(Error::VertexCap {
            requested: g.vertex_count() as u128,
            cap: EXACT_COLORING_LIMIT,
        });
    }
    let start = Instant::now();
    let n = g.vertex_count();
    if n == 0 {
        return Ok(SearchResult {
            value: 0,
            witness: vec![],
            nodes_explored: 0,
            elapsed: start.elapsed(),
        });
    }
    let clique = max_clique(g, config)?;
    let mut s = Dsatur {
        g,
        colors: vec![None; n],
        best: (0..n).collect(),
        best_count: n + 1,
        lower: clique.value,
        nodes: 0,
        start,
        timeout: config.timeout,
        timed_out: false,
    };
    s.search(0);
    if s.timed_out {
        return Err(Error::Timeout(start.elapsed()));
    }
    if !g.is_proper_coloring(&s.best) {
        return Err(Error::domain("internal: coloring witness failed verification"));
    }
    Ok(SearchResult {
        value: s.best_count,
        witness: s.best,
        nodes_explored: s.nodes + clique.nodes_explored,
        elapsed: start.elapsed(),
    })
}

/// Certifies `χ(g)` on graphs beyond the exact limit: a proper coloring supplies the
/// upper bound and `lower` (for instance `⌈|V|/α⌉` from an exact α) the lower bound.
/// Succeeds only when the two meet.
pub fn chromatic_number_certified(g: &Graph, coloring: &[usize], lower: usize) -> Result<SearchResult> {
    if !g.is_proper_coloring(coloring) {
        return Err(Error::domain("supplied coloring is not proper"));
    }
    let mut distinct = coloring.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != lower {
        return Err(Error::domain(format!(
            "certificates do not meet: coloring uses {} colors, lower bound is {lower}",
            distinct.len()
        )));
    }
    Ok(SearchResult {
        value: lower,
        witness: coloring.to_vec(),
        nodes_explored: 0,
        elapsed: Duration::ZERO,
    })
}
