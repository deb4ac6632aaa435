//! Exact maximum clique by branch and bound over bitset candidate sets.
//!
//! Vertices are renumbered by descending degree (ties by index) so that bitset
//! order is the branching order. Each node greedily colors its candidate set and
//! prunes with the color count; only vertices whose color can still improve the
//! incumbent become branching candidates.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use std::collections::HashMap;

use crate::structures::{BitSet, Graph};

use super::symmetry::Symmetry;
use super::{OracleConfig, SearchResult};

pub(crate) struct CliqueSearch {
    adj: Vec<BitSet>,
    order: Vec<usize>,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    start: Instant,
    timeout: Duration,
    timed_out: bool,
    symmetry: Option<Symmetry>,
    /// A proven upper bound on the clique number; reaching it ends the search.
    stop_at: usize,
}

impl CliqueSearch {
    pub(crate) fn new(g: &Graph, timeout: Duration) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| BitSet::from_indices(n, g.neighbors(v).iter().map(|u| position[u])))
            .collect();
        CliqueSearch {
            adj,
            order,
            current: Vec::new(),
            best: Vec::new(),
            nodes: 0,
            start: Instant::now(),
            timeout,
            timed_out: false,
            symmetry: None,
            stop_at: usize::MAX,
        }
    }

    pub(crate) fn with_symmetry(mut self, symmetry: Option<Symmetry>) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub(crate) fn with_upper_bound(mut self, upper: usize) -> Self {
        self.stop_at = upper;
        self
    }

    fn finished(&self) -> bool {
        self.timed_out || self.best.len() >= self.stop_at
    }

    pub(crate) fn run(mut self, candidates: BitSet) -> Result<(Vec<usize>, u64, Duration)> {
        self.start = Instant::now();
        let anchor = match &self.symmetry {
            Some(s) if s.is_transitive() => self.order.iter().position(|&v| v == 0),
            _ => None,
        };
        match anchor {
            // some maximum clique of a vertex-transitive graph contains any given vertex
            Some(a) if candidates.count() == self.order.len() => {
                self.current.push(a);
                if self.best.is_empty() {
                    self.best = vec![a];
                }
                let next = candidates.intersection(&self.adj[a]);
                if !next.is_empty() {
                    self.expand(next);
                }
                self.current.clear();
            }
            _ => {
                if !candidates.is_empty() {
                    self.expand(candidates);
                }
            }
        }
        let elapsed = self.start.elapsed();
        if self.timed_out {
            return Err(Error::Timeout(elapsed));
        }
        let mut witness: Vec<usize> = self.best.iter().map(|&v| self.order[v]).collect();
        witness.sort_unstable();
        Ok((witness, self.nodes, elapsed))
    }

    pub(crate) fn all_vertices(&self) -> BitSet {
        BitSet::full(self.order.len())
    }

    fn expand(&mut self, mut p: BitSet) {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 && self.start.elapsed() > self.timeout {
            self.timed_out = true;
        }
        if self.finished() {
            return;
        }
        let (verts, colors) = self.color_sort(&p);
        let orbits = self.orbits(&p);
        for i in (0..verts.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = verts[i];
            if !p.contains(v) {
                continue;
            }
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            match &orbits {
                Some((orbit_of, members)) => {
                    for &u in &members[orbit_of[&v]] {
                        p.remove(u);
                    }
                }
                None => p.remove(v),
            }
            if self.finished() {
                return;
            }
        }
    }

    /// Orbits of the clique's stabilizer on `p`, or `None` when the stabilizer is trivial.
    #[allow(clippy::type_complexity)]
    fn orbits(&self, p: &BitSet) -> Option<(HashMap<usize, usize>, Vec<Vec<usize>>)> {
        let sym = self.symmetry.as_ref()?;
        let clique: Vec<usize> = self.current.iter().map(|&v| self.order[v]).collect();
        let classes = sym.coordinate_classes(&clique)?;
        let mut by_key: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut orbit_of = HashMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for v in p.iter() {
            let key = sym.orbit_key(self.order[v], &classes);
            let next = members.len();
            let id = *by_key.entry(key).or_insert(next);
            if id == next {
                members.push(Vec::new());
            }
            members[id].push(v);
            orbit_of.insert(v, id);
        }
        Some((orbit_of, members))
    }

    /// Greedy sequential coloring of `p`; returns the branching candidates in
    /// ascending color order with their colors. Vertices whose color cannot lift the
    /// current clique above the incumbent are left out.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let kmin = (self.best.len() + 1).saturating_sub(self.current.len()).max(1);
        let mut uncolored = p.clone();
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                uncolored.remove(v);
                q.remove(v);
                q.difference_with(&self.adj[v]);
                if k >= kmin {
                    verts.push(v);
                    colors.push(k);
                }
            }
        }
        (verts, colors)
    }
}

/// Exact clique number with a witness clique.
pub fn max_clique(g: &Graph, config: &OracleConfig) -> Result<SearchResult> {
    max_clique_with(g, config, None)
}

/// As [`max_clique`], using a verified symmetry of `g` to prune equivalent branches.
pub fn max_clique_with(g: &Graph, config: &OracleConfig, symmetry: Option<&Symmetry>) -> Result<SearchResult> {
    max_clique_bounded(g, config, symmetry, usize::MAX)
}

/// As [`max_clique_with`], given a proven upper bound `upper` on `ω(g)`: the search
/// stops as soon as it holds a clique of that size. The result is exact whenever
/// `upper` really is an upper bound.
pub fn max_clique_bounded(
    g: &Graph,
    config: &OracleConfig,
    symmetry: Option<&Symmetry>,
    upper: usize,
) -> Result<SearchResult> {
    config.check_size(g)?;
    let search = CliqueSearch::new(g, config.timeout)
        .with_symmetry(symmetry.cloned())
        .with_upper_bound(upper);
    let all = search.all_vertices();
    let (witness, nodes_explored, elapsed) = search.run(all)?;
    debug_assert!(g.is_clique(&witness));
    if !g.is_clique(&witness) {
        return Err(Error::domain("internal: clique witness failed verification"));
    }
    Ok(SearchResult {
        value: witness.len(),
        witness,
        nodes_explored,
        elapsed,
    })
}
