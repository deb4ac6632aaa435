use std::fmt;

use super::bitset::BitSet;
use super::word::{Subset, Word};
use crate::error::{Error, Result};

/// Vertex label carried by graphs built from the code families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Word(Word),
    Subset(Subset),
}

impl Label {
    /// Binary or `q`-ary word view; subsets map to their characteristic vector.
    pub fn to_word(&self) -> Word {
        match self {
            Label::Word(w) => w.clone(),
            Label::Subset(s) => s.to_word(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Word(w) => w.fmt(f),
            Label::Subset(s) => s.fmt(f),
        }
    }
}

/// Immutable simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(n); n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u)
    }

    /// Builds the graph whose edges are the unordered pairs `u != v` with `adjacent(u, v)`.
    /// The predicate is evaluated once per pair with `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    pub(crate) fn from_labels(labels: Vec<Label>, adjacent: impl Fn(&Label, &Label) -> bool) -> Self {
        let mut g = Self::from_fn(labels.len(), |u, v| adjacent(&labels[u], &labels[v]));
        g.labels = Some(labels);
        g
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Label> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn find_label(&self, label: &Label) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Same vertices and labels, complementary edge set.
    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.complement();
                c.remove(v);
                c
            })
            .collect();
        Graph {
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Self::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]));
        g.labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        all_pairs(vertices, |u, v| u != v && self.has_edge(u, v))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        all_pairs(vertices, |u, v| u != v && !self.has_edge(u, v))
    }

    /// True when `colors` assigns every vertex a color and no edge is monochromatic.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.vertex_count() && self.edges().all(|(u, v)| colors[u] != colors[v])
    }
}

fn all_pairs(vs: &[usize], ok: impl Fn(usize, usize) -> bool) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| ok(u, v)))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .field("labelled", &self.labels.is_some())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        let c = k4.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.complement(), k4);
    }

    #[test]
    fn edges_and_checks() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert!(c5.is_clique(&[0, 1]));
        assert!(!c5.is_clique(&[0, 1, 2]));
        assert!(c5.is_independent(&[0, 2]));
        assert!(c5.is_proper_coloring(&[0, 1, 0, 1, 2]));
        assert!(!c5.is_proper_coloring(&[0, 1, 0, 1, 0]));
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn induced_keeps_adjacency() {
        let c5 = Graph::cycle(5);
        let p = c5.induced(&[0, 1, 2]);
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(0, 1) && p.has_edge(1, 2) && !p.has_edge(0, 2));
    }
}
