//! Exact ground truth: clique number, independence number, chromatic number and
//! the extremal family sizes they encode.
//!
//! Searches never return approximate answers. A search that exceeds its time budget
//! fails with [`Error::Timeout`], and every witness is re-verified against the graph
//! before it is returned.

pub mod clique;
pub mod coloring;
pub mod extremal;
pub mod symmetry;

use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structures::Graph;

pub use clique::{max_clique, max_clique_bounded, max_clique_with};
pub use coloring::{chromatic_number, chromatic_number_certified};
pub use extremal::{anticode_number, exact_code_size, exhaustive_extremal_family, AnticodeRoute, ExtremalKind};
pub use symmetry::Symmetry;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub timeout: Duration,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 1024,
            timeout: Duration::from_secs(300),
        }
    }
}

impl OracleConfig {
    pub(crate) fn check_size(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::VertexCap {
                requested: g.vertex_count() as u128,
                cap: self.max_vertices,
            });
        }
        Ok(())
    }
}

/// Outcome of an exact search. `witness` is a clique, an independent set or, for
/// colorings, the color of each vertex.
#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `α(g)`, computed as `ω` of the complement.
pub fn max_independent_set(g: &Graph, config: &OracleConfig) -> Result<SearchResult> {
    max_independent_set_with(g, config, None)
}

pub fn max_independent_set_with(
    g: &Graph,
    config: &OracleConfig,
    symmetry: Option<&Symmetry>,
) -> Result<SearchResult> {
    let r = max_clique_with(&g.complement(), config, symmetry)?;
    if !g.is_independent(&r.witness) {
        return Err(Error::domain("internal: independent set witness failed verification"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests;
