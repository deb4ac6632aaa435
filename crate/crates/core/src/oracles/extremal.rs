//! Exact sizes of the extremal families behind the bounds, by search.
//!
//! * `N_q(n, t)`: words pairwise agreeing in at least `t` positions, i.e.
//!   independent sets of `H_q(n, n - t + 1)`.
//! * `M(n, w, t)`: `w`-subsets of `[n]` pairwise meeting in at least `t` elements,
//!   i.e. independent sets of `K(n, 2(w - t + 1), w)`.
//! * `T`, `T'`: doubly-constant-weight codes, i.e. cliques of the doubly graphs.
//!
//! `N_q(n, t)` has a second route through down-set compression. Replacing a nonzero
//! coordinate by 0 whenever the result is not already present never increases the
//! diameter of a word family, so some largest anticode is closed under zeroing
//! coordinates. For such a family the diameter is the largest `|supp x ∪ supp y|`,
//! which makes `N_q(n, t)` the clique number of the support-union graph with
//! threshold `n - t`. That graph colors tightly, so this route stays fast where the
//! direct search on `H_q(n, d)` does not.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structures::{Builder, Graph, Label, ParamKey, Word};

use super::symmetry::Symmetry;
use super::{max_clique_bounded, max_clique_with, OracleConfig, SearchResult};

/// Largest vertex count for which extremal families are searched (2^20 candidate pairs).
pub const EXTREMAL_VERTEX_LIMIT: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtremalKind {
    N { q: u32, n: u32, t: u32 },
    M { n: u32, w: u32, t: u32 },
    T { w1: u32, n1: u32, w2: u32, n2: u32, d: u32 },
    TPrime { w1: u32, n1: u32, w2: u32, n2: u32, d: u32 },
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtremalKind::N { q, n, t } => write!(f, "N_{q}({n},{t})"),
            ExtremalKind::M { n, w, t } => write!(f, "M({n},{w},{t})"),
            ExtremalKind::T { w1, n1, w2, n2, d } => write!(f, "T({w1},{n1},{w2},{n2},{d})"),
            ExtremalKind::TPrime { w1, n1, w2, n2, d } => write!(f, "T'({w1},{n1},{w2},{n2},{d})"),
        }
    }
}

/// Which search establishes `N_q(n, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnticodeRoute {
    /// Independence number of `H_q(n, n - t + 1)` with coordinate and translation symmetry.
    HammingGraph,
    /// Clique number of the support-union graph (down-set compression).
    DownSet,
}

fn builder() -> Builder {
    Builder::with_cap(EXTREMAL_VERTEX_LIMIT)
}

/// Support-union graph on `Σ^n`: `x ~ y` iff `|supp x ∪ supp y| <= diameter`.
pub fn support_union_graph(q: u32, n: u32, diameter: u32) -> Result<Graph> {
    let count = (q as u128).checked_pow(n).unwrap_or(u128::MAX);
    if count > EXTREMAL_VERTEX_LIMIT as u128 {
        return Err(Error::VertexCap {
            requested: count,
            cap: EXTREMAL_VERTEX_LIMIT,
        });
    }
    let words: Vec<Word> = Word::all(q as u8, n as usize).collect();
    let union = |a: &Word, b: &Word| {
        a.symbols()
            .iter()
            .zip(b.symbols())
            .filter(|(x, y)| **x != 0 || **y != 0)
            .count()
    };
    let g = Graph::from_fn(words.len(), |u, v| union(&words[u], &words[v]) <= diameter as usize);
    g.with_labels(words.into_iter().map(Label::Word).collect())
}

/// Exact `N_q(n, t)` along the chosen route. The witness is always re-checked as an
/// anticode (pairwise agreement at least `t`) and reported as vertex indices of
/// `H_q(n, n - t + 1)`.
pub fn anticode_number(q: u32, n: u32, t: u32, route: AnticodeRoute, config: &OracleConfig) -> Result<SearchResult> {
    if q < 2 || t < 1 || t > n {
        return Err(Error::domain(format!("N_q(n,t) needs q >= 2 and 1 <= t <= n, got q={q} n={n} t={t}")));
    }
    let result = match route {
        AnticodeRoute::HammingGraph => {
            let g = builder().hamming(q, n, n - t + 1)?.complement();
            let sym = Symmetry::hamming(&g)?;
            max_clique_with(&g, config, Some(&sym))?
        }
        AnticodeRoute::DownSet => {
            let g = support_union_graph(q, n, n - t)?;
            let sym = Symmetry::coordinate_permutations(&g)?;
            max_clique_with(&g, config, Some(&sym))?
        }
    };
    // both graphs list words in the same lexicographic order
    let words: Vec<Word> = result
        .witness
        .iter()
        .map(|&i| Word::from_index(q as u8, n as usize, i))
        .collect();
    let agree = |a: &Word, b: &Word| n as usize - a.distance(b);
    for (i, a) in words.iter().enumerate() {
        if words[i + 1..].iter().any(|b| agree(a, b) < t as usize) {
            return Err(Error::domain("internal: anticode witness failed verification"));
        }
    }
    Ok(result)
}

/// Exact size of an extremal family by graph search.
pub fn exhaustive_extremal_family(kind: ExtremalKind, config: &OracleConfig) -> Result<SearchResult> {
    match kind {
        ExtremalKind::N { q, n, t } => anticode_number(q, n, t, AnticodeRoute::DownSet, config),
        ExtremalKind::M { n, w, t } => {
            if t < 1 || t > w || w > n {
                return Err(Error::domain(format!("M(n,w,t) needs 1 <= t <= w <= n, got ({n},{w},{t})")));
            }
            let g = builder().constant_weight(n, 2 * (w - t + 1), w)?.complement();
            let sym = Symmetry::coordinate_permutations(&g)?;
            let r = max_clique_with(&g, config, Some(&sym))?;
            let labels = g.labels().expect("labelled");
            let ok = r.witness.iter().enumerate().all(|(i, &a)| {
                r.witness[i + 1..].iter().all(|&b| match (&labels[a], &labels[b]) {
                    (Label::Subset(x), Label::Subset(y)) => x.intersection_size(y) >= t as usize,
                    _ => false,
                })
            });
            if !ok {
                return Err(Error::domain("internal: intersecting family witness failed verification"));
            }
            Ok(r)
        }
        ExtremalKind::T { w1, n1, w2, n2, d } | ExtremalKind::TPrime { w1, n1, w2, n2, d } => {
            let bounded = matches!(kind, ExtremalKind::TPrime { .. });
            let g = builder().doubly(w1, n1, w2, n2, d, bounded)?;
            if g.vertex_count() == 0 {
                return Ok(SearchResult {
                    value: 0,
                    witness: vec![],
                    nodes_explored: 0,
                    elapsed: Default::default(),
                });
            }
            let sym = Symmetry::two_blocks(&g, n1 as usize)?;
            max_clique_with(&g, config, Some(&sym))
        }
    }
}

/// Exact `A_q(n, d)`, `A(n, d, w)`, `T` or `T'` by clique search, using the
/// coordinate symmetry each graph is known to have. For `A_q(n, d)` the exact value
/// one length down caps the search.
pub fn exact_code_size(key: ParamKey, config: &OracleConfig) -> Result<SearchResult> {
    key.validate()?;
    match key {
        ParamKey::Unrestricted { q, n, d } => {
            let g = builder().hamming(q, n, d)?;
            let sym = Symmetry::hamming(&g)?;
            // the words with a fixed first symbol form a code of length n - 1,
            // so A_q(n, d) <= q A_q(n - 1, d)
            let upper = if d < n {
                match exact_code_size(ParamKey::Unrestricted { q, n: n - 1, d }, config) {
                    Ok(r) => q as usize * r.value,
                    Err(Error::Timeout(_)) => usize::MAX,
                    Err(e) => return Err(e),
                }
            } else {
                usize::MAX
            };
            max_clique_bounded(&g, config, Some(&sym), upper)
        }
        ParamKey::ConstantWeight { n, d, w } => {
            let g = builder().constant_weight(n, d, w)?;
            let sym = Symmetry::coordinate_permutations(&g)?;
            max_clique_with(&g, config, Some(&sym))
        }
        ParamKey::DoublyConstant { w1, n1, w2, n2, d } => {
            exhaustive_extremal_family(ExtremalKind::T { w1, n1, w2, n2, d }, config)
        }
        ParamKey::DoublyBounded { w1, n1, w2, n2, d } => {
            exhaustive_extremal_family(ExtremalKind::TPrime { w1, n1, w2, n2, d }, config)
        }
    }
}
