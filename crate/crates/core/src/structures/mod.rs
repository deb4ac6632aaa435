//! Words, parameter records, graphs, the code-family graph builders and their
//! symmetry witnesses.

pub mod bitset;
pub mod construct;
pub mod dimacs;
pub mod graph;
pub mod params;
pub mod witness;
pub mod word;

pub use bitset::BitSet;
pub use construct::{
    constant_weight_graph, doubly_graph, hamming_connection_set, hamming_graph, Builder,
    DEFAULT_VERTEX_CAP,
};
pub use dimacs::{label_sidecar, parse_dimacs, to_dimacs};
pub use graph::{Graph, Label};
pub use params::ParamKey;
pub use witness::{
    verify_automorphism, verify_homomorphism, verify_translation_automorphism, HomWitness,
};
pub use word::{Subset, Word};
