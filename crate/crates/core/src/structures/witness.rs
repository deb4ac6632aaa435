//! Constructive automorphism and homomorphism witnesses.

use super::construct::Builder;
use super::graph::{Graph, Label};
use super::word::{Subset, Word};
use crate::error::{Error, Result};

/// True iff `map` is a bijection on the vertices of `g` that preserves adjacency and
/// non-adjacency.
pub fn verify_automorphism(g: &Graph, map: &[usize]) -> bool {
    let n = g.vertex_count();
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(map[u], map[v])))
}

/// Checks a word map `f` as an automorphism of `H_q(n, d)` directly on the distance
/// predicate, without building the graph.
pub fn verify_word_automorphism(q: u32, n: u32, d: u32, f: impl Fn(&Word) -> Word) -> bool {
    let words: Vec<Word> = Word::all(q as u8, n as usize).collect();
    let images: Vec<Word> = words.iter().map(&f).collect();
    let mut seen = vec![false; words.len()];
    for img in &images {
        if img.len() != n as usize || img.q() as u32 != q || seen[img.index()] {
            return false;
        }
        seen[img.index()] = true;
    }
    let d = d as usize;
    (0..words.len()).all(|i| {
        (i + 1..words.len()).all(|j| {
            (words[i].distance(&words[j]) >= d) == (images[i].distance(&images[j]) >= d)
        })
    })
}

/// The translation `x ↦ x + v − u` taking `u` to `v`, checked as an automorphism of
/// `H_q(n, d)`.
pub fn verify_translation_automorphism(q: u32, n: u32, d: u32, u: &Word, v: &Word) -> bool {
    let shift = v.sub(u);
    shift.len() == n as usize
        && u.add(&shift) == *v
        && verify_word_automorphism(q, n, d, |x| x.add(&shift))
}

/// A permutation of `[n]` (1-based, `perm[i-1]` is the image of `i`) that maps the
/// set `p` onto the set `q`. Both sets must have the same size.
pub fn permutation_taking(p: &Subset, q: &Subset) -> Result<Vec<usize>> {
    let n = p.ground();
    if q.ground() != n || p.len() != q.len() {
        return Err(Error::domain("subsets must share ground set and size"));
    }
    let outside = |s: &Subset| (1..=n).filter(|e| !s.contains(*e)).collect::<Vec<_>>();
    let mut perm = vec![0; n];
    for (&a, &b) in p.elems().iter().zip(q.elems()) {
        perm[a - 1] = b;
    }
    for (a, b) in outside(p).into_iter().zip(outside(q)) {
        perm[a - 1] = b;
    }
    Ok(perm)
}

/// Vertex map induced on a subset-labelled graph by a permutation of the ground set.
pub fn subset_permutation_map(g: &Graph, perm: &[usize]) -> Option<Vec<usize>> {
    let labels = g.labels()?;
    labels
        .iter()
        .map(|l| match l {
            Label::Subset(s) => {
                let img = Subset::new(s.ground(), s.elems().iter().map(|&e| perm[e - 1]).collect()).ok()?;
                g.find_label(&Label::Subset(img))
            }
            Label::Word(_) => None,
        })
        .collect()
}

/// Vertex map between two graphs together with the claim that it is a homomorphism.
#[derive(Clone, Debug)]
pub struct HomWitness<'a> {
    pub source: &'a Graph,
    pub target: &'a Graph,
    pub map: Vec<usize>,
}

impl<'a> HomWitness<'a> {
    pub fn new(source: &'a Graph, target: &'a Graph, map: Vec<usize>) -> Self {
        HomWitness { source, target, map }
    }

    /// Maps every source vertex to the target vertex carrying `f(label)`.
    pub fn from_label_map(
        source: &'a Graph,
        target: &'a Graph,
        f: impl Fn(&Label) -> Label,
    ) -> Result<Self> {
        let labels = source
            .labels()
            .ok_or_else(|| Error::domain("source graph has no labels"))?;
        let map = labels
            .iter()
            .map(|l| {
                let img = f(l);
                target
                    .find_label(&img)
                    .ok_or_else(|| Error::domain(format!("image {img} of {l} is not a target vertex")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomWitness { source, target, map })
    }
}

/// True iff every edge of the source maps onto an edge of the target.
pub fn verify_homomorphism(w: &HomWitness<'_>) -> bool {
    let n = w.target.vertex_count();
    w.map.len() == w.source.vertex_count()
        && w.map.iter().all(|&m| m < n)
        && w.source.edges().all(|(x, y)| w.target.has_edge(w.map[x], w.map[y]))
}

/// Maps each subset label to its characteristic binary word.
pub fn subset_to_word(l: &Label) -> Label {
    Label::Word(l.to_word())
}

/// Deletes the last `k` coordinates of a word label.
pub fn delete_last(k: usize) -> impl Fn(&Label) -> Label {
    move |l| {
        let w = l.to_word();
        Label::Word(w.truncated(w.len() - k))
    }
}

/// `P ↦ P ∪ {min [n] \ P}`: a `(w-1)`-subset grows to a `w`-subset.
pub fn add_smallest_missing(l: &Label) -> Label {
    match l {
        Label::Subset(s) => {
            let extra = (1..=s.ground()).find(|e| !s.contains(*e)).expect("proper subset");
            let mut elems = s.elems().to_vec();
            elems.push(extra);
            Label::Subset(Subset::new(s.ground(), elems).expect("inside ground set"))
        }
        other => other.clone(),
    }
}

/// `X ↦ X \ {max X}` on subsets of `[n+1]`, landing in subsets of `[n]`.
pub fn drop_largest(l: &Label) -> Label {
    match l {
        Label::Subset(s) => {
            let mut elems = s.elems().to_vec();
            elems.pop();
            Label::Subset(Subset::new(s.ground() - 1, elems).expect("max removed"))
        }
        other => other.clone(),
    }
}

/// The deletion homomorphism `H_q(n, d) → H_q(n-d+1, 1)` (a complete graph on
/// `q^{n-d+1}` vertices) that forgets the last `d − 1` coordinates. Returns both graphs
/// and the vertex map.
pub fn deletion_homomorphism(q: u32, n: u32, d: u32, builder: &Builder) -> Result<(Graph, Graph, Vec<usize>)> {
    let source = builder.hamming(q, n, d)?;
    let target = builder.hamming(q, n - d + 1, 1)?;
    let map = HomWitness::from_label_map(&source, &target, delete_last((d - 1) as usize))?.map;
    Ok((source, target, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::construct::{constant_weight_graph, hamming_graph};

    #[test]
    fn translations_are_automorphisms() {
        let w = |q, s| Word::parse(q, s).unwrap();
        assert!(verify_translation_automorphism(2, 3, 2, &w(2, "000"), &w(2, "101")));
        assert!(verify_translation_automorphism(3, 2, 2, &w(3, "01"), &w(3, "22")));
        for u in Word::all(3, 3) {
            let v = Word::from_index(3, 3, (u.index() * 7 + 5) % 27);
            assert!(verify_translation_automorphism(3, 3, 2, &u, &v));
        }
    }

    #[test]
    fn forcing_a_coordinate_is_not_an_automorphism() {
        assert!(!verify_word_automorphism(2, 4, 2, |x| x.clone().with_symbol(0, 0)));
        let g = hamming_graph(2, 4, 2).unwrap();
        let map: Vec<usize> = (0..16).map(|i| i & 0b0111).collect();
        assert!(!verify_automorphism(&g, &map));
        let identity: Vec<usize> = (0..16).collect();
        assert!(verify_automorphism(&g, &identity));
    }

    #[test]
    fn constant_weight_graph_is_vertex_transitive() {
        for (n, d, w) in [(5, 4, 2), (6, 4, 3), (7, 4, 3), (6, 2, 2)] {
            let g = constant_weight_graph(n, d, w).unwrap();
            let labels = g.labels().unwrap();
            for p in 0..g.vertex_count() {
                for q in [0, g.vertex_count() / 2, g.vertex_count() - 1] {
                    let (Label::Subset(a), Label::Subset(b)) = (&labels[p], &labels[q]) else {
                        unreachable!()
                    };
                    let perm = permutation_taking(a, b).unwrap();
                    let map = subset_permutation_map(&g, &perm).unwrap();
                    assert_eq!(map[p], q);
                    assert!(verify_automorphism(&g, &map));
                }
            }
        }
    }

    #[test]
    fn inclusion_of_constant_weight_complement() {
        let x = constant_weight_graph(8, 4, 3).unwrap().complement();
        let y = hamming_graph(2, 8, 4).unwrap().complement();
        let w = HomWitness::from_label_map(&x, &y, subset_to_word).unwrap();
        assert!(verify_homomorphism(&w));
    }

    #[test]
    fn deletion_map_is_homomorphism() {
        for (q, n, d) in [(2, 4, 2), (3, 3, 2), (3, 3, 3), (4, 3, 2), (2, 5, 5)] {
            let (s, t, map) = deletion_homomorphism(q, n, d, &Builder::default()).unwrap();
            assert_eq!(t.edge_count(), t.vertex_count() * (t.vertex_count() - 1) / 2);
            assert!(verify_homomorphism(&HomWitness::new(&s, &t, map)));
        }
    }

    #[test]
    fn identity_is_homomorphism_and_bad_maps_are_not() {
        let g = hamming_graph(3, 2, 2).unwrap();
        let id: Vec<usize> = (0..9).collect();
        assert!(verify_homomorphism(&HomWitness::new(&g, &g, id)));
        assert!(!verify_homomorphism(&HomWitness::new(&g, &g, vec![0; 9])));
        assert!(!verify_homomorphism(&HomWitness::new(&g, &g, vec![9; 9])));
        assert!(!verify_homomorphism(&HomWitness::new(&g, &g, vec![0; 3])));
    }

    #[test]
    fn weight_shift_maps_are_homomorphisms() {
        // K(n, d+2, w-1) → K(n, d, w) by adding an element
        let x = constant_weight_graph(7, 6, 2).unwrap();
        let y = constant_weight_graph(7, 4, 3).unwrap();
        let w = HomWitness::from_label_map(&x, &y, add_smallest_missing).unwrap();
        assert!(verify_homomorphism(&w));
        // K(n+1, d+2, w+1) → K(n, d, w) by dropping the largest element
        let x = constant_weight_graph(8, 6, 4).unwrap();
        let w = HomWitness::from_label_map(&x, &y, drop_largest).unwrap();
        assert!(verify_homomorphism(&w));
    }
}
