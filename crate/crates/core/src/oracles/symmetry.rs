//! Verified coordinate symmetry for word-labelled graphs.
//!
//! The group is generated by transpositions of coordinates inside each block and,
//! optionally, unit translations `x ↦ x + e_i (mod q)`. Every generator is checked as
//! an automorphism before the group is used. The clique search then
//!
//! * anchors the search at one vertex when the generators act transitively, and
//! * branches on one representative per orbit of the pointwise stabilizer of the
//!   current clique, which for block-symmetric groups is determined by how each
//!   candidate's symbols are distributed over the classes of coordinates that the
//!   clique cannot tell apart.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::structures::witness::verify_automorphism;
use crate::structures::{Graph, Word};

#[derive(Clone, Debug)]
pub struct Symmetry {
    words: Vec<Word>,
    blocks: Vec<Vec<usize>>,
    transitive: bool,
}

impl Symmetry {
    /// Verifies that permuting coordinates within each block (and, if `translations`,
    /// adding unit vectors) maps `g` onto itself.
    pub fn verified(g: &Graph, blocks: Vec<Vec<usize>>, translations: bool) -> Result<Self> {
        let labels = g
            .labels()
            .ok_or_else(|| Error::domain("symmetry needs a labelled graph"))?;
        let words: Vec<Word> = labels.iter().map(|l| l.to_word()).collect();
        let n = words.first().map_or(0, Word::len);
        if words.iter().any(|w| w.len() != n) {
            return Err(Error::domain("labels have different lengths"));
        }
        let mut seen = vec![false; n];
        for &c in blocks.iter().flatten() {
            if c >= n || seen[c] {
                return Err(Error::domain("coordinate blocks must be disjoint and in range"));
            }
            seen[c] = true;
        }
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let image_map = |f: &dyn Fn(&Word) -> Word| -> Option<Vec<usize>> {
            words.iter().map(|w| index.get(&f(w)).copied()).collect()
        };

        let mut generators = Vec::new();
        for block in &blocks {
            for pair in block.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let swap = |w: &Word| {
                    let mut s = w.symbols().to_vec();
                    s.swap(a, b);
                    Word::new(w.q(), s).expect("same symbols")
                };
                generators.push(image_map(&swap));
            }
        }
        if translations {
            for i in 0..n {
                let shift = |w: &Word| {
                    let mut s = w.symbols().to_vec();
                    s[i] = (s[i] + 1) % w.q();
                    Word::new(w.q(), s).expect("reduced mod q")
                };
                generators.push(image_map(&shift));
            }
        }
        let generators = generators
            .into_iter()
            .map(|m| m.filter(|m| verify_automorphism(g, m)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::domain("claimed symmetry is not an automorphism"))?;

        let transitive = orbit_of_first(g.vertex_count(), &generators) == g.vertex_count();
        Ok(Symmetry {
            words,
            blocks,
            transitive,
        })
    }

    /// Full coordinate permutations plus translations, as for `H_q(n, d)`.
    pub fn hamming(g: &Graph) -> Result<Self> {
        let n = label_len(g)?;
        Self::verified(g, vec![(0..n).collect()], true)
    }

    /// Full coordinate permutations, as for `K(n, 2δ, w)`.
    pub fn coordinate_permutations(g: &Graph) -> Result<Self> {
        let n = label_len(g)?;
        Self::verified(g, vec![(0..n).collect()], false)
    }

    /// Permutations inside the first `n1` and the last `n - n1` coordinates.
    pub fn two_blocks(g: &Graph, n1: usize) -> Result<Self> {
        let n = label_len(g)?;
        Self::verified(g, vec![(0..n1).collect(), (n1..n).collect()], false)
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive
    }

    /// Classes of coordinates on which every word of `clique` is constant per block
    /// position pattern. Returns `None` once every class is a singleton.
    pub(crate) fn coordinate_classes(&self, clique: &[usize]) -> Option<Vec<Vec<usize>>> {
        let mut classes = Vec::new();
        for block in &self.blocks {
            let mut by_column: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
            for &c in block {
                let column: Vec<u8> = clique.iter().map(|&v| self.words[v].symbols()[c]).collect();
                by_column.entry(column).or_default().push(c);
            }
            let mut parts: Vec<Vec<usize>> = by_column.into_values().collect();
            parts.sort();
            classes.extend(parts);
        }
        if classes.iter().all(|c| c.len() == 1) {
            None
        } else {
            Some(classes)
        }
    }

    /// Orbit key of vertex `v`: symbol counts per coordinate class.
    pub(crate) fn orbit_key(&self, v: usize, classes: &[Vec<usize>]) -> Vec<u16> {
        let w = self.words[v].symbols();
        let q = self.words[v].q() as usize;
        let mut key = vec![0u16; classes.len() * q];
        for (i, class) in classes.iter().enumerate() {
            for &c in class {
                key[i * q + w[c] as usize] += 1;
            }
        }
        key
    }
}

fn label_len(g: &Graph) -> Result<usize> {
    g.label(0)
        .map(|l| l.to_word().len())
        .ok_or_else(|| Error::domain("symmetry needs a labelled, non-empty graph"))
}

fn orbit_of_first(n: usize, generators: &[Vec<usize>]) -> usize {
    if n == 0 {
        return 0;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for g in generators {
            let u = g[v];
            if !seen[u] {
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{constant_weight_graph, doubly_graph, hamming_graph};

    #[test]
    fn hamming_graphs_are_certified_transitive() {
        for (q, n, d) in [(2, 4, 2), (3, 3, 2), (2, 8, 7)] {
            let g = hamming_graph(q, n, d).unwrap();
            assert!(Symmetry::hamming(&g).unwrap().is_transitive());
            assert!(Symmetry::hamming(&g.complement()).unwrap().is_transitive());
        }
    }

    #[test]
    fn family_symmetries() {
        let k = constant_weight_graph(7, 4, 3).unwrap();
        assert!(Symmetry::coordinate_permutations(&k).unwrap().is_transitive());
        let t = doubly_graph(1, 3, 2, 4, 2, false).unwrap();
        assert!(Symmetry::two_blocks(&t, 3).unwrap().is_transitive());
        let tb = doubly_graph(1, 3, 2, 4, 2, true).unwrap();
        assert!(!Symmetry::two_blocks(&tb, 3).unwrap().is_transitive());
        // a single block would mix the two halves and leave the vertex set
        assert!(Symmetry::coordinate_permutations(&t).is_err());
    }

    #[test]
    fn rejects_false_symmetry() {
        // a path 00 - 01 - 11 labelled so that swapping coordinates is not an automorphism
        let g = Graph::from_edges(4, [(0, 1), (1, 3)]).unwrap();
        let g = g
            .with_labels(Word::all(2, 2).map(crate::structures::Label::Word).collect())
            .unwrap();
        assert!(Symmetry::coordinate_permutations(&g).is_err());
        assert!(Symmetry::verified(&g, vec![vec![0, 0]], false).is_err());
    }

    #[test]
    fn stabilizer_classes_refine() {
        let g = hamming_graph(2, 4, 2).unwrap();
        let s = Symmetry::hamming(&g).unwrap();
        assert_eq!(s.coordinate_classes(&[0]).unwrap(), vec![vec![0, 1, 2, 3]]);
        // 0000 and 0011 split the coordinates into {0,1} and {2,3}
        assert_eq!(s.coordinate_classes(&[0, 3]).unwrap(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(s.orbit_key(5, &[vec![0, 1], vec![2, 3]]), vec![1, 1, 1, 1]);
        assert!(s.coordinate_classes(&[0, 3, 5]).is_none());
    }
}
