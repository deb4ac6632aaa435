use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A length-`n` sequence over the alphabet `{0, .., q-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    q: u8,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(q: u8, symbols: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::domain(format!("alphabet size {q} < 2")));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::domain(format!("symbol {s} outside alphabet of size {q}")));
        }
        Ok(Word { q, symbols })
    }

    pub fn zero(q: u8, n: usize) -> Self {
        Word {
            q,
            symbols: vec![0; n],
        }
    }

    /// Parses a digit string such as `"0120"`.
    pub fn parse(q: u8, s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(36)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::domain(format!("bad symbol {c:?} in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(q, symbols)
    }

    /// The word at position `index` in lexicographic order (first symbol most significant).
    pub fn from_index(q: u8, n: usize, mut index: usize) -> Self {
        let mut symbols = vec![0u8; n];
        for slot in symbols.iter_mut().rev() {
            *slot = (index % q as usize) as u8;
            index /= q as usize;
        }
        Word { q, symbols }
    }

    pub fn index(&self) -> usize {
        self.symbols
            .iter()
            .fold(0usize, |acc, &s| acc * self.q as usize + s as usize)
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    pub fn distance(&self, other: &Word) -> usize {
        self.symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn add(&self, other: &Word) -> Word {
        self.zip_with(other, |a, b| (a + b) % self.q)
    }

    pub fn sub(&self, other: &Word) -> Word {
        self.zip_with(other, |a, b| (a + self.q - b) % self.q)
    }

    pub fn neg(&self) -> Word {
        Word {
            q: self.q,
            symbols: self.symbols.iter().map(|&s| (self.q - s) % self.q).collect(),
        }
    }

    fn zip_with(&self, other: &Word, f: impl Fn(u8, u8) -> u8) -> Word {
        debug_assert_eq!(self.q, other.q);
        debug_assert_eq!(self.len(), other.len());
        Word {
            q: self.q,
            symbols: self
                .symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn with_symbol(mut self, pos: usize, s: u8) -> Word {
        self.symbols[pos] = s;
        self
    }

    pub fn truncated(&self, len: usize) -> Word {
        Word {
            q: self.q,
            symbols: self.symbols[..len].to_vec(),
        }
    }

    /// All `q^n` words in lexicographic order.
    pub fn all(q: u8, n: usize) -> impl Iterator<Item = Word> {
        let total = (q as usize).pow(n as u32);
        (0..total).map(move |i| Word::from_index(q, n, i))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 36 {
            for &s in &self.symbols {
                write!(f, "{}", char::from_digit(s as u32, 36).unwrap())?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// A `w`-subset of `[n] = {1, .., n}`, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset {
    n: usize,
    elems: Vec<usize>,
}

impl Subset {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&e| e == 0 || e > n) {
            return Err(Error::domain(format!("subset {elems:?} not inside [{n}]")));
        }
        Ok(Subset { n, elems })
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn intersection_size(&self, other: &Subset) -> usize {
        self.elems.iter().filter(|e| other.contains(**e)).count()
    }

    /// The characteristic binary word (`u(i) = 1` iff `i` is in the set).
    pub fn to_word(&self) -> Word {
        let mut symbols = vec![0u8; self.n];
        for &e in &self.elems {
            symbols[e - 1] = 1;
        }
        Word { q: 2, symbols }
    }

    pub fn from_word(w: &Word) -> Subset {
        Subset {
            n: w.len(),
            elems: w
                .symbols()
                .iter()
                .enumerate()
                .filter(|(_, &s)| s != 0)
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// All `k`-subsets of `[n]` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<Subset> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut cur: Vec<usize> = (1..=k).collect();
        loop {
            out.push(Subset {
                n,
                elems: cur.clone(),
            });
            // advance to the next combination
            let mut i = k;
            while i > 0 && cur[i - 1] == n - k + i {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            cur[i - 1] += 1;
            for j in i..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip_is_lexicographic() {
        let words: Vec<Word> = Word::all(3, 2).collect();
        assert_eq!(words.len(), 9);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        for (i, w) in words.iter().enumerate() {
            assert_eq!(w.index(), i);
        }
        assert_eq!(Word::from_index(2, 3, 5).to_string(), "101");
    }

    #[test]
    fn distance_is_weight_of_difference() {
        for x in Word::all(3, 3) {
            for y in Word::all(3, 3) {
                assert_eq!(x.distance(&y), x.sub(&y).weight());
                assert_eq!(x.sub(&y).add(&y), x);
            }
        }
    }

    #[test]
    fn rejects_bad_symbols() {
        assert!(Word::new(2, vec![0, 2]).is_err());
        assert!(Word::parse(3, "012").is_ok());
        assert!(Word::parse(3, "013").is_err());
        assert!(Subset::new(4, vec![0, 2]).is_err());
    }

    #[test]
    fn subsets_enumerate_lexicographically() {
        let s = Subset::all(4, 2);
        let shown: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"]);
        assert_eq!(Subset::all(5, 0).len(), 1);
        assert_eq!(Subset::all(3, 4).len(), 0);
        assert_eq!(Subset::all(9, 4).len(), 126);
        let w = s[1].to_word();
        assert_eq!(w.to_string(), "1010");
        assert_eq!(Subset::from_word(&w), s[1]);
    }
}
