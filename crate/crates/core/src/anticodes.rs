//! Closed-form sizes of the largest anticodes and intersecting families, with the
//! explicit families that attain them.
//!
//! `N_q(n, t)` is the largest set of `q`-ary words of length `n` that pairwise agree
//! in at least `t` positions; `M(n, w, t)` the largest family of `w`-subsets of `[n]`
//! that pairwise meet in at least `t` elements. Both are computed as a maximum over
//! the frozen-prefix families `F_r`:
//!
//! * words with at most `r` nonzero symbols among the first `t + 2r` coordinates,
//!   of size `q^{n-t-2r} Σ_{i≤r} C(t+2r, i)(q-1)^i`;
//! * `w`-sets with at least `t + r` elements inside `[t + 2r]`, of size
//!   `Σ_{j=t+r}^{min(w, t+2r)} C(t+2r, j) C(n-t-2r, w-j)`.
//!
//! `r = 0` gives the trivial family (a frozen prefix, or a `t`-star) and, for words,
//! `t + 2r = n` gives the Hamming ball of radius `r`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, binomial_i, pow, ExactInt};
use crate::structures::{Label, Subset, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnticodeValue {
    #[serde(serialize_with = "crate::serde_util::int")]
    pub value: ExactInt,
    /// Smallest `r` whose family attains the maximum.
    pub optimal_r: u32,
    pub witness_description: String,
}

/// Size of the word family `F_r` for `N_q(n, t)`; zero when `t + 2r > n`.
pub fn n_family_size(q: u32, n: u32, t: u32, r: u32) -> ExactInt {
    let len = t + 2 * r;
    if len > n {
        return ExactInt::from(0);
    }
    let ball: ExactInt = (0..=r as i64)
        .map(|i| binomial(len as u64, i) * pow(q as u64 - 1, i as u32))
        .sum();
    pow(q as u64, n - len) * ball
}

/// Size of the set family `F_r` for `M(n, w, t)`; zero when `t + 2r > n`.
pub fn m_family_size(n: u32, w: u32, t: u32, r: u32) -> ExactInt {
    let len = t + 2 * r;
    if len > n {
        return ExactInt::from(0);
    }
    let hi = w.min(len);
    (t + r..=hi)
        .map(|j| binomial(len as u64, j as i64) * binomial_i(n as i64 - len as i64, w as i64 - j as i64))
        .sum()
}

fn argmax(values: impl Iterator<Item = (u32, ExactInt)>) -> (u32, ExactInt) {
    let mut best: Option<(u32, ExactInt)> = None;
    for (r, v) in values {
        if best.as_ref().is_none_or(|(_, b)| v > *b) {
            best = Some((r, v));
        }
    }
    best.expect("at least r = 0 is feasible")
}

/// `N_q(n, t)` for `q >= 2`, `1 <= t <= n`.
pub fn n_value(q: u32, n: u32, t: u32) -> Result<AnticodeValue> {
    if q < 2 || t < 1 || t > n {
        return Err(Error::domain(format!(
            "N_q(n,t) needs q >= 2 and 1 <= t <= n, got q={q} n={n} t={t}"
        )));
    }
    let (r, value) = argmax((0..=(n - t) / 2).map(|r| (r, n_family_size(q, n, t, r))));
    let witness_description = if r == 0 {
        format!("T: words with the first {t} coordinates equal to 0")
    } else if t + 2 * r == n {
        format!("B: Hamming ball of radius {r}")
    } else {
        format!("F_{r}: at most {r} nonzero symbols among the first {} coordinates", t + 2 * r)
    };
    Ok(AnticodeValue {
        value,
        optimal_r: r,
        witness_description,
    })
}

/// `M(n, w, t)` for `1 <= t <= w <= n`.
pub fn m_value(n: u32, w: u32, t: u32) -> Result<AnticodeValue> {
    if t < 1 || t > w || w > n {
        return Err(Error::domain(format!(
            "M(n,w,t) needs 1 <= t <= w <= n, got ({n},{w},{t})"
        )));
    }
    let (r, value) = argmax((0..=(n - t) / 2).map(|r| (r, m_family_size(n, w, t, r))));
    let witness_description = if r == 0 {
        format!("star: all {w}-sets containing [{t}]")
    } else {
        format!("F_{r}: {w}-sets with at least {} elements in [{}]", t + r, t + 2 * r)
    };
    Ok(AnticodeValue {
        value,
        optimal_r: r,
        witness_description,
    })
}

/// The `r` prescribed for `q >= 3` by `⌊min{(n-t)/2, (t-1)/(q-2)}⌋`.
pub fn diametric_r(q: u32, n: u32, t: u32) -> Option<u32> {
    if q < 3 || t < 1 || t > n {
        return None;
    }
    Some(((n - t) / 2).min((t - 1) / (q - 2)))
}

/// The `r` prescribed for constant-weight codes by
/// `max{0, ⌈δ(w-δ)/(n-d) - 1⌉}` with `d = 2δ`. `None` when `n = d`
/// (the expression is undefined there) or the parameters are out of range.
pub fn constant_weight_r(n: u32, d: u32, w: u32) -> Option<u32> {
    if !d.is_multiple_of(2) || w > n || d >= n {
        return None;
    }
    let delta = (d / 2) as i64;
    let num = delta * (w as i64 - delta);
    let den = (n - d) as i64;
    // ⌈num/den − 1⌉ = ⌈(num − den)/den⌉
    let ceil = (num - den).div_euclid(den) + i64::from((num - den).rem_euclid(den) != 0);
    Some(ceil.max(0) as u32)
}

/// Explicit extremal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessFamily {
    /// Words whose first `t` coordinates are 0.
    TrivialT { q: u32, n: u32, t: u32 },
    /// Words of weight at most `r`.
    BallB { q: u32, n: u32, r: u32 },
    /// Words with at most `r` nonzero symbols among the first `t + 2r` coordinates.
    FrozenPrefixWords { q: u32, n: u32, t: u32, r: u32 },
    /// `w`-subsets of `[n]` with at least `t + r` elements in `[t + 2r]`.
    FrozenPrefixSets { n: u32, w: u32, t: u32, r: u32 },
}

pub fn witness_family(kind: WitnessFamily) -> Result<Vec<Label>> {
    let words = |q: u32, n: u32, keep: &dyn Fn(&Word) -> bool| -> Result<Vec<Label>> {
        if q < 2 || (q as u128).pow(n) > 1 << 20 {
            return Err(Error::domain("witness family too large to list"));
        }
        Ok(Word::all(q as u8, n as usize)
            .filter(|w| keep(w))
            .map(Label::Word)
            .collect())
    };
    match kind {
        WitnessFamily::TrivialT { q, n, t } => {
            if t > n {
                return Err(Error::domain("need t <= n"));
            }
            words(q, n, &|w| w.symbols()[..t as usize].iter().all(|&s| s == 0))
        }
        WitnessFamily::BallB { q, n, r } => words(q, n, &|w| w.weight() <= r as usize),
        WitnessFamily::FrozenPrefixWords { q, n, t, r } => {
            let len = (t + 2 * r) as usize;
            if len > n as usize {
                return Err(Error::domain("need t + 2r <= n"));
            }
            words(q, n, &|w| w.symbols()[..len].iter().filter(|&&s| s != 0).count() <= r as usize)
        }
        WitnessFamily::FrozenPrefixSets { n, w, t, r } => {
            let len = (t + 2 * r) as usize;
            if len > n as usize || w > n {
                return Err(Error::domain("need t + 2r <= n and w <= n"));
            }
            Ok(Subset::all(n as usize, w as usize)
                .into_iter()
                .filter(|s| s.elems().iter().filter(|&&e| e <= len).count() >= (t + r) as usize)
                .map(Label::Subset)
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::structures::{constant_weight_graph, hamming_graph};

    #[test]
    fn n_value_examples() {
        let v = n_value(2, 8, 5).unwrap();
        assert_eq!((v.value.clone(), v.optimal_r), (int(16), 1));
        // odd case 2·Σ_{i≤(n−t−1)/2} C(n−1, i)
        assert_eq!(v.value, int(2) * (binomial(7, 0) + binomial(7, 1)));
        let v = n_value(3, 7, 4).unwrap();
        assert_eq!((v.value, v.optimal_r), (int(39), 1));
        let v = n_value(5, 4, 3).unwrap();
        assert_eq!((v.value, v.optimal_r), (int(5), 0));
        assert!(n_value(2, 3, 0).is_err());
        assert!(n_value(1, 3, 1).is_err());
    }

    #[test]
    fn m_value_examples() {
        assert_eq!(m_value(4, 2, 1).unwrap().value, int(3));
        let v = m_value(7, 4, 3).unwrap();
        assert_eq!((v.value, v.optimal_r), (int(5), 1));
        for n in 1..=12 {
            for w in 1..=n {
                assert_eq!(m_value(n, w, w).unwrap().value, int(1));
            }
        }
        assert!(m_value(4, 5, 1).is_err());
        assert!(m_value(4, 2, 3).is_err());
    }

    #[test]
    fn binary_kleitman_cases() {
        for n in 1..=30u32 {
            for t in 1..=n {
                let v = n_value(2, n, t).unwrap().value;
                let expected: ExactInt = if (n - t) % 2 == 0 {
                    (0..=((n - t) / 2) as i64).map(|i| binomial(n as u64, i)).sum()
                } else {
                    int(2) * (0..=((n - t - 1) / 2) as i64).map(|i| binomial(n as u64 - 1, i)).sum::<ExactInt>()
                };
                assert_eq!(v, expected, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn large_alphabets_give_trivial_family() {
        for q in 2..=9u32 {
            for n in 1..=10 {
                for t in 1..=n {
                    if q > t {
                        let v = n_value(q, n, t).unwrap();
                        assert_eq!(v.value, pow(q as u64, n - t), "q={q} n={n} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn ekr_regime() {
        for n in 1..=24u32 {
            for w in 1..=n {
                for t in 1..=w {
                    if n >= (w - t + 1) * (t + 1) {
                        assert_eq!(
                            m_value(n, w, t).unwrap().value,
                            binomial((n - t) as u64, (w - t) as i64),
                            "n={n} w={w} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monotonicity_of_n() {
        for q in 2..=4u32 {
            for n in 1..=12u32 {
                for t in 1..=n {
                    let v = n_value(q, n, t).unwrap().value;
                    if t < n {
                        assert!(n_value(q, n, t + 1).unwrap().value <= v);
                    }
                    assert!(n_value(q, n + 1, t).unwrap().value >= v);
                }
            }
        }
    }

    #[test]
    fn witness_examples() {
        let t = witness_family(WitnessFamily::TrivialT { q: 3, n: 3, t: 2 }).unwrap();
        let shown: Vec<String> = t.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["000", "001", "002"]);
        assert_eq!(witness_family(WitnessFamily::BallB { q: 2, n: 5, r: 1 }).unwrap().len(), 6);
        let f = witness_family(WitnessFamily::FrozenPrefixSets { n: 7, w: 4, t: 3, r: 1 }).unwrap();
        let shown: Vec<String> = f.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["{1,2,3,4}", "{1,2,3,5}", "{1,2,4,5}", "{1,3,4,5}", "{2,3,4,5}"]);
        for (i, a) in f.iter().enumerate() {
            for b in &f[i + 1..] {
                if let (Label::Subset(x), Label::Subset(y)) = (a, b) {
                    assert!(x.intersection_size(y) >= 3);
                }
            }
        }
    }

    #[test]
    fn witnesses_are_independent_and_sized() {
        for (q, n) in [(2u32, 6u32), (2, 7), (3, 4), (4, 3)] {
            for t in 1..=n {
                let h = hamming_graph(q, n, n - t + 1).unwrap();
                for r in 0..=(n - t) / 2 {
                    let fam = witness_family(WitnessFamily::FrozenPrefixWords { q, n, t, r }).unwrap();
                    assert_eq!(ExactInt::from(fam.len()), n_family_size(q, n, t, r));
                    let idx: Vec<usize> = fam.iter().map(|l| h.find_label(l).unwrap()).collect();
                    assert!(h.is_independent(&idx));
                }
                let best = n_value(q, n, t).unwrap();
                let fam = witness_family(WitnessFamily::FrozenPrefixWords { q, n, t, r: best.optimal_r }).unwrap();
                assert_eq!(ExactInt::from(fam.len()), best.value);
            }
        }
        for n in 2..=8u32 {
            for w in 1..=n {
                for t in 1..=w {
                    let k = constant_weight_graph(n, 2 * (w - t + 1), w).unwrap();
                    let best = m_value(n, w, t).unwrap();
                    let fam = witness_family(WitnessFamily::FrozenPrefixSets { n, w, t, r: best.optimal_r }).unwrap();
                    assert_eq!(ExactInt::from(fam.len()), best.value);
                    let idx: Vec<usize> = fam.iter().map(|l| k.find_label(l).unwrap()).collect();
                    assert!(k.is_independent(&idx), "n={n} w={w} t={t}");
                }
            }
        }
    }

    #[test]
    fn stated_r_formulas() {
        assert_eq!(diametric_r(3, 4, 2), Some(1));
        assert_eq!(diametric_r(2, 4, 2), None);
        assert_eq!(diametric_r(5, 4, 3), Some(0));
        // n=7, d=4, w=4: δ=2, 2·2/3 − 1 → ⌈1/3⌉ = 1
        assert_eq!(constant_weight_r(7, 4, 4), Some(1));
        assert_eq!(constant_weight_r(8, 4, 3), Some(0));
        assert_eq!(constant_weight_r(4, 4, 2), None);
    }
}
