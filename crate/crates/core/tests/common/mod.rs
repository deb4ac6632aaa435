//! Test-side ground truth, written independently of the library's searches.
#![allow(dead_code)]

/// All `q`-ary words of length `n`, first coordinate most significant.
pub fn words(q: usize, n: usize) -> Vec<Vec<usize>> {
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut i| {
            let mut w = vec![0; n];
            for slot in w.iter_mut().rev() {
                *slot = i % q;
                i /= q;
            }
            w
        })
        .collect()
}

pub fn distance(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub type Adj = Vec<Vec<bool>>;

pub fn hamming_adj(q: usize, n: usize, d: usize) -> Adj {
    let ws = words(q, n);
    ws.iter().map(|a| ws.iter().map(|b| a != b && distance(a, b) >= d).collect()).collect()
}

pub fn complement(adj: &Adj) -> Adj {
    (0..adj.len())
        .map(|i| (0..adj.len()).map(|j| i != j && !adj[i][j]).collect())
        .collect()
}

/// Maximum clique by plain branch and bound with a greedy-coloring bound.
pub fn clique_number(adj: &Adj) -> usize {
    let all: Vec<usize> = (0..adj.len()).collect();
    let mut best = 0;
    expand(adj, 0, all, &mut best);
    best
}

/// Clique number of a vertex-transitive graph: some maximum clique contains vertex 0.
pub fn clique_number_transitive(adj: &Adj) -> usize {
    if adj.is_empty() {
        return 0;
    }
    let nbrs: Vec<usize> = (1..adj.len()).filter(|&v| adj[0][v]).collect();
    let mut best = 0;
    expand(adj, 1, nbrs, &mut best);
    best.max(1)
}

pub fn independence_number(adj: &Adj) -> usize {
    clique_number(&complement(adj))
}

fn expand(adj: &Adj, size: usize, cand: Vec<usize>, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // greedy coloring: classes of pairwise non-adjacent candidates
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &cand {
        match classes.iter_mut().find(|c| c.iter().all(|&u| !adj[u][v])) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order: Vec<(usize, usize)> = Vec::new();
    for (k, c) in classes.iter().enumerate() {
        for &v in c {
            order.push((v, k + 1));
        }
    }
    let mut remaining = cand;
    while let Some((v, color)) = order.pop() {
        if size + color <= *best {
            return;
        }
        let next: Vec<usize> = remaining.iter().copied().filter(|&u| u != v && adj[v][u]).collect();
        expand(adj, size + 1, next, best);
        remaining.retain(|&u| u != v);
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
