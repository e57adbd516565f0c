//! Slow, obviously-correct reference implementations shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

use kp3::enumerate::enumerate_free_graphs;
use kp3::lemmas::DecompositionWitness;
use kp3::Graph;
use rand::Rng;

/// Connected components, each sorted, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for (u, mark) in seen.iter_mut().enumerate() {
                if !*mark && g.has_edge(u, v) {
                    *mark = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Three vertices carry a P3 exactly when at least two of their three
/// pairs are edges.
pub fn spans_p3(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    [(a, b), (b, c), (a, c)]
        .iter()
        .filter(|&&(x, y)| g.has_edge(x, y))
        .count()
        >= 2
}

/// Maximum number of disjoint P3 copies, by memoised exhaustion over vertex
/// subsets of each component separately.
pub fn brute_max_packing(g: &Graph) -> usize {
    components(g).iter().map(|c| component_packing(g, c)).sum()
}

fn component_packing(g: &Graph, comp: &[usize]) -> usize {
    let m = comp.len();
    if m < 3 {
        return 0;
    }
    assert!(m <= 24, "oracle limited to components of at most 24 vertices");
    let mut triples = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if spans_p3(g, comp[a], comp[b], comp[c]) {
                    triples.push((a, (1u32 << a) | (1 << b) | (1 << c)));
                }
            }
        }
    }
    let mut memo = vec![u8::MAX; 1 << m];
    fn go(mask: u32, triples: &[(usize, u32)], memo: &mut [u8]) -> u8 {
        if mask.count_ones() < 3 {
            return 0;
        }
        if memo[mask as usize] != u8::MAX {
            return memo[mask as usize];
        }
        let low = mask.trailing_zeros() as usize;
        let mut best = go(mask & !(1 << low), triples, memo);
        for &(first, t) in triples {
            if first == low && t & mask == t {
                best = best.max(1 + go(mask & !t, triples, memo));
            }
        }
        memo[mask as usize] = best;
        best
    }
    go((1u32 << m) - 1, &triples, &mut memo) as usize
}

/// Every graph of order `n` up to isomorphism, straight from the library's
/// enumerator with a `k` too large to prune anything.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    enumerate_free_graphs(n, n / 3 + 1).unwrap().map(|e| e.graph).collect()
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// Smallest edge bitmask over all relabellings; equal exactly for
/// isomorphic graphs. Bit `i` is the `i`-th pair of [`pair_index`].
pub struct LabelledKeys {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// For each permutation, the image index of every pair.
    images: Vec<Vec<usize>>,
}

impl LabelledKeys {
    pub fn new(n: usize) -> Self {
        let pairs = pair_index(n);
        let position = |u: usize, v: usize| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            pairs.iter().position(|&p| p == (a, b)).unwrap()
        };
        let images = permutations(n)
            .iter()
            .map(|p| pairs.iter().map(|&(u, v)| position(p[u], p[v])).collect())
            .collect();
        LabelledKeys { n, pairs, images }
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn key(&self, mask: u32) -> u32 {
        self.images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap()
    }

    pub fn graph(&self, mask: u32) -> Graph {
        let edges: Vec<_> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(self.n, &edges).unwrap()
    }

    pub fn mask(&self, g: &Graph) -> u32 {
        self.pairs
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| g.has_edge(u, v))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }
}

/// Number of isomorphism classes of `n`-vertex graphs, by scanning every
/// labelled graph.
pub fn labelled_class_count(n: usize) -> u64 {
    let keys = LabelledKeys::new(n);
    let total = 1u32 << keys.pair_count();
    let mut seen = HashSet::new();
    for mask in 0..total {
        seen.insert(keys.key(mask));
    }
    seen.len() as u64
}

/// Most edges that can survive outside a `(k-1)·P3`, by trying every
/// vertex set of size `3(k-1)`.
pub fn brute_best_leftover_edges(g: &Graph, k: usize) -> Option<usize> {
    let n = g.order();
    let size = 3 * (k - 1);
    let mut best = None;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != size {
            continue;
        }
        let inside: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if brute_max_packing(&g.induced_subgraph(&inside).unwrap()) != k - 1 {
            continue;
        }
        let left = g.remove_vertices(&inside).unwrap().edge_count();
        best = Some(best.map_or(left, |b: usize| b.max(left)));
    }
    best
}

fn edges_between(g: &Graph, set: &[usize], t: [usize; 3]) -> usize {
    set.iter()
        .map(|&a| t.iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum()
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << items.len())
        .map(|m| {
            (0..items.len())
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| items[i])
                .collect()
        })
        .collect()
}

/// The `s = 0` statement read literally: every subset of at least three
/// leftover vertices sends at most its size in edges to each path, and two
/// leftover vertices touching the same path touch only its centre.
pub fn edgeless_statement(g: &Graph, w: &DecompositionWitness) -> bool {
    w.paths.iter().all(|t| {
        let tv = t.vertices();
        let subsets_ok = subsets(&w.isolated)
            .iter()
            .filter(|s| s.len() >= 3)
            .all(|s| edges_between(g, s, tv) <= s.len());
        let touching: Vec<usize> = w
            .isolated
            .iter()
            .copied()
            .filter(|&v| edges_between(g, &[v], tv) > 0)
            .collect();
        let centre_only = touching.len() < 2
            || touching
                .iter()
                .all(|&v| !g.has_edge(v, t.x) && !g.has_edge(v, t.z) && g.has_edge(v, t.y));
        subsets_ok && centre_only
    })
}

/// The `s = 1` statement read literally.
pub fn one_edge_statement(g: &Graph, w: &DecompositionWitness) -> bool {
    let (u, v) = w.leftover_edges[0];
    w.paths.iter().all(|t| {
        let tv = t.vertices();
        if edges_between(g, &[u, v], tv) <= 4 {
            w.isolated.iter().all(|&a| {
                w.isolated
                    .iter()
                    .filter(|&&b| b > a)
                    .all(|&b| edges_between(g, &[u, v, a, b], tv) <= 4)
            })
        } else {
            w.isolated.iter().all(|&a| edges_between(g, &[a], tv) == 0)
        }
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
