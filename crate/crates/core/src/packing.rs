//! Vertex-disjoint P3 packings.
//!
//! [`max_p3_packing`] is an exact branch-and-bound. It branches on the
//! lowest-index vertex that still has a residual neighbour: first every way
//! to use it as a centre, then every way to use it as an endpoint, then
//! leaving it out of all paths. Neighbours are tried in ascending order, so
//! witnesses are reproducible.
//!
//! The bound at each node works per residual component `C` with at least
//! three vertices and takes the smaller of `⌊|C|/3⌋` and the size of a
//! greedily built set hitting every P3 of `C` (each path in a packing uses a
//! distinct hitting vertex). Components with fewer than three vertices hold
//! no P3 at all.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bits::{self, with_width, Set};
use crate::graph::Graph;

/// A path `x - y - z` with centre `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PathTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl PathTriple {
    pub fn new(x: usize, y: usize, z: usize) -> Self {
        PathTriple { x, y, z }
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.x, self.y, self.z]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.x == v || self.y == v || self.z == v
    }
}

impl fmt::Display for PathTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

/// A list of paths that are meant to be pairwise vertex-disjoint; see
/// [`verify_packing`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Packing {
    pub triples: Vec<PathTriple>,
}

impl Packing {
    pub fn new(triples: Vec<PathTriple>) -> Self {
        Packing { triples }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// All covered vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.triples.iter().flat_map(|t| t.vertices()).collect();
        vs.sort_unstable();
        vs
    }
}

impl From<Vec<PathTriple>> for Packing {
    fn from(triples: Vec<PathTriple>) -> Self {
        Packing { triples }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
}

/// Checks that every path exists in `g` and no vertex is used twice.
pub fn verify_packing(g: &Graph, p: &Packing) -> Result<bool, PackingError> {
    let n = g.order();
    let mut used = vec![false; n];
    for t in &p.triples {
        for v in t.vertices() {
            if v >= n {
                return Err(PackingError::InvalidVertex { vertex: v, order: n });
            }
        }
    }
    for t in &p.triples {
        if !(g.has_edge(t.x, t.y) && g.has_edge(t.y, t.z)) || t.x == t.z {
            return Ok(false);
        }
        for v in t.vertices() {
            if std::mem::replace(&mut used[v], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Repeatedly takes the lowest-index vertex with two unused neighbours as a
/// centre, joined to its two lowest unused neighbours. The result is
/// maximal: what remains has no P3.
pub fn greedy_packing(g: &Graph) -> Packing {
    with_width!(g.order().max(1), W => {
        let rows = bits::rows::<W>(g);
        greedy::<W>(&rows, Set::full(g.order()))
    })
}

fn greedy<const W: usize>(rows: &[Set<W>], mut alive: Set<W>) -> Packing {
    let mut triples = Vec::new();
    let mut c = 0;
    while c < rows.len() {
        if alive.contains(c) {
            let nb = rows[c].and(&alive);
            if nb.len() >= 2 {
                let mut it = nb.iter();
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                triples.push(PathTriple::new(a, c, b));
                alive = alive.without(a).without(b).without(c);
            }
        }
        c += 1;
    }
    Packing { triples }
}

/// Size and witness of a maximum packing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingResult {
    pub size: usize,
    pub witness: Packing,
}

/// Maximum number of vertex-disjoint P3 copies in `g`, with a witness.
/// Exact; intended for orders up to a few dozen vertices.
pub fn max_p3_packing(g: &Graph) -> PackingResult {
    let witness = solve(g, usize::MAX);
    PackingResult {
        size: witness.len(),
        witness,
    }
}

/// Outcome of a containment query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub found: bool,
    /// Exactly `k` paths when `found`.
    pub witness: Option<Packing>,
}

/// Whether `g` contains `k` vertex-disjoint copies of P3. Stops as soon as
/// `k` paths are found. `k = 0` is always contained.
pub fn contains_k_p3(g: &Graph, k: usize) -> Containment {
    if k == 0 {
        return Containment {
            found: true,
            witness: Some(Packing::default()),
        };
    }
    if 3 * k > g.order() {
        return Containment {
            found: false,
            witness: None,
        };
    }
    let mut best = solve(g, k);
    if best.len() >= k {
        best.triples.truncate(k);
        Containment {
            found: true,
            witness: Some(best),
        }
    } else {
        Containment {
            found: false,
            witness: None,
        }
    }
}

fn solve(g: &Graph, target: usize) -> Packing {
    with_width!(g.order().max(1), W => {
        let rows = bits::rows::<W>(g);
        let alive = Set::full(g.order());
        let seed = greedy::<W>(&rows, alive);
        let mut s = Solver {
            rows: &rows,
            best: seed.triples,
            current: Vec::new(),
            target,
        };
        if s.best.len() < target {
            s.search(alive);
        }
        Packing { triples: s.best }
    })
}

struct Solver<'a, const W: usize> {
    rows: &'a [Set<W>],
    best: Vec<PathTriple>,
    current: Vec<PathTriple>,
    target: usize,
}

impl<const W: usize> Solver<'_, W> {
    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    /// A node is useless unless it can beat the incumbent and, when
    /// searching for a fixed target, still reach it.
    fn threshold(&self) -> usize {
        if self.target == usize::MAX {
            self.best.len()
        } else {
            self.best.len().max(self.target - 1)
        }
    }

    fn search(&mut self, alive: Set<W>) {
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
            if self.done() {
                return;
            }
        }
        let Some(v) = alive.iter().find(|&v| !self.rows[v].and(&alive).is_empty()) else {
            return;
        };
        if self.current.len() + self.upper_bound(alive) <= self.threshold() {
            return;
        }
        let nb = self.rows[v].and(&alive);
        let rest = alive.without(v);
        for a in nb.iter() {
            for b in nb.iter().filter(|&b| b > a) {
                self.descend(PathTriple::new(a, v, b), rest.without(a).without(b));
                if self.done() {
                    return;
                }
            }
        }
        for y in nb.iter() {
            for z in self.rows[y].and(&rest).without(y).iter() {
                self.descend(PathTriple::new(v, y, z), rest.without(y).without(z));
                if self.done() {
                    return;
                }
            }
        }
        self.search(rest);
    }

    fn descend(&mut self, t: PathTriple, alive: Set<W>) {
        self.current.push(t);
        self.search(alive);
        self.current.pop();
    }

    fn upper_bound(&self, alive: Set<W>) -> usize {
        let comps = self.components(alive);
        let coarse: usize = comps.iter().map(|c| c.len() / 3).sum();
        if self.current.len() + coarse <= self.threshold() {
            return coarse;
        }
        comps.iter().map(|c| (c.len() / 3).min(self.hitting_set_size(*c))).sum()
    }

    /// Residual components with at least three vertices.
    fn components(&self, alive: Set<W>) -> Vec<Set<W>> {
        let mut left = alive;
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = Set::EMPTY.with(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = Set::EMPTY;
                for u in frontier.iter() {
                    next = next.or(&self.rows[u]);
                }
                frontier = next.and(&alive).and_not(&comp);
                comp = comp.or(&frontier);
            }
            left = left.and_not(&comp);
            if comp.len() >= 3 {
                out.push(comp);
            }
        }
        out
    }

    /// Size of a greedy max-degree set whose removal leaves max degree <= 1.
    fn hitting_set_size(&self, mut c: Set<W>) -> usize {
        let mut picked = 0;
        loop {
            let mut best = (1, usize::MAX);
            for u in c.iter() {
                let d = self.rows[u].and(&c).len();
                if d > best.0 {
                    best = (d, u);
                }
            }
            if best.1 == usize::MAX {
                return picked;
            }
            c.remove(best.1);
            picked += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(ts: &[(usize, usize, usize)]) -> Packing {
        ts.iter()
            .map(|&(x, y, z)| PathTriple::new(x, y, z))
            .collect::<Vec<_>>()
            .into()
    }

    #[test]
    fn certificate_checker() {
        let k6 = Graph::complete(6).unwrap();
        assert!(verify_packing(&k6, &triples(&[(0, 1, 2), (3, 4, 5)])).unwrap());
        assert!(!verify_packing(&k6, &triples(&[(0, 1, 2), (2, 3, 4)])).unwrap());
        let m4 = Graph::matching(4).unwrap();
        assert!(!verify_packing(&m4, &triples(&[(0, 1, 2)])).unwrap());
        assert_eq!(
            verify_packing(&m4, &triples(&[(0, 1, 7)])),
            Err(PackingError::InvalidVertex { vertex: 7, order: 4 })
        );
        assert!(!verify_packing(&k6, &triples(&[(0, 1, 0)])).unwrap());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_packing(&Graph::path(6).unwrap()).len(), 2);
        assert_eq!(greedy_packing(&Graph::matching(8).unwrap()).len(), 0);
        assert_eq!(greedy_packing(&Graph::complete(4).unwrap()), triples(&[(1, 0, 2)]));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(max_p3_packing(&Graph::cycle(5).unwrap()).size, 1);
        let k5m4 = Graph::complete(5)
            .unwrap()
            .disjoint_union(&Graph::matching(4).unwrap())
            .unwrap();
        assert_eq!(max_p3_packing(&k5m4).size, 1);
        let hub = Graph::complete(1).unwrap().join(&Graph::matching(8).unwrap()).unwrap();
        assert_eq!(max_p3_packing(&hub).size, 1);
        let k8 = Graph::complete(8).unwrap();
        let r = max_p3_packing(&k8);
        assert_eq!(r.size, 2);
        assert!(verify_packing(&k8, &r.witness).unwrap());
        assert_eq!(max_p3_packing(&Graph::empty(0).unwrap()).size, 0);
    }

    #[test]
    fn greedy_is_not_always_optimal() {
        // the path 5-3-1-0-2-4; greedy takes 1-0-2 first
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)]).unwrap();
        assert_eq!(greedy_packing(&g).len(), 1);
        assert_eq!(max_p3_packing(&g).size, 2);
    }

    #[test]
    fn containment() {
        let k6 = Graph::complete(6).unwrap();
        let c = contains_k_p3(&k6, 2);
        assert!(c.found);
        assert_eq!(c.witness.as_ref().unwrap().len(), 2);
        assert!(verify_packing(&k6, c.witness.as_ref().unwrap()).unwrap());

        let k5m4 = Graph::complete(5)
            .unwrap()
            .disjoint_union(&Graph::matching(4).unwrap())
            .unwrap();
        assert_eq!(
            contains_k_p3(&k5m4, 2),
            Containment {
                found: false,
                witness: None
            }
        );
        for n in 0..20 {
            assert!(!contains_k_p3(&Graph::matching(n).unwrap(), 1).found);
        }
        let zero = contains_k_p3(&Graph::empty(3).unwrap(), 0);
        assert!(zero.found && zero.witness.unwrap().is_empty());
    }

    #[test]
    fn large_hub_graph_is_fast() {
        let g = Graph::complete(5).unwrap().join(&Graph::matching(40).unwrap()).unwrap();
        assert_eq!(max_p3_packing(&g).size, 5);
        assert!(!contains_k_p3(&g, 6).found);
        let g = Graph::complete(17)
            .unwrap()
            .disjoint_union(&Graph::matching(7).unwrap())
            .unwrap();
        assert_eq!(max_p3_packing(&g).size, 5);
        let g2 = g.with_edge(3, 20).unwrap();
        assert!(contains_k_p3(&g2, 6).found);
    }
}
