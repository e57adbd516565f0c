//! Canonical forms by equitable refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition until it
//! is equitable, individualise each vertex of the first non-singleton cell,
//! recurse. Every leaf is a labelling; the canonical labelling is the leaf
//! whose relabelled upper triangle (graph6 bit order) is lexicographically
//! least. Two prunings keep symmetric graphs cheap:
//!
//! * twins (`N(u) - v == N(v) - u`) in the target cell are interchangeable,
//!   so only one of each twin class is individualised;
//! * leaves that reproduce the best key yield automorphisms, and siblings in
//!   the same orbit of the automorphisms fixing the current prefix are skipped.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::bits::{self, with_width, Set};
use crate::graph::Graph;
use crate::graph6;

/// Isomorphism-invariant key. Equal keys mean isomorphic graphs; the bytes
/// are the graph6 encoding of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The graph6 string of the canonical representative.
    pub fn graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms hold valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.graph6())
    }
}

/// Canonical labelling: `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let lab = with_width!(g.order().max(1), W => search::<W>(g));
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    form_from_labeling(g, &canonical_labeling(g))
}

pub(crate) fn form_from_labeling(g: &Graph, perm: &[usize]) -> CanonicalForm {
    let relabelled = g.relabel(perm).expect("labelling is a permutation");
    CanonicalForm(graph6::encode(&relabelled))
}

/// Isomorphism test with a fast reject on order, size and degree sequence.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

#[derive(Clone)]
struct Partition {
    /// Vertices laid out cell by cell.
    order: Vec<usize>,
    /// Position -> start of the cell containing it.
    cell: Vec<usize>,
    /// Cell start -> one past its end.
    end: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        if n > 0 {
            end[0] = n;
        }
        Partition {
            order: (0..n).collect(),
            cell: vec![0; n],
            end,
        }
    }

    fn first_open_cell(&self) -> Option<(usize, usize)> {
        let mut p = 0;
        while p < self.order.len() {
            let e = self.end[p];
            if e - p > 1 {
                return Some((p, e));
            }
            p = e;
        }
        None
    }

    fn cell_set<const W: usize>(&self, start: usize) -> Set<W> {
        let mut s = Set::EMPTY;
        for &v in &self.order[start..self.end[start]] {
            s.insert(v);
        }
        s
    }

    /// Splits every cell by neighbour counts into the queued splitters until
    /// the partition is equitable.
    fn refine<const W: usize>(&mut self, rows: &[Set<W>], mut queue: VecDeque<usize>) {
        let n = self.order.len();
        let mut queued = vec![false; n];
        for &s in &queue {
            queued[s] = true;
        }
        let mut counts: Vec<(u32, usize)> = Vec::with_capacity(n);
        while let Some(s) = queue.pop_front() {
            queued[s] = false;
            let splitter = self.cell_set::<W>(s);
            let mut p = 0;
            while p < n {
                let e = self.end[p];
                if e - p > 1 {
                    counts.clear();
                    counts.extend(
                        self.order[p..e]
                            .iter()
                            .map(|&v| (rows[v].and(&splitter).len() as u32, v)),
                    );
                    if counts.iter().any(|c| c.0 != counts[0].0) {
                        counts.sort_unstable();
                        let was_queued = queued[p];
                        let mut start = p;
                        for (i, &(c, v)) in counts.iter().enumerate() {
                            let pos = p + i;
                            if i > 0 && c != counts[i - 1].0 {
                                self.end[start] = pos;
                                start = pos;
                            }
                            self.order[pos] = v;
                            self.cell[pos] = start;
                        }
                        self.end[start] = e;
                        let mut q = p;
                        while q < e {
                            if !queued[q] && (q != p || !was_queued) {
                                queued[q] = true;
                                queue.push_back(q);
                            }
                            q = self.end[q];
                        }
                    }
                }
                p = e;
            }
        }
    }

    /// Moves `v` (inside the cell `[p, e)`) to the front as a singleton.
    fn individualize(&mut self, p: usize, e: usize, v: usize) {
        let i = self.order[p..e].iter().position(|&x| x == v).expect("vertex in cell") + p;
        self.order.swap(p, i);
        self.end[p] = p + 1;
        self.end[p + 1] = e;
        for pos in p + 1..e {
            self.cell[pos] = p + 1;
        }
    }
}

struct Search<'a, const W: usize> {
    rows: &'a [Set<W>],
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

fn search<const W: usize>(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let rows = bits::rows::<W>(g);
    let mut part = Partition::unit(n);
    if n > 0 {
        part.refine(&rows, VecDeque::from([0]));
    }
    let mut s = Search {
        rows: &rows,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::new();
    s.descend(part, &mut prefix);
    s.best.map(|b| b.1).unwrap_or_default()
}

impl<const W: usize> Search<'_, W> {
    fn descend(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        let Some((p, e)) = part.first_open_cell() else {
            self.leaf(part.order);
            return;
        };
        let mut candidates: Vec<usize> = part.order[p..e].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = part.clone();
            child.individualize(p, e, v);
            child.refine(self.rows, VecDeque::from([p, p + 1]));
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.rows[u].without(v) == self.rows[v].without(u)
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().all(|&x| gamma[x] == x) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let key = self.key(&lab);
        match &self.best {
            None => self.best = Some((key, lab)),
            Some((best_key, best_lab)) => match key.cmp(best_key) {
                Ordering::Less => self.best = Some((key, lab)),
                Ordering::Equal => {
                    let mut gamma = vec![0; lab.len()];
                    for (i, &v) in lab.iter().enumerate() {
                        gamma[v] = best_lab[i];
                    }
                    self.autos.push(gamma);
                }
                Ordering::Greater => {}
            },
        }
    }

    /// Upper triangle of the relabelled graph in graph6 order, MSB first.
    fn key(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let total = n * n.saturating_sub(1) / 2;
        let mut key = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            let row = &self.rows[lab[j]];
            for &li in &lab[..j] {
                if row.contains(li) {
                    key[k >> 6] |= 1 << (63 - (k & 63));
                }
                k += 1;
            }
        }
        key
    }
}
