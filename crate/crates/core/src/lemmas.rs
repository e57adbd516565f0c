//! Leftover decompositions and the structural lemmas about them.
//!
//! Fix a graph `G` that contains `(k-1)·P3` but not `k·P3`, and pick
//! `(k-1)` disjoint paths `H` so that `G' = G - V(H)` keeps as many edges as
//! possible. Then every component of `G'` is a single edge `u_i v_i` or an
//! isolated vertex `w_i`; write `s` and `t` for how many of each. The three
//! checkers below state what can sit between `G'` and a path
//! `T_j = x_j y_j z_j` of `H`, depending on `s`:
//!
//! * `s = 0`, `t >= 3` ([`check_lemma_edgeless`]): any `p >= 3` leftover
//!   vertices send at most `p` edges to `T_j`, and two leftover vertices that
//!   both touch `T_j` touch only its centre.
//! * `s = 1`, `t >= 2` ([`check_lemma_one_edge`]): if `u_1 v_1` sends at most
//!   4 edges to `T_j`, then so does `{u_1, v_1, w, w'}` for any two leftover
//!   vertices; if it sends 5 or more, no isolated leftover vertex touches `T_j`.
//! * `s >= 2` ([`check_lemma_many_edges`]): with `u_1 v_1` and `T_1` chosen to
//!   maximise the edge count between a leftover edge and a path, a maximum of
//!   at most 4 caps every `{u_1, v_1, u_i, v_i}` at 4; a maximum of at least 5
//!   caps them at 6, isolates `T_1` from the rest of `G'`, and a quadruple hits
//!   6 only when one of its two edges supplies all six.
//!
//! The checkers take the decomposition as an argument, so they can also be
//! pointed at deliberately bad ones.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::packing::{contains_k_p3, verify_packing, Packing, PathTriple};

/// Largest order accepted by [`best_leftover_decomposition`].
pub const MAX_DECOMPOSITION_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// `G'` has no edges.
    Edgeless,
    /// `G'` has exactly one edge.
    OneEdge,
    /// `G'` has at least two edges.
    ManyEdges,
}

impl LemmaId {
    pub const ALL: [LemmaId; 3] = [LemmaId::Edgeless, LemmaId::OneEdge, LemmaId::ManyEdges];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Edgeless => "edgeless",
            LemmaId::OneEdge => "one-edge",
            LemmaId::ManyEdges => "many-edges",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// The lemma whose shape matches `s` leftover edges.
    pub fn for_leftover_edges(s: usize) -> LemmaId {
        match s {
            0 => LemmaId::Edgeless,
            1 => LemmaId::OneEdge,
            _ => LemmaId::ManyEdges,
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("order {n} is above the exhaustive limit of {MAX_DECOMPOSITION_ORDER}")]
    TooLarge { n: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("leftover component {component:?} has more than two vertices")]
    LeftoverShape { component: Vec<usize> },
    #[error("{lemma} precondition violated: {reason}")]
    Precondition { lemma: LemmaId, reason: String },
}

/// `H = (k-1)·P3` together with the shape of `G - V(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionWitness {
    pub paths: Vec<PathTriple>,
    /// `(u_i, v_i)` with `u_i < v_i`, ascending.
    pub leftover_edges: Vec<(usize, usize)>,
    /// `w_1 .. w_t`, ascending.
    pub isolated: Vec<usize>,
    pub leftover_edge_count: usize,
}

/// One failed bound: the path index, the leftover vertices involved, the
/// number of edges seen and the number allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub triple: usize,
    pub vertices: Vec<usize>,
    pub observed: usize,
    pub allowed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl LemmaReport {
    fn new(lemma: LemmaId, violations: Vec<Violation>) -> Self {
        LemmaReport {
            lemma,
            holds: violations.is_empty(),
            violations,
        }
    }
}

/// All paths `x - y - z` of `g` with `x < z`, in lexicographic `(x, y, z)` order.
fn all_paths(g: &Graph) -> Vec<PathTriple> {
    let mut out = Vec::new();
    for x in 0..g.order() {
        for y in g.neighbors(x) {
            for z in g.neighbors(y).filter(|&z| z > x) {
                out.push(PathTriple::new(x, y, z));
            }
        }
    }
    out
}

fn mask_of(t: &PathTriple) -> u64 {
    (1 << t.x) | (1 << t.y) | (1 << t.z)
}

/// The checker chosen by [`check_applicable`] and its outcome.
pub type Applicable = (LemmaId, Result<LemmaReport, LemmaError>);

/// Finds `(k-1)` disjoint paths leaving the most edges behind, by
/// exhaustive search over all choices. Ties go to the lexicographically
/// least list of paths. `None` when `g` has no `(k-1)·P3`.
pub fn best_leftover_decomposition(g: &Graph, k: usize) -> Result<Option<DecompositionWitness>, LemmaError> {
    let n = g.order();
    if n > MAX_DECOMPOSITION_ORDER {
        return Err(LemmaError::TooLarge { n });
    }
    if k == 0 {
        return Err(LemmaError::ZeroK);
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let paths = all_paths(g);
    let all: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let edges_within = |set: u64| -> usize {
        let mut total = 0;
        let mut s = set;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            total += (rows[v] & set).count_ones() as usize;
        }
        total / 2
    };

    struct Best {
        edges: usize,
        chosen: Vec<usize>,
    }
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        paths: &[PathTriple],
        from: usize,
        need: usize,
        used: u64,
        chosen: &mut Vec<usize>,
        all: u64,
        score: &dyn Fn(u64) -> usize,
        best: &mut Option<Best>,
    ) {
        if need == 0 {
            let e = score(all & !used);
            if best.as_ref().is_none_or(|b| e > b.edges) {
                *best = Some(Best {
                    edges: e,
                    chosen: chosen.clone(),
                });
            }
            return;
        }
        for i in from..paths.len() {
            let m = mask_of(&paths[i]);
            if m & used == 0 {
                chosen.push(i);
                dfs(paths, i + 1, need - 1, used | m, chosen, all, score, best);
                chosen.pop();
            }
        }
    }
    let mut best = None;
    dfs(&paths, 0, k - 1, 0, &mut Vec::new(), all, &edges_within, &mut best);
    let Some(best) = best else {
        return Ok(None);
    };
    let chosen: Vec<PathTriple> = best.chosen.iter().map(|&i| paths[i]).collect();
    let used = chosen.iter().fold(0, |m, t| m | mask_of(t));
    let mut left = all & !used;
    let mut leftover_edges = Vec::new();
    let mut isolated = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        loop {
            let mut grown = comp;
            let mut c = comp;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                grown |= rows[v] & left;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        let members: Vec<usize> = (0..n).filter(|&v| comp >> v & 1 == 1).collect();
        match members.as_slice() {
            [w] => isolated.push(*w),
            [u, v] => leftover_edges.push((*u, *v)),
            _ => return Err(LemmaError::LeftoverShape { component: members }),
        }
    }
    Ok(Some(DecompositionWitness {
        paths: chosen,
        leftover_edge_count: leftover_edges.len(),
        leftover_edges,
        isolated,
    }))
}

fn edges_to(g: &Graph, vertices: &[usize], t: &PathTriple) -> usize {
    vertices
        .iter()
        .map(|&v| t.vertices().iter().filter(|&&u| g.has_edge(v, u)).count())
        .sum()
}

/// Shared preconditions: the witness describes a `(k-1)`-packing of `g`
/// whose leftover is exactly the listed edges and vertices, and `g` has no
/// `k·P3`.
fn check_witness(g: &Graph, k: usize, w: &DecompositionWitness, lemma: LemmaId) -> Result<(), LemmaError> {
    let fail = |reason: String| Err(LemmaError::Precondition { lemma, reason });
    if k == 0 || w.paths.len() != k - 1 {
        return fail(format!(
            "expected {} paths, found {}",
            k.saturating_sub(1),
            w.paths.len()
        ));
    }
    let packing = Packing::new(w.paths.clone());
    if !verify_packing(g, &packing).unwrap_or(false) {
        return fail("paths are not a packing of the graph".into());
    }
    let mut covered = packing.vertices();
    for &(u, v) in &w.leftover_edges {
        if !g.has_edge(u, v) {
            return fail(format!("({u}, {v}) is not an edge"));
        }
        covered.extend([u, v]);
    }
    covered.extend(&w.isolated);
    covered.sort_unstable();
    if covered != (0..g.order()).collect::<Vec<_>>() {
        return fail("paths and leftover do not partition the vertex set".into());
    }
    if w.leftover_edge_count != w.leftover_edges.len() {
        return fail("leftover edge count does not match the edge list".into());
    }
    if contains_k_p3(g, k).found {
        return fail(format!("graph contains {k}·P3"));
    }
    Ok(())
}

/// The `s = 0` lemma. Needs `t >= 3`.
///
/// The subset bound is checked through the per-vertex counts `d_j(w)`: some
/// `p`-subset exceeds `p` edges iff the `p` largest counts sum past `p`.
pub fn check_lemma_edgeless(g: &Graph, k: usize, w: &DecompositionWitness) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::Edgeless;
    check_witness(g, k, w, lemma)?;
    if w.leftover_edge_count != 0 {
        return Err(LemmaError::Precondition {
            lemma,
            reason: format!("leftover has {} edges", w.leftover_edge_count),
        });
    }
    if w.isolated.len() < 3 {
        return Err(LemmaError::Precondition {
            lemma,
            reason: format!("needs at least 3 leftover vertices, found {}", w.isolated.len()),
        });
    }
    Ok(LemmaReport::new(lemma, edgeless_violations(g, w)))
}

fn edgeless_violations(g: &Graph, w: &DecompositionWitness) -> Vec<Violation> {
    let mut violations = Vec::new();
    for (j, t) in w.paths.iter().enumerate() {
        let mut counts: Vec<(usize, usize)> = w.isolated.iter().map(|&v| (edges_to(g, &[v], t), v)).collect();
        counts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut sum = counts[0].0 + counts[1].0;
        for p in 3..=counts.len() {
            sum += counts[p - 1].0;
            if sum > p {
                let mut vertices: Vec<usize> = counts[..p].iter().map(|c| c.1).collect();
                vertices.sort_unstable();
                violations.push(Violation {
                    triple: j,
                    vertices,
                    observed: sum,
                    allowed: p,
                });
            }
        }
        let touching: Vec<usize> = counts.iter().filter(|c| c.0 > 0).map(|c| c.1).collect();
        for (a, &u) in touching.iter().enumerate() {
            for &v in &touching[a + 1..] {
                let off_centre = [u, v]
                    .iter()
                    .map(|&q| g.has_edge(q, t.x) as usize + g.has_edge(q, t.z) as usize)
                    .sum();
                if off_centre > 0 {
                    violations.push(Violation {
                        triple: j,
                        vertices: vec![u.min(v), u.max(v)],
                        observed: off_centre,
                        allowed: 0,
                    });
                }
            }
        }
    }
    violations
}

/// The `s = 1` lemma. Needs `t >= 2`. The "at most 6 edges from the
/// leftover edge" clause in the five-or-more case is implied by there being
/// only six pairs, so it cannot fail and is not reported.
pub fn check_lemma_one_edge(g: &Graph, k: usize, w: &DecompositionWitness) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::OneEdge;
    check_witness(g, k, w, lemma)?;
    if w.leftover_edge_count != 1 {
        return Err(LemmaError::Precondition {
            lemma,
            reason: format!("leftover has {} edges", w.leftover_edge_count),
        });
    }
    if w.isolated.len() < 2 {
        return Err(LemmaError::Precondition {
            lemma,
            reason: format!("needs at least 2 leftover vertices, found {}", w.isolated.len()),
        });
    }
    Ok(LemmaReport::new(lemma, one_edge_violations(g, w)))
}

fn one_edge_violations(g: &Graph, w: &DecompositionWitness) -> Vec<Violation> {
    let (u1, v1) = w.leftover_edges[0];
    let mut violations = Vec::new();
    for (j, t) in w.paths.iter().enumerate() {
        let c = edges_to(g, &[u1, v1], t);
        if c <= 4 {
            for (a, &p) in w.isolated.iter().enumerate() {
                for &q in &w.isolated[a + 1..] {
                    let total = c + edges_to(g, &[p, q], t);
                    if total > 4 {
                        let mut vertices = vec![u1, v1, p, q];
                        vertices.sort_unstable();
                        violations.push(Violation {
                            triple: j,
                            vertices,
                            observed: total,
                            allowed: 4,
                        });
                    }
                }
            }
        } else {
            for &p in &w.isolated {
                let d = edges_to(g, &[p], t);
                if d > 0 {
                    violations.push(Violation {
                        triple: j,
                        vertices: vec![p],
                        observed: d,
                        allowed: 0,
                    });
                }
            }
        }
    }
    violations
}

/// The `s >= 2` lemma. The leftover edge and path attaining the largest
/// edge count are picked first (earliest edge, then earliest path, on ties).
pub fn check_lemma_many_edges(g: &Graph, k: usize, w: &DecompositionWitness) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::ManyEdges;
    check_witness(g, k, w, lemma)?;
    if w.leftover_edge_count < 2 {
        return Err(LemmaError::Precondition {
            lemma,
            reason: format!("leftover has {} edges", w.leftover_edge_count),
        });
    }
    Ok(LemmaReport::new(lemma, many_edges_violations(g, w)))
}

fn many_edges_violations(g: &Graph, w: &DecompositionWitness) -> Vec<Violation> {
    if w.paths.is_empty() {
        return Vec::new();
    }
    let pairs = &w.leftover_edges;
    let count = |i: usize, j: usize| edges_to(g, &[pairs[i].0, pairs[i].1], &w.paths[j]);
    let mut top = (0, 0, count(0, 0));
    for i in 0..pairs.len() {
        for j in 0..w.paths.len() {
            let c = count(i, j);
            if c > top.2 {
                top = (i, j, c);
            }
        }
    }
    let (first, first_path, max) = top;
    let quad = |i: usize| {
        let mut v = vec![pairs[first].0, pairs[first].1, pairs[i].0, pairs[i].1];
        v.sort_unstable();
        v
    };
    let mut violations = Vec::new();
    let cap = if max <= 4 { 4 } else { 6 };
    for i in (0..pairs.len()).filter(|&i| i != first) {
        for j in 0..w.paths.len() {
            let (a, b) = (count(first, j), count(i, j));
            if a + b > cap {
                violations.push(Violation {
                    triple: j,
                    vertices: quad(i),
                    observed: a + b,
                    allowed: cap,
                });
            } else if cap == 6 && a + b == 6 && a.min(b) > 0 {
                violations.push(Violation {
                    triple: j,
                    vertices: quad(i),
                    observed: a.min(b),
                    allowed: 0,
                });
            }
        }
    }
    if max >= 5 {
        let t = &w.paths[first_path];
        let others = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != first)
            .flat_map(|(_, &(u, v))| [u, v])
            .chain(w.isolated.iter().copied());
        for p in others {
            let d = edges_to(g, &[p], t);
            if d > 0 {
                violations.push(Violation {
                    triple: first_path,
                    vertices: vec![p],
                    observed: d,
                    allowed: 0,
                });
            }
        }
    }
    violations
}

/// Decomposes `g` and runs the checker matching its leftover shape. `None`
/// when `g` has no `(k-1)·P3`. Intended for graphs without `k·P3`; on other
/// graphs the decomposition or the checker reports the failure.
pub fn check_applicable(g: &Graph, k: usize) -> Result<Option<Applicable>, LemmaError> {
    let Some(w) = best_leftover_decomposition(g, k)? else {
        return Ok(None);
    };
    let id = LemmaId::for_leftover_edges(w.leftover_edge_count);
    let outcome = match id {
        LemmaId::Edgeless => check_lemma_edgeless(g, k, &w),
        LemmaId::OneEdge => check_lemma_one_edge(g, k, &w),
        LemmaId::ManyEdges => check_lemma_many_edges(g, k, &w),
    };
    Ok(Some((id, outcome)))
}
