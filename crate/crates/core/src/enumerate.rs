//! Isomorph-free generation of `k·P3`-free graphs and the exhaustive
//! verification sweeps built on it.
//!
//! Generation is by canonical edge augmentation. Every graph with `m >= 1`
//! edges has a *canonical deletion edge* `e*`: among the edges maximising the
//! invariant `(max degree, min degree)` of their endpoints, the one whose
//! endpoints come last in the canonical labelling. A child `P + e` of an
//! accepted graph `P` is accepted iff `P + e - e*` is isomorphic to `P`;
//! isomorphic siblings are then merged. Each isomorphism class is reached
//! exactly once, from the class of `G - e*`.
//!
//! Containing `k·P3` is monotone under adding edges, so a child containing it
//! is dropped together with its whole subtree. The canonical parent of a
//! `k·P3`-free graph is itself `k·P3`-free, so nothing is lost.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, canonical_labeling, form_from_labeling, CanonicalForm};
use crate::formula::{self, FormulaError, TuranRegime};
use crate::graph::Graph;
use crate::lemmas::{self, LemmaId, LemmaReport, Violation};
use crate::packing::contains_k_p3;

/// Largest order accepted by the generators.
pub const MAX_ENUMERATION_ORDER: usize = 10;
/// Largest order accepted by [`count_graphs`].
pub const MAX_COUNT_ORDER: usize = 9;
/// Largest order accepted by [`verify_lemmas`].
pub const MAX_LEMMA_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} exceeds the limit of {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("the lemma sweep supports k in {{2, 3}}, got {0}")]
    UnsupportedK(usize),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// One isomorphism class: its canonical representative and key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerated {
    pub graph: Graph,
    pub form: CanonicalForm,
}

impl Enumerated {
    fn root(n: usize) -> Self {
        let graph = Graph::empty(n).expect("order checked by caller");
        let form = canonical_form(&graph);
        Enumerated { graph, form }
    }

    /// Accepted children, one per isomorphism class, in a fixed order.
    fn children(&self, k: usize) -> Vec<Enumerated> {
        let parent = &self.graph;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (u, v) in parent.non_edges() {
            let child = parent.with_edge(u, v).expect("non-edge of parent");
            let degrees = child.degrees();
            let inv = |a: usize, b: usize| (degrees[a].max(degrees[b]), degrees[a].min(degrees[b]));
            let mine = inv(u, v);
            let mut tied = Vec::new();
            let mut beaten = false;
            for (a, b) in child.edges() {
                match inv(a, b).cmp(&mine) {
                    std::cmp::Ordering::Greater => {
                        beaten = true;
                        break;
                    }
                    std::cmp::Ordering::Equal => tied.push((a, b)),
                    std::cmp::Ordering::Less => {}
                }
            }
            if beaten || contains_k_p3(&child, k).found {
                continue;
            }
            let form = if tied.len() == 1 {
                canonical_form(&child)
            } else {
                let perm = canonical_labeling(&child);
                let &(a, b) = tied
                    .iter()
                    .max_by_key(|&&(a, b)| (perm[a].max(perm[b]), perm[a].min(perm[b])))
                    .expect("the new edge is tied with itself");
                if (a, b) != (u, v) {
                    let reduced = child.without_edge(a, b).expect("edge of child");
                    if canonical_form(&reduced) != self.form {
                        continue;
                    }
                }
                form_from_labeling(&child, &perm)
            };
            if seen.insert(form.clone()) {
                out.push(Enumerated {
                    graph: form.to_graph(),
                    form,
                });
            }
        }
        out
    }
}

/// Depth-first stream over the `k·P3`-free graphs of one order.
pub struct FreeGraphs {
    k: usize,
    stack: Vec<Enumerated>,
}

impl Iterator for FreeGraphs {
    type Item = Enumerated;

    fn next(&mut self) -> Option<Enumerated> {
        let node = self.stack.pop()?;
        let mut kids = node.children(self.k);
        kids.reverse();
        self.stack.extend(kids);
        Some(node)
    }
}

fn check_order(n: usize, max: usize) -> Result<(), EnumerationError> {
    if n > max {
        Err(EnumerationError::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Every `k·P3`-free graph on `n` vertices, one per isomorphism class.
/// With `3k > n` nothing is pruned and the stream is every graph on `n`
/// vertices.
pub fn enumerate_free_graphs(n: usize, k: usize) -> Result<FreeGraphs, EnumerationError> {
    check_order(n, MAX_ENUMERATION_ORDER)?;
    if k == 0 {
        return Err(EnumerationError::ZeroK);
    }
    Ok(FreeGraphs {
        k,
        stack: vec![Enumerated::root(n)],
    })
}

/// Parallel map-reduce over the same tree as [`enumerate_free_graphs`].
/// `reduce` must be associative and commutative for the result to be
/// independent of scheduling.
pub fn fold_free_graphs<T, M, R>(n: usize, k: usize, map: M, reduce: R) -> Result<T, EnumerationError>
where
    T: Send,
    M: Fn(&Enumerated) -> T + Sync,
    R: Fn(T, T) -> T + Sync,
{
    check_order(n, MAX_ENUMERATION_ORDER)?;
    if k == 0 {
        return Err(EnumerationError::ZeroK);
    }
    fn walk<T: Send>(
        node: Enumerated,
        k: usize,
        map: &(impl Fn(&Enumerated) -> T + Sync),
        reduce: &(impl Fn(T, T) -> T + Sync),
    ) -> T {
        let here = map(&node);
        let kids = node.children(k);
        drop(node);
        match kids
            .into_par_iter()
            .map(|c| walk(c, k, map, reduce))
            .reduce_with(reduce)
        {
            Some(below) => reduce(below, here),
            None => here,
        }
    }
    Ok(walk(Enumerated::root(n), k, &map, &reduce))
}

/// Number of isomorphism classes of graphs on `n` vertices.
pub fn count_graphs(n: usize) -> Result<u64, EnumerationError> {
    check_order(n, MAX_COUNT_ORDER)?;
    fold_free_graphs(n, n / 3 + 1, |_| 1u64, |a, b| a + b)
}

/// Outcome of checking the closed form and the extremal family at one
/// `(n, k)` against every `k·P3`-free graph of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub regime: TuranRegime,
    pub formula_value: u128,
    pub observed_max: usize,
    /// Canonical forms attaining `observed_max`, sorted.
    pub extremal_forms: Vec<CanonicalForm>,
    /// Canonical forms of the predicted extremal graphs, sorted.
    pub expected_forms: Vec<CanonicalForm>,
    pub agree: bool,
    pub graphs_scanned: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Default)]
struct Extremes {
    max: usize,
    forms: BTreeSet<CanonicalForm>,
    scanned: u64,
}

impl Extremes {
    fn merge(mut self, other: Extremes) -> Extremes {
        self.scanned += other.scanned;
        match self.max.cmp(&other.max) {
            std::cmp::Ordering::Less => Extremes {
                scanned: self.scanned,
                ..other
            },
            std::cmp::Ordering::Equal => {
                self.forms.extend(other.forms);
                self
            }
            std::cmp::Ordering::Greater => self,
        }
    }
}

/// Runs the sweep on the current rayon pool. Wrap in a pool with one
/// thread for a strictly sequential run.
pub fn verify_turan(n: usize, k: usize) -> Result<VerificationReport, EnumerationError> {
    check_order(n, MAX_ENUMERATION_ORDER)?;
    let start = Instant::now();
    let regime = formula::regime(n as u64, k as u64)?;
    let formula_value = formula::ex_kp3(n as u64, k as u64)?;
    let family = formula::extremal_graphs(n as u64, k as u64)?;
    let mut expected_forms: Vec<CanonicalForm> = family.graphs.iter().map(canonical_form).collect();
    expected_forms.sort();

    let found = fold_free_graphs(
        n,
        k,
        |e| Extremes {
            max: e.graph.edge_count(),
            forms: BTreeSet::from([e.form.clone()]),
            scanned: 1,
        },
        Extremes::merge,
    )?;
    let extremal_forms: Vec<CanonicalForm> = found.forms.into_iter().collect();
    let agree = found.max as u128 == formula_value && extremal_forms == expected_forms;
    Ok(VerificationReport {
        n,
        k,
        regime,
        formula_value,
        observed_max: found.max,
        extremal_forms,
        expected_forms,
        agree,
        graphs_scanned: found.scanned,
        elapsed: start.elapsed(),
    })
}

/// Aggregate of one lemma checker over a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSweepSummary {
    pub lemma: LemmaId,
    /// Decompositions the checker ran on.
    pub checked: u64,
    /// Decompositions of this lemma's shape whose preconditions failed
    /// (for instance too few isolated leftover vertices).
    pub skipped: u64,
    /// Violations, tagged with the graph6 of the offending graph.
    pub violations: Vec<(String, Violation)>,
}

impl LemmaSweepSummary {
    fn new(lemma: LemmaId) -> Self {
        LemmaSweepSummary {
            lemma,
            checked: 0,
            skipped: 0,
            violations: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of [`verify_lemmas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSweep {
    pub n: usize,
    pub k: usize,
    /// Graphs with `(k-1)·P3` and without `k·P3`.
    pub graphs_considered: u64,
    /// One entry per lemma, in [`LemmaId::ALL`] order.
    pub summaries: Vec<LemmaSweepSummary>,
    /// graph6 of graphs whose best decomposition left a component with
    /// three or more vertices.
    pub shape_violations: Vec<String>,
}

impl LemmaSweep {
    pub fn violation_count(&self) -> usize {
        self.summaries.iter().map(|s| s.violations.len()).sum::<usize>() + self.shape_violations.len()
    }

    fn empty(n: usize, k: usize) -> Self {
        LemmaSweep {
            n,
            k,
            graphs_considered: 0,
            summaries: LemmaId::ALL.map(LemmaSweepSummary::new).to_vec(),
            shape_violations: Vec::new(),
        }
    }

    fn merge(mut self, other: LemmaSweep) -> LemmaSweep {
        self.graphs_considered += other.graphs_considered;
        for (x, y) in self.summaries.iter_mut().zip(other.summaries) {
            x.checked += y.checked;
            x.skipped += y.skipped;
            x.violations.extend(y.violations);
        }
        self.shape_violations.extend(other.shape_violations);
        self
    }
}

/// Runs the applicable lemma checker on the best leftover decomposition of
/// every graph of order `n` that contains `(k-1)·P3` but not `k·P3`.
pub fn verify_lemmas(n: usize, k: usize) -> Result<LemmaSweep, EnumerationError> {
    check_order(n, MAX_LEMMA_ORDER)?;
    if !(2..=3).contains(&k) {
        return Err(EnumerationError::UnsupportedK(k));
    }
    let mut sweep = fold_free_graphs(
        n,
        k,
        |e| {
            let mut acc = LemmaSweep::empty(n, k);
            match lemmas::check_applicable(&e.graph, k) {
                Ok(None) => {}
                Ok(Some((id, outcome))) => {
                    acc.graphs_considered = 1;
                    let slot = &mut acc.summaries[id.index()];
                    match outcome {
                        Ok(LemmaReport { violations, .. }) => {
                            slot.checked += 1;
                            let g6 = e.form.graph6();
                            slot.violations
                                .extend(violations.into_iter().map(|v| (g6.to_owned(), v)));
                        }
                        Err(_) => slot.skipped += 1,
                    }
                }
                Err(_) => {
                    acc.graphs_considered = 1;
                    acc.shape_violations.push(e.form.graph6().to_owned());
                }
            }
            acc
        },
        LemmaSweep::merge,
    )?;
    for s in &mut sweep.summaries {
        s.violations.sort();
    }
    sweep.shape_violations.sort();
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_with_and_without_pruning() {
        assert_eq!(enumerate_free_graphs(6, 99).unwrap().count(), 156);
        assert_eq!(enumerate_free_graphs(3, 1).unwrap().count(), 2);
        assert_eq!(enumerate_free_graphs(4, 1).unwrap().count(), 3);
        assert_eq!(enumerate_free_graphs(0, 1).unwrap().count(), 1);
        assert!(matches!(
            enumerate_free_graphs(11, 1),
            Err(EnumerationError::TooLarge { .. })
        ));
        assert_eq!(enumerate_free_graphs(3, 0).err(), Some(EnumerationError::ZeroK));
    }

    #[test]
    fn graph_counts() {
        assert_eq!(count_graphs(1).unwrap(), 1);
        assert_eq!(count_graphs(5).unwrap(), 34);
        assert_eq!(count_graphs(6).unwrap(), 156);
        assert!(count_graphs(10).is_err());
    }

    #[test]
    fn stream_has_no_duplicates() {
        let forms: Vec<_> = enumerate_free_graphs(6, 2).unwrap().map(|e| e.form).collect();
        let unique: HashSet<_> = forms.iter().collect();
        assert_eq!(forms.len(), unique.len());
    }

    #[test]
    fn small_instances_agree() {
        let r = verify_turan(6, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.observed_max, 10);
        assert_eq!(r.extremal_forms.len(), 1);

        let r = verify_turan(4, 1).unwrap();
        assert!(r.agree);
        assert_eq!(r.observed_max, 2);
        assert_eq!(r.extremal_forms[0], canonical_form(&Graph::matching(4).unwrap()));
    }

    #[test]
    fn lemma_sweep_small() {
        let sweep = verify_lemmas(7, 2).unwrap();
        assert_eq!(sweep.violation_count(), 0, "{sweep:?}");
        assert!(sweep.graphs_considered > 0);

        // n = 5, k = 2: an edgeless leftover has only two vertices, so that checker abstains
        let sweep = verify_lemmas(5, 2).unwrap();
        let edgeless = &sweep.summaries[LemmaId::Edgeless.index()];
        assert_eq!(edgeless.checked, 0);
        assert!(edgeless.skipped > 0);
        assert_eq!(sweep.violation_count(), 0);

        assert_eq!(verify_lemmas(7, 4).unwrap_err(), EnumerationError::UnsupportedK(4));
        assert!(verify_lemmas(11, 2).is_err());
    }
}
