//! Closed forms for `ex(n, k·P3)` and the graphs that attain them.
//!
//! The value is piecewise in four regimes:
//!
//! | regime     | range            | value                                      |
//! |------------|------------------|--------------------------------------------|
//! | `Dense`    | `n < 3k`         | `C(n,2)`                                   |
//! | `Clique`   | `3k <= n < 5k-1` | `C(3k-1,2) + ⌊(n-3k+1)/2⌋`                 |
//! | `Boundary` | `n = 5k-1`       | `C(3k-1,2) + k`                            |
//! | `Hub`      | `n > 5k-1`       | `C(k-1,2) + (n-k+1)(k-1) + ⌊(n-k+1)/2⌋`    |
//!
//! All counts are `u128`; nothing here allocates a graph unless asked to.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("n and k must both be at least 1 (got n = {n}, k = {k})")]
    ZeroArgument { n: u64, k: u64 },
    #[error("requires n >= {min}, got n = {n}")]
    OrderTooSmall { n: u64, min: u64 },
    #[error("path length must be at least 2, got {0}")]
    PathTooShort(u64),
    #[error("cannot realise graphs of order {0}; the limit is {MAX_ORDER}")]
    TooLargeToRealize(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TuranRegime {
    /// `n < 3k`: there is no room for `k` disjoint paths at all.
    Dense,
    /// `3k <= n < 5k-1`.
    Clique,
    /// `n = 5k-1`, where both constructions tie.
    Boundary,
    /// `n > 5k-1`.
    Hub,
}

impl TuranRegime {
    pub fn name(self) -> &'static str {
        match self {
            TuranRegime::Dense => "dense",
            TuranRegime::Clique => "clique",
            TuranRegime::Boundary => "boundary",
            TuranRegime::Hub => "hub",
        }
    }
}

impl fmt::Display for TuranRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check(n: u64, k: u64) -> Result<(), FormulaError> {
    if n == 0 || k == 0 {
        Err(FormulaError::ZeroArgument { n, k })
    } else {
        Ok(())
    }
}

#[inline]
fn choose2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

pub fn regime(n: u64, k: u64) -> Result<TuranRegime, FormulaError> {
    check(n, k)?;
    let (n, k) = (n as u128, k as u128);
    Ok(if n < 3 * k {
        TuranRegime::Dense
    } else if n < 5 * k - 1 {
        TuranRegime::Clique
    } else if n == 5 * k - 1 {
        TuranRegime::Boundary
    } else {
        TuranRegime::Hub
    })
}

/// Edges of `K_{3k-1} ∪ M_{n-3k+1}`. Needs `n >= 3k - 1`.
fn clique_side(n: u128, k: u128) -> u128 {
    choose2(3 * k - 1) + (n + 1 - 3 * k) / 2
}

/// Edges of `K_{k-1} + M_{n-k+1}`. Needs `n >= k - 1`.
fn hub_side(n: u128, k: u128) -> u128 {
    let m = n + 1 - k;
    choose2(k - 1) + m * (k - 1) + m / 2
}

/// `ex(n, k·P3)`: the maximum number of edges in an `n`-vertex graph with
/// no `k` vertex-disjoint copies of `P3`.
pub fn ex_kp3(n: u64, k: u64) -> Result<u128, FormulaError> {
    let r = regime(n, k)?;
    let (n, k) = (n as u128, k as u128);
    Ok(match r {
        TuranRegime::Dense => choose2(n),
        TuranRegime::Clique => clique_side(n, k),
        TuranRegime::Boundary => choose2(3 * k - 1) + k,
        TuranRegime::Hub => hub_side(n, k),
    })
}

/// Edge counts of the two lower-bound constructions
/// `(K_{3k-1} ∪ M_{n-3k+1}, K_{k-1} + M_{n-k+1})`. Requires `n >= 3k`.
pub fn gorgol_lower_bounds(n: u64, k: u64) -> Result<(u128, u128), FormulaError> {
    check(n, k)?;
    let (n, k) = (n as u128, k as u128);
    if n < 3 * k {
        return Err(FormulaError::OrderTooSmall {
            n: n as u64,
            min: (3 * k) as u64,
        });
    }
    Ok((clique_side(n, k), hub_side(n, k)))
}

/// `⌊(l-2)n/2⌋`, the Erdős–Gallai upper bound on edges of an `n`-vertex
/// graph without a path on `l` vertices. Requires `n >= l >= 2`.
pub fn erdos_gallai_bound(n: u64, l: u64) -> Result<u128, FormulaError> {
    if l < 2 {
        return Err(FormulaError::PathTooShort(l));
    }
    if n < l {
        return Err(FormulaError::OrderTooSmall { n, min: l });
    }
    Ok((l as u128 - 2) * n as u128 / 2)
}

/// The large-order value `⌊(n-k+1)/2⌋ + (k-1)n - k(k-1)/2`, written the way
/// it was first conjectured. Algebraically the same as the hub construction
/// count; kept in this shape so the two can be checked against each other.
pub fn large_order_value(n: u64, k: u64) -> Result<u128, FormulaError> {
    check(n, k)?;
    if n + 1 < k {
        return Err(FormulaError::OrderTooSmall { n, min: k - 1 });
    }
    let (n, k) = (n as u128, k as u128);
    Ok((n + 1 - k) / 2 + (k - 1) * n - k * (k - 1) / 2)
}

/// One of the extremal constructions, described symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// `K_n`.
    Complete { n: u64 },
    /// `K_clique ∪ M_matching`.
    CliqueUnionMatching { clique: u64, matching: u64 },
    /// `K_hub + M_matching`.
    HubJoinMatching { hub: u64, matching: u64 },
}

impl Construction {
    pub fn order(&self) -> u64 {
        match *self {
            Construction::Complete { n } => n,
            Construction::CliqueUnionMatching { clique, matching } => clique + matching,
            Construction::HubJoinMatching { hub, matching } => hub + matching,
        }
    }

    pub fn edge_count(&self) -> u128 {
        match *self {
            Construction::Complete { n } => choose2(n as u128),
            Construction::CliqueUnionMatching { clique, matching } => choose2(clique as u128) + matching as u128 / 2,
            Construction::HubJoinMatching { hub, matching } => {
                let (h, m) = (hub as u128, matching as u128);
                choose2(h) + h * m + m / 2
            }
        }
    }

    /// Builds the graph. Clique or hub vertices come first, then the
    /// matching edges as consecutive pairs.
    pub fn build(&self) -> Result<Graph, FormulaError> {
        let n = self.order();
        if n > MAX_ORDER as u64 {
            return Err(FormulaError::TooLargeToRealize(n));
        }
        Ok(match *self {
            Construction::Complete { n } => Graph::complete(n as usize)?,
            Construction::CliqueUnionMatching { clique, matching } => {
                Graph::complete(clique as usize)?.disjoint_union(&Graph::matching(matching as usize)?)?
            }
            Construction::HubJoinMatching { hub, matching } => {
                Graph::complete(hub as usize)?.join(&Graph::matching(matching as usize)?)?
            }
        })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Construction::Complete { n } => write!(f, "K_{n}"),
            Construction::CliqueUnionMatching { clique, matching } => write!(f, "K_{clique} ∪ M_{matching}"),
            Construction::HubJoinMatching { hub, matching } => write!(f, "K_{hub} + M_{matching}"),
        }
    }
}

/// The extremal graphs for one `(n, k)`, deduplicated up to isomorphism.
#[derive(Debug, Clone)]
pub struct ExtremalFamily {
    pub n: u64,
    pub k: u64,
    pub regime: TuranRegime,
    pub descriptors: Vec<Construction>,
    /// Realised graphs, parallel to `descriptors`.
    pub graphs: Vec<Graph>,
}

/// Symbolic extremal constructions; works for any order. In the boundary
/// regime the clique-side construction comes first, and for `k = 1` the two
/// coincide (both are `M_4`) so only one is listed.
pub fn extremal_descriptors(n: u64, k: u64) -> Result<Vec<Construction>, FormulaError> {
    let clique = Construction::CliqueUnionMatching {
        clique: 3 * k - 1,
        matching: n.wrapping_sub(3 * k - 1),
    };
    let hub = Construction::HubJoinMatching {
        hub: k - 1,
        matching: n.wrapping_sub(k - 1),
    };
    Ok(match regime(n, k)? {
        TuranRegime::Dense => vec![Construction::Complete { n }],
        TuranRegime::Clique => vec![clique],
        TuranRegime::Boundary if k == 1 => vec![clique],
        TuranRegime::Boundary => vec![clique, hub],
        TuranRegime::Hub => vec![hub],
    })
}

/// Builds every extremal graph for `(n, k)`. Orders above [`MAX_ORDER`]
/// are rejected; use [`extremal_descriptors`] for those.
pub fn extremal_graphs(n: u64, k: u64) -> Result<ExtremalFamily, FormulaError> {
    let regime = regime(n, k)?;
    if n > MAX_ORDER as u64 {
        return Err(FormulaError::TooLargeToRealize(n));
    }
    let mut candidates = match regime {
        TuranRegime::Boundary => vec![
            Construction::CliqueUnionMatching {
                clique: 3 * k - 1,
                matching: 2 * k,
            },
            Construction::HubJoinMatching {
                hub: k - 1,
                matching: 4 * k,
            },
        ],
        _ => extremal_descriptors(n, k)?,
    };
    let mut descriptors = Vec::new();
    let mut graphs = Vec::new();
    let mut seen = Vec::new();
    for d in candidates.drain(..) {
        let g = d.build()?;
        let form = canonical_form(&g);
        if !seen.contains(&form) {
            seen.push(form);
            descriptors.push(d);
            graphs.push(g);
        }
    }
    Ok(ExtremalFamily {
        n,
        k,
        regime,
        descriptors,
        graphs,
    })
}
