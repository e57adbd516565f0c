//! Exact Turán numbers `ex(n, k·P3)` for vertex-disjoint copies of the
//! three-vertex path, the extremal graphs that attain them, and the
//! machinery to check all of it exhaustively at small orders.
//!
//! * [`graph`], [`graph6`] and [`canon`]: a compact simple-graph type, the
//!   graph6 interchange format and canonical forms for isomorphism tests.
//! * [`formula`]: the piecewise closed form, the four regimes and the
//!   extremal constructions, plus the classical bounds used as cross-checks.
//! * [`packing`]: an exact branch-and-bound for maximum P3-packings.
//! * [`lemmas`]: the leftover decomposition and executable structural lemmas.
//! * [`enumerate`]: isomorph-free generation of `k·P3`-free graphs and the
//!   verification sweeps built on top of it.
//!
//! ```
//! use kp3::{formula, packing, Graph};
//!
//! assert_eq!(formula::ex_kp3(9, 2).unwrap(), 12);
//! let family = formula::extremal_graphs(9, 2).unwrap();
//! assert_eq!(family.graphs.len(), 2);
//! for g in &family.graphs {
//!     assert_eq!(g.edge_count(), 12);
//!     assert!(!packing::contains_k_p3(g, 2).found);
//! }
//! # let _ = Graph::complete(3);
//! ```

mod bits;
pub mod canon;
pub mod enumerate;
pub mod formula;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod packing;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use graph::{Graph, GraphError, MAX_ORDER};
pub use packing::{Packing, PathTriple};
