//! Closed-walk counting, subgraph census and spectral moments for graphs
//! with self-loops.
//!
//! A [`SelfLoopGraph`] is a simple undirected graph together with a set `S`
//! of vertices that each carry one loop. Its adjacency matrix has `a_ii = 1`
//! exactly for `i ∈ S`, so `trace(A) = σ = |S|`.
//!
//! The crate provides two independent routes to the same numbers:
//!
//! * [`walks`] evaluates closed-walk counts `w_1..w_4` from degree data and
//!   the substructure counts gathered by [`census`], and closed forms for the
//!   standard families built by [`families`];
//! * [`oracle`] counts closed walks by brute-force enumeration and by exact
//!   integer matrix powers.
//!
//! [`spectral`] computes the eigenvalues of `A(G_S)` with a cyclic Jacobi
//! solver, the twisted moments `𝓜_q = Σ |λ_i − σ/n|^q`, the energy, and
//! evaluates the moment and energy inequalities as [`spectral::BoundRecord`]s.
//!
//! ```
//! use selfloop_core::{families, oracle, walks, Family, FamilySpec};
//!
//! let spec = FamilySpec::with_loops(Family::Complete { n: 4 }, vec![0, 1, 3]);
//! let k4 = families::generate(&spec).unwrap();
//! assert_eq!(walks::w4_formula(&k4).unwrap(), 207);
//! assert_eq!(oracle::trace_power(&k4, 4).unwrap(), 207);
//! ```

pub mod census;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod spectral;
pub mod walks;

pub use census::SubgraphCensus;
pub use error::{Error, Result};
pub use families::{Family, FamilySpec, LoopPlacement};
pub use graph::{AdjacencyMatrix, SelfLoopGraph};
pub use spectral::{BoundRecord, MomentReport, Spectrum};
pub use walks::{PathLoopProfile, WalkCounts};
