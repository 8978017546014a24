//! Exact, desk-scale tooling for near-optimal colourability of graph families
//! defined by two forbidden induced subgraphs.
//!
//! A family of graphs is *near optimal colourable* when a single constant `c`
//! bounds every member's chromatic number by `max(c, omega)`. This crate
//! decides that property for `(H1, H2)`-free families via a structural case
//! analysis, materializes the witness families that refute it, and verifies
//! the underlying colouring bounds and structural claims over graph6 corpora
//! with exact clique and chromatic solvers.
//!
//! The pieces:
//!
//! - [`graph`]: immutable bitset graphs and the operators (complement,
//!   disjoint union, join, blow-up, induced subgraph).
//! - [`catalog`] and [`names`]: named graphs and the tiny expression grammar
//!   (`"2K2"`, `"P4vK2"`, `"K4-e"`) used on the command line.
//! - [`graph6`]: bit-exact graph6 interchange.
//! - [`iso`]: induced-subgraph containment and freeness tests.
//! - [`recognize`]: forest / linear-forest / join-shape recognizers.
//! - [`solver`]: exact clique number, chromatic number, odd-hole detection,
//!   perfectness at small orders.
//! - [`classify`]: the decision procedure mapping a pair `(H1, H2)` to a
//!   verdict with constants and witness descriptors.
//! - [`c5`]: the neighbourhood decompositions around an induced C5 or a big
//!   antihole, with checkers for the structural claims they support.
//! - [`harness`]: streaming graph6 verification (filter, sweep, report).
//! - [`cli`]: the `noc` command-line surface.

pub mod c5;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod names;
pub mod recognize;
pub mod solver;

pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
