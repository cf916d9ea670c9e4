//! Experiments with approximate and exact minimum vertex cover.
//!
//! The crate is organized in three layers:
//!
//! * [`graph`]: immutable simple graphs, DIMACS and edge-list I/O, and seeded
//!   generators.
//! * [`solvers`]: max-degree greedy, maximal-matching 2-approximation,
//!   branch-and-bound exact, and brute-force covers.
//! * [`analysis`]: approximation ratios, the `epsilon = 2 - ratio` slack,
//!   algorithm comparisons, benchmark sweeps, a hill-climbing search for bad
//!   greedy instances, and a runtime scaling probe.
//!
//! ```
//! use vc_lab::fixtures::fig1;
//! use vc_lab::solvers::{exact_vertex_cover, greedy_vertex_cover, TieBreak, DEFAULT_BUDGET};
//!
//! let g = fig1();
//! let greedy = greedy_vertex_cover(&g, TieBreak::LowestId);
//! let exact = exact_vertex_cover(&g, DEFAULT_BUDGET).unwrap();
//! assert_eq!(greedy.labels(&g), ["b", "d", "e"]);
//! assert_eq!(exact.len(), 3);
//! ```

pub mod analysis;
pub mod fixtures;
pub mod graph;
pub mod solvers;

pub use graph::{Graph, GraphError, VertexId};
pub use solvers::{is_vertex_cover, CoverResult, SolveError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/greedy.md")]
    mod greedy {}
    #[doc = include_str!("../../../book/src/baselines.md")]
    mod baselines {}
    #[doc = include_str!("../../../book/src/epsilon.md")]
    mod epsilon {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
}
