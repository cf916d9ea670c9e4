//! Vertex cover solvers.
//!
//! * [`greedy_vertex_cover`]: repeatedly take the vertex of highest residual
//!   degree until no edge is left.
//! * [`matching_vertex_cover`]: take both endpoints of a maximal matching,
//!   the classical 2-approximation.
//! * [`exact_vertex_cover`]: branch-and-bound minimum cover.
//! * [`brute_force_vertex_cover`]: subset enumeration, used to cross-check
//!   the exact solver on small graphs.
//!
//! Every solver is a pure function of its inputs and returns a
//! [`CoverResult`] whose cover is sorted by vertex id.

mod brute;
mod exact;
mod greedy;
mod matching;

pub use brute::{brute_force_vertex_cover, BRUTE_FORCE_MAX_N};
pub use exact::{exact_vertex_cover, DEFAULT_BUDGET};
pub use greedy::{
    greedy_independent_set, greedy_vertex_cover, greedy_vertex_cover_scripted, GreedyPolicy,
    PickScript, TieBreak, WeightTable,
};
pub use matching::{matching_vertex_cover, EdgeOrder};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Greedy,
    Matching,
    Exact,
    BruteForce,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Matching => "matching",
            Algorithm::Exact => "exact",
            Algorithm::BruteForce => "brute-force",
        })
    }
}

/// One recorded decision of a solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// Greedy selection of `vertex` at residual weight `weight`, the maximum
    /// at that moment. `ties` lists every vertex sharing that weight.
    Pick {
        vertex: VertexId,
        weight: usize,
        ties: Vec<VertexId>,
    },
    /// Matching edge whose endpoints both entered the cover.
    Edge(VertexId, VertexId),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveTrace {
    pub steps: Vec<TraceStep>,
}

impl SolveTrace {
    /// Vertices picked by the greedy solver, in order.
    pub fn picks(&self) -> Vec<VertexId> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                TraceStep::Pick { vertex, .. } => Some(*vertex),
                TraceStep::Edge(..) => None,
            })
            .collect()
    }

    /// Edges chosen by the matching solver, in order.
    pub fn matching_edges(&self) -> Vec<(VertexId, VertexId)> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                TraceStep::Edge(u, v) => Some((*u, *v)),
                TraceStep::Pick { .. } => None,
            })
            .collect()
    }

    /// Human-readable narration, one line per step, using graph labels.
    pub fn narrate(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            let line = match step {
                TraceStep::Pick {
                    vertex,
                    weight,
                    ties,
                } => {
                    let tie_names: Vec<_> = ties.iter().map(|&t| g.label(t)).collect();
                    let mut line = format!(
                        "step {}: pick {} (weight {})",
                        i + 1,
                        g.label(*vertex),
                        weight
                    );
                    if ties.len() > 1 {
                        line.push_str(&format!(", tied with {{{}}}", tie_names.join(", ")));
                    }
                    line
                }
                TraceStep::Edge(u, v) => {
                    format!(
                        "step {}: take edge ({}, {})",
                        i + 1,
                        g.label(*u),
                        g.label(*v)
                    )
                }
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    /// Cover vertices in increasing id order.
    pub cover: Vec<VertexId>,
    pub trace: SolveTrace,
    pub algorithm: Algorithm,
    /// Set when the cover is known to be minimum.
    pub proven_optimal: bool,
}

impl CoverResult {
    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.cover.binary_search(&v).is_ok()
    }

    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.cover.iter().map(|&v| g.label(v)).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The exact solver ran out of branch nodes. `best` is the smallest cover
    /// found, not proven minimum.
    #[error("node budget of {budget} exhausted; best cover found has size {}", best.len())]
    BudgetExceeded { budget: u64, best: Box<CoverResult> },
    #[error("graph has {0} vertices; brute force is limited to {BRUTE_FORCE_MAX_N}")]
    TooLarge(usize),
    #[error("pick script step {step}: {reason}")]
    InvalidScript { step: usize, reason: String },
}

/// True iff every edge of `g` has at least one endpoint in `set`.
/// Ids outside the graph are ignored.
pub fn is_vertex_cover(g: &Graph, set: &[VertexId]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v < g.n() {
            member[v] = true;
        }
    }
    g.edges().iter().all(|&(u, v)| member[u] || member[v])
}

/// True iff no edge of `g` has both endpoints in `set`.
pub fn is_independent_set(g: &Graph, set: &[VertexId]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v < g.n() {
            member[v] = true;
        }
    }
    !g.edges().iter().any(|&(u, v)| member[u] && member[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;

    #[test]
    fn cover_predicate() {
        let g = fig1();
        let scripted: Vec<_> = ["a", "c", "d", "f"]
            .iter()
            .map(|l| g.vertex_by_label(l).unwrap())
            .collect();
        assert!(is_vertex_cover(&g, &scripted));
        assert!(is_vertex_cover(&g, &(0..g.n()).collect::<Vec<_>>()));
        assert!(!is_vertex_cover(&g, &scripted[1..]));

        let edge = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert!(!is_vertex_cover(&edge, &[]));
        assert!(is_vertex_cover(&Graph::empty(3), &[]));
    }

    #[test]
    fn independence_predicate() {
        let g = fig1();
        assert!(is_independent_set(&g, &[0, 2, 6]));
        assert!(!is_independent_set(&g, &[0, 1]));
    }
}
