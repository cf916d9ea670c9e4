//! Measuring how far the greedy cover is from optimal.
//!
//! The slack is reported in ratio form: `epsilon = 2 - |greedy| / |optimal|`.
//! An instance with `epsilon < 0` would be one where greedy is worse than a
//! factor of two; such instances are counted, never dropped.

mod probe;
mod report;
mod search;
mod sweep;

pub use probe::{memory_cells, runtime_scaling_probe, ProbeReport, ProbeRow, ProbeSample};
pub use report::{ExperimentReport, ReportRow, Summary, EPSILON_DEFINITION, SCHEMA_VERSION};
pub use search::{counterexample_search, SearchState, SEARCH_MAX_N};
pub use sweep::{benchmark_sweep, derive_seed, SweepOptions};

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::solvers::{
    exact_vertex_cover, matching_vertex_cover, EdgeOrder, GreedyPolicy, SolveError, DEFAULT_BUDGET,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("graph has no edges; the approximation ratio is undefined")]
    NoEdges,
    #[error("exact oracle exceeded its budget of {0} nodes")]
    OracleBudgetExceeded(u64),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(SolveError),
}

impl From<SolveError> for AnalysisError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { budget, .. } => {
                AnalysisError::OracleBudgetExceeded(budget)
            }
            other => AnalysisError::Solve(other),
        }
    }
}

/// Greedy cover size against the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsilonEstimate {
    pub greedy_size: usize,
    pub optimal_size: usize,
    /// `greedy_size / optimal_size`, at least 1.
    pub ratio: f64,
    /// `2 - ratio`, at most 1. Negative means worse than a 2-approximation.
    pub epsilon: f64,
}

impl EpsilonEstimate {
    /// `None` when `optimal_size` is zero.
    pub fn from_sizes(greedy_size: usize, optimal_size: usize) -> Option<Self> {
        if optimal_size == 0 {
            return None;
        }
        let ratio = greedy_size as f64 / optimal_size as f64;
        Some(EpsilonEstimate {
            greedy_size,
            optimal_size,
            ratio,
            epsilon: 2.0 - ratio,
        })
    }
}

/// Greedy with lowest-id ties against the exact optimum.
pub fn epsilon_estimate(g: &Graph) -> Result<EpsilonEstimate, AnalysisError> {
    epsilon_estimate_with(g, &GreedyPolicy::default(), DEFAULT_BUDGET)
}

pub fn epsilon_estimate_with(
    g: &Graph,
    policy: &GreedyPolicy,
    budget: u64,
) -> Result<EpsilonEstimate, AnalysisError> {
    if g.m() == 0 {
        return Err(AnalysisError::NoEdges);
    }
    let greedy = policy.solve(g)?;
    let exact = exact_vertex_cover(g, budget)?;
    Ok(EpsilonEstimate::from_sizes(greedy.len(), exact.len()).expect("graph has an edge"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareOptions {
    pub with_exact: bool,
    pub greedy: GreedyPolicy,
    pub edge_order: EdgeOrder,
    pub budget: u64,
    /// Timed repetitions per algorithm; the median is reported.
    pub repetitions: usize,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            with_exact: true,
            greedy: GreedyPolicy::default(),
            edge_order: EdgeOrder::Lexicographic,
            budget: DEFAULT_BUDGET,
            repetitions: 5,
        }
    }
}

/// Median wall time per algorithm, in nanoseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Timings {
    pub greedy_ns: u64,
    pub matching_ns: u64,
    pub exact_ns: Option<u64>,
}

/// Cover sizes of the three algorithms on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub m: usize,
    pub greedy_size: usize,
    pub matching_size: usize,
    pub exact_size: Option<usize>,
    pub estimate: Option<EpsilonEstimate>,
    pub timings: Timings,
}

impl ComparisonRow {
    pub fn epsilon(&self) -> Option<f64> {
        self.estimate.map(|e| e.epsilon)
    }
}

pub fn compare_algorithms(
    g: &Graph,
    opts: &CompareOptions,
) -> Result<ComparisonRow, AnalysisError> {
    let reps = opts.repetitions.max(1);
    let (greedy, greedy_ns) = timed_median(reps, || opts.greedy.solve(g));
    let greedy = greedy?;
    let (matching, matching_ns) = timed_median(reps, || matching_vertex_cover(g, opts.edge_order));

    let (exact_size, exact_ns) = if opts.with_exact {
        let (exact, ns) = timed_median(reps, || exact_vertex_cover(g, opts.budget));
        (Some(exact?.len()), Some(ns))
    } else {
        (None, None)
    };

    Ok(ComparisonRow {
        n: g.n(),
        m: g.m(),
        greedy_size: greedy.len(),
        matching_size: matching.len(),
        exact_size,
        estimate: exact_size.and_then(|opt| EpsilonEstimate::from_sizes(greedy.len(), opt)),
        timings: Timings {
            greedy_ns,
            matching_ns,
            exact_ns,
        },
    })
}

/// Runs `f` `reps` times; returns the last output and the median duration.
pub(crate) fn timed_median<T>(reps: usize, mut f: impl FnMut() -> T) -> (T, u64) {
    let mut times = Vec::with_capacity(reps);
    let mut out = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let r = std::hint::black_box(f());
        times.push(start.elapsed().as_nanos() as u64);
        out = Some(r);
    }
    times.sort_unstable();
    (
        out.expect("at least one repetition"),
        times[times.len() / 2],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1, fig1_script};
    use crate::graph::{generate, GeneratorSpec, Model};
    use crate::solvers::TieBreak;

    fn model(m: Model) -> Graph {
        generate(&GeneratorSpec::new(m, 0)).unwrap()
    }

    #[test]
    fn star_is_optimal() {
        let e = epsilon_estimate(&model(Model::Star { n: 5 })).unwrap();
        assert_eq!((e.greedy_size, e.optimal_size), (1, 1));
        assert_eq!(e.ratio, 1.0);
        assert_eq!(e.epsilon, 1.0);
    }

    #[test]
    fn fig1_estimates() {
        let g = fig1();
        let lowest = epsilon_estimate(&g).unwrap();
        assert_eq!((lowest.greedy_size, lowest.optimal_size), (3, 3));
        assert_eq!(lowest.epsilon, 1.0);

        let policy = GreedyPolicy::scripted(fig1_script(&g), TieBreak::LowestId);
        let e = epsilon_estimate_with(&g, &policy, DEFAULT_BUDGET).unwrap();
        assert_eq!((e.greedy_size, e.optimal_size), (4, 3));
        assert!((e.ratio - 4.0 / 3.0).abs() < 1e-12);
        assert!((e.epsilon - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn crown_estimate() {
        let e = epsilon_estimate(&model(Model::Crown { k: 4 })).unwrap();
        assert_eq!((e.greedy_size, e.optimal_size), (5, 4));
        assert_eq!(e.epsilon, 0.75);
    }

    #[test]
    fn no_edges_is_an_error() {
        assert_eq!(
            epsilon_estimate(&Graph::empty(3)),
            Err(AnalysisError::NoEdges)
        );
    }

    #[test]
    fn compare_fixed_instances() {
        let g = fig1();
        let opts = CompareOptions {
            greedy: GreedyPolicy::scripted(fig1_script(&g), TieBreak::LowestId),
            ..Default::default()
        };
        let row = compare_algorithms(&g, &opts).unwrap();
        assert_eq!(
            (row.exact_size, row.matching_size, row.greedy_size),
            (Some(3), 6, 4)
        );

        let row = compare_algorithms(&Graph::empty(4), &CompareOptions::default()).unwrap();
        assert_eq!(
            (row.exact_size, row.matching_size, row.greedy_size),
            (Some(0), 0, 0)
        );
        assert_eq!(row.estimate, None);

        let k6 = model(Model::Complete { n: 6 });
        let row = compare_algorithms(&k6, &CompareOptions::default()).unwrap();
        assert_eq!(
            (row.exact_size, row.greedy_size, row.matching_size),
            (Some(5), 5, 6)
        );
    }

    #[test]
    fn compare_without_oracle() {
        let opts = CompareOptions {
            with_exact: false,
            ..Default::default()
        };
        let row = compare_algorithms(&fig1(), &opts).unwrap();
        assert_eq!(row.exact_size, None);
        assert_eq!(row.timings.exact_ns, None);
        assert_eq!(row.estimate, None);
    }

    #[test]
    fn budget_error_propagates() {
        let g = generate(&GeneratorSpec::gnp(40, 0.4, 2)).unwrap();
        let opts = CompareOptions {
            budget: 2,
            repetitions: 1,
            ..Default::default()
        };
        assert_eq!(
            compare_algorithms(&g, &opts),
            Err(AnalysisError::OracleBudgetExceeded(2))
        );
    }
}
