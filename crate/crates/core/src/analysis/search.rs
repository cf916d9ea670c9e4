//! Hill climbing over small graphs toward high greedy/optimal ratios.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::AnalysisError;
use crate::graph::{generate, GeneratorSpec, Graph};
use crate::solvers::{exact_vertex_cover, greedy_vertex_cover, TieBreak, DEFAULT_BUDGET};

/// Largest graph the search will explore.
pub const SEARCH_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchState {
    /// Graph the walk is currently standing on.
    pub current: Graph,
    /// First graph that reached `best_ratio`.
    pub best: Graph,
    pub best_greedy: usize,
    pub best_optimal: usize,
    pub seed: u64,
    pub iterations: usize,
    pub accepted: usize,
}

impl SearchState {
    pub fn best_ratio(&self) -> f64 {
        self.best_greedy as f64 / self.best_optimal as f64
    }
}

/// Greedy (lowest-id) and optimal cover sizes.
fn sizes(g: &Graph) -> Result<(usize, usize), AnalysisError> {
    let greedy = greedy_vertex_cover(g, TieBreak::LowestId).len();
    let exact = exact_vertex_cover(g, DEFAULT_BUDGET)?.len();
    Ok((greedy, exact))
}

/// Compares `a.0 / a.1` with `b.0 / b.1` exactly.
fn cmp_ratio(a: (usize, usize), b: (usize, usize)) -> Ordering {
    (a.0 * b.1).cmp(&(b.0 * a.1))
}

/// Mutates one vertex pair per iteration (adding or removing that edge) and
/// keeps the mutation when the ratio does not drop. Mutations that would
/// remove the last edge are rejected.
///
/// Without `start`, the walk begins on a G(`n_max`, 0.3) graph drawn from
/// `seed`. The result is a pure function of the arguments.
pub fn counterexample_search(
    n_max: usize,
    iterations: usize,
    seed: u64,
    start: Option<Graph>,
) -> Result<SearchState, AnalysisError> {
    if n_max > SEARCH_MAX_N {
        return Err(AnalysisError::InvalidParam(format!(
            "n_max {n_max} exceeds {SEARCH_MAX_N}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = match start {
        Some(g) => {
            if g.n() > n_max {
                return Err(AnalysisError::InvalidParam(format!(
                    "start graph has {} vertices, more than n_max {n_max}",
                    g.n()
                )));
            }
            g
        }
        None => {
            if n_max < 2 {
                return Err(AnalysisError::InvalidParam(
                    "n_max must be at least 2".into(),
                ));
            }
            let g = generate(&GeneratorSpec::gnp(n_max, 0.3, rng.gen()))?;
            if g.m() == 0 {
                Graph::from_edge_list(n_max, [(0, 1)])?
            } else {
                g
            }
        }
    };
    if start.m() == 0 {
        return Err(AnalysisError::NoEdges);
    }

    let n = start.n();
    let mut current_sizes = sizes(&start)?;
    let mut state = SearchState {
        best: start.clone(),
        current: start,
        best_greedy: current_sizes.0,
        best_optimal: current_sizes.1,
        seed,
        iterations: 0,
        accepted: 0,
    };

    for _ in 0..iterations {
        state.iterations += 1;
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let (u, v) = (u.min(v), u.max(v));
        let Some(candidate) = toggle_edge(&state.current, u, v) else {
            continue;
        };
        let cand_sizes = sizes(&candidate)?;
        if cmp_ratio(cand_sizes, current_sizes) != Ordering::Less {
            if cmp_ratio(cand_sizes, (state.best_greedy, state.best_optimal)) == Ordering::Greater {
                state.best = candidate.clone();
                state.best_greedy = cand_sizes.0;
                state.best_optimal = cand_sizes.1;
            }
            state.current = candidate;
            current_sizes = cand_sizes;
            state.accepted += 1;
        }
    }
    Ok(state)
}

/// `g` with edge `(u, v)` flipped, or `None` if that would leave no edges.
fn toggle_edge(g: &Graph, u: usize, v: usize) -> Option<Graph> {
    let mut edges = g.edges().to_vec();
    match edges.binary_search(&(u, v)) {
        Ok(i) => {
            edges.remove(i);
        }
        Err(i) => edges.insert(i, (u, v)),
    }
    if edges.is_empty() {
        return None;
    }
    let mut out = Graph::from_sorted_unique(g.n(), edges);
    if let Some(labels) = g.labels() {
        out = out
            .with_labels(labels.iter().cloned())
            .expect("labels were valid");
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Model;

    #[test]
    fn zero_iterations_reports_start() {
        let s = counterexample_search(10, 0, 3, None).unwrap();
        assert_eq!(s.iterations, 0);
        assert!(s.best_ratio() >= 1.0);
        assert_eq!(s.current, s.best);
    }

    #[test]
    fn crown_start_keeps_its_ratio() {
        let crown = generate(&GeneratorSpec::new(Model::Crown { k: 4 }, 0)).unwrap();
        let s = counterexample_search(12, 300, 1, Some(crown)).unwrap();
        assert!(s.best_ratio() >= 1.25);
        // the walk never moves to a lower ratio
        let cur = sizes(&s.current).unwrap();
        assert_ne!(cmp_ratio(cur, (5, 4)), Ordering::Less);
    }

    #[test]
    fn monotone_in_iterations() {
        let mut last = 0.0;
        for iters in [0, 20, 60, 150] {
            let s = counterexample_search(9, iters, 11, None).unwrap();
            assert!(s.best_ratio() >= last);
            last = s.best_ratio();
        }
    }

    #[test]
    fn deterministic() {
        let a = counterexample_search(8, 100, 5, None).unwrap();
        let b = counterexample_search(8, 100, 5, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_large_n() {
        assert!(counterexample_search(17, 1, 0, None).is_err());
    }

    #[test]
    fn ratio_comparison_is_exact() {
        assert_eq!(cmp_ratio((4, 3), (8, 6)), Ordering::Equal);
        assert_eq!(cmp_ratio((5, 4), (4, 3)), Ordering::Less);
    }
}
