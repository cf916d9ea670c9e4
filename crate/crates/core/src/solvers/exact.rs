//! Branch-and-bound minimum vertex cover.
//!
//! At every node the vertex `u` of highest residual degree is chosen. Either
//! `u` joins the cover, or it stays out and then every live neighbor of `u`
//! must join. A node is cut when the partial cover plus a maximal-matching
//! lower bound on the residual graph cannot beat the incumbent. The incumbent
//! starts as the greedy cover.

use super::greedy::{self, TieBreak};
use super::{Algorithm, CoverResult, SolveError, SolveTrace};
use crate::graph::{Graph, VertexId};

/// Default branch-node budget.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub fn exact_vertex_cover(g: &Graph, budget: u64) -> Result<CoverResult, SolveError> {
    let initial = greedy::greedy_vertex_cover(g, TieBreak::LowestId).cover;
    let mut search = Search {
        g,
        alive: vec![true; g.n()],
        degree: g.degrees(),
        partial: Vec::new(),
        best: initial,
        nodes: 0,
        budget,
        exhausted: false,
        matched: vec![false; g.n()],
    };
    search.branch();

    let mut cover = search.best;
    cover.sort_unstable();
    let result = CoverResult {
        cover,
        trace: SolveTrace::default(),
        algorithm: Algorithm::Exact,
        proven_optimal: !search.exhausted,
    };
    if search.exhausted {
        Err(SolveError::BudgetExceeded {
            budget,
            best: Box::new(result),
        })
    } else {
        Ok(result)
    }
}

struct Search<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    partial: Vec<VertexId>,
    best: Vec<VertexId>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    matched: Vec<bool>,
}

impl Search<'_> {
    fn branch(&mut self) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }

        let Some(u) = self.max_degree_vertex() else {
            if self.partial.len() < self.best.len() {
                self.best = self.partial.clone();
            }
            return;
        };
        if self.partial.len() + self.matching_bound() >= self.best.len() {
            return;
        }

        // u in the cover
        self.take(u);
        self.branch();
        self.untake(u);

        // u out of the cover: all its live neighbors in
        let neighbors: Vec<VertexId> = self
            .g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| self.alive[w])
            .collect();
        if self.partial.len() + neighbors.len() >= self.best.len() {
            return;
        }
        for &w in &neighbors {
            self.take(w);
        }
        self.branch();
        for &w in neighbors.iter().rev() {
            self.untake(w);
        }
    }

    fn max_degree_vertex(&self) -> Option<VertexId> {
        let mut best: Option<VertexId> = None;
        for v in 0..self.degree.len() {
            if self.alive[v]
                && self.degree[v] > 0
                && best.is_none_or(|b| self.degree[v] > self.degree[b])
            {
                best = Some(v);
            }
        }
        best
    }

    /// Size of a greedy maximal matching among live vertices.
    fn matching_bound(&mut self) -> usize {
        self.matched.iter_mut().for_each(|m| *m = false);
        let mut size = 0;
        for u in 0..self.degree.len() {
            if !self.alive[u] || self.matched[u] || self.degree[u] == 0 {
                continue;
            }
            let g = self.g;
            if let Some(&w) = g
                .neighbors(u)
                .iter()
                .find(|&&w| self.alive[w] && !self.matched[w])
            {
                self.matched[u] = true;
                self.matched[w] = true;
                size += 1;
            }
        }
        size
    }

    fn take(&mut self, v: VertexId) {
        self.alive[v] = false;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.degree[w] -= 1;
            }
        }
        self.partial.push(v);
    }

    fn untake(&mut self, v: VertexId) {
        let popped = self.partial.pop();
        debug_assert_eq!(popped, Some(v));
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.degree[w] += 1;
            }
        }
        self.alive[v] = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::graph::{generate, GeneratorSpec, Model};
    use crate::solvers::{brute_force_vertex_cover, is_vertex_cover};

    fn exact(g: &Graph) -> CoverResult {
        exact_vertex_cover(g, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn small_families() {
        let k3 = generate(&GeneratorSpec::new(Model::Complete { n: 3 }, 0)).unwrap();
        assert_eq!(exact(&k3).len(), 2);
        let star = generate(&GeneratorSpec::new(Model::Star { n: 8 }, 0)).unwrap();
        assert_eq!(exact(&star).cover, vec![0]);
        let crown = generate(&GeneratorSpec::new(Model::Crown { k: 4 }, 0)).unwrap();
        assert_eq!(exact(&crown).cover, vec![1, 2, 3, 4]);
        assert!(exact(&Graph::empty(4)).is_empty());
    }

    #[test]
    fn fig1_is_three() {
        let g = fig1();
        let r = exact(&g);
        assert_eq!(r.len(), 3);
        assert!(r.proven_optimal);
        assert!(is_vertex_cover(&g, &r.cover));
    }

    #[test]
    fn budget_exhaustion_keeps_a_cover() {
        let g = generate(&GeneratorSpec::gnp(40, 0.3, 1)).unwrap();
        match exact_vertex_cover(&g, 3) {
            Err(SolveError::BudgetExceeded { best, budget }) => {
                assert_eq!(budget, 3);
                assert!(!best.proven_optimal);
                assert!(is_vertex_cover(&g, &best.cover));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..150 {
            let n = 3 + (seed as usize % 12);
            let g = generate(&GeneratorSpec::gnp(n, 0.35, seed)).unwrap();
            let e = exact(&g);
            assert!(is_vertex_cover(&g, &e.cover));
            assert_eq!(
                e.len(),
                brute_force_vertex_cover(&g).unwrap().len(),
                "seed {seed}"
            );
        }
    }
}
