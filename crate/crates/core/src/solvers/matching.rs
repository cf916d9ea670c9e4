use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Algorithm, CoverResult, SolveTrace, TraceStep};
use crate::graph::Graph;

/// Order in which edges are offered to the matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    #[default]
    Lexicographic,
    SeededRandom(u64),
}

/// Classical 2-approximation: scan edges, and whenever an edge has both
/// endpoints uncovered, put both into the cover.
///
/// The chosen edges form a maximal matching `M`, so the cover has exactly
/// `2|M|` vertices, and since any cover needs one endpoint of each matching
/// edge it is at most twice the optimum.
pub fn matching_vertex_cover(g: &Graph, order: EdgeOrder) -> CoverResult {
    let mut edges = g.edges().to_vec();
    if let EdgeOrder::SeededRandom(seed) = order {
        edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }

    let mut covered = vec![false; g.n()];
    let mut steps = Vec::new();
    for (u, v) in edges {
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            steps.push(TraceStep::Edge(u, v));
        }
    }

    CoverResult {
        cover: (0..g.n()).filter(|&v| covered[v]).collect(),
        trace: SolveTrace { steps },
        algorithm: Algorithm::Matching,
        proven_optimal: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::graph::{generate, GeneratorSpec};

    #[test]
    fn small_cases() {
        let edge = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(
            matching_vertex_cover(&edge, EdgeOrder::Lexicographic).cover,
            vec![0, 1]
        );
        assert!(matching_vertex_cover(&Graph::empty(4), EdgeOrder::Lexicographic).is_empty());
    }

    #[test]
    fn fig1_three_rounds() {
        // a-b, then c-d (b-c is blocked), then e-f
        let g = fig1();
        let r = matching_vertex_cover(&g, EdgeOrder::Lexicographic);
        assert_eq!(r.trace.matching_edges(), vec![(0, 1), (2, 3), (4, 5)]);
        assert_eq!(r.labels(&g), ["a", "b", "c", "d", "e", "f"]);
    }

    #[test]
    fn picked_edges_form_maximal_matching() {
        for seed in 0..100 {
            let g = generate(&GeneratorSpec::gnp(20, 0.2, seed)).unwrap();
            for order in [EdgeOrder::Lexicographic, EdgeOrder::SeededRandom(seed)] {
                let r = matching_vertex_cover(&g, order);
                let m = r.trace.matching_edges();
                let mut seen = vec![false; g.n()];
                for &(u, v) in &m {
                    assert!(g.has_edge(u, v));
                    assert!(!seen[u] && !seen[v]);
                    seen[u] = true;
                    seen[v] = true;
                }
                assert!(g.edges().iter().all(|&(u, v)| seen[u] || seen[v]));
                assert_eq!(r.len(), 2 * m.len());
            }
        }
    }
}
