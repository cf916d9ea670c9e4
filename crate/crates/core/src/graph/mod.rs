//! Simple undirected graphs stored as sorted adjacency lists.
//!
//! A [`Graph`] is validated once at construction and never mutated afterwards.
//! Solvers that need residual state keep it in their own tables.

mod generate;
mod io;

pub use generate::{generate, GeneratorSpec, Model};
pub use io::{parse_dimacs, parse_edge_list, write_dimacs, write_edge_list, ParseMode};

use std::fmt;

use thiserror::Error;

/// 0-based vertex index into the owning graph.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("missing problem line")]
    MissingProblemLine,
    #[error("declared {declared} edges but parsed {parsed}")]
    EdgeCountMismatch { declared: usize, parsed: usize },
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

/// An immutable simple undirected graph.
///
/// Edges are kept as `(u, v)` pairs with `u < v`, sorted lexicographically,
/// and every vertex has a sorted neighbor list. Two graphs compare equal when
/// they have the same vertex count, edge set and labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from unordered vertex pairs.
    ///
    /// Self-loops, out-of-range endpoints and repeated pairs (in either
    /// orientation) are rejected.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, edges))
    }

    /// `edges` must already be normalized (`u < v`), sorted and free of repeats.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
            labels: None,
        }
    }

    /// Attaches display names. Labels must be non-empty, free of
    /// whitespace and distinct, one per vertex.
    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(GraphError::InvalidParam(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(GraphError::InvalidParam(format!("bad label {l:?}")));
            }
            if labels[..i].contains(l) {
                return Err(GraphError::InvalidParam(format!("repeated label {l:?}")));
            }
        }
        self.labels = (!labels.is_empty()).then_some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if the graph is labelled, else its id.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a label, or a decimal id when the graph is unlabelled.
    pub fn vertex_by_label(&self, name: &str) -> Option<VertexId> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == name),
            None => name.parse().ok().filter(|&v| v < self.n),
        }
    }

    /// Number of stored adjacency entries, one per edge endpoint (`2m`).
    pub fn adjacency_cells(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// The graph on the same vertices whose edges are exactly the non-edges
    /// of `self`. Labels carry over.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.m());
        for u in 0..self.n {
            let adj = &self.adjacency[u];
            let mut k = adj.partition_point(|&x| x <= u);
            for v in u + 1..self.n {
                if k < adj.len() && adj[k] == v {
                    k += 1;
                } else {
                    edges.push((u, v));
                }
            }
        }
        let mut g = Graph::from_sorted_unique(self.n, edges);
        g.labels = self.labels.clone();
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("labels", &self.labels)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.degrees(), vec![1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange(3))
        );
    }

    #[test]
    fn fig1_degrees() {
        let g = crate::fixtures::fig1();
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 8);
        let d = g.vertex_by_label("d").unwrap();
        let deg = g.degrees();
        assert_eq!(deg[d], 4);
        assert_eq!(deg.iter().filter(|&&x| x == 4).count(), 1);
        assert_eq!(deg.iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn complement_basics() {
        let k4 =
            Graph::from_edge_list(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(k4.complement().m(), 0);
        let tri = Graph::empty(3).complement();
        assert_eq!(tri.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let g = crate::fixtures::fig1();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().m(), 21 - 8);
    }

    #[test]
    fn labels_are_validated() {
        let g = Graph::empty(2);
        assert!(g.clone().with_labels(["a"]).is_err());
        assert!(g.clone().with_labels(["a", "a"]).is_err());
        assert!(g.clone().with_labels(["a", "b c"]).is_err());
        let g = g.with_labels(["x", "y"]).unwrap();
        assert_eq!(g.vertex_by_label("y"), Some(1));
        assert_eq!(g.label(0), "x");
    }
}
