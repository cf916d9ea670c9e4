use std::fmt;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{parse_dimacs, Graph, GraphError, ParseMode};

/// Graph family to draw from.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// G(n, p): every pair present independently with probability `p`.
    Gnp {
        n: usize,
        p: f64,
    },
    /// Vertex 0 joined to `1..n`.
    Star {
        n: usize,
    },
    /// `0 - 1 - ... - (n-1)`.
    Path {
        n: usize,
    },
    /// Center 0 joined to mids `1..=k`; mid `i` has a private leaf `i + k`.
    Crown {
        k: usize,
    },
    Complete {
        n: usize,
    },
    DimacsFile(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub model: Model,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(model: Model, seed: u64) -> Self {
        GeneratorSpec { model, seed }
    }

    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        Self::new(Model::Gnp { n, p }, seed)
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GeneratorSpec {
            model: self.model.clone(),
            seed,
        }
    }

    /// Whether the output depends on the seed.
    pub fn is_random(&self) -> bool {
        matches!(self.model, Model::Gnp { .. })
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Gnp { n, p } => write!(f, "gnp(n={n},p={p})"),
            Model::Star { n } => write!(f, "star({n})"),
            Model::Path { n } => write!(f, "path({n})"),
            Model::Crown { k } => write!(f, "crown({k})"),
            Model::Complete { n } => write!(f, "complete({n})"),
            Model::DimacsFile(p) => write!(f, "file({})", p.display()),
        }
    }
}

/// Builds the graph described by `spec`. Output is a pure function of `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    let g = match &spec.model {
        &Model::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GraphError::InvalidParam(format!("p = {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_sorted_unique(n, edges)
        }
        &Model::Star { n } => Graph::from_sorted_unique(n, (1..n).map(|v| (0, v)).collect()),
        &Model::Path { n } => Graph::from_sorted_unique(n, (1..n).map(|v| (v - 1, v)).collect()),
        &Model::Crown { k } => {
            let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            edges.extend((1..=k).map(|i| (i, i + k)));
            edges.sort_unstable();
            Graph::from_sorted_unique(2 * k + 1, edges)
        }
        &Model::Complete { n } => Graph::from_sorted_unique(
            n,
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
        ),
        Model::DimacsFile(path) => {
            let text = std::fs::read_to_string(path)?;
            parse_dimacs(&text, ParseMode::Strict)?
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(model: Model) -> Graph {
        generate(&GeneratorSpec::new(model, 0)).unwrap()
    }

    #[test]
    fn star_degrees() {
        assert_eq!(gen(Model::Star { n: 5 }).degrees(), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn gnp_boundaries() {
        assert_eq!(gen(Model::Gnp { n: 10, p: 0.0 }).m(), 0);
        assert_eq!(gen(Model::Gnp { n: 10, p: 1.0 }).m(), 45);
        assert!(generate(&GeneratorSpec::gnp(3, 1.5, 0)).is_err());
        assert!(generate(&GeneratorSpec::gnp(3, f64::NAN, 0)).is_err());
    }

    #[test]
    fn gnp_is_seeded() {
        let a = generate(&GeneratorSpec::gnp(30, 0.3, 9)).unwrap();
        let b = generate(&GeneratorSpec::gnp(30, 0.3, 9)).unwrap();
        let c = generate(&GeneratorSpec::gnp(30, 0.3, 10)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn crown_counts() {
        let g = gen(Model::Crown { k: 4 });
        assert_eq!((g.n(), g.m(), g.degree(0)), (9, 8, 4));
        assert_eq!(g.degrees(), vec![4, 2, 2, 2, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn path_and_complete() {
        assert_eq!(gen(Model::Path { n: 4 }).edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(gen(Model::Path { n: 0 }).m(), 0);
        assert_eq!(gen(Model::Complete { n: 6 }).m(), 15);
    }
}
