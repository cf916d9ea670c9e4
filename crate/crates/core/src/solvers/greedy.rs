//! Max-degree greedy cover.
//!
//! Each vertex carries a weight, initially its degree. The solver repeatedly
//! scans for the highest weight `h` and its vertex `v`. While `h > 0` it adds
//! `v` to the cover, zeroes `v`'s weight and decrements every still-live
//! neighbor by one. When the highest weight is zero every edge is covered.
//!
//! Each scan is `O(V)` and at most `V` vertices are selected, so the loop runs
//! in `O(V^2)` time on top of `O(V + E)` storage.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algorithm, CoverResult, SolveError, SolveTrace, TraceStep};
use crate::graph::{Graph, VertexId};

/// Rule for choosing among vertices that share the highest weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestId,
    HighestId,
    SeededRandom(u64),
}

/// Residual degrees for one greedy run.
///
/// For every live vertex the weight equals its degree in the subgraph induced
/// by the live vertices. Selected vertices are dead and have weight zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    weight: Vec<usize>,
    alive: Vec<bool>,
}

impl WeightTable {
    pub fn new(g: &Graph) -> Self {
        WeightTable {
            weight: g.degrees(),
            alive: vec![true; g.n()],
        }
    }

    pub fn len(&self) -> usize {
        self.weight.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight.is_empty()
    }

    pub fn weight(&self, v: VertexId) -> usize {
        self.weight[v]
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive[v]
    }

    /// Highest weight and every vertex holding it, in id order.
    pub fn peak(&self) -> (usize, Vec<VertexId>) {
        let mut best = 0;
        let mut ties = Vec::new();
        for (v, &w) in self.weight.iter().enumerate() {
            if w > best {
                best = w;
                ties.clear();
                ties.push(v);
            } else if w == best && w > 0 {
                ties.push(v);
            }
        }
        (best, ties)
    }

    /// Moves `v` into the cover: its weight drops to zero and each live
    /// neighbor loses one.
    pub fn select(&mut self, g: &Graph, v: VertexId) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.weight[v] = 0;
        for &u in g.neighbors(v) {
            if self.alive[u] {
                self.weight[u] -= 1;
            }
        }
    }

    /// Recomputes residual degrees from scratch and compares.
    pub fn matches_residual(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| {
            let expected = if self.alive[v] {
                g.neighbors(v).iter().filter(|&&u| self.alive[u]).count()
            } else {
                0
            };
            self.weight[v] == expected
        })
    }
}

/// A fixed sequence of picks that overrides tie breaking for the first steps
/// of a greedy run. Each scripted vertex must be among the tied maxima at its
/// step; once the script is exhausted the fallback rule takes over.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PickScript {
    picks: Vec<VertexId>,
}

impl PickScript {
    pub fn new(picks: Vec<VertexId>) -> Self {
        PickScript { picks }
    }

    pub fn picks(&self) -> &[VertexId] {
        &self.picks
    }

    /// Reads one vertex name per line (labels, or ids for unlabelled graphs).
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, g: &Graph) -> Result<Self, SolveError> {
        let mut picks = Vec::new();
        for line in text.lines() {
            let name = line.split('#').next().unwrap_or("").trim();
            if name.is_empty() {
                continue;
            }
            let v = g
                .vertex_by_label(name)
                .ok_or_else(|| SolveError::InvalidScript {
                    step: picks.len() + 1,
                    reason: format!("unknown vertex {name:?}"),
                })?;
            picks.push(v);
        }
        Ok(PickScript { picks })
    }
}

/// Tie rule plus an optional leading pick script.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreedyPolicy {
    pub tie: TieBreak,
    pub script: Option<PickScript>,
}

impl GreedyPolicy {
    pub fn new(tie: TieBreak) -> Self {
        GreedyPolicy { tie, script: None }
    }

    pub fn scripted(script: PickScript, fallback: TieBreak) -> Self {
        GreedyPolicy {
            tie: fallback,
            script: Some(script),
        }
    }

    pub fn solve(&self, g: &Graph) -> Result<CoverResult, SolveError> {
        let script = self.script.as_ref().map_or(&[][..], PickScript::picks);
        run(g, self.tie, script, false)
    }
}

pub fn greedy_vertex_cover(g: &Graph, tie: TieBreak) -> CoverResult {
    run(g, tie, &[], false).expect("an empty script cannot fail")
}

/// Greedy run whose first picks follow `script`.
pub fn greedy_vertex_cover_scripted(
    g: &Graph,
    script: &PickScript,
    fallback: TieBreak,
) -> Result<CoverResult, SolveError> {
    run(g, fallback, script.picks(), false)
}

/// Vertices left out of the greedy cover. They span no edge.
pub fn greedy_independent_set(g: &Graph, tie: TieBreak) -> Vec<VertexId> {
    let cover = greedy_vertex_cover(g, tie);
    (0..g.n()).filter(|&v| !cover.contains(v)).collect()
}

pub(crate) fn run(
    g: &Graph,
    tie: TieBreak,
    script: &[VertexId],
    verify_residual: bool,
) -> Result<CoverResult, SolveError> {
    let mut table = WeightTable::new(g);
    let mut rng = match tie {
        TieBreak::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cover = Vec::new();
    let mut steps = Vec::new();

    loop {
        let (h, ties) = table.peak();
        if h == 0 {
            break;
        }
        let step = steps.len();
        let v = match script.get(step) {
            Some(&v) if ties.contains(&v) => v,
            Some(&v) => {
                return Err(SolveError::InvalidScript {
                    step: step + 1,
                    reason: format!(
                        "vertex {} has weight {}, not the maximum {}",
                        if v < g.n() { g.label(v) } else { v.to_string() },
                        if v < g.n() { table.weight(v) } else { 0 },
                        h
                    ),
                })
            }
            None => match tie {
                TieBreak::LowestId => ties[0],
                TieBreak::HighestId => ties[ties.len() - 1],
                TieBreak::SeededRandom(_) => {
                    let rng = rng.as_mut().expect("rng exists for seeded ties");
                    ties[rng.gen_range(0..ties.len())]
                }
            },
        };
        table.select(g, v);
        if verify_residual {
            assert!(
                table.matches_residual(g),
                "weight table drifted at step {}",
                step + 1
            );
        }
        cover.push(v);
        steps.push(TraceStep::Pick {
            vertex: v,
            weight: h,
            ties,
        });
    }

    if script.len() > steps.len() {
        return Err(SolveError::InvalidScript {
            step: steps.len() + 1,
            reason: "script continues after every edge is covered".into(),
        });
    }

    cover.sort_unstable();
    Ok(CoverResult {
        cover,
        trace: SolveTrace { steps },
        algorithm: Algorithm::Greedy,
        proven_optimal: false,
    })
}
