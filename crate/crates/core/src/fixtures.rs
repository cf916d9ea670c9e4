//! Graphs shipped with the crate under `fixtures/`.

use crate::graph::{parse_dimacs, Graph, ParseMode};
use crate::solvers::PickScript;

/// DIMACS text of the seven-vertex worked example (labels `a`..`g`).
pub const FIG1_DIMACS: &str = include_str!("../fixtures/fig1.col");

/// Pick script `d, c, a, f` for [`fig1`].
pub const FIG1_TRACE: &str = include_str!("../fixtures/fig1.trace");

/// Every fixture file by name, with its text.
pub const ALL: &[(&str, &str)] = &[
    ("fig1.col", FIG1_DIMACS),
    ("empty.col", include_str!("../fixtures/empty.col")),
    ("edgeless5.col", include_str!("../fixtures/edgeless5.col")),
    ("triangle.col", include_str!("../fixtures/triangle.col")),
    ("star5.col", include_str!("../fixtures/star5.col")),
    ("crown4.col", include_str!("../fixtures/crown4.col")),
    ("petersen.col", include_str!("../fixtures/petersen.col")),
];

/// The worked example: 7 vertices, 8 edges, vertex `d` of unique maximum
/// degree.
pub fn fig1() -> Graph {
    parse_dimacs(FIG1_DIMACS, ParseMode::Strict).expect("fig1 fixture parses")
}

pub fn fig1_script(g: &Graph) -> PickScript {
    PickScript::parse(FIG1_TRACE, g).expect("fig1 trace parses")
}

/// Parses every entry of [`ALL`].
pub fn all() -> Vec<(&'static str, Graph)> {
    ALL.iter()
        .map(|&(name, text)| {
            let g = parse_dimacs(text, ParseMode::Strict)
                .unwrap_or_else(|e| panic!("fixture {name}: {e}"));
            (name, g)
        })
        .collect()
}
