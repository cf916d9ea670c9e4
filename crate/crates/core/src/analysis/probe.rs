//! Empirical runtime scaling of the greedy solver.

use serde::Serialize;

use super::{derive_seed, timed_median, AnalysisError};
use crate::graph::{generate, GeneratorSpec, Graph};
use crate::solvers::{greedy_vertex_cover, TieBreak, WeightTable};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeSample {
    pub seed: u64,
    pub m: usize,
    /// Adjacency list heads + adjacency entries + weight-table slots.
    pub memory_cells: usize,
    /// Median greedy wall time over five runs.
    pub nanos: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeRow {
    pub n: usize,
    pub mean_nanos: f64,
    pub samples: Vec<ProbeSample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub p: f64,
    pub rows: Vec<ProbeRow>,
    /// Least-squares slope of `ln(time)` against `ln(n)`; absent with fewer
    /// than two sizes.
    pub exponent: Option<f64>,
}

impl ProbeReport {
    /// One CSV line per sample.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(["n", "p", "seed", "m", "memory_cells", "greedy_ns"])
            .expect("write to memory");
        for row in &self.rows {
            for s in &row.samples {
                w.write_record([
                    row.n.to_string(),
                    self.p.to_string(),
                    s.seed.to_string(),
                    s.m.to_string(),
                    s.memory_cells.to_string(),
                    s.nanos.to_string(),
                ])
                .expect("write to memory");
            }
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut cells = vec![vec![
            "n".to_string(),
            "mean_m".to_string(),
            "memory_cells".to_string(),
            "mean_greedy_ns".to_string(),
        ]];
        for row in &self.rows {
            let k = row.samples.len().max(1) as f64;
            let mean_m = row.samples.iter().map(|s| s.m as f64).sum::<f64>() / k;
            let mean_cells = row
                .samples
                .iter()
                .map(|s| s.memory_cells as f64)
                .sum::<f64>()
                / k;
            cells.push(vec![
                row.n.to_string(),
                format!("{mean_m:.1}"),
                format!("{mean_cells:.1}"),
                format!("{:.0}", row.mean_nanos),
            ]);
        }
        let mut out = super::report::align(&cells);
        match self.exponent {
            Some(e) => out.push_str(&format!("fitted exponent {e:.3}\n")),
            None => out.push_str("fitted exponent -\n"),
        }
        out
    }
}

const REPETITIONS: usize = 5;

/// Storage the greedy solver touches: one list head per vertex, one entry
/// per edge endpoint, one weight slot per vertex.
pub fn memory_cells(g: &Graph) -> usize {
    g.n() + g.adjacency_cells() + WeightTable::new(g).len()
}

/// Times greedy on `trials` G(n, p) graphs for each size in `sizes`.
pub fn runtime_scaling_probe(
    sizes: &[usize],
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<ProbeReport, AnalysisError> {
    if trials == 0 {
        return Err(AnalysisError::InvalidParam(
            "trials must be at least 1".into(),
        ));
    }
    if sizes.iter().any(|&n| n < 2) {
        return Err(AnalysisError::InvalidParam(
            "sizes must be at least 2".into(),
        ));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AnalysisError::InvalidParam(
            "sizes must be strictly ascending".into(),
        ));
    }

    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let mut samples = Vec::with_capacity(trials);
        for t in 0..trials {
            let s = derive_seed(seed, i, t);
            let g = generate(&GeneratorSpec::gnp(n, p, s))?;
            let (_, nanos) =
                timed_median(REPETITIONS, || greedy_vertex_cover(&g, TieBreak::LowestId));
            samples.push(ProbeSample {
                seed: s,
                m: g.m(),
                memory_cells: memory_cells(&g),
                nanos,
            });
        }
        let mean_nanos = samples.iter().map(|s| s.nanos as f64).sum::<f64>() / trials as f64;
        rows.push(ProbeRow {
            n,
            mean_nanos,
            samples,
        });
    }

    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.mean_nanos.max(1.0).ln()))
        .collect();
    Ok(ProbeReport {
        p,
        rows,
        exponent: fit_slope(&points),
    })
}

/// Ordinary least-squares slope; `None` for fewer than two distinct x values.
pub(crate) fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_power_law() {
        let pts: Vec<_> = [2.0f64, 4.0, 8.0, 16.0]
            .iter()
            .map(|&n| (n.ln(), (3.0 * n * n).ln()))
            .collect();
        assert!((fit_slope(&pts).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(fit_slope(&pts[..1]), None);
    }

    #[test]
    fn single_size_has_no_exponent() {
        let r = runtime_scaling_probe(&[50], 0.2, 2, 1).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.exponent, None);
    }

    #[test]
    fn memory_cells_are_two_n_plus_two_m() {
        let r = runtime_scaling_probe(&[10, 40, 100], 0.3, 3, 5).unwrap();
        for row in &r.rows {
            for s in &row.samples {
                assert_eq!(s.memory_cells, 2 * row.n + 2 * s.m);
            }
        }
    }

    #[test]
    fn memory_proxy_count() {
        let edges = (0..100).flat_map(|u| [(u, (u + 1) % 100), (u, (u + 2) % 100)]);
        let g = Graph::from_edge_list(100, edges).unwrap();
        assert_eq!(g.m(), 200);
        // n + 2m + n
        assert_eq!(memory_cells(&g), 600);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(runtime_scaling_probe(&[1, 4], 0.5, 1, 0).is_err());
        assert!(runtime_scaling_probe(&[8, 4], 0.5, 1, 0).is_err());
        assert!(runtime_scaling_probe(&[4], 0.5, 0, 0).is_err());
    }
}
