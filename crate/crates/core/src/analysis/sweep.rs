use rayon::prelude::*;

use super::{compare_algorithms, AnalysisError, CompareOptions, ExperimentReport, ReportRow};
use crate::graph::{generate, GeneratorSpec};
use crate::solvers::BRUTE_FORCE_MAX_N;

/// Instances larger than this skip the exact oracle in sweeps.
const SWEEP_EXACT_MAX_N: usize = BRUTE_FORCE_MAX_N;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepOptions {
    pub compare: CompareOptions,
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
}

/// Seed of trial `trial` of spec `spec_index`.
pub fn derive_seed(master_seed: u64, spec_index: usize, trial: usize) -> u64 {
    let lane = splitmix64(((spec_index as u64) << 32) ^ trial as u64);
    splitmix64(master_seed ^ lane)
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Runs `trials` instances of every spec and compares the algorithms on each.
///
/// Each instance is generated from its own derived seed, so rows do not
/// depend on thread count or scheduling. A failing instance becomes a failed
/// row instead of aborting the sweep.
pub fn benchmark_sweep(
    specs: &[GeneratorSpec],
    trials: usize,
    master_seed: u64,
    opts: &SweepOptions,
) -> Result<ExperimentReport, AnalysisError> {
    if trials == 0 {
        return Err(AnalysisError::InvalidParam(
            "trials must be at least 1".into(),
        ));
    }
    let jobs: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|s| (0..trials).map(move |t| (s, t)))
        .collect();

    let run_job = |index: usize, &(s, t): &(usize, usize)| -> ReportRow {
        let spec = specs[s].with_seed(derive_seed(master_seed, s, t));
        let mut row = ReportRow {
            index,
            instance: spec.model.to_string(),
            trial: t,
            seed: spec.seed,
            comparison: None,
            error: None,
        };
        let g = match generate(&spec) {
            Ok(g) => g,
            Err(e) => {
                row.error = Some(e.to_string());
                return row;
            }
        };
        let mut compare = opts.compare.clone();
        compare.with_exact &= g.n() <= SWEEP_EXACT_MAX_N;
        match compare_algorithms(&g, &compare) {
            Ok(c) => row.comparison = Some(c),
            Err(e) => {
                row.error = Some(e.to_string());
                compare.with_exact = false;
                row.comparison = compare_algorithms(&g, &compare).ok();
            }
        }
        row
    };

    let rows: Vec<ReportRow> = match opts.threads {
        Some(1) => jobs
            .iter()
            .enumerate()
            .map(|(i, j)| run_job(i, j))
            .collect(),
        threads => {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(t) = threads {
                builder = builder.num_threads(t);
            }
            let pool = builder
                .build()
                .map_err(|e| AnalysisError::InvalidParam(e.to_string()))?;
            pool.install(|| {
                jobs.par_iter()
                    .enumerate()
                    .map(|(i, j)| run_job(i, j))
                    .collect()
            })
        }
    };

    Ok(ExperimentReport::new(master_seed, trials, rows))
}
