use serde::Serialize;

use super::ComparisonRow;

pub const SCHEMA_VERSION: u32 = 1;

pub const EPSILON_DEFINITION: &str =
    "epsilon = 2 - greedy_size / exact_size; negative values mean greedy exceeded twice the optimum";

/// Outcome of one benchmark instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub index: usize,
    pub instance: String,
    pub trial: usize,
    pub seed: u64,
    /// Absent when the instance could not be generated.
    pub comparison: Option<ComparisonRow>,
    /// Why the row is incomplete, if it is.
    pub error: Option<String>,
}

impl ReportRow {
    pub fn status(&self) -> &'static str {
        match (&self.comparison, &self.error) {
            (Some(_), None) => "ok",
            (Some(_), Some(_)) => "partial",
            (None, _) => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct Summary {
    pub instances: usize,
    pub failed: usize,
    /// Rows carrying an exact optimum and a defined ratio.
    pub measured: usize,
    pub mean_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
    pub mean_epsilon: Option<f64>,
    pub min_epsilon: Option<f64>,
    /// Rows with `epsilon < 0`.
    pub epsilon_violations: usize,
    pub greedy_wins: usize,
    pub matching_wins: usize,
    pub ties: usize,
}

impl Summary {
    pub fn from_rows(rows: &[ReportRow]) -> Self {
        let mut s = Summary {
            instances: rows.len(),
            ..Default::default()
        };
        let mut ratio_sum = 0.0;
        let mut eps_sum = 0.0;
        for row in rows {
            let Some(c) = &row.comparison else {
                s.failed += 1;
                continue;
            };
            match c.greedy_size.cmp(&c.matching_size) {
                std::cmp::Ordering::Less => s.greedy_wins += 1,
                std::cmp::Ordering::Greater => s.matching_wins += 1,
                std::cmp::Ordering::Equal => s.ties += 1,
            }
            if let Some(e) = c.estimate {
                s.measured += 1;
                ratio_sum += e.ratio;
                eps_sum += e.epsilon;
                s.max_ratio = Some(s.max_ratio.map_or(e.ratio, |r| r.max(e.ratio)));
                s.min_epsilon = Some(s.min_epsilon.map_or(e.epsilon, |x| x.min(e.epsilon)));
                if e.epsilon < 0.0 {
                    s.epsilon_violations += 1;
                }
            }
        }
        if s.measured > 0 {
            s.mean_ratio = Some(ratio_sum / s.measured as f64);
            s.mean_epsilon = Some(eps_sum / s.measured as f64);
        }
        s
    }

    /// One-line digest: mean ratio, max ratio and the violation count.
    pub fn line(&self) -> String {
        let f = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.4}"));
        format!(
            "instances {} failed {} measured {} mean_ratio {} max_ratio {} mean_epsilon {} epsilon<0 {} greedy_wins {} matching_wins {} ties {}",
            self.instances,
            self.failed,
            self.measured,
            f(self.mean_ratio),
            f(self.max_ratio),
            f(self.mean_epsilon),
            self.epsilon_violations,
            self.greedy_wins,
            self.matching_wins,
            self.ties
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub master_seed: u64,
    pub trials: usize,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

const CSV_HEADER: [&str; 12] = [
    "index",
    "instance",
    "trial",
    "seed",
    "n",
    "m",
    "greedy_size",
    "matching_size",
    "exact_size",
    "ratio",
    "epsilon",
    "status",
];
const CSV_TIMING_HEADER: [&str; 3] = ["greedy_ns", "matching_ns", "exact_ns"];

#[derive(Serialize)]
struct JsonRow<'a> {
    index: usize,
    instance: &'a str,
    trial: usize,
    seed: u64,
    status: &'static str,
    n: Option<usize>,
    m: Option<usize>,
    greedy_size: Option<usize>,
    matching_size: Option<usize>,
    exact_size: Option<usize>,
    ratio: Option<f64>,
    epsilon: Option<f64>,
    error: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    greedy_ns: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matching_ns: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_ns: Option<u64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    epsilon_definition: &'static str,
    master_seed: u64,
    trials: usize,
    summary: &'a Summary,
    rows: Vec<JsonRow<'a>>,
}

impl ExperimentReport {
    pub fn new(master_seed: u64, trials: usize, rows: Vec<ReportRow>) -> Self {
        let summary = Summary::from_rows(&rows);
        ExperimentReport {
            master_seed,
            trials,
            rows,
            summary,
        }
    }

    /// RFC-4180 CSV, one line per row after a header. Timing columns are
    /// appended only when `include_timing` is set.
    pub fn to_csv(&self, include_timing: bool) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        let mut header: Vec<&str> = CSV_HEADER.to_vec();
        if include_timing {
            header.extend(CSV_TIMING_HEADER);
        }
        w.write_record(&header).expect("write to memory");

        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let float = |x: Option<f64>| x.map(|v| format!("{v:.6}")).unwrap_or_default();
        for row in &self.rows {
            let c = row.comparison.as_ref();
            let est = c.and_then(|c| c.estimate);
            let mut rec = vec![
                row.index.to_string(),
                row.instance.clone(),
                row.trial.to_string(),
                row.seed.to_string(),
                opt(c.map(|c| c.n)),
                opt(c.map(|c| c.m)),
                opt(c.map(|c| c.greedy_size)),
                opt(c.map(|c| c.matching_size)),
                opt(c.and_then(|c| c.exact_size)),
                float(est.map(|e| e.ratio)),
                float(est.map(|e| e.epsilon)),
                match &row.error {
                    Some(e) => format!("{}: {}", row.status(), e),
                    None => row.status().to_string(),
                },
            ];
            if include_timing {
                let t = c.map(|c| c.timings);
                rec.push(t.map(|t| t.greedy_ns.to_string()).unwrap_or_default());
                rec.push(t.map(|t| t.matching_ns.to_string()).unwrap_or_default());
                rec.push(
                    t.and_then(|t| t.exact_ns)
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                );
            }
            w.write_record(&rec).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }

    pub fn to_json(&self, include_timing: bool) -> String {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let c = row.comparison.as_ref();
                let est = c.and_then(|c| c.estimate);
                let t = c.filter(|_| include_timing).map(|c| c.timings);
                JsonRow {
                    index: row.index,
                    instance: &row.instance,
                    trial: row.trial,
                    seed: row.seed,
                    status: row.status(),
                    n: c.map(|c| c.n),
                    m: c.map(|c| c.m),
                    greedy_size: c.map(|c| c.greedy_size),
                    matching_size: c.map(|c| c.matching_size),
                    exact_size: c.and_then(|c| c.exact_size),
                    ratio: est.map(|e| e.ratio),
                    epsilon: est.map(|e| e.epsilon),
                    error: row.error.as_deref(),
                    greedy_ns: t.map(|t| t.greedy_ns),
                    matching_ns: t.map(|t| t.matching_ns),
                    exact_ns: t.and_then(|t| t.exact_ns),
                }
            })
            .collect();
        let doc = JsonReport {
            schema_version: SCHEMA_VERSION,
            epsilon_definition: EPSILON_DEFINITION,
            master_seed: self.master_seed,
            trials: self.trials,
            summary: &self.summary,
            rows,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    /// Aligned ASCII table of the non-timing columns.
    pub fn to_table(&self) -> String {
        let csv = self.to_csv(false);
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(csv.as_bytes());
        let cells: Vec<Vec<String>> = rdr
            .records()
            .map(|r| r.expect("own csv").iter().map(str::to_string).collect())
            .collect();
        let mut out = format!("# {EPSILON_DEFINITION}\n");
        out.push_str(&align(&cells));
        out
    }
}

/// Left-aligns columns with two spaces between them.
pub(crate) fn align(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            cells
                .iter()
                .filter_map(|r| r.get(i))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{EpsilonEstimate, Timings};

    fn row(index: usize, greedy: usize, matching: usize, exact: Option<usize>) -> ReportRow {
        ReportRow {
            index,
            instance: "gnp(n=4,p=0.5)".into(),
            trial: index,
            seed: 7,
            comparison: Some(ComparisonRow {
                n: 4,
                m: 3,
                greedy_size: greedy,
                matching_size: matching,
                exact_size: exact,
                estimate: exact.and_then(|o| EpsilonEstimate::from_sizes(greedy, o)),
                timings: Timings {
                    greedy_ns: 10,
                    matching_ns: 20,
                    exact_ns: exact.map(|_| 30),
                },
            }),
            error: None,
        }
    }

    #[test]
    fn summary_folds_rows() {
        let mut failed = row(3, 0, 0, None);
        failed.comparison = None;
        failed.error = Some("boom".into());
        let rows = vec![
            row(0, 2, 4, Some(2)),
            row(1, 3, 2, Some(1)),
            row(2, 2, 2, None),
            failed,
        ];
        let s = Summary::from_rows(&rows);
        assert_eq!((s.instances, s.failed, s.measured), (4, 1, 2));
        assert_eq!(s.max_ratio, Some(3.0));
        assert_eq!(s.mean_ratio, Some(2.0));
        assert_eq!(s.min_epsilon, Some(-1.0));
        assert_eq!(s.epsilon_violations, 1);
        assert_eq!((s.greedy_wins, s.matching_wins, s.ties), (1, 1, 1));
    }

    #[test]
    fn empty_report() {
        let r = ExperimentReport::new(1, 1, vec![]);
        assert_eq!(r.summary.instances, 0);
        assert_eq!(r.summary.mean_ratio, None);
        assert_eq!(r.to_csv(false).lines().count(), 1);
    }

    #[test]
    fn csv_quotes_and_timing_columns() {
        let r = ExperimentReport::new(1, 1, vec![row(0, 2, 4, Some(2))]);
        let with = r.to_csv(true);
        let without = r.to_csv(false);
        assert!(with.starts_with("index,instance,"));
        assert!(with.contains("\"gnp(n=4,p=0.5)\""));
        assert!(with.lines().next().unwrap().ends_with("exact_ns"));
        assert!(!without.contains("_ns"));
        assert!(without.contains(",1.000000,1.000000,ok"));
        assert!(with.ends_with("\r\n"));
    }

    #[test]
    fn json_has_schema_version() {
        let r = ExperimentReport::new(1, 1, vec![row(0, 2, 4, Some(2))]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json(false)).unwrap();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["rows"][0]["exact_size"], 2);
        assert!(v["rows"][0].get("greedy_ns").is_none());
        let v: serde_json::Value = serde_json::from_str(&r.to_json(true)).unwrap();
        assert_eq!(v["rows"][0]["greedy_ns"], 10);
    }

    #[test]
    fn table_is_aligned_ascii() {
        let r = ExperimentReport::new(1, 1, vec![row(0, 2, 4, Some(2)), row(10, 2, 4, None)]);
        let t = r.to_table();
        assert!(t.is_ascii());
        let lines: Vec<_> = t.lines().skip(1).collect();
        let col = lines[0].find("instance").unwrap();
        assert!(lines.iter().skip(1).all(|l| &l[col..col + 3] == "gnp"));
    }
}
