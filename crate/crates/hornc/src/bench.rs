//! Batch runner: solve a directory of `.smt2` tasks and score the verdicts
//! against each task's expected status.
//!
//! The expected status is read from `(set-info :status ...)` in the task
//! file; tasks without one count as expected-unknown. Each produced verdict
//! falls into one category:
//!
//! - `confirmed`: a sat/unsat verdict matching the expected status.
//! - `unconfirmed`: a sat/unsat verdict where no expectation exists.
//! - `wrong`: a sat/unsat verdict contradicting the expected status.
//! - `no-verdict`: the solver answered unknown (or the task failed to parse).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::chc::parse_chc;
use crate::portfolio::{run_portfolio, PortfolioConfig, RunOptions, Verdict};
use crate::error::PortfolioError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Confirmed,
    Unconfirmed,
    Wrong,
    NoVerdict,
}

impl Category {
    pub fn as_str(&self) -> &'static str {
        match self {
            Category::Confirmed => "confirmed",
            Category::Unconfirmed => "unconfirmed",
            Category::Wrong => "wrong",
            Category::NoVerdict => "no-verdict",
        }
    }
}

/// Expected task status, as declared in the file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Sat,
    Unsat,
    Unknown,
}

pub fn categorize(expected: Expected, produced: &Verdict) -> Category {
    match (produced, expected) {
        (Verdict::Unknown(_), _) => Category::NoVerdict,
        (_, Expected::Unknown) => Category::Unconfirmed,
        (Verdict::Sat, Expected::Sat) | (Verdict::Unsat, Expected::Unsat) => Category::Confirmed,
        _ => Category::Wrong,
    }
}

#[derive(Debug, Clone)]
pub struct TaskResult {
    pub task: String,
    pub verdict: String,
    pub category: Category,
    pub wall_ms: u128,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub results: Vec<TaskResult>,
}

impl BenchReport {
    pub fn csv(&self) -> String {
        let mut out = String::from("task,verdict,category,wall_ms\n");
        for r in &self.results {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                r.task,
                r.verdict,
                r.category.as_str(),
                r.wall_ms
            );
        }
        out
    }

    /// Count of produced-verdict lines per (category, verdict) pair, plus the
    /// corpus size.
    pub fn summary(&self) -> String {
        let mut out = String::from("Summary:\n");
        for category in [
            Category::Confirmed,
            Category::Unconfirmed,
            Category::Wrong,
            Category::NoVerdict,
        ] {
            for verdict in ["sat", "unsat", "unknown", "error"] {
                let n = self
                    .results
                    .iter()
                    .filter(|r| r.category == category && r.verdict == verdict)
                    .count();
                if n > 0 {
                    let _ = writeln!(out, "  {} {}: {}", category.as_str(), verdict, n);
                }
            }
        }
        let _ = writeln!(out, "Out of {} tasks", self.results.len());
        out
    }
}

/// Reads the expected status from `(set-info :status ...)`.
pub fn expected_status(text: &str) -> Expected {
    let re = regex::Regex::new(r"\(\s*set-info\s+:status\s+(sat|unsat|unknown)\s*\)")
        .expect("static regex");
    match re.captures(text).map(|c| c.get(1).unwrap().as_str()) {
        Some("sat") => Expected::Sat,
        Some("unsat") => Expected::Unsat,
        _ => Expected::Unknown,
    }
}

/// Solves every `.smt2` file directly under `dir` (sorted by name) with up to
/// `jobs` worker threads, each task getting `timeout` of portfolio budget.
pub fn run_suite(
    dir: &Path,
    config: &PortfolioConfig,
    jobs: usize,
    timeout: Duration,
) -> Result<BenchReport, PortfolioError> {
    let mut tasks: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "smt2"))
        .collect();
    tasks.sort();

    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<TaskResult>>> = Mutex::new(vec![None; tasks.len()]);
    let workers = jobs.max(1).min(tasks.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(task) = tasks.get(i) else {
                    break;
                };
                let result = run_task(task, config, timeout);
                slots.lock().expect("no poisoned workers")[i] = Some(result);
            });
        }
    });

    let results = slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|s| s.expect("every task ran"))
        .collect();
    Ok(BenchReport { results })
}

fn run_task(path: &Path, config: &PortfolioConfig, timeout: Duration) -> TaskResult {
    let task = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let start = Instant::now();
    let (verdict_name, category) = match std::fs::read_to_string(path) {
        Err(_) => ("error".to_string(), Category::NoVerdict),
        Ok(text) => match parse_chc(&text) {
            Err(_) => ("error".to_string(), Category::NoVerdict),
            Ok(system) => {
                let opts = RunOptions {
                    total_budget: timeout,
                    scratch: None,
                };
                match run_portfolio(&system, config, &opts) {
                    Err(_) => ("error".to_string(), Category::NoVerdict),
                    Ok(outcome) => {
                        let category = categorize(expected_status(&text), &outcome.verdict);
                        (outcome.verdict.as_str().to_string(), category)
                    }
                }
            }
        },
    };
    TaskResult {
        task,
        verdict: verdict_name,
        category,
        wall_ms: start.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn categorization_matrix() {
        let unk = Verdict::Unknown(vec![]);
        assert_eq!(categorize(Expected::Sat, &Verdict::Sat), Category::Confirmed);
        assert_eq!(categorize(Expected::Unsat, &Verdict::Unsat), Category::Confirmed);
        assert_eq!(categorize(Expected::Sat, &Verdict::Unsat), Category::Wrong);
        assert_eq!(categorize(Expected::Unsat, &Verdict::Sat), Category::Wrong);
        assert_eq!(categorize(Expected::Unknown, &Verdict::Sat), Category::Unconfirmed);
        assert_eq!(categorize(Expected::Unknown, &Verdict::Unsat), Category::Unconfirmed);
        assert_eq!(categorize(Expected::Sat, &unk), Category::NoVerdict);
        assert_eq!(categorize(Expected::Unknown, &unk), Category::NoVerdict);
    }

    #[test]
    fn reads_expected_status() {
        assert_eq!(
            expected_status("(set-info :status unsat)\n(set-logic HORN)"),
            Expected::Unsat
        );
        assert_eq!(expected_status("(set-logic HORN)"), Expected::Unknown);
    }

    #[test]
    fn csv_and_summary_shapes() {
        let report = BenchReport {
            results: vec![
                TaskResult {
                    task: "a.smt2".into(),
                    verdict: "unsat".into(),
                    category: Category::Confirmed,
                    wall_ms: 12,
                },
                TaskResult {
                    task: "b.smt2".into(),
                    verdict: "unknown".into(),
                    category: Category::NoVerdict,
                    wall_ms: 5,
                },
            ],
        };
        let csv = report.csv();
        assert!(csv.starts_with("task,verdict,category,wall_ms\n"));
        assert!(csv.contains("a.smt2,unsat,confirmed,12"));
        let summary = report.summary();
        assert!(summary.contains("confirmed unsat: 1"));
        assert!(summary.contains("no-verdict unknown: 1"));
        assert!(summary.contains("Out of 2 tasks"));
    }
}
