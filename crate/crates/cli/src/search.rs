use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use convexdim::closure::MAX_ELEMENTS;
use convexdim::dimension::{analyze, analyze_points, AnalysisOptions, AnalysisReport};
use convexdim::geometry::{random_general_position, PointSet};
use convexdim::io::{parse_input, point_set_to_json, Input};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const SEARCH_MIN_N: usize = 5;

#[derive(Clone, Copy, Debug)]
pub enum Budget {
    /// Exactly this many instances; the summary is then reproducible.
    Count(usize),
    /// Instances started before the deadline.
    Time(Duration),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub max_n: usize,
    pub budget: Budget,
    pub cycle_cap: Option<usize>,
    pub workers: usize,
    /// Analyze these files instead of random point sets.
    pub from_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            bail!("--workers must be at least 1");
        }
        if self.from_dir.is_none() && !(SEARCH_MIN_N..=MAX_ELEMENTS).contains(&self.max_n) {
            bail!("--max-n must lie in {SEARCH_MIN_N}..={MAX_ELEMENTS}");
        }
        Ok(())
    }
}

/// An instance with `chiH > chiG`, kept with everything needed to re-check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub source: String,
    pub input: serde_json::Value,
    pub report: AnalysisReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioRecord {
    pub index: usize,
    pub chi_g: usize,
    pub omega_g: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub seed: u64,
    pub max_n: usize,
    pub instances: usize,
    /// Instances whose hypergraph was capped, so chiH is unknown.
    pub incomplete: usize,
    pub errors: Vec<String>,
    /// Largest chiG/omegaG, earliest index on ties.
    pub max_ratio: Option<RatioRecord>,
    pub law_failures: Vec<String>,
    pub candidates: Vec<Candidate>,
}

struct Outcome {
    index: usize,
    source: String,
    input: Option<serde_json::Value>,
    result: std::result::Result<AnalysisReport, String>,
}

/// Random instance `index`: its own ChaCha stream keyed by the run seed, so
/// the instance does not depend on which worker draws it.
pub fn random_instance(seed: u64, index: usize, max_n: usize) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(SEARCH_MIN_N..=max_n);
    random_general_position(n, &mut rng)
}

fn evaluate(config: &RunConfig, files: &[PathBuf], index: usize) -> Outcome {
    let options = AnalysisOptions {
        cycle_cap: config.cycle_cap,
    };
    if let Some(path) = files.get(index) {
        let source = path.display().to_string();
        let loaded = std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| {
                let value: serde_json::Value =
                    serde_json::from_str(&text).map_err(|e| e.to_string())?;
                let input = parse_input(&text).map_err(|e| e.to_string())?;
                Ok((value, input))
            });
        return match loaded {
            Ok((value, input)) => {
                let analysis = match input {
                    Input::Points(p) => analyze_points(&p, &options),
                    Input::Geometry(g) => analyze(g, None, &options),
                };
                Outcome {
                    index,
                    source,
                    input: Some(value),
                    result: analysis.map(|a| a.report()).map_err(|e| e.to_string()),
                }
            }
            Err(e) => Outcome {
                index,
                source,
                input: None,
                result: Err(e),
            },
        };
    }
    let points = random_instance(config.seed, index, config.max_n);
    let input = point_set_to_json(&points)
        .ok()
        .and_then(|t| serde_json::from_str(&t).ok());
    Outcome {
        index,
        source: format!("random #{index}"),
        input,
        result: analyze_points(&points, &options)
            .map(|a| a.report())
            .map_err(|e| e.to_string()),
    }
}

/// Runs the search on `config.workers` threads. Findings are streamed to
/// `progress` as they appear; the summary is assembled in index order.
pub fn run_search(config: &RunConfig, progress: &(dyn Fn(&str) + Sync)) -> Result<SearchSummary> {
    config.validate()?;
    let files: Vec<PathBuf> = match &config.from_dir {
        Some(dir) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
                .with_context(|| format!("reading {}", dir.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|e| e == "json"))
                .collect();
            files.sort();
            files
        }
        None => Vec::new(),
    };
    let limit = match (config.budget, config.from_dir.is_some()) {
        (Budget::Count(c), false) => c,
        (Budget::Count(c), true) => c.min(files.len()),
        (Budget::Time(_), true) => files.len(),
        (Budget::Time(_), false) => usize::MAX,
    };
    let deadline = match config.budget {
        Budget::Time(d) => Some(Instant::now() + d),
        Budget::Count(_) => None,
    };
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let outcomes = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..config.workers {
            scope.spawn(|| loop {
                if stop.load(Ordering::Relaxed) || deadline.is_some_and(|d| Instant::now() >= d) {
                    break;
                }
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= limit {
                    stop.store(true, Ordering::Relaxed);
                    break;
                }
                let outcome = evaluate(config, &files, index);
                if let Ok(r) = &outcome.result {
                    if r.chi_h.is_some_and(|h| h > r.chi_g) {
                        progress(&format!(
                            "candidate: {} has chiH={} > chiG={}",
                            outcome.source,
                            r.chi_h.unwrap_or_default(),
                            r.chi_g
                        ));
                    }
                }
                outcomes.lock().expect("no worker panicked").push(outcome);
            });
        }
    });
    let mut outcomes = outcomes.into_inner().expect("no worker panicked");
    outcomes.sort_by_key(|o| o.index);
    Ok(summarize(config, outcomes))
}

fn summarize(config: &RunConfig, outcomes: Vec<Outcome>) -> SearchSummary {
    let mut summary = SearchSummary {
        seed: config.seed,
        max_n: config.max_n,
        instances: outcomes.len(),
        incomplete: 0,
        errors: Vec::new(),
        max_ratio: None,
        law_failures: Vec::new(),
        candidates: Vec::new(),
    };
    for o in outcomes {
        let report = match o.result {
            Ok(r) => r,
            Err(e) => {
                summary.errors.push(format!("{}: {e}", o.source));
                continue;
            }
        };
        if !report.hypergraph_complete {
            summary.incomplete += 1;
        }
        for law in report.laws.iter().filter(|l| l.failed()) {
            summary.law_failures.push(format!("{}: {}", o.source, law));
        }
        if report.omega_g > 0 {
            let better = summary
                .max_ratio
                .as_ref()
                .is_none_or(|m| report.chi_g * m.omega_g > m.chi_g * report.omega_g);
            if better {
                summary.max_ratio = Some(RatioRecord {
                    index: o.index,
                    chi_g: report.chi_g,
                    omega_g: report.omega_g,
                });
            }
        }
        if report.chi_h.is_some_and(|h| h > report.chi_g) {
            summary.candidates.push(Candidate {
                index: o.index,
                source: o.source,
                input: o.input.unwrap_or(serde_json::Value::Null),
                report,
            });
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(workers: usize) -> RunConfig {
        RunConfig {
            seed: 7,
            max_n: 7,
            budget: Budget::Count(12),
            cycle_cap: None,
            workers,
            from_dir: None,
        }
    }

    #[test]
    fn instances_are_reproducible() {
        assert_eq!(random_instance(3, 5, 9), random_instance(3, 5, 9));
        assert_ne!(random_instance(3, 5, 9), random_instance(3, 6, 9));
        let n = random_instance(3, 5, 9).len();
        assert!((SEARCH_MIN_N..=9).contains(&n));
    }

    #[test]
    fn worker_count_does_not_change_summary() {
        let one = run_search(&config(1), &|_| {}).unwrap();
        let four = run_search(&config(4), &|_| {}).unwrap();
        assert_eq!(one.instances, 12);
        assert_eq!(one, four);
        assert!(one.errors.is_empty() && one.law_failures.is_empty());
    }

    #[test]
    fn bad_config_is_refused() {
        let mut c = config(0);
        assert!(run_search(&c, &|_| {}).is_err());
        c.workers = 1;
        c.max_n = 4;
        assert!(run_search(&c, &|_| {}).is_err());
    }
}
