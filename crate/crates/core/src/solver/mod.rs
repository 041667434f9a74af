//! Exact minimum-weight search for small instances.
//!
//! [`solve_exact`] is a depth-first branch-and-bound over edge signs.
//! [`brute_force`] enumerates every labeling and shares no code with it.

mod brute;
mod scan;
mod search;

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructor::{construct, quota_plan};
use crate::error::{Result, SednError};
use crate::graph::{verify, EdgeLabeling, LabelingDocument, TripartiteParams};
use crate::oracle::canonicalize;

pub use brute::{brute_force, BRUTE_FORCE_MAX_EDGES};
pub use scan::{optimum_vertex_weight_scan, LemmaVerdict, ParityClass, VertexWeightScan};

use search::{Counters, Instance, Shared, State, Switches, Worker};

pub const DEFAULT_MAX_EDGES: u32 = 26;
/// Signs are packed into a `u64`.
pub const HARD_MAX_EDGES: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolveConfig {
    pub max_edges: u32,
    pub symmetry_pruning: bool,
    pub bound_pruning: bool,
    /// Worker threads; 0 runs on the calling thread.
    pub parallel_width: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            max_edges: DEFAULT_MAX_EDGES,
            symmetry_pruning: true,
            bound_pruning: true,
            parallel_width: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub params: TripartiteParams,
    pub optimum: i64,
    /// In the caller's part order.
    #[serde(skip)]
    pub certificate: EdgeLabeling,
    pub nodes_explored: u64,
    pub pruned_symmetry: u64,
    pub pruned_bound: u64,
    pub pruned_infeasible: u64,
    /// False when the search was cancelled; `optimum` is then only an upper bound.
    pub exhausted: bool,
    pub initial_incumbent: i64,
    pub elapsed_ms: u64,
}

impl SolveReport {
    /// Certificate JSON with `claimed_gamma` set to the optimum.
    pub fn certificate_document(&self) -> LabelingDocument {
        let mut doc = LabelingDocument::from_labeling(&self.certificate);
        doc.claimed_gamma = Some(self.optimum);
        doc
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["certificate"] =
            serde_json::to_value(self.certificate_document()).expect("document serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

pub fn solve_exact(params: TripartiteParams, config: &SolveConfig) -> Result<SolveReport> {
    solve_exact_with_cancel(params, config, &AtomicBool::new(false))
}

/// As [`solve_exact`], stopping early once `cancel` is set.
pub fn solve_exact_with_cancel(
    params: TripartiteParams,
    config: &SolveConfig,
    cancel: &AtomicBool,
) -> Result<SolveReport> {
    let started = Instant::now();
    let edges = params.edge_count();
    let cap = config.max_edges.min(HARD_MAX_EDGES);
    if edges > u128::from(cap) {
        return Err(SednError::Refused(format!(
            "{params} has {edges} edges, more than the solver cap of {cap}"
        )));
    }

    let canonical = canonicalize(params);
    let c = canonical.params;
    let hint = quota_plan(c).ok().map(|plan| {
        let q = plan.quotas();
        q.u.iter().chain(&q.v).chain(&q.w).copied().collect()
    });
    let inst = Instance::new(c, hint);

    let incumbent = match construct(c) {
        Ok(cert) => cert.labeling,
        Err(_) => EdgeLabeling::all_positive(c)?,
    };
    let initial_incumbent = incumbent.weight();
    let shared = Shared::new(initial_incumbent, inst.mask(&incumbent), cancel);
    let switches = Switches {
        symmetry: config.symmetry_pruning,
        bound: config.bound_pruning,
    };

    let counters = if config.parallel_width == 0 {
        let mut worker = Worker {
            inst: &inst,
            shared: &shared,
            switches,
            counters: Counters::default(),
        };
        worker.dfs(&mut State::root(&inst));
        worker.counters
    } else {
        run_parallel(&inst, &shared, switches, config.parallel_width)?
    };

    let (optimum, mask) = *shared.best_mask.lock().unwrap();
    let labeling = inst.labeling(mask);
    let report = verify(&labeling);
    if !report.is_sedf || report.weight != optimum {
        return Err(SednError::CertificateMismatch(format!(
            "search certificate for {c} is not a dominating labeling of weight {optimum}"
        )));
    }
    Ok(SolveReport {
        params,
        optimum,
        certificate: canonical.labeling_to_original(&labeling)?,
        nodes_explored: counters.nodes,
        pruned_symmetry: counters.pruned_symmetry,
        pruned_bound: counters.pruned_bound,
        pruned_infeasible: counters.pruned_infeasible,
        exhausted: !shared.aborted.load(Ordering::Relaxed),
        initial_incumbent,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn run_parallel(
    inst: &Instance,
    shared: &Shared<'_>,
    switches: Switches,
    width: usize,
) -> Result<Counters> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(width)
        .build()
        .map_err(|e| SednError::Refused(format!("cannot start {width} workers: {e}")))?;
    let depth = ((width * 16).next_power_of_two().trailing_zeros() as usize).min(inst.edge_count());

    let mut head = Worker {
        inst,
        shared,
        switches,
        counters: Counters::default(),
    };
    let mut prefixes = Vec::new();
    head.prefixes(&mut State::root(inst), depth, &mut prefixes);
    let mut total = head.counters;

    let parts: Vec<Counters> = pool.install(|| {
        prefixes
            .into_par_iter()
            .map(|mut st| {
                let mut worker = Worker {
                    inst,
                    shared,
                    switches,
                    counters: Counters::default(),
                };
                worker.dfs(&mut st);
                // The prefix node was already counted once.
                worker.counters.nodes -= 1;
                worker.counters
            })
            .collect()
    });
    for part in &parts {
        total.add(part);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    fn plain() -> SolveConfig {
        SolveConfig {
            symmetry_pruning: false,
            bound_pruning: false,
            ..SolveConfig::default()
        }
    }

    #[test]
    fn small_optima() {
        let cfg = SolveConfig::default();
        assert_eq!(solve_exact(k(1, 1, 1), &cfg).unwrap().optimum, 1);
        assert_eq!(solve_exact(k(1, 1, 2), &cfg).unwrap().optimum, 3);
        assert_eq!(solve_exact(k(2, 2, 4), &cfg).unwrap().optimum, 4);
        assert_eq!(solve_exact(k(1, 2, 3), &cfg).unwrap().optimum, 5);
        assert_eq!(solve_exact(k(2, 2, 3), &cfg).unwrap().optimum, 6);
    }

    #[test]
    fn pruning_does_not_change_the_optimum() {
        for (m, n, p) in [(1, 2, 3), (2, 2, 2), (1, 3, 4), (2, 2, 3)] {
            let fast = solve_exact(k(m, n, p), &SolveConfig::default()).unwrap();
            let slow = solve_exact(k(m, n, p), &plain()).unwrap();
            assert_eq!(fast.optimum, slow.optimum, "K({m},{n},{p})");
            assert!(fast.nodes_explored <= slow.nodes_explored);
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = solve_exact(k(2, 3, 4), &SolveConfig::default()).unwrap();
        let par = solve_exact(
            k(2, 3, 4),
            &SolveConfig {
                parallel_width: 3,
                ..SolveConfig::default()
            },
        )
        .unwrap();
        assert_eq!(seq.optimum, par.optimum);
        assert!(par.exhausted);
    }

    #[test]
    fn certificate_keeps_caller_orientation() {
        let r = solve_exact(k(3, 1, 2), &SolveConfig::default()).unwrap();
        assert_eq!(r.certificate.params(), k(3, 1, 2));
        assert!(verify(&r.certificate).is_sedf);
        assert_eq!(r.certificate.weight(), r.optimum);
    }

    #[test]
    fn refuses_past_the_cap() {
        let err = solve_exact(k(3, 3, 3), &SolveConfig::default()).unwrap_err();
        assert!(matches!(err, SednError::Refused(_)));
        let cfg = SolveConfig {
            max_edges: 100,
            ..SolveConfig::default()
        };
        assert!(matches!(solve_exact(k(5, 5, 5), &cfg), Err(SednError::Refused(_))));
    }

    #[test]
    fn cancelled_search_reports_not_exhausted() {
        let cancel = AtomicBool::new(true);
        let r = solve_exact_with_cancel(k(2, 2, 4), &SolveConfig::default(), &cancel).unwrap();
        assert!(!r.exhausted);
        assert!(r.optimum <= r.initial_incumbent);
    }

    #[test]
    fn incumbent_dominates() {
        let r = solve_exact(k(2, 2, 5), &SolveConfig::default()).unwrap();
        assert!(r.optimum <= r.initial_incumbent);
        assert!(r.exhausted);
    }
}
