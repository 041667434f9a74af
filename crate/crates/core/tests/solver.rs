use std::sync::atomic::AtomicBool;

use sedn_lab::graph::verify;
use sedn_lab::harness::TripleRange;
use sedn_lab::solver::{
    brute_force, optimum_vertex_weight_scan, solve_exact, solve_exact_with_cancel, LemmaVerdict,
    SolveConfig,
};
use sedn_lab::{SednError, TripartiteParams};

fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
    TripartiteParams::new(m, n, p).unwrap()
}

fn small() -> Vec<TripartiteParams> {
    TripleRange::MaxSum(20)
        .triples()
        .into_iter()
        .filter(|g| g.edge_count() <= 20)
        .collect()
}

#[test]
fn matches_brute_force_in_every_configuration() {
    for g in small() {
        let (want, lab) = brute_force(g).unwrap();
        assert!(verify(&lab).is_sedf);
        for symmetry in [true, false] {
            for bound in [true, false] {
                let cfg = SolveConfig {
                    symmetry_pruning: symmetry,
                    bound_pruning: bound,
                    ..SolveConfig::default()
                };
                let r = solve_exact(g, &cfg).unwrap();
                assert_eq!(r.optimum, want, "{g} symmetry={symmetry} bound={bound}");
                assert!(verify(&r.certificate).is_sedf);
            }
        }
    }
}

#[test]
fn orientation_does_not_matter() {
    let a = solve_exact(k(1, 2, 3), &SolveConfig::default()).unwrap();
    for g in [k(3, 2, 1), k(2, 3, 1), k(3, 1, 2)] {
        let r = solve_exact(g, &SolveConfig::default()).unwrap();
        assert_eq!(r.optimum, a.optimum);
        assert_eq!(r.certificate.params(), g);
    }
}

#[test]
fn cap_can_be_raised_up_to_the_hard_limit() {
    let g = k(2, 2, 5);
    assert!(matches!(
        solve_exact(g, &SolveConfig { max_edges: 20, ..SolveConfig::default() }),
        Err(SednError::Refused(_))
    ));
    let r = solve_exact(k(1, 3, 4), &SolveConfig { max_edges: 19, ..SolveConfig::default() });
    assert_eq!(r.unwrap().optimum, 7);
}

#[test]
fn cancellation_is_observed() {
    let cancel = AtomicBool::new(true);
    let r = solve_exact_with_cancel(k(2, 3, 4), &SolveConfig::default(), &cancel).unwrap();
    assert!(!r.exhausted);
    assert!(verify(&r.certificate).is_sedf);
    assert!(matches!(optimum_vertex_weight_scan(&r), Err(SednError::Refused(_))));
}

#[test]
fn report_json_has_counters_and_certificate() {
    let r = solve_exact(k(1, 1, 2), &SolveConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["optimum"], 3);
    assert_eq!(v["exhausted"], true);
    assert!(v["nodes_explored"].as_u64().unwrap() > 0);
    assert_eq!(v["certificate"]["claimed_gamma"], 3);
    assert_eq!(v["certificate"]["uv"].as_array().unwrap().len(), 1);
}

#[test]
fn vertex_weight_scan_examples() {
    let scan = |g| optimum_vertex_weight_scan(&solve_exact(g, &SolveConfig::default()).unwrap());
    let s = scan(k(2, 2, 4)).unwrap();
    assert!(s.min_weight[2] >= 0);
    assert_eq!(s.verdict, LemmaVerdict::Holds);
    let s = scan(k(2, 2, 5)).unwrap();
    assert_eq!(s.w_bound, Some(0));
    assert_eq!(s.verdict, LemmaVerdict::Holds);
    let s = scan(k(1, 1, 2)).unwrap();
    assert_eq!(s.w_bound, Some(0));
    assert!(verify(&s.balanced).is_sedf);
}
