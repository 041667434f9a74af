use sedn_lab::constructor::{construct, constructive_case, quota_plan, realize};
use sedn_lab::graph::{verify, Part, TripartiteParams};
use sedn_lab::oracle::{branch_value, gamma, CaseTag};

fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
    TripartiteParams::new(m, n, p).unwrap()
}

#[test]
fn every_constructive_triple_verifies_at_its_closed_form() {
    let mut seen = std::collections::BTreeSet::new();
    for m in 1..=12 {
        for n in m..=12 {
            for p in (m + n).max(n)..=m + n + 10 {
                let g = k(m, n, p);
                let Some(case) = constructive_case(g) else {
                    panic!("{g} has no constructive case");
                };
                seen.insert(case);
                let cert = construct(g).unwrap_or_else(|e| panic!("{g}: {e}"));
                assert_eq!(cert.case, case);
                assert_eq!(cert.weight, branch_value(case, g), "{g}");
                let report = verify(&cert.labeling);
                assert!(report.is_sedf, "{g}");
                assert_eq!(report.weight, cert.weight);
            }
        }
    }
    let constructive = CaseTag::ALL
        .iter()
        .filter(|t| !t.as_str().starts_with("T11") && !matches!(t, CaseTag::K111 | CaseTag::K235))
        .count();
    assert_eq!(seen.len(), constructive, "{seen:?}");
}

#[test]
fn realized_counts_equal_quotas_and_classes_are_balanced() {
    for (m, n, p) in [(3, 5, 8), (2, 7, 11), (5, 6, 13), (1, 6, 10), (2, 2, 9), (4, 4, 9)] {
        let plan = quota_plan(k(m, n, p)).unwrap();
        let lab = realize(&plan).unwrap();
        let neg = lab.negative_degrees();
        assert_eq!(neg, plan.quotas());
        for group in &plan.groups {
            let counts: Vec<u32> = group.vertices().map(|x| *neg.get(x)).collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "{} {}", plan.case, group.label);
        }
        for &(i, j) in &plan.forced_negative_blocks {
            for a in plan.groups[i].vertices() {
                for b in plan.groups[j].vertices() {
                    assert_eq!(lab.sign_between(a, b).unwrap().value(), -1);
                }
            }
        }
    }
}

#[test]
fn block_totals_match_closed_totals() {
    // (mn - m - n)/2 for all-even triples, (mn - m - n + 1)/2 for all-odd ones.
    for (m, n, p) in [(2, 2, 4), (4, 6, 10), (6, 8, 16)] {
        let uv = quota_plan(k(m, n, p)).unwrap().block_totals().unwrap().uv;
        assert_eq!(uv as u32, (m * n - m - n) / 2);
    }
    for (m, n, p) in [(3, 3, 7), (3, 5, 9), (5, 7, 13)] {
        let uv = quota_plan(k(m, n, p)).unwrap().block_totals().unwrap().uv;
        assert_eq!(uv as u32, (m * n - m - n + 1) / 2);
    }
}

#[test]
fn constructed_weight_equals_gamma_away_from_conflicts() {
    for m in 1..=6 {
        for n in m..=6 {
            for p in (m + n).max(n)..=m + n + 4 {
                let g = k(m, n, p);
                let result = gamma(g).unwrap();
                let cert = construct(g).unwrap();
                if let Some(v) = result.value() {
                    assert_eq!(cert.weight, v, "{g}");
                } else {
                    assert_eq!(Some(cert.weight), result.branch(cert.case), "{g}");
                }
            }
        }
    }
}

#[test]
fn group_sizes_follow_the_case() {
    let plan = quota_plan(k(3, 4, 8)).unwrap();
    assert_eq!(plan.case, CaseTag::MainE2);
    assert_eq!(plan.v_split().unwrap(), vec![0..1, 1..4]);
    assert_eq!(plan.w_split().unwrap(), vec![0..4, 4..8]);
    assert!(plan.split(Part::U).is_none());

    let plan = quota_plan(k(4, 5, 9)).unwrap();
    assert_eq!(plan.case, CaseTag::MainH1);
    assert_eq!(plan.w_split().unwrap(), vec![0..4, 4..9]);
    let plan = quota_plan(k(2, 5, 7)).unwrap();
    assert_eq!(plan.case, CaseTag::MainH2);
    assert_eq!(plan.w_split().unwrap(), vec![0..4, 4..7]);
}

#[test]
fn large_instance_stays_fast() {
    let cert = construct(k(40, 61, 180)).unwrap();
    assert!(verify(&cert.labeling).is_sedf);
    assert_eq!(cert.weight, branch_value(cert.case, k(40, 61, 180)));
}
