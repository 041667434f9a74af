use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::plan::QuotaPlan;
use crate::error::{Result, SednError};
use crate::graph::bits::BitMatrix;
use crate::graph::{Block, Edge, EdgeLabeling, Part, Sign, Vertex, VertexMap};

/// Builds a labeling meeting every quota of `plan` exactly.
///
/// Forced blocks go in first. The UV block then receives N_UV negatives,
/// spread so that the demand each vertex still has towards W stays as even
/// as possible. The remaining (U ∪ V) × W demand is realized as a bipartite
/// degree sequence.
pub fn realize(plan: &QuotaPlan) -> Result<EdgeLabeling> {
    plan.validate()?;
    let params = plan.params;
    let totals = plan.block_totals()?;
    let quotas = plan.quotas();
    let (m, n, p) = (params.m() as usize, params.n() as usize, params.p() as usize);

    let mut lab = EdgeLabeling::all_positive(params)?;
    for &(i, j) in &plan.forced_negative_blocks {
        for a in plan.groups[i].vertices() {
            for b in plan.groups[j].vertices() {
                lab.set(Edge::between(a, b).unwrap(), Sign::Negative);
            }
        }
    }
    let forced_neg = lab.negative_degrees();
    let forced_uv = lab.matrix(Block::UV);
    let forced_uv_rows: Vec<u32> = forced_uv
        .iter()
        .map(|r| r.iter().filter(|&&s| s < 0).count() as u32)
        .collect();
    let forced_uv_cols: Vec<u32> = (0..n)
        .map(|j| forced_uv.iter().filter(|r| r[j] < 0).count() as u32)
        .collect();
    let forced_uv_total: u64 = forced_uv_rows.iter().map(|&c| u64::from(c)).sum();
    let extra_uv = totals.uv.checked_sub(forced_uv_total).ok_or_else(|| {
        residual_error(plan, "forced UV negatives exceed N_UV", &quotas, &lab)
    })?;

    // UV degrees: water-fill the free demand towards W.
    let uv_deg_u = spread(
        &quotas.u,
        &forced_neg.u,
        &forced_uv_rows,
        n as u32,
        p as u32,
        extra_uv,
    )
    .ok_or_else(|| residual_error(plan, "cannot split N_UV over U", &quotas, &lab))?;
    let uv_deg_v = spread(
        &quotas.v,
        &forced_neg.v,
        &forced_uv_cols,
        m as u32,
        p as u32,
        extra_uv,
    )
    .ok_or_else(|| residual_error(plan, "cannot split N_UV over V", &quotas, &lab))?;

    let mut left: Vec<u32> = (0..m).map(|i| uv_deg_u[i] - forced_uv_rows[i]).collect();
    let mut right: Vec<u32> = (0..n).map(|j| uv_deg_v[j] - forced_uv_cols[j]).collect();
    let mut taken = BitMatrix::zeros(m, n);
    for (i, row) in forced_uv.iter().enumerate() {
        for (j, &s) in row.iter().enumerate() {
            taken.set(i, j, s < 0);
        }
    }
    fill_bipartite(&mut left, &mut right, &mut taken)
        .map_err(|why| residual_error(plan, &format!("UV stage: {why}"), &quotas, &lab))?;
    for i in 0..m {
        for j in 0..n {
            if taken.get(i, j) {
                lab.set(Edge::new(Block::UV, i as u32, j as u32), Sign::Negative);
            }
        }
    }

    // (U ∪ V) × W, left indices 0..m are U and m..m+n are V.
    let neg = lab.negative_degrees();
    let mut left: Vec<u32> = (0..m)
        .map(|i| quotas.u[i] - neg.u[i])
        .chain((0..n).map(|j| quotas.v[j] - neg.v[j]))
        .collect();
    let mut right: Vec<u32> = (0..p).map(|k| quotas.w[k] - neg.w[k]).collect();
    let mut taken = BitMatrix::zeros(m + n, p);
    for l in 0..m + n {
        for k in 0..p {
            if lab.sign(w_edge(l, k, m)) == Sign::Negative {
                taken.set(l, k, true);
            }
        }
    }
    fill_bipartite(&mut left, &mut right, &mut taken)
        .map_err(|why| residual_error(plan, &format!("W stage: {why}"), &quotas, &lab))?;
    for l in 0..m + n {
        for k in 0..p {
            if taken.get(l, k) {
                lab.set(w_edge(l, k, m), Sign::Negative);
            }
        }
    }

    if lab.negative_degrees() != quotas {
        return Err(residual_error(plan, "quotas not met exactly", &quotas, &lab));
    }
    Ok(lab)
}

fn w_edge(l: usize, k: usize, m: usize) -> Edge {
    if l < m {
        Edge::new(Block::UW, l as u32, k as u32)
    } else {
        Edge::new(Block::VW, (l - m) as u32, k as u32)
    }
}

/// Chooses each vertex's UV degree so the total is `forced + extra` and the
/// demand left for W (quota minus UV degree minus forced W edges) is as
/// even as possible. Ties go to the lowest index.
fn spread(
    quota: &[u32],
    forced_all: &[u32],
    forced_uv: &[u32],
    uv_width: u32,
    w_width: u32,
    extra: u64,
) -> Option<Vec<u32>> {
    let mut deg: Vec<u32> = forced_uv.to_vec();
    let mut heap = BinaryHeap::new();
    let mut placed = 0u64;
    for i in 0..quota.len() {
        let forced_w = forced_all[i] - forced_uv[i];
        let hi = uv_width.min(quota[i] - forced_w);
        // At most `w_width - forced_w` further W edges fit.
        let lo = quota[i].saturating_sub(w_width).max(forced_uv[i]);
        if lo > hi {
            return None;
        }
        placed += u64::from(lo - forced_uv[i]);
        deg[i] = lo;
        if deg[i] < hi {
            heap.push((quota[i] - forced_w - deg[i], Reverse(i), hi));
        }
    }
    if placed > extra {
        return None;
    }
    while placed < extra {
        let (_, Reverse(i), hi) = heap.pop()?;
        deg[i] += 1;
        placed += 1;
        let forced_w = forced_all[i] - forced_uv[i];
        if deg[i] < hi {
            heap.push((quota[i] - forced_w - deg[i], Reverse(i), hi));
        }
    }
    Some(deg)
}

/// Adds edges to `taken` until every left and right deficit is zero.
///
/// Greedy Havel–Hakimi pass first: the left vertex with the largest deficit
/// takes the free right vertices with the largest deficits. Whatever is left
/// is repaired with augmenting paths, which never remove an edge that was
/// present on entry.
fn fill_bipartite(
    left: &mut [u32],
    right: &mut [u32],
    taken: &mut BitMatrix,
) -> std::result::Result<(), String> {
    let total_l: u64 = left.iter().map(|&x| u64::from(x)).sum();
    let total_r: u64 = right.iter().map(|&x| u64::from(x)).sum();
    if total_l != total_r {
        return Err(format!("left demand {total_l} != right demand {total_r}"));
    }
    let fixed = taken.clone();
    let mut order: Vec<usize> = (0..left.len()).collect();
    order.sort_by_key(|&l| (Reverse(left[l]), l));
    let mut cols: Vec<usize> = (0..right.len()).collect();
    for &l in &order {
        if left[l] == 0 {
            continue;
        }
        cols.sort_by_key(|&r| (Reverse(right[r]), r));
        for &r in &cols {
            if left[l] == 0 || right[r] == 0 {
                break;
            }
            if !taken.get(l, r) {
                taken.set(l, r, true);
                left[l] -= 1;
                right[r] -= 1;
            }
        }
    }

    for l0 in 0..left.len() {
        while left[l0] > 0 {
            let path = augmenting_path(l0, right, taken, &fixed).ok_or_else(|| {
                format!(
                    "no augmenting path; left deficits {:?}, right deficits {:?}",
                    nonzero(left),
                    nonzero(right)
                )
            })?;
            for (l, r, add) in path {
                taken.set(l, r, add);
            }
            left[l0] -= 1;
        }
    }
    Ok(())
}

fn nonzero(xs: &[u32]) -> Vec<(usize, u32)> {
    xs.iter().copied().enumerate().filter(|&(_, x)| x > 0).collect()
}

/// BFS over alternating paths from left vertex `l0`: add an absent edge,
/// remove a removable present edge, and so on until a right vertex with
/// positive deficit is reached. Returns the edge flips and decrements that
/// right vertex's deficit.
fn augmenting_path(
    l0: usize,
    right: &mut [u32],
    taken: &BitMatrix,
    fixed: &BitMatrix,
) -> Option<Vec<(usize, usize, bool)>> {
    let nl = taken.rows();
    let nr = right.len();
    let mut from_left: Vec<Option<usize>> = vec![None; nr];
    let mut from_right: Vec<Option<usize>> = vec![None; nl];
    let mut seen_l = vec![false; nl];
    let mut queue = VecDeque::from([l0]);
    seen_l[l0] = true;
    while let Some(l) = queue.pop_front() {
        for r in 0..nr {
            if from_left[r].is_some() || taken.get(l, r) {
                continue;
            }
            from_left[r] = Some(l);
            if right[r] > 0 {
                right[r] -= 1;
                let mut flips = Vec::new();
                let mut cur_r = r;
                loop {
                    let l = from_left[cur_r].unwrap();
                    flips.push((l, cur_r, true));
                    if l == l0 {
                        break;
                    }
                    let prev_r = from_right[l].unwrap();
                    flips.push((l, prev_r, false));
                    cur_r = prev_r;
                }
                return Some(flips);
            }
            for l2 in 0..nl {
                if !seen_l[l2] && taken.get(l2, r) && !fixed.get(l2, r) {
                    seen_l[l2] = true;
                    from_right[l2] = Some(r);
                    queue.push_back(l2);
                }
            }
        }
    }
    None
}

fn residual_error(
    plan: &QuotaPlan,
    what: &str,
    quotas: &VertexMap<u32>,
    lab: &EdgeLabeling,
) -> SednError {
    let neg = lab.negative_degrees();
    let mut residual = Vec::new();
    for part in Part::ALL {
        for i in 0..plan.params.size(part) {
            let x = Vertex::new(part, i);
            let d = i64::from(*quotas.get(x)) - i64::from(*neg.get(x));
            if d != 0 {
                residual.push(format!("{x}:{d}"));
            }
        }
    }
    SednError::Construction(format!(
        "{} plan for {}: {what}; residual deficits [{}]",
        plan.case,
        plan.params,
        residual.join(" ")
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::quota_plan;
    use crate::graph::{verify, vertex_weights, TripartiteParams};

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn main_a_vertex_weights() {
        let lab = realize(&quota_plan(k(2, 2, 4)).unwrap()).unwrap();
        let w = vertex_weights(&lab);
        assert!(w.u.iter().chain(&w.v).all(|&x| x == 2));
        assert!(w.w.iter().all(|&x| x == 0));
        let report = verify(&lab);
        assert!(report.is_sedf);
        assert_eq!(report.weight, 4);
    }

    #[test]
    fn k22p_vertex_weights() {
        let lab = realize(&quota_plan(k(2, 2, 5)).unwrap()).unwrap();
        let w = vertex_weights(&lab);
        assert!(w.u.iter().chain(&w.v).all(|&x| x == 3));
        assert_eq!(w.w, vec![0, 0, 0, 0, 4]);
        assert_eq!(verify(&lab).weight, 8);
    }

    #[test]
    fn main_e2_vertex_weights() {
        let plan = quota_plan(k(3, 4, 8)).unwrap();
        let lab = realize(&plan).unwrap();
        let w = vertex_weights(&lab);
        assert_eq!(w.u, vec![2; 3]);
        assert_eq!(w.v, vec![1, 3, 3, 3]);
        assert_eq!(w.w, vec![-1, -1, -1, -1, 1, 1, 1, 1]);
        assert_eq!(verify(&lab).weight, 8);
    }

    #[test]
    fn deterministic() {
        let plan = quota_plan(k(4, 7, 13)).unwrap();
        assert_eq!(realize(&plan).unwrap(), realize(&plan).unwrap());
    }

    #[test]
    fn augmenting_repairs_a_stalled_greedy() {
        // (1,1) is already present, so greedy gives r0 to l0 and strands l1.
        let mut taken = BitMatrix::zeros(2, 2);
        taken.set(1, 1, true);
        let (mut left, mut right) = (vec![1, 1], vec![1, 1]);
        fill_bipartite(&mut left, &mut right, &mut taken).unwrap();
        assert!(taken.get(0, 1) && taken.get(1, 0) && taken.get(1, 1));
        assert!(!taken.get(0, 0));
    }

    #[test]
    fn unrealizable_demand_is_an_error() {
        let mut taken = BitMatrix::zeros(1, 2);
        let (mut left, mut right) = (vec![2], vec![2, 0]);
        assert!(fill_bipartite(&mut left, &mut right, &mut taken).is_err());
    }
}
