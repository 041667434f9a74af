use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SednError};
use crate::graph::{Part, TripartiteParams, Vertex, VertexMap};
use crate::oracle::{k1np_case, k22p_case, main_case, CaseTag};

/// A run of consecutive vertices of one part sharing a negative-edge quota.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub part: Part,
    pub label: String,
    pub start: u32,
    pub len: u32,
    pub quota: u32,
}

impl Group {
    pub fn range(&self) -> Range<u32> {
        self.start..self.start + self.len
    }

    pub fn contains(&self, x: Vertex) -> bool {
        x.part == self.part && self.range().contains(&x.index)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.range().map(move |i| Vertex::new(self.part, i))
    }

    /// Vertex weight deg(x) - 2·quota(x) once the quota is met.
    pub fn target_weight(&self, params: &TripartiteParams) -> i64 {
        params.degree(self.part) as i64 - 2 * i64::from(self.quota)
    }
}

/// Negative-edge totals per block implied by the quotas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTotals {
    pub uv: u64,
    pub uw: u64,
    pub vw: u64,
}

/// Per-vertex negative-edge targets for one constructive case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotaPlan {
    pub params: TripartiteParams,
    pub case: CaseTag,
    /// Partition of every part into groups, in index order.
    pub groups: Vec<Group>,
    /// Pairs of group indices whose connecting edges are all negative.
    pub forced_negative_blocks: Vec<(usize, usize)>,
}

impl QuotaPlan {
    pub fn groups_in(&self, part: Part) -> impl Iterator<Item = &Group> {
        self.groups.iter().filter(move |g| g.part == part)
    }

    pub fn group_of(&self, x: Vertex) -> &Group {
        self.groups
            .iter()
            .find(|g| g.contains(x))
            .unwrap_or_else(|| panic!("{x} is not covered by the plan for {}", self.params))
    }

    pub fn quota(&self, x: Vertex) -> u32 {
        self.group_of(x).quota
    }

    pub fn quotas(&self) -> VertexMap<u32> {
        let mut q = VertexMap::filled(&self.params, 0);
        for g in &self.groups {
            for x in g.vertices() {
                *q.get_mut(x) = g.quota;
            }
        }
        q
    }

    /// Index ranges of the groups of `part`, or `None` when the part is one group.
    pub fn split(&self, part: Part) -> Option<Vec<Range<u32>>> {
        let ranges: Vec<_> = self.groups_in(part).map(Group::range).collect();
        (ranges.len() > 1).then_some(ranges)
    }

    pub fn v_split(&self) -> Option<Vec<Range<u32>>> {
        self.split(Part::V)
    }

    pub fn w_split(&self) -> Option<Vec<Range<u32>>> {
        self.split(Part::W)
    }

    fn part_sum(&self, part: Part) -> i64 {
        self.groups_in(part)
            .map(|g| i64::from(g.len) * i64::from(g.quota))
            .sum()
    }

    /// Solves N_UV + N_UW = ΣU, N_UV + N_VW = ΣV, N_UW + N_VW = ΣW.
    pub fn block_totals(&self) -> Result<BlockTotals> {
        let (su, sv, sw) = (
            self.part_sum(Part::U),
            self.part_sum(Part::V),
            self.part_sum(Part::W),
        );
        let twice_uv = su + sv - sw;
        if twice_uv % 2 != 0 {
            return Err(self.bug(format!("odd quota sum {}", su + sv + sw)));
        }
        let uv = twice_uv / 2;
        let (uw, vw) = (su - uv, sv - uv);
        let [m, n, p] = self.params.sizes().map(i64::from);
        if uv < 0 || uw < 0 || vw < 0 || uv > m * n || uw > m * p || vw > n * p {
            return Err(self.bug(format!(
                "block totals out of range: N_UV={uv}, N_UW={uw}, N_VW={vw}"
            )));
        }
        Ok(BlockTotals {
            uv: uv as u64,
            uw: uw as u64,
            vw: vw as u64,
        })
    }

    /// Weight of any labeling meeting every quota: |E| - Σ quota.
    pub fn target_weight(&self) -> i64 {
        self.params.edge_count() as i64
            - self.part_sum(Part::U)
            - self.part_sum(Part::V)
            - self.part_sum(Part::W)
    }

    pub fn is_forced(&self, a: Vertex, b: Vertex) -> bool {
        self.forced_negative_blocks.iter().any(|&(i, j)| {
            let (gi, gj) = (&self.groups[i], &self.groups[j]);
            (gi.contains(a) && gj.contains(b)) || (gi.contains(b) && gj.contains(a))
        })
    }

    /// Forced negative edges at each vertex of group `g`.
    pub fn forced_count(&self, g: usize) -> u64 {
        self.forced_negative_blocks
            .iter()
            .filter_map(|&(i, j)| match (i == g, j == g) {
                (true, _) => Some(u64::from(self.groups[j].len)),
                (_, true) => Some(u64::from(self.groups[i].len)),
                _ => None,
            })
            .sum()
    }

    pub fn validate(&self) -> Result<()> {
        for part in Part::ALL {
            let mut next = 0;
            for g in self.groups_in(part) {
                if g.start != next {
                    return Err(self.bug(format!("group {} does not start at {next}", g.label)));
                }
                next += g.len;
            }
            if next != self.params.size(part) {
                return Err(self.bug(format!("groups of {part} cover {next} vertices")));
            }
        }
        for (k, g) in self.groups.iter().enumerate() {
            if u64::from(g.quota) > self.params.degree(g.part) {
                return Err(self.bug(format!("quota of {} exceeds the degree", g.label)));
            }
            if self.forced_count(k) > u64::from(g.quota) {
                return Err(self.bug(format!("forced negatives at {} exceed its quota", g.label)));
            }
        }
        self.block_totals()?;
        Ok(())
    }

    fn bug(&self, what: String) -> SednError {
        SednError::Construction(format!("{} plan for {}: {what}", self.case, self.params))
    }
}

struct Builder {
    params: TripartiteParams,
    case: CaseTag,
    groups: Vec<Group>,
    forced: Vec<(usize, usize)>,
}

impl Builder {
    fn new(params: TripartiteParams, case: CaseTag) -> Self {
        Builder {
            params,
            case,
            groups: Vec::new(),
            forced: Vec::new(),
        }
    }

    fn group(&mut self, part: Part, label: &str, len: i64, quota: i64) -> usize {
        assert!(len >= 0 && quota >= 0, "{}: {label} has len {len}, quota {quota}", self.case);
        let start = self.groups_in_part(part);
        self.groups.push(Group {
            part,
            label: label.to_string(),
            start,
            len: len as u32,
            quota: quota as u32,
        });
        self.groups.len() - 1
    }

    fn whole(&mut self, part: Part, quota: i64) -> usize {
        let len = i64::from(self.params.size(part));
        let label = part.to_string().to_uppercase();
        self.group(part, &label, len, quota)
    }

    /// `first` vertices of `part` get `q_first`, the rest `q_rest`.
    fn two(&mut self, part: Part, names: [&str; 2], first: i64, q_first: i64, q_rest: i64) -> [usize; 2] {
        let rest = i64::from(self.params.size(part)) - first;
        [
            self.group(part, names[0], first, q_first),
            self.group(part, names[1], rest, q_rest),
        ]
    }

    fn groups_in_part(&self, part: Part) -> u32 {
        self.groups.iter().filter(|g| g.part == part).map(|g| g.len).sum()
    }

    fn force(&mut self, a: usize, b: usize) {
        self.forced.push((a.min(b), a.max(b)));
    }

    /// Adds every group pair whose target weights sum to at most 1: an edge
    /// `ab` has f[ab] = f(a) + f(b) - f(ab), so such edges must be negative.
    fn finish(mut self) -> Result<QuotaPlan> {
        for i in 0..self.groups.len() {
            for j in i + 1..self.groups.len() {
                let (gi, gj) = (&self.groups[i], &self.groups[j]);
                if gi.part == gj.part || gi.len == 0 || gj.len == 0 {
                    continue;
                }
                let sum = gi.target_weight(&self.params) + gj.target_weight(&self.params);
                if sum < 0 {
                    return Err(SednError::Construction(format!(
                        "{} plan for {}: groups {} and {} have weight sum {sum}",
                        self.case, self.params, gi.label, gj.label
                    )));
                }
                if sum <= 1 {
                    self.forced.push((i, j));
                }
            }
        }
        self.forced.sort_unstable();
        self.forced.dedup();
        let plan = QuotaPlan {
            params: self.params,
            case: self.case,
            groups: self.groups,
            forced_negative_blocks: self.forced,
        };
        plan.validate()?;
        Ok(plan)
    }
}

fn half(x: i64) -> i64 {
    assert!(x % 2 == 0, "odd numerator {x} in a quota");
    x / 2
}

/// The constructive case claiming a canonical triple, if any.
pub fn constructive_case(params: TripartiteParams) -> Option<CaseTag> {
    if !params.is_canonical() || params.p() < params.m() + params.n() {
        return None;
    }
    k1np_case(params)
        .or_else(|| k22p_case(params))
        .or_else(|| main_case(params))
}

/// Quotas, groups and forced blocks for a canonical triple with p ≥ m+n.
pub fn quota_plan(params: TripartiteParams) -> Result<QuotaPlan> {
    use CaseTag::*;
    use Part::{U, V, W};

    let [m, n, p] = params.sizes();
    if !params.is_canonical() {
        return Err(SednError::InvalidParams(format!(
            "{params} is not canonical (expected m ≤ n ≤ p)"
        )));
    }
    let case = constructive_case(params).ok_or_else(|| SednError::NoConstruction {
        m,
        n,
        p,
        reason: if p < m + n {
            "p < m+n".to_string()
        } else {
            "no constructive case applies".to_string()
        },
    })?;
    let [m, n, p] = [m, n, p].map(i64::from);
    let mut b = Builder::new(params, case);

    match case {
        MainA => {
            b.whole(U, half(n + p - 2));
            b.whole(V, half(m + p - 2));
            b.whole(W, half(m + n));
        }
        MainB => {
            b.whole(U, half(n + p - 2));
            b.whole(V, half(m + p - 2));
            b.two(W, ["w*", "W"], 1, half(m + n - 2), half(m + n));
        }
        MainC1 | MainD2 => {
            // The reduced vertex sits in U unless that leaves N_UV < 0,
            // which happens only at (2,4,p); W absorbs it there instead.
            if 2 * m * n - 3 * m - 3 * n - 2 >= 0 {
                b.two(U, ["u*", "U"], 1, half(n + p - 5), half(n + p - 3));
                b.whole(V, half(m + p - 3));
                b.whole(W, half(m + n));
            } else {
                b.whole(U, half(n + p - 3));
                b.whole(V, half(m + p - 3));
                b.two(W, ["w*", "W"], 1, half(m + n - 2), half(m + n));
            }
        }
        MainC2 | MainD1 => {
            b.whole(U, half(n + p - 3));
            b.whole(V, half(m + p - 3));
            b.whole(W, half(m + n));
        }
        MainH2 => return h2_plan(params),
        MainE1 | MainE2 | MainH1 => {
            let v1 = match case {
                MainE1 => half(n - m - 1),
                _ => half(n - m + 1),
            };
            let w1 = match case {
                MainE1 | MainE2 => half(p),
                _ => half(p - 1),
            };
            b.whole(U, half(n + p - 2));
            let [gv1, _] = b.two(V, ["V1", "V2"], v1, half(m + p - 1), half(m + p - 3));
            let [gw1, _] = b.two(W, ["W1", "W2"], w1, half(m + n + 1), half(m + n - 1));
            b.force(gv1, gw1);
        }
        MainF1 | MainF2 | MainG1 | MainG2 => {
            let v1 = match case {
                MainF1 | MainG1 => half(n - m - 1),
                _ => half(n - m + 1),
            };
            let w1 = match case {
                MainF1 | MainF2 => half(p),
                _ => half(p + 1),
            };
            b.whole(U, half(n + p - 1));
            let [gv1, _] = b.two(V, ["V1", "V2"], v1, half(m + p - 2), half(m + p - 4));
            let [gw1, _] = b.two(W, ["W1", "W2"], w1, half(m + n + 1), half(m + n - 1));
            b.force(gv1, gw1);
        }
        K1np1 => {
            b.whole(U, half(n + p - 2));
            b.whole(V, half(p - 1));
            b.two(W, ["w*", "W"], 1, half(n - 1), half(n + 1));
        }
        K1np2 => {
            b.whole(U, half(n + p - 2));
            b.two(V, ["V1", "V2"], half(n), half(p), half(p - 2));
            b.group(W, "W1", half(p), half(n + 2));
            b.group(W, "W2", half(p - 2), half(n));
            b.group(W, "W3", 1, half(n - 2));
        }
        K1np3 => {
            b.whole(U, half(n + p - 1));
            b.two(V, ["V1", "V2"], half(n), half(p - 1), half(p - 3));
            b.two(W, ["W1", "W2"], half(p - n - 1), half(n + 2), half(n));
        }
        K1np4 => {
            b.whole(U, half(n + p - 3));
            b.whole(V, half(p - 2));
            b.two(W, ["W1", "W2"], p - half(n + 3), half(n + 1), half(n - 1));
        }
        K22p => {
            let gu = b.whole(U, half(p - 1));
            let gv = b.whole(V, half(p - 1));
            let gw1 = b.group(W, "W1", half(p - 1), 2);
            let gw2 = b.group(W, "W2", half(p - 1), 2);
            b.group(W, "W3", 1, 0);
            b.force(gu, gw1);
            b.force(gv, gw2);
        }
        _ => unreachable!("{case} is not constructive"),
    }
    b.finish()
}

/// Plan with U1/U2, V1/V2 and W1/W2 at vertex weights 2/4, 1/3 and -1/+1.
fn h_plan(params: TripartiteParams, u1: i64, v1: i64, w1: i64) -> Result<QuotaPlan> {
    use Part::{U, V, W};
    let [m, n, p] = params.sizes().map(i64::from);
    let mut b = Builder::new(params, CaseTag::MainH2);
    if u1 == m {
        b.whole(U, half(n + p - 2));
    } else {
        b.two(U, ["U1", "U2"], u1, half(n + p - 2), half(n + p - 4));
    }
    let [gv1, _] = b.two(V, ["V1", "V2"], v1, half(m + p - 1), half(m + p - 3));
    let [gw1, _] = b.two(W, ["W1", "W2"], w1, half(m + n + 1), half(m + n - 1));
    b.force(gv1, gw1);
    b.finish()
}

/// The weight-(3m+2n-2)/2 plan for m ≡ 2 (mod 4), n and p odd.
///
/// With |U1| = m, |V1| = (n-m+1)/2 and |W1| = (p+1)/2, U × W1 is forced
/// negative and U keeps only m(n-3)/2 slots for N_UV = (mn-n-3m/2)/2, which
/// is too few once n < 3m/2. Any sizes with |U1| + |V1| + |W1| = (m+n+p+2)/2
/// give the same weight; the nearest realizable ones are used then.
fn h2_plan(params: TripartiteParams) -> Result<QuotaPlan> {
    let [m, n, p] = params.sizes().map(i64::from);
    let (w1_nominal, total) = (half(p + 1), half(m + n + p + 2));
    let nominal = h_plan(params, m, half(n - m + 1), w1_nominal)?;
    if 2 * n >= 3 * m {
        return Ok(nominal);
    }
    let mut candidates: Vec<(i64, i64, i64)> = (0..=m)
        .flat_map(|u1| (1..=p).map(move |w1| (u1, total - u1 - w1, w1)))
        .filter(|&(_, v1, _)| (0..=n).contains(&v1))
        .collect();
    candidates.sort_by_key(|&(u1, _, w1)| ((m - u1) + (w1 - w1_nominal).abs(), -u1, w1));
    for (u1, v1, w1) in candidates {
        let Ok(plan) = h_plan(params, u1, v1, w1) else {
            continue;
        };
        if super::realize::realize(&plan).is_ok() {
            return Ok(plan);
        }
    }
    Err(SednError::Construction(format!(
        "MAIN.H2 plan for {params}: no realizable group sizes"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn main_a_quotas() {
        let plan = quota_plan(k(2, 2, 4)).unwrap();
        let q = plan.quotas();
        assert!(q.u.iter().chain(&q.v).chain(&q.w).all(|&x| x == 2));
        assert_eq!(plan.block_totals().unwrap().uv, 0);
        assert_eq!(plan.target_weight(), 4);
    }

    #[test]
    fn main_b_quotas() {
        let plan = quota_plan(k(3, 3, 7)).unwrap();
        let q = plan.quotas();
        assert_eq!(q.u, vec![4; 3]);
        assert_eq!(q.v, vec![4; 3]);
        assert_eq!(q.w, vec![2, 3, 3, 3, 3, 3, 3]);
        // (mn - m - n + 1)/2
        assert_eq!(plan.block_totals().unwrap().uv, 2);
    }

    #[test]
    fn k1np4_quotas() {
        let plan = quota_plan(k(1, 3, 6)).unwrap();
        let q = plan.quotas();
        assert_eq!(q.u, vec![3]);
        assert_eq!(q.v, vec![2; 3]);
        assert_eq!(q.w, vec![2, 2, 2, 1, 1, 1]);
        assert_eq!(plan.block_totals().unwrap().uv, 0);
    }

    #[test]
    fn k22p_forced_blocks() {
        let plan = quota_plan(k(2, 2, 5)).unwrap();
        assert_eq!(plan.w_split().unwrap(), vec![0..2, 2..4, 4..5]);
        assert_eq!(plan.quotas().w, vec![2, 2, 2, 2, 0]);
        assert!(plan.is_forced(Vertex::u(1), Vertex::w(0)));
        assert!(plan.is_forced(Vertex::w(3), Vertex::v(0)));
        assert!(!plan.is_forced(Vertex::u(0), Vertex::w(2)));
    }

    #[test]
    fn region_gate() {
        assert!(matches!(quota_plan(k(2, 3, 4)), Err(SednError::NoConstruction { .. })));
        assert!(matches!(quota_plan(k(1, 1, 1)), Err(SednError::NoConstruction { .. })));
        assert!(matches!(quota_plan(k(3, 2, 8)), Err(SednError::InvalidParams(_))));
    }
}
