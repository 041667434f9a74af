use serde::Serialize;

use crate::error::{Result, SednError};
use crate::graph::{rebalance, vertex_weights, EdgeLabeling, Part, TripartiteParams};
use crate::oracle::canonicalize;

use super::SolveReport;

/// Which part, if any, has parity different from the other two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParityClass {
    AllSame,
    MDiffers,
    NDiffers,
    PDiffers,
}

impl ParityClass {
    pub fn of(params: TripartiteParams) -> Self {
        let [m, n, p] = params.sizes().map(|s| s % 2);
        if m == n && n == p {
            ParityClass::AllSame
        } else if n == p {
            ParityClass::MDiffers
        } else if m == p {
            ParityClass::NDiffers
        } else {
            ParityClass::PDiffers
        }
    }

    /// Lower bound on f(w) at some optimum, for canonical `params`.
    pub fn w_bound(self, params: TripartiteParams) -> Option<i64> {
        let [m, n, p] = params.sizes();
        match self {
            ParityClass::AllSame => Some(0),
            ParityClass::PDiffers if n < p => Some(0),
            ParityClass::MDiffers | ParityClass::NDiffers if m < n => Some(-1),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaVerdict {
    Holds,
    Violated,
    NotApplicable,
}

/// Vertex weights of a balanced optimum, in canonical part order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexWeightScan {
    pub params: TripartiteParams,
    pub optimum: i64,
    /// Minimum f(x) over U, V and W after rebalancing.
    pub min_weight: [i64; 3],
    /// Minimum f(w) over W before rebalancing.
    pub raw_min_w: i64,
    pub class: ParityClass,
    pub w_bound: Option<i64>,
    pub verdict: LemmaVerdict,
    #[serde(skip)]
    pub balanced: EdgeLabeling,
}

/// Rebalances every same-part pair of the optimum certificate until no two
/// vertices of a part differ by more than one negative edge, then checks
/// the parity-class bound on W.
pub fn optimum_vertex_weight_scan(report: &SolveReport) -> Result<VertexWeightScan> {
    if !report.exhausted {
        return Err(SednError::Refused(
            "vertex-weight scan needs an exhausted search".into(),
        ));
    }
    let canonical = canonicalize(report.params);
    let c = canonical.params;
    let start = canonical.labeling_to_canonical(&report.certificate)?;
    let raw_min_w = min_of(&start, Part::W);

    let mut lab = start;
    loop {
        let mut changed = false;
        for part in Part::ALL {
            let size = c.size(part);
            for a in 0..size {
                for b in a + 1..size {
                    let (x, y) = (
                        crate::graph::Vertex::new(part, a),
                        crate::graph::Vertex::new(part, b),
                    );
                    if lab.negative_degree(x).abs_diff(lab.negative_degree(y)) > 1 {
                        lab = rebalance(&lab, x, y)?;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let class = ParityClass::of(c);
    let w_bound = class.w_bound(c);
    let min_weight = Part::ALL.map(|part| min_of(&lab, part));
    let verdict = match w_bound {
        None => LemmaVerdict::NotApplicable,
        Some(b) if min_weight[2] >= b => LemmaVerdict::Holds,
        Some(_) => LemmaVerdict::Violated,
    };
    Ok(VertexWeightScan {
        params: c,
        optimum: report.optimum,
        min_weight,
        raw_min_w,
        class,
        w_bound,
        verdict,
        balanced: lab,
    })
}

fn min_of(lab: &EdgeLabeling, part: Part) -> i64 {
    vertex_weights(lab)
        .part(part)
        .iter()
        .copied()
        .min()
        .expect("parts are non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify;
    use crate::solver::{solve_exact, SolveConfig};

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn classes() {
        assert_eq!(ParityClass::of(k(2, 2, 4)), ParityClass::AllSame);
        assert_eq!(ParityClass::of(k(1, 1, 2)), ParityClass::PDiffers);
        assert_eq!(ParityClass::of(k(1, 2, 2)), ParityClass::MDiffers);
        assert_eq!(ParityClass::of(k(2, 3, 4)), ParityClass::NDiffers);
        assert_eq!(ParityClass::PDiffers.w_bound(k(1, 2, 2)), None);
        assert_eq!(ParityClass::MDiffers.w_bound(k(2, 2, 3)), None);
        assert_eq!(ParityClass::NDiffers.w_bound(k(2, 3, 4)), Some(-1));
    }

    #[test]
    fn balanced_optimum_is_still_optimal() {
        let r = solve_exact(k(2, 2, 4), &SolveConfig::default()).unwrap();
        let s = optimum_vertex_weight_scan(&r).unwrap();
        assert!(verify(&s.balanced).is_sedf);
        assert_eq!(s.balanced.weight(), r.optimum);
        assert_eq!(s.verdict, LemmaVerdict::Holds);
    }
}
