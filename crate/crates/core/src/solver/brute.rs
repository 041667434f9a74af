use crate::error::{Result, SednError};
use crate::graph::{EdgeLabeling, Sign, TripartiteParams};

pub const BRUTE_FORCE_MAX_EDGES: u32 = 22;

/// Minimum weight over all 2^E labelings, checked edge by edge against
/// closed-neighbourhood bit masks. Returns the first minimiser in mask order.
pub fn brute_force(params: TripartiteParams) -> Result<(i64, EdgeLabeling)> {
    let e = params.edge_count();
    if e > u128::from(BRUTE_FORCE_MAX_EDGES) {
        return Err(SednError::Refused(format!(
            "{params} has {e} edges, brute force stops at {BRUTE_FORCE_MAX_EDGES}"
        )));
    }
    let edges: Vec<_> = params.edges().collect();
    let closed: Vec<u32> = edges
        .iter()
        .map(|a| {
            let (x, y) = a.endpoints();
            edges.iter().enumerate().fold(0u32, |acc, (j, b)| {
                let (s, t) = b.endpoints();
                if s == x || s == y || t == x || t == y {
                    acc | 1 << j
                } else {
                    acc
                }
            })
        })
        .collect();
    let sizes: Vec<i64> = closed.iter().map(|m| i64::from(m.count_ones())).collect();

    let mut best: Option<(u32, u32)> = None;
    for mask in 0u32..(1u32 << edges.len()) {
        let neg = mask.count_ones();
        if best.is_some_and(|(b, _)| neg <= b) {
            continue;
        }
        let ok = closed
            .iter()
            .zip(&sizes)
            .all(|(c, &size)| size - 2 * i64::from((mask & c).count_ones()) >= 1);
        if ok {
            best = Some((neg, mask));
        }
    }
    let (neg, mask) = best.expect("the all-positive labeling always dominates");
    let mut lab = EdgeLabeling::all_positive(params)?;
    for (j, &edge) in edges.iter().enumerate() {
        if mask >> j & 1 == 1 {
            lab.set(edge, Sign::Negative);
        }
    }
    Ok((edges.len() as i64 - 2 * i64::from(neg), lab))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify;

    #[test]
    fn tiny_values() {
        for ((m, n, p), want) in [((1, 1, 1), 1), ((1, 1, 2), 3), ((1, 2, 2), 4), ((2, 2, 2), 4)] {
            let (w, lab) = brute_force(TripartiteParams::new(m, n, p).unwrap()).unwrap();
            assert_eq!(w, want, "K({m},{n},{p})");
            assert!(verify(&lab).is_sedf);
            assert_eq!(lab.weight(), w);
        }
    }

    #[test]
    fn refuses_large() {
        assert!(brute_force(TripartiteParams::new(2, 3, 4).unwrap()).is_err());
    }
}
