use serde::{Deserialize, Serialize};

use super::{Edge, EdgeId, EdgeLabeling, Part, Sign, Vertex, VertexMap};
use crate::error::{Result, SednError};

/// f[e] via the counting identity
/// `f[ab] = deg(a) + deg(b) - 2x - 2y - f(ab)`, where x and y are the
/// negative-edge counts at a and b.
pub fn closed_neighborhood_sum(labeling: &EdgeLabeling, edge: Edge) -> Result<i64> {
    let params = labeling.params();
    if !params.contains_edge(edge) {
        return Err(SednError::InvalidEdge(format!("{edge} is not an edge of {params}")));
    }
    let (a, b) = edge.endpoints();
    let x = i64::from(labeling.negative_degree(a));
    let y = i64::from(labeling.negative_degree(b));
    let value = params.degree(a.part) as i64 + params.degree(b.part) as i64
        - 2 * x
        - 2 * y
        - labeling.sign(edge).value();
    debug_assert_eq!(Ok(value), closed_neighborhood_sum_direct(labeling, edge).map_err(|_| ()));
    Ok(value)
}

/// f[e] by summing f over N[e] edge by edge.
pub fn closed_neighborhood_sum_direct(labeling: &EdgeLabeling, edge: Edge) -> Result<i64> {
    let params = labeling.params();
    if !params.contains_edge(edge) {
        return Err(SednError::InvalidEdge(format!("{edge} is not an edge of {params}")));
    }
    let (a, b) = edge.endpoints();
    let mut sum = labeling.sign(edge).value();
    for end in [a, b] {
        sum += params
            .incident_edges(end)
            .filter(|&e| e != edge)
            .map(|e| labeling.sign(e).value())
            .sum::<i64>();
    }
    Ok(sum)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub is_sedf: bool,
    pub weight: i64,
    pub min_closed_sum: i64,
    /// Every edge with f[e] < 1, in id order.
    pub violations: Vec<(EdgeId, i64)>,
}

pub fn verify(labeling: &EdgeLabeling) -> VerifyReport {
    let params = labeling.params();
    let neg = labeling.negative_degrees();
    let mut min_closed_sum = i64::MAX;
    let mut violations = Vec::new();
    for e in params.edges() {
        let (a, b) = e.endpoints();
        let sum = params.degree(a.part) as i64 + params.degree(b.part) as i64
            - 2 * i64::from(*neg.get(a))
            - 2 * i64::from(*neg.get(b))
            - labeling.sign(e).value();
        min_closed_sum = min_closed_sum.min(sum);
        if sum < 1 {
            violations.push((params.edge_id(e), sum));
        }
    }
    VerifyReport {
        is_sedf: violations.is_empty(),
        weight: labeling.weight(),
        min_closed_sum,
        violations,
    }
}

/// f(x) = deg(x) - 2·(negative edges at x) for every vertex.
pub fn vertex_weights(labeling: &EdgeLabeling) -> VertexMap<i64> {
    let params = labeling.params();
    let neg = labeling.negative_degrees();
    VertexMap {
        u: neg.u.iter().map(|&c| params.degree(Part::U) as i64 - 2 * i64::from(c)).collect(),
        v: neg.v.iter().map(|&c| params.degree(Part::V) as i64 - 2 * i64::from(c)).collect(),
        w: neg.w.iter().map(|&c| params.degree(Part::W) as i64 - 2 * i64::from(c)).collect(),
    }
}

/// Moves negative edges between two same-part vertices `a` and `b` until their
/// negative counts differ by at most one.
///
/// Each step picks the first common neighbour `l` (in U, V, W index order)
/// with `f(lo·l) = +1` and `f(hi·l) = -1` and swaps the two signs, which keeps
/// the weight and the dominating property.
pub fn rebalance(labeling: &EdgeLabeling, a: Vertex, b: Vertex) -> Result<EdgeLabeling> {
    let params = labeling.params();
    for x in [a, b] {
        if !params.contains_vertex(x) {
            return Err(SednError::InvalidVertex(format!("{x} is not a vertex of {params}")));
        }
    }
    if a.part != b.part {
        return Err(SednError::DifferentParts { a, b });
    }
    let report = verify(labeling);
    if !report.is_sedf {
        return Err(SednError::NotSedf {
            violations: report.violations.len(),
        });
    }

    let mut out = labeling.clone();
    if a == b {
        return Ok(out);
    }
    loop {
        let na = out.negative_degree(a);
        let nb = out.negative_degree(b);
        if na.abs_diff(nb) <= 1 {
            break;
        }
        let (lo, hi) = if na < nb { (a, b) } else { (b, a) };
        let pivot = params
            .all_vertices()
            .filter(|l| l.part != a.part)
            .find(|&l| {
                out.sign_between(lo, l) == Some(Sign::Positive)
                    && out.sign_between(hi, l) == Some(Sign::Negative)
            })
            .expect("a vertex with two more negative edges has a swappable neighbour");
        out.set(Edge::between(lo, pivot).unwrap(), Sign::Negative);
        out.set(Edge::between(hi, pivot).unwrap(), Sign::Positive);
    }
    debug_assert!(verify(&out).is_sedf);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Block, TripartiteParams};

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn triangle_sums() {
        let g = k(1, 1, 1);
        let pos = EdgeLabeling::all_positive(g).unwrap();
        let neg = EdgeLabeling::all_negative(g).unwrap();
        for e in g.edges() {
            assert_eq!(closed_neighborhood_sum(&pos, e).unwrap(), 3);
            assert_eq!(closed_neighborhood_sum(&neg, e).unwrap(), -3);
        }
    }

    #[test]
    fn one_negative_edge_on_k112() {
        let g = k(1, 1, 2);
        let uw1 = Edge::new(Block::UW, 0, 0);
        let lab = EdgeLabeling::all_positive(g).unwrap().with_sign(uw1, Sign::Negative);
        // N[uw1] = {uw1, uv, uw2, vw1}
        assert_eq!(closed_neighborhood_sum(&lab, uw1).unwrap(), 2);
        assert_eq!(closed_neighborhood_sum_direct(&lab, uw1).unwrap(), 2);
    }

    #[test]
    fn invalid_edge_is_rejected() {
        let lab = EdgeLabeling::all_positive(k(1, 1, 1)).unwrap();
        assert!(matches!(
            closed_neighborhood_sum(&lab, Edge::new(Block::UW, 0, 1)),
            Err(SednError::InvalidEdge(_))
        ));
    }

    #[test]
    fn verify_uniform_labelings() {
        let report = verify(&EdgeLabeling::all_positive(k(2, 2, 4)).unwrap());
        assert!(report.is_sedf);
        assert_eq!(report.weight, 20);

        let report = verify(&EdgeLabeling::all_negative(k(1, 1, 1)).unwrap());
        assert!(!report.is_sedf);
        assert_eq!(report.violations.len(), 3);
        assert_eq!(report.min_closed_sum, -3);
    }

    #[test]
    fn triangle_vertex_weights() {
        let w = vertex_weights(&EdgeLabeling::all_positive(k(1, 1, 1)).unwrap());
        assert!(w.iter().all(|(_, &x)| x == 2));
    }

    #[test]
    fn rebalance_argument_errors() {
        let g = k(2, 2, 2);
        let pos = EdgeLabeling::all_positive(g).unwrap();
        assert!(matches!(
            rebalance(&pos, Vertex::u(0), Vertex::v(0)),
            Err(SednError::DifferentParts { .. })
        ));
        assert!(matches!(
            rebalance(&pos, Vertex::u(0), Vertex::u(2)),
            Err(SednError::InvalidVertex(_))
        ));
        let neg = EdgeLabeling::all_negative(g).unwrap();
        assert!(matches!(
            rebalance(&neg, Vertex::u(0), Vertex::u(1)),
            Err(SednError::NotSedf { .. })
        ));
    }

    #[test]
    fn balanced_pair_is_unchanged() {
        let g = k(2, 2, 2);
        let lab = EdgeLabeling::all_positive(g)
            .unwrap()
            .with_sign(Edge::new(Block::UW, 0, 0), Sign::Negative);
        assert_eq!(rebalance(&lab, Vertex::u(0), Vertex::u(1)).unwrap(), lab);
        assert_eq!(rebalance(&lab, Vertex::u(0), Vertex::u(0)).unwrap(), lab);
    }

    #[test]
    fn rebalance_moves_negatives() {
        // u0 carries three negatives and u1 none; K(2,3,3) all-positive otherwise.
        let g = k(2, 3, 3);
        let mut lab = EdgeLabeling::all_positive(g).unwrap();
        for k in 0..3 {
            lab.set(Edge::new(Block::UW, 0, k), Sign::Negative);
        }
        assert!(verify(&lab).is_sedf);
        let out = rebalance(&lab, Vertex::u(0), Vertex::u(1)).unwrap();
        assert_eq!(out.weight(), lab.weight());
        assert!(verify(&out).is_sedf);
        assert!(out.negative_degree(Vertex::u(0)).abs_diff(out.negative_degree(Vertex::u(1))) <= 1);
    }
}
