use std::fmt;

use serde::{Deserialize, Serialize};

use super::bits::BitMatrix;
use super::{Block, Edge, EdgeId, Part, TripartiteParams, Vertex, VertexMap};
use crate::error::{Result, SednError};

/// Largest labeling (in edges) that will be materialized by default.
pub const DEFAULT_MAX_LABELING_EDGES: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

/// A ±1 assignment on every edge of K(m,n,p).
///
/// Each block is a packed bit matrix with a set bit meaning `-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    params: TripartiteParams,
    uv: BitMatrix,
    uw: BitMatrix,
    vw: BitMatrix,
}

impl fmt::Debug for EdgeLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeLabeling")
            .field("params", &self.params)
            .field("uv", &self.matrix(Block::UV))
            .field("uw", &self.matrix(Block::UW))
            .field("vw", &self.matrix(Block::VW))
            .finish()
    }
}

impl EdgeLabeling {
    pub fn all_positive(params: TripartiteParams) -> Result<Self> {
        Self::all_positive_capped(params, DEFAULT_MAX_LABELING_EDGES)
    }

    pub fn all_positive_capped(params: TripartiteParams, cap: u128) -> Result<Self> {
        let edges = params.edge_count();
        if edges > cap {
            return Err(SednError::TooLarge { edges, cap });
        }
        let dims = |b| {
            let (r, c) = params.block_dims(b);
            (r as usize, c as usize)
        };
        let (a, b) = dims(Block::UV);
        let (c, d) = dims(Block::UW);
        let (e, f) = dims(Block::VW);
        Ok(EdgeLabeling {
            params,
            uv: BitMatrix::zeros(a, b),
            uw: BitMatrix::zeros(c, d),
            vw: BitMatrix::zeros(e, f),
        })
    }

    pub fn all_negative(params: TripartiteParams) -> Result<Self> {
        let mut lab = Self::all_positive(params)?;
        for block in Block::ALL {
            let (r, c) = params.block_dims(block);
            *lab.bits_mut(block) = BitMatrix::ones(r as usize, c as usize);
        }
        Ok(lab)
    }

    /// Builds a labeling from three ±1 matrices of shapes m×n, m×p and n×p.
    pub fn from_matrices(
        params: TripartiteParams,
        uv: &[Vec<i64>],
        uw: &[Vec<i64>],
        vw: &[Vec<i64>],
    ) -> Result<Self> {
        let mut lab = Self::all_positive(params)?;
        for (block, rows) in [(Block::UV, uv), (Block::UW, uw), (Block::VW, vw)] {
            let (nr, nc) = params.block_dims(block);
            if rows.len() != nr as usize {
                return Err(SednError::MalformedLabeling(format!(
                    "block {block} has {} rows, expected {nr}",
                    rows.len()
                )));
            }
            for (r, row) in rows.iter().enumerate() {
                if row.len() != nc as usize {
                    return Err(SednError::MalformedLabeling(format!(
                        "block {block} row {r} has {} entries, expected {nc}",
                        row.len()
                    )));
                }
                for (c, &v) in row.iter().enumerate() {
                    let sign = Sign::from_value(v).ok_or_else(|| {
                        SednError::MalformedLabeling(format!(
                            "block {block} entry ({r},{c}) is {v}, expected -1 or +1"
                        ))
                    })?;
                    lab.set(Edge::new(block, r as u32, c as u32), sign);
                }
            }
        }
        Ok(lab)
    }

    pub fn params(&self) -> TripartiteParams {
        self.params
    }

    fn bits(&self, block: Block) -> &BitMatrix {
        match block {
            Block::UV => &self.uv,
            Block::UW => &self.uw,
            Block::VW => &self.vw,
        }
    }

    fn bits_mut(&mut self, block: Block) -> &mut BitMatrix {
        match block {
            Block::UV => &mut self.uv,
            Block::UW => &mut self.uw,
            Block::VW => &mut self.vw,
        }
    }

    /// Sign of an edge known to belong to this graph.
    pub fn sign(&self, e: Edge) -> Sign {
        debug_assert!(self.params.contains_edge(e));
        if self.bits(e.block).get(e.row as usize, e.col as usize) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn sign_of(&self, id: EdgeId) -> Result<Sign> {
        Ok(self.sign(self.params.edge(id)?))
    }

    /// Sign of the edge `ab`, or `None` when `a` and `b` share a part.
    pub fn sign_between(&self, a: Vertex, b: Vertex) -> Option<Sign> {
        Edge::between(a, b).map(|e| self.sign(e))
    }

    pub fn set(&mut self, e: Edge, sign: Sign) {
        assert!(self.params.contains_edge(e), "edge {e} outside {}", self.params);
        self.bits_mut(e.block)
            .set(e.row as usize, e.col as usize, sign == Sign::Negative);
    }

    pub fn with_sign(&self, e: Edge, sign: Sign) -> Self {
        let mut next = self.clone();
        next.set(e, sign);
        next
    }

    pub fn negative_edge_count(&self) -> u64 {
        Block::ALL.iter().map(|&b| self.bits(b).count_ones()).sum()
    }

    /// w(f), the sum of all signs.
    pub fn weight(&self) -> i64 {
        self.params.edge_count() as i64 - 2 * self.negative_edge_count() as i64
    }

    /// Number of negative edges at one vertex.
    pub fn negative_degree(&self, x: Vertex) -> u32 {
        match x.part {
            Part::U => {
                self.uv.row_count(x.index as usize) + self.uw.row_count(x.index as usize)
            }
            Part::V => {
                let col = (0..self.params.m())
                    .filter(|&i| self.uv.get(i as usize, x.index as usize))
                    .count() as u32;
                col + self.vw.row_count(x.index as usize)
            }
            Part::W => {
                let a = (0..self.params.m())
                    .filter(|&i| self.uw.get(i as usize, x.index as usize))
                    .count() as u32;
                let b = (0..self.params.n())
                    .filter(|&j| self.vw.get(j as usize, x.index as usize))
                    .count() as u32;
                a + b
            }
        }
    }

    /// Negative-edge counts at every vertex, in one pass over the blocks.
    pub fn negative_degrees(&self) -> VertexMap<u32> {
        let m = self.params.m() as usize;
        let n = self.params.n() as usize;
        let u = (0..m)
            .map(|i| self.uv.row_count(i) + self.uw.row_count(i))
            .collect();
        let uv_cols = self.uv.col_counts();
        let v = (0..n).map(|j| uv_cols[j] + self.vw.row_count(j)).collect();
        let uw_cols = self.uw.col_counts();
        let vw_cols = self.vw.col_counts();
        let w = uw_cols.iter().zip(&vw_cols).map(|(a, b)| a + b).collect();
        VertexMap { u, v, w }
    }

    /// The block as a ±1 matrix.
    pub fn matrix(&self, block: Block) -> Vec<Vec<i64>> {
        let (rows, cols) = self.params.block_dims(block);
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| self.sign(Edge::new(block, r, c)).value())
                    .collect()
            })
            .collect()
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.params
            .edges()
            .filter(move |&e| self.sign(e) == Sign::Negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn weights_of_uniform_labelings() {
        let g = k(2, 2, 4);
        assert_eq!(EdgeLabeling::all_positive(g).unwrap().weight(), 20);
        assert_eq!(EdgeLabeling::all_negative(g).unwrap().weight(), -20);
    }

    #[test]
    fn cap_is_enforced() {
        let g = k(4000, 4000, 4000);
        assert!(matches!(
            EdgeLabeling::all_positive(g),
            Err(SednError::TooLarge { .. })
        ));
        assert!(EdgeLabeling::all_positive_capped(k(2, 3, 4), 26).is_ok());
        assert!(EdgeLabeling::all_positive_capped(k(3, 3, 3), 26).is_err());
    }

    #[test]
    fn negative_degrees_match_single_vertex_counts() {
        let g = k(2, 3, 4);
        let mut lab = EdgeLabeling::all_positive(g).unwrap();
        for id in [0u64, 4, 7, 13, 14, 25] {
            lab.set(g.edge(EdgeId(id)).unwrap(), Sign::Negative);
        }
        let all = lab.negative_degrees();
        for x in g.all_vertices() {
            assert_eq!(*all.get(x), lab.negative_degree(x), "{x}");
        }
        let total: u32 = all.iter().map(|(_, c)| *c).sum();
        assert_eq!(u64::from(total), 2 * lab.negative_edge_count());
    }

    #[test]
    fn from_matrices_validates_shape_and_values() {
        let g = k(1, 1, 2);
        let ok = EdgeLabeling::from_matrices(g, &[vec![1]], &[vec![-1, 1]], &[vec![1, 1]]).unwrap();
        assert_eq!(ok.weight(), 3);
        assert!(EdgeLabeling::from_matrices(g, &[vec![1]], &[vec![1]], &[vec![1, 1]]).is_err());
        assert!(EdgeLabeling::from_matrices(g, &[vec![0]], &[vec![1, 1]], &[vec![1, 1]]).is_err());
        assert!(EdgeLabeling::from_matrices(g, &[], &[vec![1, 1]], &[vec![1, 1]]).is_err());
    }
}
