//! The complete tripartite graph K(m,n,p), its edge indexing, and ±1 labelings.
//!
//! Parts are called U, V and W with sizes m, n and p. Edges are indexed
//! block-major (UV, then UW, then VW), row-major inside each block, so that
//! edge id `i*n + j` is `u_i v_j`, `mn + i*p + k` is `u_i w_k` and
//! `mn + mp + j*p + k` is `v_j w_k`.

pub(crate) mod bits;
mod json;
mod labeling;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SednError};

pub use json::LabelingDocument;
pub use labeling::{EdgeLabeling, Sign, DEFAULT_MAX_LABELING_EDGES};
pub use verify::{
    closed_neighborhood_sum, closed_neighborhood_sum_direct, rebalance, verify, vertex_weights,
    VerifyReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Part {
    U,
    V,
    W,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::U, Part::V, Part::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Part {
        Part::ALL[i]
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Part::U => "u",
            Part::V => "v",
            Part::W => "w",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub part: Part,
    pub index: u32,
}

impl Vertex {
    pub fn new(part: Part, index: u32) -> Self {
        Vertex { part, index }
    }

    pub fn u(index: u32) -> Self {
        Vertex::new(Part::U, index)
    }

    pub fn v(index: u32) -> Self {
        Vertex::new(Part::V, index)
    }

    pub fn w(index: u32) -> Self {
        Vertex::new(Part::W, index)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.part, self.index)
    }
}

/// One of the three complete bipartite blocks making up K(m,n,p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    UV,
    UW,
    VW,
}

impl Block {
    pub const ALL: [Block; 3] = [Block::UV, Block::UW, Block::VW];

    /// Parts of the row and column endpoints.
    pub fn parts(self) -> (Part, Part) {
        match self {
            Block::UV => (Part::U, Part::V),
            Block::UW => (Part::U, Part::W),
            Block::VW => (Part::V, Part::W),
        }
    }

    pub fn between(a: Part, b: Part) -> Option<(Block, bool)> {
        match (a, b) {
            (Part::U, Part::V) => Some((Block::UV, false)),
            (Part::V, Part::U) => Some((Block::UV, true)),
            (Part::U, Part::W) => Some((Block::UW, false)),
            (Part::W, Part::U) => Some((Block::UW, true)),
            (Part::V, Part::W) => Some((Block::VW, false)),
            (Part::W, Part::V) => Some((Block::VW, true)),
            _ => None,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Block::UV => "uv",
            Block::UW => "uw",
            Block::VW => "vw",
        };
        f.write_str(s)
    }
}

/// Stable block-major edge id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u64);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub block: Block,
    pub row: u32,
    pub col: u32,
}

impl Edge {
    pub fn new(block: Block, row: u32, col: u32) -> Self {
        Edge { block, row, col }
    }

    /// Edge joining two vertices of different parts.
    pub fn between(a: Vertex, b: Vertex) -> Option<Edge> {
        let (block, swapped) = Block::between(a.part, b.part)?;
        let (r, c) = if swapped { (b, a) } else { (a, b) };
        Some(Edge::new(block, r.index, c.index))
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        let (a, b) = self.block.parts();
        (Vertex::new(a, self.row), Vertex::new(b, self.col))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.endpoints();
        write!(f, "{a}{b}")
    }
}

/// Sizes (m, n, p) of the parts U, V, W.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TripartiteParams {
    m: u32,
    n: u32,
    p: u32,
}

impl TripartiteParams {
    pub fn new(m: u32, n: u32, p: u32) -> Result<Self> {
        if m == 0 || n == 0 || p == 0 {
            return Err(SednError::InvalidParams(format!(
                "part sizes must be positive, got ({m},{n},{p})"
            )));
        }
        Ok(TripartiteParams { m, n, p })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn sizes(&self) -> [u32; 3] {
        [self.m, self.n, self.p]
    }

    pub fn size(&self, part: Part) -> u32 {
        self.sizes()[part.index()]
    }

    /// Degree shared by every vertex of `part`.
    pub fn degree(&self, part: Part) -> u64 {
        let [m, n, p] = self.sizes().map(u64::from);
        match part {
            Part::U => n + p,
            Part::V => m + p,
            Part::W => m + n,
        }
    }

    pub fn vertex_count(&self) -> u64 {
        self.sizes().iter().map(|&s| u64::from(s)).sum()
    }

    pub fn edge_count(&self) -> u128 {
        let [m, n, p] = self.sizes().map(u128::from);
        m * n + m * p + n * p
    }

    pub fn is_canonical(&self) -> bool {
        self.m <= self.n && self.n <= self.p
    }

    /// Row and column counts of a block.
    pub fn block_dims(&self, block: Block) -> (u32, u32) {
        let (a, b) = block.parts();
        (self.size(a), self.size(b))
    }

    pub(crate) fn block_offset(&self, block: Block) -> u64 {
        let [m, n, p] = self.sizes().map(u64::from);
        match block {
            Block::UV => 0,
            Block::UW => m * n,
            Block::VW => m * n + m * p,
        }
    }

    pub fn contains_vertex(&self, x: Vertex) -> bool {
        x.index < self.size(x.part)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        let (rows, cols) = self.block_dims(e.block);
        e.row < rows && e.col < cols
    }

    pub fn edge_id(&self, e: Edge) -> EdgeId {
        let (_, cols) = self.block_dims(e.block);
        EdgeId(self.block_offset(e.block) + u64::from(e.row) * u64::from(cols) + u64::from(e.col))
    }

    pub fn edge(&self, id: EdgeId) -> Result<Edge> {
        for block in Block::ALL.iter().rev() {
            let off = self.block_offset(*block);
            if id.0 >= off {
                let (rows, cols) = self.block_dims(*block);
                let local = id.0 - off;
                let row = local / u64::from(cols);
                if row >= u64::from(rows) {
                    break;
                }
                return Ok(Edge::new(*block, row as u32, (local % u64::from(cols)) as u32));
            }
        }
        Err(SednError::InvalidEdge(format!(
            "{id} is out of range for K({},{},{})",
            self.m, self.n, self.p
        )))
    }

    pub fn vertices(&self, part: Part) -> impl Iterator<Item = Vertex> {
        (0..self.size(part)).map(move |i| Vertex::new(part, i))
    }

    pub fn all_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        Part::ALL.into_iter().flat_map(move |part| self.vertices(part))
    }

    /// All edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        Block::ALL.into_iter().flat_map(move |block| {
            let (rows, cols) = self.block_dims(block);
            (0..rows).flat_map(move |r| (0..cols).map(move |c| Edge::new(block, r, c)))
        })
    }

    /// The edges at `x`, i.e. its star E(x).
    pub fn incident_edges(&self, x: Vertex) -> impl Iterator<Item = Edge> + '_ {
        let (first, second) = match x.part {
            Part::U => ((Block::UV, true), (Block::UW, true)),
            Part::V => ((Block::UV, false), (Block::VW, true)),
            Part::W => ((Block::UW, false), (Block::VW, false)),
        };
        self.line(first.0, first.1, x.index)
            .chain(self.line(second.0, second.1, x.index))
    }

    fn line(&self, block: Block, is_row: bool, fixed: u32) -> impl Iterator<Item = Edge> {
        let (rows, cols) = self.block_dims(block);
        let len = if is_row { cols } else { rows };
        (0..len).map(move |k| {
            if is_row {
                Edge::new(block, fixed, k)
            } else {
                Edge::new(block, k, fixed)
            }
        })
    }
}

impl fmt::Display for TripartiteParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{})", self.m, self.n, self.p)
    }
}

/// A value per vertex, stored part by part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap<T> {
    pub u: Vec<T>,
    pub v: Vec<T>,
    pub w: Vec<T>,
}

impl<T: Clone> VertexMap<T> {
    pub fn filled(params: &TripartiteParams, value: T) -> Self {
        VertexMap {
            u: vec![value.clone(); params.m() as usize],
            v: vec![value.clone(); params.n() as usize],
            w: vec![value; params.p() as usize],
        }
    }
}

impl<T> VertexMap<T> {
    pub fn part(&self, part: Part) -> &[T] {
        match part {
            Part::U => &self.u,
            Part::V => &self.v,
            Part::W => &self.w,
        }
    }

    pub fn part_mut(&mut self, part: Part) -> &mut [T] {
        match part {
            Part::U => &mut self.u,
            Part::V => &mut self.v,
            Part::W => &mut self.w,
        }
    }

    pub fn get(&self, x: Vertex) -> &T {
        &self.part(x.part)[x.index as usize]
    }

    pub fn get_mut(&mut self, x: Vertex) -> &mut T {
        &mut self.part_mut(x.part)[x.index as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &T)> {
        Part::ALL.into_iter().flat_map(move |part| {
            self.part(part)
                .iter()
                .enumerate()
                .map(move |(i, t)| (Vertex::new(part, i as u32), t))
        })
    }

    pub fn map<S>(&self, mut f: impl FnMut(&T) -> S) -> VertexMap<S> {
        VertexMap {
            u: self.u.iter().map(&mut f).collect(),
            v: self.v.iter().map(&mut f).collect(),
            w: self.w.iter().map(&mut f).collect(),
        }
    }
}
