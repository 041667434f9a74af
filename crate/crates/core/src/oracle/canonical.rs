use serde::{Deserialize, Serialize};

use crate::graph::{Edge, EdgeLabeling, Part, TripartiteParams, Vertex};
use crate::error::Result;

/// Sizes sorted ascending, plus which original part became each canonical part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Canonical {
    pub original: TripartiteParams,
    pub params: TripartiteParams,
    /// `perm[i]` is the original part that plays canonical part `i`.
    pub perm: [Part; 3],
}

pub fn canonicalize(params: TripartiteParams) -> Canonical {
    let mut perm = Part::ALL;
    perm.sort_by_key(|&part| params.size(part));
    let [m, n, p] = perm.map(|part| params.size(part));
    Canonical {
        original: params,
        params: TripartiteParams::new(m, n, p).expect("sizes stay positive"),
        perm,
    }
}

impl Canonical {
    pub fn is_identity(&self) -> bool {
        self.perm == Part::ALL
    }

    pub fn to_original(&self, x: Vertex) -> Vertex {
        Vertex::new(self.perm[x.part.index()], x.index)
    }

    pub fn to_canonical(&self, x: Vertex) -> Vertex {
        let i = self.perm.iter().position(|&q| q == x.part).unwrap();
        Vertex::new(Part::from_index(i), x.index)
    }

    /// Relabels a labeling of the canonical graph onto the original one.
    pub fn labeling_to_original(&self, lab: &EdgeLabeling) -> Result<EdgeLabeling> {
        self.relabel(lab, self.original, |x| self.to_original(x))
    }

    pub fn labeling_to_canonical(&self, lab: &EdgeLabeling) -> Result<EdgeLabeling> {
        self.relabel(lab, self.params, |x| self.to_canonical(x))
    }

    fn relabel(
        &self,
        lab: &EdgeLabeling,
        target: TripartiteParams,
        map: impl Fn(Vertex) -> Vertex,
    ) -> Result<EdgeLabeling> {
        if self.is_identity() {
            return Ok(lab.clone());
        }
        let mut out = EdgeLabeling::all_positive(target)?;
        for e in lab.negative_edges() {
            let (a, b) = e.endpoints();
            let moved = Edge::between(map(a), map(b)).expect("parts stay distinct");
            out.set(moved, crate::graph::Sign::Negative);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify, Block, Sign};

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn sorts_sizes() {
        assert_eq!(canonicalize(k(5, 2, 3)).params, k(2, 3, 5));
        assert_eq!(canonicalize(k(4, 3, 8)).params, k(3, 4, 8));
        let c = canonicalize(k(1, 1, 1));
        assert!(c.is_identity());
    }

    #[test]
    fn labelings_map_both_ways() {
        let c = canonicalize(k(3, 1, 2));
        let mut lab = EdgeLabeling::all_positive(c.params).unwrap();
        lab.set(Edge::new(Block::UW, 0, 2), Sign::Negative);
        let orig = c.labeling_to_original(&lab).unwrap();
        assert_eq!(orig.params(), k(3, 1, 2));
        assert_eq!(orig.weight(), lab.weight());
        assert_eq!(verify(&orig).min_closed_sum, verify(&lab).min_closed_sum);
        assert_eq!(c.labeling_to_canonical(&orig).unwrap(), lab);
    }
}
