use serde::{Deserialize, Serialize};

use super::{Block, EdgeLabeling, TripartiteParams};
use crate::error::{Result, SednError};

/// On-disk labeling: sizes plus the three blocks as ±1 matrices.
///
/// Certificates add `case_tag` and `claimed_gamma`; both are omitted when
/// absent so plain labelings round-trip byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub uv: Vec<Vec<i64>>,
    pub uw: Vec<Vec<i64>>,
    pub vw: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_tag: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_gamma: Option<i64>,
}

impl LabelingDocument {
    pub fn from_labeling(labeling: &EdgeLabeling) -> Self {
        let params = labeling.params();
        LabelingDocument {
            m: params.m(),
            n: params.n(),
            p: params.p(),
            uv: labeling.matrix(Block::UV),
            uw: labeling.matrix(Block::UW),
            vw: labeling.matrix(Block::VW),
            case_tag: None,
            claimed_gamma: None,
        }
    }

    pub fn to_labeling(&self) -> Result<EdgeLabeling> {
        let params = TripartiteParams::new(self.m, self.n, self.p)?;
        EdgeLabeling::from_matrices(params, &self.uv, &self.uw, &self.vw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labeling documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| SednError::Parse(e.to_string()))
    }
}

impl EdgeLabeling {
    /// Compact JSON: `{"m":..,"n":..,"p":..,"uv":[[..]],"uw":[[..]],"vw":[[..]]}`.
    pub fn to_json(&self) -> String {
        LabelingDocument::from_labeling(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        LabelingDocument::from_json(text)?.to_labeling()
    }
}
