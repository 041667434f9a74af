//! Explicit minimum-weight labelings for p ≥ m+n from per-vertex quotas.

mod plan;
mod realize;

use serde::Serialize;

use crate::error::{Result, SednError};
use crate::graph::{verify, EdgeLabeling, LabelingDocument, TripartiteParams};
use crate::oracle::{branch_value, canonicalize, gamma, CaseTag};

pub use plan::{constructive_case, quota_plan, BlockTotals, Group, QuotaPlan};
pub use realize::realize;

/// A verified labeling together with the case that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// In the caller's part order.
    #[serde(skip)]
    pub labeling: EdgeLabeling,
    pub case: CaseTag,
    pub weight: i64,
}

impl Certificate {
    pub fn params(&self) -> TripartiteParams {
        self.labeling.params()
    }

    /// Labeling JSON plus `case_tag` and `claimed_gamma`.
    pub fn to_document(&self) -> LabelingDocument {
        let mut doc = LabelingDocument::from_labeling(&self.labeling);
        doc.case_tag = Some(self.case.to_string());
        doc.claimed_gamma = Some(self.weight);
        doc
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }
}

/// quota_plan, realize and verify, mapped back to the caller's part order.
///
/// Fails with `CertificateMismatch` unless the labeling is dominating and
/// its weight equals the closed form of its case.
pub fn construct(params: TripartiteParams) -> Result<Certificate> {
    let canonical = canonicalize(params);
    let c = canonical.params;
    let plan = quota_plan(c)?;
    let labeling = realize(&plan)?;
    let report = verify(&labeling);
    if !report.is_sedf {
        return Err(SednError::CertificateMismatch(format!(
            "{} labeling for {c} violates {} edges",
            plan.case,
            report.violations.len()
        )));
    }
    let claimed = branch_value(plan.case, c);
    let oracle = gamma(c)?;
    let expected = oracle.branch(plan.case).or(oracle.value()).unwrap_or(claimed);
    if report.weight != claimed || report.weight != expected {
        return Err(SednError::CertificateMismatch(format!(
            "{} labeling for {c} has weight {}, closed form gives {claimed}, oracle {expected}",
            plan.case, report.weight
        )));
    }
    Ok(Certificate {
        labeling: canonical.labeling_to_original(&labeling)?,
        case: plan.case,
        weight: report.weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(construct(k(2, 2, 4)).unwrap().weight, 4);
        let c = construct(k(4, 5, 9)).unwrap();
        assert_eq!((c.case, c.weight), (CaseTag::MainH1, 11));
        let c = construct(k(1, 4, 7)).unwrap();
        assert_eq!((c.case, c.weight), (CaseTag::K1np3, 9));
        let c = construct(k(1, 3, 6)).unwrap();
        assert_eq!((c.case, c.weight), (CaseTag::K1np4, 9));
    }

    #[test]
    fn keeps_caller_orientation() {
        let c = construct(k(8, 3, 4)).unwrap();
        assert_eq!(c.params(), k(8, 3, 4));
        assert!(verify(&c.labeling).is_sedf);
        assert_eq!(c.labeling.weight(), c.weight);
    }

    #[test]
    fn formula_only_region() {
        assert!(matches!(construct(k(2, 3, 4)), Err(SednError::NoConstruction { .. })));
    }
}
