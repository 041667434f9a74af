//! Closed-form signed edge domination numbers of K(m,n,p).
//!
//! On the boundary p = m+n two families of closed forms can both apply; they
//! are evaluated side by side and a disagreement is returned as a
//! [`Conflict`] instead of picking one.

mod canonical;
mod formulas;
mod tag;

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Result, SednError};
use crate::graph::TripartiteParams;

pub use canonical::{canonicalize, Canonical};
pub use formulas::{branch_value, formula_text, k1np_case, k22p_case, main_case, t11_case};
pub use tag::{CaseTag, Region};

/// One applicable closed form and its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub tag: CaseTag,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conflict {
    /// Canonical sizes.
    pub params: TripartiteParams,
    pub branches: Vec<Branch>,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "closed forms disagree on {}:", self.params)?;
        for b in &self.branches {
            write!(f, " {}={}", b.tag, b.value)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaValue {
    Value(i64),
    Conflict(Conflict),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResult {
    pub canonical: Canonical,
    pub branches: Vec<Branch>,
    pub value: GammaValue,
}

impl GammaResult {
    pub fn params(&self) -> TripartiteParams {
        self.canonical.original
    }

    pub fn value(&self) -> Option<i64> {
        match self.value {
            GammaValue::Value(v) => Some(v),
            GammaValue::Conflict(_) => None,
        }
    }

    pub fn conflict(&self) -> Option<&Conflict> {
        match &self.value {
            GammaValue::Value(_) => None,
            GammaValue::Conflict(c) => Some(c),
        }
    }

    pub fn is_conflict(&self) -> bool {
        self.conflict().is_some()
    }

    pub fn tags(&self) -> Vec<CaseTag> {
        self.branches.iter().map(|b| b.tag).collect()
    }

    /// The value of `tag` if it is one of the applicable branches.
    pub fn branch(&self, tag: CaseTag) -> Option<i64> {
        self.branches.iter().find(|b| b.tag == tag).map(|b| b.value)
    }

    /// The agreed value, or the conflict as an error.
    pub fn into_value(self) -> Result<i64> {
        match self.value {
            GammaValue::Value(v) => Ok(v),
            GammaValue::Conflict(c) => Err(SednError::Conflict(Box::new(c))),
        }
    }

    /// Formula texts joined with " = " when they agree and " vs " otherwise.
    pub fn formula_text(&self) -> String {
        let sep = if self.is_conflict() { " vs " } else { " = " };
        self.branches
            .iter()
            .map(|b| formula_text(b.tag))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for GammaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags = self.tags().iter().map(|t| t.as_str()).collect::<Vec<_>>().join(", ");
        match &self.value {
            GammaValue::Value(v) => write!(f, "{v} [{tags}]"),
            GammaValue::Conflict(c) => write!(f, "CONFLICT [{tags}]: {c}"),
        }
    }
}

impl Serialize for GammaResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let p = self.params();
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("m", &p.m())?;
        map.serialize_entry("n", &p.n())?;
        map.serialize_entry("p", &p.p())?;
        match &self.value {
            GammaValue::Value(v) => map.serialize_entry("value", v)?,
            GammaValue::Conflict(c) => map.serialize_entry("conflict", &c.branches)?,
        }
        map.serialize_entry("tags", &self.tags())?;
        map.serialize_entry("formula_text", &self.formula_text())?;
        map.end()
    }
}

/// Every closed form that claims the canonical triple, in dispatch order.
pub fn applicable_cases(params: TripartiteParams) -> Vec<CaseTag> {
    debug_assert!(params.is_canonical());
    let [m, n, p] = params.sizes();
    match [m, n, p] {
        [1, 1, 1] => return vec![CaseTag::K111],
        [2, 3, 5] => return vec![CaseTag::K235],
        _ => {}
    }
    let mut tags = Vec::with_capacity(2);
    if p <= m + n {
        tags.extend(t11_case(params));
    }
    if p >= m + n {
        let special = if m == 1 { k1np_case(params) } else { k22p_case(params) };
        tags.extend(special.or_else(|| main_case(params)));
    }
    tags
}

/// γ′ₛ(K(m,n,p)) from the closed forms, for any ordering of the sizes.
pub fn gamma(params: TripartiteParams) -> Result<GammaResult> {
    let canonical = canonicalize(params);
    let c = canonical.params;
    let tags = applicable_cases(c);
    if tags.is_empty() {
        return Err(SednError::Uncovered {
            m: c.m(),
            n: c.n(),
            p: c.p(),
            reason: "no closed form claims this triple".into(),
        });
    }
    let branches: Vec<Branch> = tags
        .into_iter()
        .map(|tag| Branch {
            tag,
            value: branch_value(tag, c),
        })
        .collect();
    let first = branches[0].value;
    let value = if branches.iter().all(|b| b.value == first) {
        GammaValue::Value(first)
    } else {
        GammaValue::Conflict(Conflict {
            params: c,
            branches: branches.clone(),
        })
    };
    Ok(GammaResult {
        canonical,
        branches,
        value,
    })
}

/// Comparison of γ′ₛ with Xu's conjectured bound |V| − 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XuBound {
    pub gamma: i64,
    pub bound: i64,
    pub tight: bool,
}

impl XuBound {
    pub fn slack(&self) -> i64 {
        self.bound - self.gamma
    }

    pub fn holds(&self) -> bool {
        self.gamma <= self.bound
    }
}

pub fn xu_bound(params: TripartiteParams) -> Result<XuBound> {
    let gamma = gamma(params)?.into_value()?;
    let bound = params.vertex_count() as i64 - 1;
    Ok(XuBound {
        gamma,
        bound,
        tight: gamma == bound,
    })
}
