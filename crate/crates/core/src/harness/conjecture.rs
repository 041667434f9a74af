use serde::Serialize;

use crate::graph::TripartiteParams;
use crate::oracle::gamma;

/// Formula value against the bound m+n+p-1 for one canonical triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub params: TripartiteParams,
    pub bound: i64,
    /// Agreed value, or every branch value when the formulas disagree.
    pub values: Vec<i64>,
    pub conflict: bool,
}

impl ConjectureRow {
    pub fn max_value(&self) -> i64 {
        *self.values.iter().max().expect("at least one value")
    }

    pub fn slack(&self) -> i64 {
        self.bound - self.max_value()
    }

    pub fn tight(&self) -> bool {
        !self.conflict && self.slack() == 0
    }

    pub fn exceeds(&self) -> bool {
        self.slack() < 0
    }
}

/// K(1,n,n+3) with n odd.
pub fn in_expected_tight_family(params: TripartiteParams) -> bool {
    let [m, n, p] = params.sizes();
    m == 1 && n % 2 == 1 && p == n + 3
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
    /// Triples no formula covers.
    pub uncovered: Vec<TripartiteParams>,
}

impl ConjectureReport {
    pub fn tight(&self) -> Vec<TripartiteParams> {
        self.rows.iter().filter(|r| r.tight()).map(|r| r.params).collect()
    }

    /// Agreed values above the bound.
    pub fn exceeding(&self) -> Vec<TripartiteParams> {
        self.rows
            .iter()
            .filter(|r| !r.conflict && r.exceeds())
            .map(|r| r.params)
            .collect()
    }

    /// Conflicts with at least one branch above the bound.
    pub fn conflicting_over_bound(&self) -> Vec<TripartiteParams> {
        self.rows
            .iter()
            .filter(|r| r.conflict && r.exceeds())
            .map(|r| r.params)
            .collect()
    }

    /// Tight triples outside K(1,n,n+3), n odd, and family members that are not tight.
    pub fn tight_deviations(&self) -> (Vec<TripartiteParams>, Vec<TripartiteParams>) {
        let extra = self
            .rows
            .iter()
            .filter(|r| r.tight() && !in_expected_tight_family(r.params))
            .map(|r| r.params)
            .collect();
        let missing = self
            .rows
            .iter()
            .filter(|r| !r.tight() && in_expected_tight_family(r.params))
            .map(|r| r.params)
            .collect();
        (extra, missing)
    }

    /// One line per row, then a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let values: Vec<String> = r.values.iter().map(i64::to_string).collect();
            let mark = if r.exceeds() {
                " EXCEEDS"
            } else if r.tight() {
                " TIGHT"
            } else {
                ""
            };
            let conflict = if r.conflict { " conflict" } else { "" };
            out.push_str(&format!(
                "{} gamma={} bound={} slack={}{conflict}{mark}\n",
                r.params,
                values.join("|"),
                r.bound,
                r.slack()
            ));
        }
        let (extra, missing) = self.tight_deviations();
        out.push_str(&format!(
            "rows={} tight={} exceeding={} conflict_over_bound={} uncovered={} unexpected_tight={} missing_tight={}\n",
            self.rows.len(),
            self.tight().len(),
            self.exceeding().len(),
            self.conflicting_over_bound().len(),
            self.uncovered.len(),
            extra.len(),
            missing.len()
        ));
        out
    }
}

pub fn conjecture_report(triples: &[TripartiteParams]) -> ConjectureReport {
    let mut report = ConjectureReport::default();
    for &t in triples {
        let Ok(result) = gamma(t) else {
            report.uncovered.push(t);
            continue;
        };
        let values = match result.conflict() {
            None => vec![result.value().expect("no conflict")],
            Some(c) => c.branches.iter().map(|b| b.value).collect(),
        };
        report.rows.push(ConjectureRow {
            params: t,
            bound: t.vertex_count() as i64 - 1,
            values,
            conflict: result.is_conflict(),
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::TripleRange;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn flags_the_tight_family() {
        let r = conjecture_report(&[k(1, 3, 6), k(2, 2, 4)]);
        assert_eq!(r.tight(), vec![k(1, 3, 6)]);
        assert_eq!(r.rows[1].slack(), 3);
    }

    #[test]
    fn empty_range() {
        let r = conjecture_report(&[]);
        assert!(r.rows.is_empty());
        assert!(r.render().starts_with("rows=0 "));
    }

    #[test]
    fn all_even_triples_have_slack() {
        let triples: Vec<_> = TripleRange::MaxSum(30)
            .triples()
            .into_iter()
            .filter(|t| t.sizes().iter().all(|s| s % 2 == 0))
            .collect();
        let r = conjecture_report(&triples);
        assert!(!r.rows.is_empty());
        assert!(r.rows.iter().all(|row| row.slack() >= 1));
    }
}
