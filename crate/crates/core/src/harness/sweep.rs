use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructor::{construct, constructive_case};
use crate::error::SednError;
use crate::graph::TripartiteParams;
use crate::oracle::gamma;
use crate::solver::{solve_exact, SolveConfig};

pub const CSV_VERSION_LINE: &str = "# sedn-lab v1";
pub const CSV_HEADER: &str = "m,n,p,gamma,construct,solver,status";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Ok,
    Conflict,
    Mismatch,
    Uncovered,
    Skipped,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Ok,
        Status::Conflict,
        Status::Mismatch,
        Status::Uncovered,
        Status::Skipped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Conflict => "CONFLICT",
            Status::Mismatch => "MISMATCH",
            Status::Uncovered => "UNCOVERED",
            Status::Skipped => "SKIPPED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaCell {
    Value(i64),
    /// Branch values in dispatch order.
    Conflict(Vec<i64>),
    Uncovered,
}

impl fmt::Display for GammaCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaCell::Value(v) => write!(f, "{v}"),
            GammaCell::Conflict(vs) => {
                let vs: Vec<String> = vs.iter().map(i64::to_string).collect();
                write!(f, "conflict:{}", vs.join("|"))
            }
            GammaCell::Uncovered => Ok(()),
        }
    }
}

/// A computed cell: absent, a value, or a failure message.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    Absent,
    Value(i64),
    Error(String),
}

impl Cell {
    fn value(&self) -> Option<i64> {
        match self {
            Cell::Value(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Absent => Ok(()),
            Cell::Value(v) => write!(f, "{v}"),
            Cell::Error(_) => f.write_str("error"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub params: TripartiteParams,
    pub gamma: GammaCell,
    pub construct: Cell,
    pub solver: Cell,
    pub status: Status,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let [m, n, p] = self.params.sizes();
        format!("{m},{n},{p},{},{},{},{}", self.gamma, self.construct, self.solver, self.status)
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepConfig {
    pub with_solver: bool,
    pub solve: SolveConfig,
    /// 0 uses rayon's default pool.
    pub threads: usize,
}

/// OK when every present value equals the formula; CONFLICT when the
/// formulas disagree but every present value matches one branch; SKIPPED
/// when a requested solve was refused.
fn classify(gamma: &GammaCell, construct: &Cell, solver: &Cell) -> Status {
    if matches!(construct, Cell::Error(_)) {
        return Status::Mismatch;
    }
    let present: Vec<i64> = [construct, solver].iter().filter_map(|c| c.value()).collect();
    match gamma {
        GammaCell::Uncovered => Status::Uncovered,
        GammaCell::Value(g) if present.iter().any(|v| v != g) => Status::Mismatch,
        GammaCell::Conflict(bs) if present.iter().any(|v| !bs.contains(v)) => Status::Mismatch,
        _ if matches!(solver, Cell::Error(_)) => Status::Skipped,
        GammaCell::Value(_) => Status::Ok,
        GammaCell::Conflict(_) => Status::Conflict,
    }
}

pub fn sweep_row(params: TripartiteParams, config: &SweepConfig) -> SweepRow {
    let gamma = match gamma(params) {
        Ok(r) => match r.conflict() {
            None => GammaCell::Value(r.value().expect("no conflict")),
            Some(c) => GammaCell::Conflict(c.branches.iter().map(|b| b.value).collect()),
        },
        Err(_) => GammaCell::Uncovered,
    };
    let construct = match constructive_case(params) {
        None => Cell::Absent,
        Some(_) => match construct(params) {
            Ok(cert) => Cell::Value(cert.weight),
            Err(e) => Cell::Error(e.to_string()),
        },
    };
    let solver = if config.with_solver {
        let cfg = SolveConfig {
            parallel_width: 0,
            ..config.solve
        };
        match solve_exact(params, &cfg) {
            Ok(r) => Cell::Value(r.optimum),
            Err(e) => Cell::Error(e.to_string()),
        }
    } else {
        Cell::Absent
    };
    let status = classify(&gamma, &construct, &solver);
    SweepRow {
        params,
        gamma,
        construct,
        solver,
        status,
    }
}

/// Rows in the order of `triples`, computed in parallel.
pub fn sweep(triples: &[TripartiteParams], config: &SweepConfig) -> Result<Vec<SweepRow>, SednError> {
    let run = || triples.par_iter().map(|&t| sweep_row(t, config)).collect();
    if config.threads == 0 {
        return Ok(run());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| SednError::Refused(format!("cannot start {} workers: {e}", config.threads)))?;
    Ok(pool.install(run))
}

pub fn status_counts(rows: &[SweepRow]) -> BTreeMap<Status, usize> {
    let mut counts: BTreeMap<Status, usize> = Status::ALL.iter().map(|&s| (s, 0)).collect();
    for row in rows {
        *counts.entry(row.status).or_default() += 1;
    }
    counts
}

/// Version line, header and one line per row, newline-terminated.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = format!("{CSV_VERSION_LINE}\n{CSV_HEADER}\n");
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

/// `rows=N OK=a CONFLICT=b ...`
pub fn summary_line(rows: &[SweepRow]) -> String {
    let counts = status_counts(rows);
    let mut line = format!("rows={}", rows.len());
    for (status, count) in counts {
        line.push_str(&format!(" {status}={count}"));
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn classify_rules() {
        use Cell::*;
        let g = GammaCell::Value(4);
        assert_eq!(classify(&g, &Value(4), &Value(4)), Status::Ok);
        assert_eq!(classify(&g, &Absent, &Value(5)), Status::Mismatch);
        assert_eq!(classify(&g, &Error("x".into()), &Absent), Status::Mismatch);
        assert_eq!(classify(&g, &Value(4), &Error("cap".into())), Status::Skipped);
        let c = GammaCell::Conflict(vec![3, 5]);
        assert_eq!(classify(&c, &Value(5), &Value(3)), Status::Conflict);
        assert_eq!(classify(&c, &Absent, &Value(4)), Status::Mismatch);
        assert_eq!(classify(&GammaCell::Uncovered, &Absent, &Absent), Status::Uncovered);
    }

    #[test]
    fn rows_and_cells() {
        let cfg = SweepConfig {
            with_solver: true,
            ..SweepConfig::default()
        };
        let rows = sweep(&[k(1, 1, 1), k(1, 1, 2), k(2, 2, 4)], &cfg).unwrap();
        assert_eq!(rows[0].csv_line(), "1,1,1,1,,1,OK");
        assert_eq!(rows[1].csv_line(), "1,1,2,conflict:3|5,5,3,CONFLICT");
        assert_eq!(rows[2].csv_line(), "2,2,4,4,4,4,OK");
        assert_eq!(summary_line(&rows), "rows=3 OK=2 CONFLICT=1 MISMATCH=0 UNCOVERED=0 SKIPPED=0");
    }

    #[test]
    fn csv_is_reproducible() {
        let triples: Vec<_> = (4..9).map(|p| k(2, 2, p)).collect();
        let cfg = SweepConfig::default();
        let a = to_csv(&sweep(&triples, &cfg).unwrap());
        let b = to_csv(&sweep(&triples, &SweepConfig { threads: 3, ..cfg.clone() }).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with("# sedn-lab v1\nm,n,p,gamma,construct,solver,status\n"));
    }
}
