use std::str::FromStr;

use crate::error::{Result, SednError};
use crate::graph::TripartiteParams;

/// One end of a range: a number, or `msum` (= m+n) plus an offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Fixed(u32),
    MSum(i64),
}

impl Bound {
    fn eval(self, msum: u32) -> i64 {
        match self {
            Bound::Fixed(v) => i64::from(v),
            Bound::MSum(k) => i64::from(msum) + k,
        }
    }
}

impl FromStr for Bound {
    type Err = SednError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || SednError::Parse(format!("bad range bound {s:?}"));
        if let Some(rest) = s.strip_prefix("msum") {
            let k = match rest.chars().next() {
                None => 0,
                Some('+') => rest[1..].parse::<i64>().map_err(|_| bad())?,
                Some('-') => -rest[1..].parse::<i64>().map_err(|_| bad())?,
                Some(_) => return Err(bad()),
            };
            return Ok(Bound::MSum(k));
        }
        s.parse().map(Bound::Fixed).map_err(|_| bad())
    }
}

/// Which canonical triples a sweep visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleRange {
    /// m ≤ n ≤ p with m+n+p ≤ the bound.
    MaxSum(u32),
    /// `m=a..b,n=c..d,p=e..f`, inclusive; only p may use `msum`.
    Boxed {
        m: (u32, u32),
        n: (u32, u32),
        p: (Bound, Bound),
    },
}

fn triple(m: u32, n: u32, p: u32) -> TripartiteParams {
    TripartiteParams::new(m, n, p).expect("range sizes start at 1")
}

impl TripleRange {
    /// Canonical triples in lexicographic (m, n, p) order.
    pub fn triples(&self) -> Vec<TripartiteParams> {
        let mut out = Vec::new();
        match *self {
            TripleRange::MaxSum(s) => {
                for m in 1..=s {
                    for n in m..=s.saturating_sub(m) {
                        for p in n..=s.saturating_sub(m + n) {
                            out.push(triple(m, n, p));
                        }
                    }
                }
            }
            TripleRange::Boxed { m, n, p } => {
                for mi in m.0.max(1)..=m.1 {
                    for ni in n.0.max(mi)..=n.1 {
                        let lo = p.0.eval(mi + ni).max(i64::from(ni));
                        for pi in lo..=p.1.eval(mi + ni) {
                            out.push(triple(mi, ni, pi as u32));
                        }
                    }
                }
            }
        }
        out
    }
}

fn fixed_pair(key: &str, lo: Bound, hi: Bound) -> Result<(u32, u32)> {
    match (lo, hi) {
        (Bound::Fixed(a), Bound::Fixed(b)) => Ok((a, b)),
        _ => Err(SednError::Parse(format!("{key} bounds must be numbers"))),
    }
}

impl FromStr for TripleRange {
    type Err = SednError;

    /// `m=2..6,n=2..6,p=msum..msum+4`
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = [None; 3];
        for item in s.split(',') {
            let (key, span) = item
                .split_once('=')
                .ok_or_else(|| SednError::Parse(format!("expected key=lo..hi, got {item:?}")))?;
            let (lo, hi) = span
                .split_once("..")
                .ok_or_else(|| SednError::Parse(format!("expected lo..hi, got {span:?}")))?;
            let slot = match key.trim() {
                "m" => 0,
                "n" => 1,
                "p" => 2,
                other => return Err(SednError::Parse(format!("unknown range key {other:?}"))),
            };
            parts[slot] = Some((lo.parse::<Bound>()?, hi.parse::<Bound>()?));
        }
        let [Some(m), Some(n), Some(p)] = parts else {
            return Err(SednError::Parse("range needs m, n and p".into()));
        };
        Ok(TripleRange::Boxed {
            m: fixed_pair("m", m.0, m.1)?,
            n: fixed_pair("n", n.0, n.1)?,
            p,
        })
    }
}
