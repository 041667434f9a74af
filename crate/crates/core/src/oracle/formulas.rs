//! One closed form per case tag, evaluated in exact integer arithmetic.

use super::CaseTag;
use crate::graph::TripartiteParams;

/// Halves `x`, asserting that the case's parity conditions made it even.
fn half(x: i64, tag: CaseTag) -> i64 {
    assert!(x % 2 == 0, "{tag}: odd numerator {x}; dispatch sent the wrong parity class");
    x / 2
}

/// The value of `tag`'s closed form at (m,n,p), with parts in canonical order.
pub fn branch_value(tag: CaseTag, params: TripartiteParams) -> i64 {
    use CaseTag::*;
    let [m, n, p] = params.sizes().map(i64::from);
    match tag {
        T11A1 => half(m + n + p, tag),
        T11A2 => half(m + n + p + 2, tag),
        T11B1 => half(m + n + p + 1, tag),
        T11B2 => half(m + n + p + 3, tag),
        T11C1 => half(m + n, tag) + p + 1,
        T11C2 => half(m + n, tag) + p,
        T11D1 => half(m + p, tag) + n + 1,
        T11D2 => half(m + p, tag) + n,
        T11E1 => half(n + p, tag) + m + 1,
        T11E2 => half(n + p, tag) + m,
        MainA => m + n,
        MainB => m + n + 1,
        MainC1 | MainD2 => half(3 * m + 3 * n + 2, tag),
        MainC2 | MainD1 => half(3 * m + 3 * n, tag),
        MainE1 => half(3 * m + 2 * n + 1, tag),
        MainE2 => half(3 * m + 2 * n - 1, tag),
        MainF1 => half(2 * m + 3 * n + 1, tag),
        MainF2 => half(2 * m + 3 * n - 1, tag),
        MainG1 => half(2 * m + 3 * n, tag),
        MainG2 => half(2 * m + 3 * n - 2, tag),
        MainH1 => half(3 * m + 2 * n, tag),
        MainH2 => half(3 * m + 2 * n - 2, tag),
        K1np1 | K1np2 => n + 2,
        K1np3 => 2 * n + 1,
        K1np4 => 2 * n + 3,
        K22p => 8,
        K111 => 1,
        K235 => 5,
    }
}

pub fn formula_text(tag: CaseTag) -> &'static str {
    use CaseTag::*;
    match tag {
        T11A1 => "(m+n+p)/2",
        T11A2 => "(m+n+p+2)/2",
        T11B1 => "(m+n+p+1)/2",
        T11B2 => "(m+n+p+3)/2",
        T11C1 => "(m+n)/2+p+1",
        T11C2 => "(m+n)/2+p",
        T11D1 => "(m+p)/2+n+1",
        T11D2 => "(m+p)/2+n",
        T11E1 => "(n+p)/2+m+1",
        T11E2 => "(n+p)/2+m",
        MainA => "m+n",
        MainB => "m+n+1",
        MainC1 | MainD2 => "(3m+3n+2)/2",
        MainC2 | MainD1 => "(3m+3n)/2",
        MainE1 => "(3m+2n+1)/2",
        MainE2 => "(3m+2n-1)/2",
        MainF1 => "(2m+3n+1)/2",
        MainF2 => "(2m+3n-1)/2",
        MainG1 => "(2m+3n)/2",
        MainG2 => "(2m+3n-2)/2",
        MainH1 => "(3m+2n)/2",
        MainH2 => "(3m+2n-2)/2",
        K1np1 | K1np2 => "n+2",
        K1np3 => "2n+1",
        K1np4 => "2n+3",
        K22p => "8",
        K111 => "1",
        K235 => "5",
    }
}

const fn even(x: u32) -> bool {
    x % 2 == 0
}

/// Closed forms for m ≤ n ≤ p ≤ m+n, excluding (1,1,1) and (2,3,5).
pub fn t11_case(params: TripartiteParams) -> Option<CaseTag> {
    use CaseTag::*;
    let [m, n, p] = params.sizes();
    if !(params.is_canonical() && p <= m + n) || [m, n, p] == [1, 1, 1] || [m, n, p] == [2, 3, 5]
    {
        return None;
    }
    let tag = match (even(m), even(n), even(p)) {
        (true, true, true) => {
            if (m + n + p) % 4 == 0 {
                T11A1
            } else {
                T11A2
            }
        }
        (false, false, false) => {
            if (m + n + p) % 4 == 1 {
                T11B1
            } else {
                T11B2
            }
        }
        (a, b, _) if a == b => {
            if (m + n) % 4 == 0 {
                T11C1
            } else {
                T11C2
            }
        }
        (a, _, c) if a == c => {
            if (m + p) % 4 == 0 {
                T11D1
            } else {
                T11D2
            }
        }
        _ => {
            if (n + p) % 4 == 0 {
                T11E1
            } else {
                T11E2
            }
        }
    };
    Some(tag)
}

/// Closed forms for m ≤ n, p ≥ m+n, m ≥ 2 and (m,n) ≠ (2,2) when p is odd.
///
/// Returns `None` when a side condition of the matching parity class fails.
pub fn main_case(params: TripartiteParams) -> Option<CaseTag> {
    use CaseTag::*;
    let [m, n, p] = params.sizes();
    if m > n || p < m + n || m < 2 || (m == 2 && n == 2 && !even(p)) {
        return None;
    }
    let tag = match (even(m), even(n), even(p)) {
        (true, true, true) => MainA,
        (false, false, false) if m >= 3 && n >= 3 => MainB,
        (false, false, true) if m >= 3 && n >= 3 => {
            if (m + n) % 4 == 0 {
                MainC1
            } else {
                MainC2
            }
        }
        (true, true, false) => {
            if (m + n) % 4 == 0 {
                MainD1
            } else {
                MainD2
            }
        }
        (false, true, true) if 3 <= m && m < n => {
            if m % 4 == 1 {
                MainE1
            } else {
                MainE2
            }
        }
        (true, false, true) if m < n => {
            if n % 4 == 1 {
                MainF1
            } else {
                MainF2
            }
        }
        (false, true, false) if 3 <= m && m < n => {
            if n % 4 == 0 {
                MainG1
            } else {
                MainG2
            }
        }
        (true, false, false) if m < n => {
            if m % 4 == 0 {
                MainH1
            } else {
                MainH2
            }
        }
        _ => return None,
    };
    Some(tag)
}

/// K(1,n,p) with p ≥ n+1.
pub fn k1np_case(params: TripartiteParams) -> Option<CaseTag> {
    let [m, n, p] = params.sizes();
    if m != 1 || n > p || p < n + 1 {
        return None;
    }
    Some(match (even(n), even(p)) {
        (false, false) => CaseTag::K1np1,
        (true, true) => CaseTag::K1np2,
        (true, false) => CaseTag::K1np3,
        (false, true) => CaseTag::K1np4,
    })
}

/// K(2,2,p) with p ≥ 5 odd.
pub fn k22p_case(params: TripartiteParams) -> Option<CaseTag> {
    let [m, n, p] = params.sizes();
    (m == 2 && n == 2 && p >= 5 && !even(p)).then_some(CaseTag::K22p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: u32, n: u32, p: u32) -> TripartiteParams {
        TripartiteParams::new(m, n, p).unwrap()
    }

    #[test]
    fn main_side_conditions() {
        assert_eq!(main_case(k(1, 3, 5)), None);
        assert_eq!(main_case(k(2, 2, 5)), None);
        assert_eq!(main_case(k(2, 2, 6)), Some(CaseTag::MainA));
        assert_eq!(main_case(k(3, 3, 5)), None);
        assert_eq!(main_case(k(3, 4, 8)), Some(CaseTag::MainE2));
        assert_eq!(main_case(k(4, 5, 9)), Some(CaseTag::MainH1));
        assert_eq!(main_case(k(2, 3, 5)), Some(CaseTag::MainH2));
    }

    #[test]
    fn t11_parity_classes() {
        assert_eq!(t11_case(k(2, 2, 4)), Some(CaseTag::T11A1));
        assert_eq!(t11_case(k(2, 2, 2)), Some(CaseTag::T11A2));
        assert_eq!(t11_case(k(1, 1, 1)), None);
        assert_eq!(t11_case(k(1, 3, 3)), Some(CaseTag::T11B2));
        assert_eq!(t11_case(k(1, 1, 2)), Some(CaseTag::T11C2));
        assert_eq!(t11_case(k(1, 2, 3)), Some(CaseTag::T11D1));
        assert_eq!(t11_case(k(2, 3, 3)), Some(CaseTag::T11E2));
        assert_eq!(t11_case(k(2, 3, 6)), None);
    }

    #[test]
    #[should_panic(expected = "odd numerator")]
    fn inexact_division_panics() {
        branch_value(CaseTag::T11A1, k(1, 1, 1));
    }
}
