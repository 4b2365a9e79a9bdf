// SPDX-License-Identifier: Apache-2.0

//! All squares `XX` by Main-Lorentz divide and conquer over LCE queries.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{CostCounters, LceIndex, Result, Text};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SquareReport {
    /// `(start, total length)`, 1-based, sorted, without duplicates.
    pub squares: Vec<(usize, usize)>,
    pub lce_queries: u64,
}

struct Extender<'a, F, B> {
    forward: &'a F,
    backward: &'a B,
    n: usize,
    queries: u64,
    cost: &'a mut CostCounters,
}

impl<F: LceIndex, B: LceIndex> Extender<'_, F, B> {
    // Longest common prefix of T[a..] and T[b..], 0-based.
    fn ahead(&mut self, a: usize, b: usize) -> Result<usize> {
        if a >= self.n || b >= self.n {
            return Ok(0);
        }
        self.queries += 1;
        self.forward.lce_with(a + 1, b + 1, self.cost)
    }

    // Longest common suffix of T[..a] and T[..b], 0-based exclusive ends.
    fn behind(&mut self, a: usize, b: usize) -> Result<usize> {
        if a == 0 || b == 0 {
            return Ok(0);
        }
        self.queries += 1;
        self.backward.lce_with(self.n - a + 1, self.n - b + 1, self.cost)
    }

    // Squares inside [lo, hi) that contain both T[mid - 1] and T[mid].
    fn crossing(&mut self, lo: usize, mid: usize, hi: usize, out: &mut BTreeSet<(usize, usize)>) -> Result<()> {
        for half in 1..=(hi - lo) / 2 {
            // Second copy starts at or after mid: compare around mid and mid + half.
            if mid + half <= hi {
                let fwd = self.ahead(mid, mid + half)?;
                let bwd = self.behind(mid, mid + half)?;
                let first = lo.max(mid - half).max(mid - bwd.min(mid));
                let last = (mid - 1).min((mid + fwd).saturating_sub(half)).min(hi.saturating_sub(2 * half));
                if mid + fwd >= half {
                    for s in first..=last {
                        out.insert((s + 1, 2 * half));
                    }
                }
            }
            // Second copy starts before mid: compare around mid - half and mid.
            if mid >= lo + half {
                let fwd = self.ahead(mid - half, mid)?;
                let bwd = self.behind(mid - half, mid)?;
                let first = lo.max((mid + 1).saturating_sub(2 * half)).max((mid - half).saturating_sub(bwd));
                if mid + fwd >= 2 * half && mid > half && hi >= 2 * half {
                    let last = (mid - half - 1).min(mid + fwd - 2 * half).min(hi - 2 * half);
                    for s in first..=last {
                        out.insert((s + 1, 2 * half));
                    }
                }
            }
        }
        Ok(())
    }

    fn solve(&mut self, lo: usize, hi: usize, out: &mut BTreeSet<(usize, usize)>) -> Result<()> {
        if hi - lo < 2 {
            return Ok(());
        }
        let mid = (lo + hi) / 2;
        self.solve(lo, mid, out)?;
        self.solve(mid, hi, out)?;
        self.crossing(lo, mid, hi, out)
    }
}

/// `forward` indexes `T`, `backward` indexes the reverse of `T`.
pub fn tandem_repeats<F: LceIndex, B: LceIndex>(
    forward: &F,
    backward: &B,
    cost: &mut CostCounters,
) -> Result<SquareReport> {
    let n = forward.text_len();
    debug_assert_eq!(n, backward.text_len());
    let mut ext = Extender { forward, backward, n, queries: 0, cost };
    let mut out = BTreeSet::new();
    ext.solve(0, n, &mut out)?;
    Ok(SquareReport { squares: out.into_iter().collect(), lce_queries: ext.queries })
}

/// Every `(start, 2L)` with `T[start..start+L] == T[start+L..start+2L]`.
pub fn squares_brute_force(text: &Text) -> Vec<(usize, usize)> {
    let t = text.as_bytes();
    let mut out = Vec::new();
    for s in 0..t.len() {
        for half in 1..=(t.len() - s) / 2 {
            if t[s..s + half] == t[s + half..s + 2 * half] {
                out.push((s + 1, 2 * half));
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{DcLceIndex, NaiveLce};
    use proptest::prelude::*;

    fn squares(s: &str) -> Vec<(usize, usize)> {
        let t = Text::from(s);
        let r = t.reversed();
        tandem_repeats(&NaiveLce::new(&t), &NaiveLce::new(&r), &mut CostCounters::default()).unwrap().squares
    }

    #[test]
    fn examples() {
        assert_eq!(squares("aabaab"), [(1, 2), (1, 6), (4, 2)]);
        assert!(squares("abcd").is_empty());
        assert_eq!(squares("aaaa"), [(1, 2), (1, 4), (2, 2), (3, 2)]);
        assert!(squares("a").is_empty());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(squares_brute_force(&"aabaab".into()), [(1, 2), (1, 6), (4, 2)]);
        assert_eq!(squares_brute_force(&"aaaa".into()), [(1, 2), (1, 4), (2, 2), (3, 2)]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(bytes in proptest::collection::vec(0u8..3, 1..100)) {
            let t = Text::new(bytes);
            let r = t.reversed();
            let tau = 2.min(t.len());
            let (f, b) = (DcLceIndex::build(&t, tau).unwrap(), DcLceIndex::build(&r, tau).unwrap());
            let report = tandem_repeats(&f, &b, &mut CostCounters::default()).unwrap();
            prop_assert_eq!(report.squares, squares_brute_force(&t));
        }
    }
}
