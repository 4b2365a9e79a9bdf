// SPDX-License-Identifier: Apache-2.0

//! Maximal palindromes from LCE queries between a text and its reverse.

use alloc::vec::Vec;

use crate::{CostCounters, CrossLce, Result, Text};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PalindromeReport {
    /// One length per center: entry `2(p - 1)` is centered on position `p`,
    /// entry `2p - 1` between positions `p` and `p + 1`.
    pub lengths: Vec<usize>,
    pub lce_queries: u64,
}

impl PalindromeReport {
    /// `(start, length)` of a longest palindrome, leftmost first.
    pub fn longest(&self) -> Option<(usize, usize)> {
        let (c, &len) = self.lengths.iter().enumerate().rev().max_by_key(|&(_, len)| len)?;
        Some(((c + 3 - len) / 2, len))
    }
}

/// `lce` must pair the text (pattern side) with its reverse (text side).
///
/// Position `p` of `T` is position `n - p + 1` of the reverse, so reading
/// leftwards from `p` is reading the reverse rightwards from `n - p + 1`.
pub fn maximal_palindromes<C: CrossLce>(lce: &C, cost: &mut CostCounters) -> Result<PalindromeReport> {
    let n = lce.pattern_len();
    debug_assert_eq!(n, lce.text_len());
    let mut report = PalindromeReport { lengths: Vec::with_capacity(2 * n - 1), lce_queries: 0 };
    for p in 1..=n {
        // Odd: T[p..] against T[..=p] read backwards.
        let arm = lce.cross_lce_with(p, n - p + 1, cost)?;
        report.lengths.push(2 * arm - 1);
        report.lce_queries += 1;
        if p < n {
            // Even: T[p+1..] against T[..=p] read backwards.
            let arm = lce.cross_lce_with(p + 1, n - p + 1, cost)?;
            report.lengths.push(2 * arm);
            report.lce_queries += 1;
        }
    }
    Ok(report)
}

/// Center-by-center expansion.
pub fn palindromes_by_expansion(text: &Text) -> Vec<usize> {
    let t = text.as_bytes();
    let n = t.len();
    let mut out = Vec::with_capacity((2 * n).saturating_sub(1));
    for c in 0..(2 * n).saturating_sub(1) {
        // Expand T[lo..=hi] while it stays inside and the ends match.
        let (mut lo, mut hi) = (c / 2, c.div_ceil(2));
        let mut len = 0;
        while t[lo] == t[hi] {
            len = hi - lo + 1;
            if lo == 0 || hi + 1 == n {
                break;
            }
            lo -= 1;
            hi += 1;
        }
        out.push(len);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ConcatCross, FullLceOracle, NaiveCross};
    use proptest::prelude::*;

    fn lengths(s: &str) -> Vec<usize> {
        let t = Text::from(s);
        let r = t.reversed();
        maximal_palindromes(&NaiveCross::new(&t, &r), &mut CostCounters::default()).unwrap().lengths
    }

    #[test]
    fn examples() {
        assert_eq!(lengths("aaa"), [1, 2, 3, 2, 1]);
        assert_eq!(lengths("abc"), [1, 0, 1, 0, 1]);
        let l = lengths("abacaba");
        assert_eq!(l.iter().max(), Some(&7));
        assert_eq!(l[6], 7);
        assert_eq!(lengths("x"), [1]);
    }

    #[test]
    fn longest_locates_the_palindrome() {
        let t = Text::from("xyabbaz");
        let r = t.reversed();
        let report = maximal_palindromes(&NaiveCross::new(&t, &r), &mut CostCounters::default()).unwrap();
        assert_eq!(report.longest(), Some((3, 4)));
        assert_eq!(report.lce_queries, 13);
    }

    proptest! {
        #[test]
        fn matches_expansion(bytes in proptest::collection::vec(0u8..3, 1..120)) {
            let t = Text::new(bytes);
            let r = t.reversed();
            let joined = t.concat(&r);
            let full = ConcatCross::new(FullLceOracle::build(&joined).unwrap(), t.len(), t.len());
            let report = maximal_palindromes(&full, &mut CostCounters::default()).unwrap();
            prop_assert_eq!(&report.lengths, &palindromes_by_expansion(&t));
            prop_assert_eq!(report.lce_queries as usize, 2 * t.len() - 1);
        }
    }
}
