// SPDX-License-Identifier: Apache-2.0

//! Approximate matching with at most `k` edits, one LCE query per front extension.

use alloc::vec;
use alloc::vec::Vec;

use crate::{CostCounters, CrossLce, Result, Text};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchReport {
    /// 1-based text positions where a substring within distance `k` of the pattern ends.
    pub end_positions: Vec<usize>,
    pub lce_queries: u64,
}

const UNREACHED: i64 = i64::MIN / 4;

/// Landau-Vishkin over a cross interface between pattern `P` and text `T`.
///
/// `L(d, e)`, the furthest pattern row reachable on diagonal `d` (text
/// column minus pattern row) with `e` edits, follows from the three
/// neighbours at `e - 1` and is then extended along the diagonal by one LCE
/// query. The text is cut into pieces of `O(m + k)` symbols; the piece for
/// end positions `w*m+1 ..= (w+1)*m` starts `m + k - 1` symbols earlier so
/// that every substring within distance `k` (length at most `m + k`) fits.
pub fn landau_vishkin<C: CrossLce>(lce: &C, k: usize, cost: &mut CostCounters) -> Result<MatchReport> {
    let (m, n) = (lce.pattern_len(), lce.text_len());
    let mut report = MatchReport::default();
    let mut first_end = 1;
    while first_end <= n {
        let last_end = (first_end + m - 1).min(n);
        let start = first_end.saturating_sub(m + k - 1).max(1);
        diagonal_sweep(lce, k, start, first_end, last_end, &mut report, cost)?;
        first_end += m;
    }
    report.end_positions.dedup();
    Ok(report)
}

// Runs the sweep over T[start..=last_end] and reports ends in first_end..=last_end.
fn diagonal_sweep<C: CrossLce>(
    lce: &C,
    k: usize,
    start: usize,
    first_end: usize,
    last_end: usize,
    report: &mut MatchReport,
    cost: &mut CostCounters,
) -> Result<()> {
    let m = lce.pattern_len() as i64;
    let len = (last_end - start + 1) as i64;
    let k = k as i64;
    // Diagonals -(k + 1) ..= len + 1.
    let offset = k + 1;
    let slots = (len + k + 3) as usize;
    let mut prev = vec![UNREACHED; slots];
    let mut cur = vec![UNREACHED; slots];
    for e in 0..=k {
        cur.fill(UNREACHED);
        for d in (-e).max(-m)..=len {
            let at = (d + offset) as usize;
            let mut row = if e == 0 {
                if d >= 0 {
                    0
                } else {
                    continue;
                }
            } else {
                (prev[at] + 1).max(prev[at + 1] + 1).max(prev[at - 1])
            };
            if row < 0 {
                continue;
            }
            row = row.min(m).min(len - d);
            if row < m && row + d < len {
                let p = (row + 1) as usize;
                let t = (start as i64 + row + d) as usize;
                report.lce_queries += 1;
                let ext = lce.cross_lce_with(p, t, cost)? as i64;
                row += ext.min(len - row - d);
            }
            cur[at] = row;
            if row == m {
                let end = start as i64 - 1 + m + d;
                if end >= first_end as i64 && end <= last_end as i64 {
                    report.end_positions.push(end as usize);
                }
            }
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    report.end_positions.sort_unstable();
    report.end_positions.dedup();
    Ok(())
}

/// End positions by the classic `O(nm)` edit-distance table with a free start.
pub fn approximate_matches_dp(pattern: &Text, text: &Text, k: usize) -> Vec<usize> {
    let (p, t) = (pattern.as_bytes(), text.as_bytes());
    let m = p.len();
    // col[i] = distance from P[..i] to the best substring ending at the current column.
    let mut col: Vec<usize> = (0..=m).collect();
    let mut ends = Vec::new();
    for (j, &c) in t.iter().enumerate() {
        let mut diag = col[0];
        col[0] = 0;
        for i in 1..=m {
            let sub = diag + usize::from(p[i - 1] != c);
            diag = col[i];
            col[i] = sub.min(col[i] + 1).min(col[i - 1] + 1);
        }
        if col[m] <= k {
            ends.push(j + 1);
        }
    }
    ends
}
