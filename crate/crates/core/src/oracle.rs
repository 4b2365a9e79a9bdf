// SPDX-License-Identifier: Apache-2.0

//! The two extreme baselines: no index at all, and a full suffix index.
//!
//! Both exist to validate the trade-off structures. [`FullLceOracle`] sorts
//! suffixes by plain comparison, which is quadratic-class on repetitive input
//! and fine at the sizes it is used for.

use alloc::vec::Vec;

use crate::lce::scan;
use crate::rmq::SparseMin;
use crate::{CostCounters, Error, LceIndex, Result, Text};

/// `LCE(i, j)` by comparing symbols left to right.
pub fn naive_lce(text: &Text, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
    text.check_pos(i)?;
    text.check_pos(j)?;
    Ok(scan(text.suffix(i), text.suffix(j), cost))
}

/// [`naive_lce`] behind the [`LceIndex`] interface. Stores nothing.
#[derive(Debug, Clone, Copy)]
pub struct NaiveLce<'t> {
    text: &'t Text,
}

impl<'t> NaiveLce<'t> {
    pub fn new(text: &'t Text) -> Self {
        NaiveLce { text }
    }
}

impl LceIndex for NaiveLce<'_> {
    fn text_len(&self) -> usize {
        self.text.len()
    }
    fn lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        naive_lce(self.text, i, j, cost)
    }
    fn space_words(&self) -> usize {
        0
    }
}

/// Suffix order, inverse order and LCP range minimum over every suffix.
///
/// Answers any query with one range-minimum probe and no text access.
#[derive(Debug, Clone)]
pub struct FullLceOracle {
    n: usize,
    order: Vec<u32>,
    rank: Vec<u32>,
    lcp: SparseMin,
}

impl FullLceOracle {
    pub fn build(text: &Text) -> Result<Self> {
        text.check_nonempty()?;
        Ok(Self::from_symbols(text.as_bytes()))
    }

    /// Builds over an arbitrary ordered alphabet (used with out-of-band separators).
    pub(crate) fn from_symbols<S: Ord>(symbols: &[S]) -> Self {
        let n = symbols.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by(|&a, &b| symbols[a as usize..].cmp(&symbols[b as usize..]));
        let mut rank = alloc::vec![0u32; n];
        for (r, &p) in order.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp: Vec<u32> = order
            .windows(2)
            .map(|w| common_prefix(&symbols[w[0] as usize..], &symbols[w[1] as usize..]) as u32)
            .collect();
        FullLceOracle { n, order, rank, lcp: SparseMin::new(&lcp) }
    }

    /// 1-based suffix starts in lexicographic order.
    pub fn suffix_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().map(|&p| p as usize + 1)
    }

    /// 0-based start of the suffix with the given rank.
    pub(crate) fn suffix_at_rank(&self, rank: usize) -> usize {
        self.order[rank] as usize
    }

    /// Rank of the suffix with 0-based start `pos`.
    pub(crate) fn rank_of(&self, pos: usize) -> usize {
        self.rank[pos] as usize
    }

    /// LCE of the suffixes ranked `lo` and `hi`, `lo < hi`.
    pub(crate) fn lce_between_ranks(&self, lo: usize, hi: usize) -> usize {
        self.lcp.min(lo, hi) as usize
    }

    fn lce0(&self, a: usize, b: usize) -> usize {
        if a == b {
            return self.n - a;
        }
        let (ra, rb) = (self.rank[a] as usize, self.rank[b] as usize);
        self.lce_between_ranks(ra.min(rb), ra.max(rb))
    }
}

impl LceIndex for FullLceOracle {
    fn text_len(&self) -> usize {
        self.n
    }

    fn lce_with(&self, i: usize, j: usize, _cost: &mut CostCounters) -> Result<usize> {
        for pos in [i, j] {
            if pos == 0 || pos > self.n {
                return Err(Error::PositionOutOfRange { pos, len: self.n });
            }
        }
        Ok(self.lce0(i - 1, j - 1))
    }

    fn space_words(&self) -> usize {
        self.order.len() + self.rank.len() + self.lcp.words()
    }
}

fn common_prefix<S: Eq>(a: &[S], b: &[S]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
