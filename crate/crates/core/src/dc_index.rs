// SPDX-License-Identifier: Apache-2.0

//! Deterministic sampled-suffix LCE index.
//!
//! Only suffixes starting at positions sampled by a difference cover are
//! indexed: their lexicographic ranks plus a range-minimum table over the
//! LCP of rank-adjacent sampled suffixes. A query compares characters until
//! both positions are sampled, which happens within `tau` steps, then finishes
//! with one range-minimum probe.

use alloc::vec;
use alloc::vec::Vec;

use crate::rmq::SparseMin;
use crate::{CostCounters, DifferenceCover, LceIndex, Result, Text};

#[derive(Debug, Clone)]
pub struct DcLceIndex<'t> {
    text: &'t Text,
    cover: DifferenceCover,
    // Position of each residue inside the sorted cover; u32::MAX when absent.
    residue_rank: Vec<u32>,
    // Lexicographic rank of each sampled suffix, indexed by sample ordinal.
    rank: Vec<u32>,
    lcp: SparseMin,
}

impl<'t> DcLceIndex<'t> {
    /// Builds with the built-in difference cover modulo `tau`.
    pub fn build(text: &'t Text, tau: usize) -> Result<Self> {
        text.check_period(tau)?;
        Self::with_cover(text, DifferenceCover::build(tau)?)
    }

    pub fn with_cover(text: &'t Text, cover: DifferenceCover) -> Result<Self> {
        text.check_period(cover.tau())?;
        let tau = cover.tau();
        let mut residue_rank = vec![u32::MAX; tau];
        for (idx, &r) in cover.elements().iter().enumerate() {
            residue_rank[r as usize] = idx as u32;
        }

        let mut order = cover.sample_positions(text.len());
        order.sort_unstable_by(|&a, &b| text.suffix(a).cmp(text.suffix(b)));

        let mut index = DcLceIndex { text, cover, residue_rank, rank: Vec::new(), lcp: SparseMin::default() };
        let mut rank = vec![0u32; order.len()];
        for (r, &p) in order.iter().enumerate() {
            rank[index.ordinal(p)] = r as u32;
        }
        let lcp: Vec<u32> = order
            .windows(2)
            .map(|w| {
                let (a, b) = (text.suffix(w[0]), text.suffix(w[1]));
                a.iter().zip(b).take_while(|(x, y)| x == y).count() as u32
            })
            .collect();
        index.rank = rank;
        index.lcp = SparseMin::new(&lcp);
        Ok(index)
    }

    pub fn tau(&self) -> usize {
        self.cover.tau()
    }

    pub fn cover(&self) -> &DifferenceCover {
        &self.cover
    }

    /// The sampled positions, ascending.
    pub fn sample(&self) -> Vec<usize> {
        self.cover.sample_positions(self.text.len())
    }

    /// Sampled positions in lexicographic order of their suffixes.
    pub fn sorted_sample(&self) -> Vec<usize> {
        let sample = self.sample();
        let mut sorted = vec![0; sample.len()];
        for p in sample {
            sorted[self.rank[self.ordinal(p)] as usize] = p;
        }
        sorted
    }

    /// LCP of the sampled suffixes ranked `r` and `r + 1`.
    pub fn adjacent_lcp(&self, r: usize) -> usize {
        self.lcp.min(r, r + 1) as usize
    }

    // Count of sampled positions smaller than the sampled position `pos`.
    #[inline]
    fn ordinal(&self, pos: usize) -> usize {
        let tau = self.cover.tau();
        let zero_sampled = self.cover.contains(0) as usize;
        (pos / tau) * self.cover.len() + self.residue_rank[pos % tau] as usize - zero_sampled
    }

    // LCE of two distinct sampled positions.
    #[inline]
    fn sampled_lce(&self, a: usize, b: usize) -> usize {
        let ra = self.rank[self.ordinal(a)] as usize;
        let rb = self.rank[self.ordinal(b)] as usize;
        self.lcp.min(ra.min(rb), ra.max(rb)) as usize
    }
}

impl LceIndex for DcLceIndex<'_> {
    fn text_len(&self) -> usize {
        self.text.len()
    }

    fn lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        self.text.check_pos(i)?;
        self.text.check_pos(j)?;
        let n = self.text.len();
        if i == j {
            return Ok(n - i + 1);
        }
        let bytes = self.text.as_bytes();
        let mut k = 0;
        loop {
            let (a, b) = (i + k, j + k);
            if a > n || b > n {
                return Ok(k);
            }
            if self.cover.samples(a) && self.cover.samples(b) {
                return Ok(k + self.sampled_lce(a, b));
            }
            cost.char_comparisons += 1;
            if bytes[a - 1] != bytes[b - 1] {
                return Ok(k);
            }
            k += 1;
        }
    }

    fn space_words(&self) -> usize {
        self.rank.len() + self.lcp.words() + self.residue_rank.len() + self.cover.words() + 2
    }
}
