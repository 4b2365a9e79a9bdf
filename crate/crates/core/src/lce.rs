// SPDX-License-Identifier: Apache-2.0

//! Query interfaces shared by every index and application driver.

use alloc::boxed::Box;

use crate::{CostCounters, Result, Text};

/// A single-string LCE structure over a text of length [`text_len`].
///
/// Positions are 1-based. Implementations are immutable after build, so a
/// shared reference can be queried from many threads at once.
///
/// [`text_len`]: LceIndex::text_len
pub trait LceIndex {
    fn text_len(&self) -> usize;

    /// `LCE(i, j)`, recording work in `cost`.
    fn lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize>;

    fn lce(&self, i: usize, j: usize) -> Result<usize> {
        self.lce_with(i, j, &mut CostCounters::default())
    }

    /// Machine words owned by the index, excluding the text itself.
    fn space_words(&self) -> usize;
}

impl<I: LceIndex + ?Sized> LceIndex for &I {
    fn text_len(&self) -> usize {
        (**self).text_len()
    }
    fn lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        (**self).lce_with(i, j, cost)
    }
    fn space_words(&self) -> usize {
        (**self).space_words()
    }
}

impl<I: LceIndex + ?Sized> LceIndex for Box<I> {
    fn text_len(&self) -> usize {
        (**self).text_len()
    }
    fn lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        (**self).lce_with(i, j, cost)
    }
    fn space_words(&self) -> usize {
        (**self).space_words()
    }
}

/// LCE between suffix `i` of a pattern `P` and suffix `j` of a text `T`.
pub trait CrossLce {
    fn pattern_len(&self) -> usize;
    fn text_len(&self) -> usize;

    fn cross_lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize>;

    fn cross_lce(&self, i: usize, j: usize) -> Result<usize> {
        self.cross_lce_with(i, j, &mut CostCounters::default())
    }
}

impl<C: CrossLce + ?Sized> CrossLce for &C {
    fn pattern_len(&self) -> usize {
        (**self).pattern_len()
    }
    fn text_len(&self) -> usize {
        (**self).text_len()
    }
    fn cross_lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        (**self).cross_lce_with(i, j, cost)
    }
}

impl<C: CrossLce + ?Sized> CrossLce for Box<C> {
    fn pattern_len(&self) -> usize {
        (**self).pattern_len()
    }
    fn text_len(&self) -> usize {
        (**self).text_len()
    }
    fn cross_lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        (**self).cross_lce_with(i, j, cost)
    }
}

/// Cross LCE by direct symbol comparison.
#[derive(Debug, Clone, Copy)]
pub struct NaiveCross<'a> {
    pattern: &'a Text,
    text: &'a Text,
}

impl<'a> NaiveCross<'a> {
    pub fn new(pattern: &'a Text, text: &'a Text) -> Self {
        NaiveCross { pattern, text }
    }
}

impl CrossLce for NaiveCross<'_> {
    fn pattern_len(&self) -> usize {
        self.pattern.len()
    }
    fn text_len(&self) -> usize {
        self.text.len()
    }
    fn cross_lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        self.pattern.check_pos(i)?;
        self.text.check_pos(j)?;
        Ok(scan(self.pattern.suffix(i), self.text.suffix(j), cost))
    }
}

/// Cross LCE answered by a single-string index built over `P` followed by `T`.
///
/// Answers are capped at the end of the pattern, so matches never run across
/// the seam between the two strings.
#[derive(Debug, Clone)]
pub struct ConcatCross<I> {
    joined: I,
    pattern_len: usize,
    text_len: usize,
}

impl<I: LceIndex> ConcatCross<I> {
    /// `joined` must index `pattern.concat(text)` for strings of the given lengths.
    pub fn new(joined: I, pattern_len: usize, text_len: usize) -> Self {
        assert_eq!(joined.text_len(), pattern_len + text_len);
        ConcatCross { joined, pattern_len, text_len }
    }

    pub fn inner(&self) -> &I {
        &self.joined
    }
}

impl<I: LceIndex> CrossLce for ConcatCross<I> {
    fn pattern_len(&self) -> usize {
        self.pattern_len
    }
    fn text_len(&self) -> usize {
        self.text_len
    }
    fn cross_lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        if i == 0 || i > self.pattern_len {
            return Err(crate::Error::PositionOutOfRange { pos: i, len: self.pattern_len });
        }
        if j == 0 || j > self.text_len {
            return Err(crate::Error::PositionOutOfRange { pos: j, len: self.text_len });
        }
        let raw = self.joined.lce_with(i, self.pattern_len + j, cost)?;
        Ok(raw.min(self.pattern_len - i + 1))
    }
}

/// Compares `a` and `b` symbol by symbol from the left.
///
/// Each symbol pair inspected counts as one comparison; running off the end
/// of either slice costs nothing.
#[inline]
pub(crate) fn scan(a: &[u8], b: &[u8], cost: &mut CostCounters) -> usize {
    let mut k = 0;
    let limit = a.len().min(b.len());
    while k < limit {
        cost.char_comparisons += 1;
        if a[k] != b[k] {
            break;
        }
        k += 1;
    }
    k
}
