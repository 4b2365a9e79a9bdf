// SPDX-License-Identifier: Apache-2.0

//! Sparse-table range minimum over `u32` values.

use alloc::vec::Vec;

/// O(1) range-minimum queries after O(n log n) preprocessing.
///
/// `levels[k][i]` is the minimum of `values[i..i + 2^k]`.
#[derive(Debug, Clone, Default)]
pub struct SparseMin {
    levels: Vec<Vec<u32>>,
}

impl SparseMin {
    pub fn new(values: &[u32]) -> Self {
        let mut levels = Vec::new();
        if values.is_empty() {
            return SparseMin { levels };
        }
        levels.push(values.to_vec());
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev: &Vec<u32> = levels.last().unwrap();
            let next = (0..=values.len() - 2 * width).map(|i| prev[i].min(prev[i + width])).collect();
            levels.push(next);
            width *= 2;
        }
        SparseMin { levels }
    }

    pub fn len(&self) -> usize {
        self.levels.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Minimum over the half-open range `lo..hi`, which must be non-empty.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo < hi && hi <= self.len());
        let k = (hi - lo).ilog2() as usize;
        let row = &self.levels[k];
        row[lo].min(row[hi - (1 << k)])
    }

    pub fn words(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }
}
