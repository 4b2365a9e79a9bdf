// SPDX-License-Identifier: Apache-2.0

//! Per-query instrumentation.

/// Work counters filled in by the `*_with` query methods.
///
/// Counters only ever grow; callers own them and reset between queries when
/// they want per-query numbers.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CostCounters {
    pub char_comparisons: u64,
    pub fp_comparisons: u64,
    pub fp_constructions: u64,
}

impl CostCounters {
    pub fn reset(&mut self) {
        *self = CostCounters::default();
    }

    pub fn add(&mut self, other: &CostCounters) {
        self.char_comparisons += other.char_comparisons;
        self.fp_comparisons += other.fp_comparisons;
        self.fp_constructions += other.fp_constructions;
    }
}
