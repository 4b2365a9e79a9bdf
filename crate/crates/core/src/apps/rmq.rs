// SPDX-License-Identifier: Apache-2.0

//! Range minimum on a 0/1 array with one LCE query per range.
//!
//! Besides the LCE structure only the longest run of ones, `A[i..=j]`, is
//! stored. `LCE(l, i)` tells how far ones continue from `l` (up to the run
//! length `z`), which locates the first zero in `A[l..=r]` if there is one.

use crate::{CostCounters, Error, LceIndex, Result, Text};

#[derive(Debug, Clone)]
pub struct BinaryRmq<I> {
    index: I,
    n: usize,
    // 1-based start and length of the leftmost longest run of ones.
    run_start: usize,
    run_len: usize,
}

impl<I: LceIndex> BinaryRmq<I> {
    /// `bits` must hold only the bytes 0 and 1, and `index` must index it.
    pub fn new(bits: &Text, index: I) -> Result<Self> {
        bits.check_nonempty()?;
        if let Some(pos) = bits.as_bytes().iter().position(|&b| b > 1) {
            return Err(Error::NonBinary { pos: pos + 1, byte: bits.as_bytes()[pos] });
        }
        let (mut run_start, mut run_len) = (1, 0);
        let mut current = 0;
        for (p, &b) in bits.as_bytes().iter().enumerate() {
            current = if b == 1 { current + 1 } else { 0 };
            if current > run_len {
                run_len = current;
                run_start = p + 2 - current;
            }
        }
        Ok(BinaryRmq { index, n: bits.len(), run_start, run_len })
    }

    /// A position of a minimum of `A[l..=r]`.
    pub fn query(&self, l: usize, r: usize, cost: &mut CostCounters) -> Result<usize> {
        if l == 0 || l > self.n {
            return Err(Error::PositionOutOfRange { pos: l, len: self.n });
        }
        if r < l || r > self.n {
            return Err(Error::PositionOutOfRange { pos: r, len: self.n });
        }
        let res = self.index.lce_with(l, self.run_start, cost)?;
        let z = self.run_len;
        Ok(if res <= z && l + res <= r {
            l + res
        } else if res > z && l + z <= r {
            l + z
        } else {
            l
        })
    }

    pub fn space_words(&self) -> usize {
        self.index.space_words() + 3
    }
}

/// One-shot form of [`BinaryRmq::query`].
pub fn rmq_via_lce<I: LceIndex>(bits: &Text, index: I, l: usize, r: usize) -> Result<usize> {
    BinaryRmq::new(bits, index)?.query(l, r, &mut CostCounters::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FingerprintFn, FpLceIndex, Modulus, NaiveLce};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let a = Text::new([1u8, 1, 0, 1]);
        assert_eq!(rmq_via_lce(&a, NaiveLce::new(&a), 2, 4).unwrap(), 3);
        let pos = rmq_via_lce(&a, NaiveLce::new(&a), 1, 2).unwrap();
        assert!((1..=2).contains(&pos));
        let zeros = Text::new([0u8; 6]);
        assert_eq!(rmq_via_lce(&zeros, NaiveLce::new(&zeros), 3, 5).unwrap(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        let a = Text::from("0110");
        assert_eq!(BinaryRmq::new(&a, NaiveLce::new(&a)).unwrap_err(), Error::NonBinary { pos: 1, byte: b'0' });
        let a = Text::new([1u8, 0]);
        let rmq = BinaryRmq::new(&a, NaiveLce::new(&a)).unwrap();
        let mut c = CostCounters::default();
        assert!(rmq.query(2, 1, &mut c).is_err());
        assert!(rmq.query(0, 1, &mut c).is_err());
        assert!(rmq.query(1, 3, &mut c).is_err());
    }

    proptest! {
        #[test]
        fn returns_a_true_minimum(bits in proptest::collection::vec(0u8..2, 1..64), a in 0usize..64, b in 0usize..64, seed in any::<u64>()) {
            let t = Text::new(bits.clone());
            let (l, r) = (1 + a.min(b) % t.len(), 1 + a.max(b) % t.len());
            let (l, r) = (l.min(r), l.max(r));
            let fp = FpLceIndex::build(&t, 2.min(t.len()), FingerprintFn::random(Modulus::MERSENNE_61, seed)).unwrap();
            let rmq = BinaryRmq::new(&t, fp).unwrap();
            let mut c = CostCounters::default();
            let pos = rmq.query(l, r, &mut c).unwrap();
            prop_assert!((l..=r).contains(&pos));
            prop_assert_eq!(bits[pos - 1], *bits[l - 1..r].iter().min().unwrap());
        }
    }
}
