// SPDX-License-Identifier: Apache-2.0

//! Difference covers modulo `tau`.
//!
//! A set `D` of residues modulo `tau` is a difference cover when every
//! `d in 0..tau` can be written as `(d1 - d2) mod tau` with `d1, d2` in `D`.
//! Overlaying `D` on a text with period `tau` guarantees that any two
//! positions `i, j` reach positions `i + k, j + k` that are both sampled for
//! some `k < tau`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceCover {
    tau: usize,
    elements: Vec<u32>,
    membership: Vec<u64>,
    // witness[d] is the smallest d2 in D with (d2 + d) mod tau in D.
    witness: Vec<u32>,
}

impl DifferenceCover {
    /// The built-in cover `{0, .., r-1} ∪ {k*r - 1 : 1 <= k <= r}` with `r = ceil(sqrt(tau))`.
    ///
    /// Any `d = q*r + s` with `0 <= s < r` is `((q+1)*r - 1) - (r - 1 - s)`,
    /// so the set covers every difference and has at most `2r` elements.
    pub fn build(tau: usize) -> Result<Self> {
        if tau == 0 {
            return Err(Error::InvalidPeriod { tau, n: 0 });
        }
        let r = ceil_sqrt(tau);
        let mut elements: Vec<usize> = (0..r).map(|x| x % tau).collect();
        elements.extend((1..=r).map(|k| (k * r - 1) % tau));
        Self::from_elements(tau, &elements)
    }

    /// Validates a caller-supplied residue set. Duplicates are ignored.
    pub fn from_elements(tau: usize, residues: &[usize]) -> Result<Self> {
        if tau == 0 {
            return Err(Error::InvalidPeriod { tau, n: 0 });
        }
        let mut membership = vec![0u64; tau.div_ceil(64)];
        for &r in residues {
            if r >= tau {
                return Err(Error::ResidueOutOfRange { residue: r, tau });
            }
            membership[r / 64] |= 1 << (r % 64);
        }
        let elements: Vec<u32> = (0..tau).filter(|&r| bit(&membership, r)).map(|r| r as u32).collect();

        const UNSET: u32 = u32::MAX;
        let mut witness = vec![UNSET; tau];
        for &d2 in &elements {
            for &d1 in &elements {
                let d = (d1 as usize + tau - d2 as usize) % tau;
                if witness[d] == UNSET {
                    witness[d] = d2;
                }
            }
        }
        if let Some(missing) = witness.iter().position(|&w| w == UNSET) {
            return Err(Error::NotACover { tau, missing });
        }
        Ok(DifferenceCover { tau, elements, membership, witness })
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    /// The residues of `D` in ascending order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn contains(&self, residue: usize) -> bool {
        residue < self.tau && bit(&self.membership, residue)
    }

    /// Whether the 1-based text position `pos` is sampled.
    #[inline]
    pub fn samples(&self, pos: usize) -> bool {
        bit(&self.membership, pos % self.tau)
    }

    /// A pair `(d2, d1)` of elements with `d1 - d2 ≡ d (mod tau)`, smallest `d2` first.
    pub fn covers(&self, d: usize) -> Result<(usize, usize)> {
        if d >= self.tau {
            return Err(Error::ResidueOutOfRange { residue: d, tau: self.tau });
        }
        let d2 = self.witness[d] as usize;
        Ok((d2, (d2 + d) % self.tau))
    }

    /// The smallest `k < tau` such that positions `i + k` and `j + k` are both sampled.
    pub fn synchronize(&self, i: usize, j: usize) -> usize {
        let tau = self.tau;
        // (j + k) - (i + k) ≡ j - i must equal d1 - d2 with i + k ≡ d2.
        let (d2, _) = self.covers((j % tau + tau - i % tau) % tau).expect("residue in range");
        let first = (d2 + tau - i % tau) % tau;
        // Another witness pair may synchronize earlier.
        (0..first).find(|&k| self.samples(i + k) && self.samples(j + k)).unwrap_or(first)
    }

    /// Positions `1..=n` whose residue lies in `D`, ascending.
    pub fn sample_positions(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|&p| self.samples(p)).collect()
    }

    pub(crate) fn words(&self) -> usize {
        self.elements.len() + self.membership.len() + self.witness.len() + 1
    }
}

#[inline]
fn bit(bits: &[u64], r: usize) -> bool {
    bits[r / 64] >> (r % 64) & 1 == 1
}

fn ceil_sqrt(x: usize) -> usize {
    let mut r = x.isqrt();
    if r * r < x {
        r += 1;
    }
    r
}
