// SPDX-License-Identifier: Apache-2.0

//! Fingerprint-sampled LCE index.
//!
//! Block boundaries sit at the 1-based positions `k * tau`, `k >= 1`. The
//! index stores `phi_k = phi(T[k*tau..=n])` for every `k` with `k * tau < n`
//! plus the powers `b^(k*tau)`, so `O(n / tau)` words in total. Any substring
//! fingerprint is then available in `O(tau)` time, and in `O(1)` when both
//! its start and its length are multiples of `tau`.
//!
//! A query first scans until one side sits on a block boundary, then finds
//! the longest matching run of `tau * 2^l` symbols by doubling, walks down
//! through smaller levels, and finishes with a scan of fewer than `tau`
//! symbols. Answers are exact with high probability; an index whose
//! fingerprint function passed the verifier is exact.

use alloc::vec::Vec;

use crate::lce::scan;
use crate::{CostCounters, Error, FingerprintFn, LceIndex, Result, Text};

#[derive(Debug, Clone)]
pub struct FpLceIndex<'t> {
    text: &'t Text,
    tau: usize,
    func: FingerprintFn,
    // suffix_fps[k - 1] = phi(T[k*tau..=n]) for 1 <= k, k*tau < n.
    suffix_fps: Vec<u64>,
    // pow_tau[k] = b^(k*tau) for 0 <= k <= (n + 1) / tau.
    pow_tau: Vec<u64>,
    verified: bool,
}

impl<'t> FpLceIndex<'t> {
    pub fn build(text: &'t Text, tau: usize, func: FingerprintFn) -> Result<Self> {
        text.check_period(tau)?;
        let n = text.len();
        let m = func.modulus();
        let bytes = text.as_bytes();

        let stored = (n - 1) / tau;
        let mut suffix_fps = alloc::vec![0u64; stored];
        // phi(T[s..]) = b * (T[s] + phi(T[s+1..])), accumulated right to left.
        let mut acc = 0u64;
        for s in (tau..=n).rev() {
            acc = m.mul(func.base(), m.add(bytes[s - 1] as u64 % m.value(), acc));
            if s % tau == 0 && s < n {
                suffix_fps[s / tau - 1] = acc;
            }
        }

        let step = func.power(tau as u64);
        let mut pow_tau = Vec::with_capacity((n + 1) / tau + 1);
        let mut p = 1 % m.value();
        for _ in 0..=(n + 1) / tau {
            pow_tau.push(p);
            p = m.mul(p, step);
        }

        Ok(FpLceIndex { text, tau, func, suffix_fps, pow_tau, verified: false })
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn fingerprint_fn(&self) -> &FingerprintFn {
        &self.func
    }

    pub fn text(&self) -> &'t Text {
        self.text
    }

    /// The stored suffix fingerprints `phi_1, phi_2, ..`.
    pub fn suffix_fingerprints(&self) -> &[u64] {
        &self.suffix_fps
    }

    /// True once the fingerprint function was certified tau-good on the text.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn mark_verified(&mut self) {
        self.verified = true;
    }

    // phi(T[k*tau..=n]); the suffix at n itself and empty suffixes are not stored.
    #[inline]
    fn suffix_fp(&self, k: usize) -> u64 {
        let start = k * self.tau;
        let n = self.text.len();
        if start < n {
            self.suffix_fps[k - 1]
        } else if start == n {
            let m = self.func.modulus();
            m.mul(self.text.at(n) as u64 % m.value(), self.func.base())
        } else {
            0
        }
    }

    /// `phi(T[i..i+alpha])` assembled from stored block fingerprints.
    pub fn fp_of_range(&self, i: usize, alpha: usize, cost: &mut CostCounters) -> Result<u64> {
        let n = self.text.len();
        if i == 0 || i + alpha > n + 1 {
            return Err(Error::RangeOverflow { start: i, len: alpha, n });
        }
        cost.fp_constructions += 1;
        Ok(self.range_fp(i, alpha))
    }

    #[inline]
    fn range_fp(&self, i: usize, alpha: usize) -> u64 {
        let tau = self.tau;
        let end = i + alpha;
        let k1 = i.div_ceil(tau);
        let k2 = end / tau;
        let bytes = self.text.as_bytes();
        if k1 >= k2 {
            // No complete block inside; alpha < 2 * tau.
            return self.func.fp_direct(&bytes[i - 1..end - 1]);
        }
        let m = self.func.modulus();
        let (a, c) = (k1 * tau, k2 * tau);
        let span = self.pow_tau[k2 - k1];
        let middle = m.sub(self.suffix_fp(k1), m.mul(self.suffix_fp(k2), span));
        let mut fp = middle;
        if c < end {
            let tail = self.func.fp_direct(&bytes[c - 1..end - 1]);
            fp = m.add(fp, m.mul(span, tail));
        }
        if i < a {
            let head = self.func.fp_direct(&bytes[i - 1..a - 1]);
            fp = m.add(head, m.mul(self.func.power((a - i) as u64), fp));
        }
        fp
    }

    // Largest level l with max(x, y) + tau * 2^l - 1 <= n.
    #[inline]
    fn top_level(&self, x: usize, y: usize) -> Option<u32> {
        let room = self.text.len() + 1 - x.max(y);
        (room >= self.tau).then(|| (room / self.tau).ilog2())
    }

    #[inline]
    fn blocks_match(&self, x: usize, y: usize, level: u32, cost: &mut CostCounters) -> bool {
        let width = self.tau << level;
        cost.fp_comparisons += 1;
        cost.fp_constructions += 2;
        self.range_fp(x, width) == self.range_fp(y, width)
    }
}

impl LceIndex for FpLceIndex<'_> {
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
        let tau = self.tau;
        let bytes = self.text.as_bytes();

        // Scan until one side sits on a block boundary.
        let mut k = 0;
        loop {
            let (a, b) = (i + k, j + k);
            if a > n || b > n {
                return Ok(k);
            }
            if a % tau == 0 || b % tau == 0 {
                break;
            }
            cost.char_comparisons += 1;
            if bytes[a - 1] != bytes[b - 1] {
                return Ok(k);
            }
            k += 1;
        }
        let (mut x, mut y) = (i + k, j + k);
        let mut matched = k;

        if let Some(top) = self.top_level(x, y) {
            if self.blocks_match(x, y, 0, cost) {
                let mut best = 0;
                while best < top && self.blocks_match(x, y, best + 1, cost) {
                    best += 1;
                }
                let step = tau << best;
                x += step;
                y += step;
                matched += step;
                // Each later jump is strictly shorter than the one before.
                let mut level = best;
                while level > 0 {
                    level -= 1;
                    let Some(top) = self.top_level(x, y) else { break };
                    level = level.min(top);
                    if self.blocks_match(x, y, level, cost) {
                        let step = tau << level;
                        x += step;
                        y += step;
                        matched += step;
                    }
                }
            }
        }

        Ok(matched + scan(&bytes[x - 1..], &bytes[y - 1..], cost))
    }

    fn space_words(&self) -> usize {
        // Vectors plus tau, n, p, b, seed and the verified flag.
        self.suffix_fps.len() + self.pow_tau.len() + 6
    }
}
