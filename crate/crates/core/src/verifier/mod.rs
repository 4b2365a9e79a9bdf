// SPDX-License-Identifier: Apache-2.0

//! Deciding whether a fingerprint function is tau-good on a text.
//!
//! `phi` is tau-good on `T` when, for every level `l`, every block start
//! `j * tau` and every position `i`, the width-`tau * 2^l` windows at
//! `j * tau` and `i` have equal fingerprints exactly when they are equal
//! strings. Every fingerprint comparison made by [`FpLceIndex`] compares such
//! a pair, so an index over a tau-good function answers every query exactly.
//!
//! [`verify_tau_good`] checks the property level by level in `O(n log n)`
//! expected time: block fingerprints go into a dictionary (leftmost
//! representative per value) and a sliding window looks every window up.
//! A hit at level `l > 0` is confirmed through the two half-width
//! fingerprints, which the previous level already certified; at level 0 an
//! Aho-Corasick automaton over the representative blocks confirms it.

mod aho_corasick;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use aho_corasick::{AcAutomaton, AcState};

use crate::{Error, FingerprintFn, FpLceIndex, Modulus, Result, Text};

/// A violated triple: the window at `i` and the block at `block * tau` have
/// equal fingerprints at width `tau * 2^level` but differ as strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub block: usize,
    pub level: u32,
    pub tau: usize,
}

impl Witness {
    pub fn block_start(&self) -> usize {
        self.block * self.tau
    }

    pub fn width(&self) -> usize {
        self.tau << self.level
    }

    /// Re-checks the violation directly: equal fingerprints, different strings.
    pub fn confirms(&self, text: &Text, func: &FingerprintFn) -> bool {
        let (s, w) = (self.block_start(), self.width());
        if s == 0 || self.i == 0 || s + w > text.len() + 1 || self.i + w > text.len() + 1 {
            return false;
        }
        let block = &text.as_bytes()[s - 1..s - 1 + w];
        let window = &text.as_bytes()[self.i - 1..self.i - 1 + w];
        block != window && func.fp_direct(block) == func.fp_direct(window)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Aborted(Witness),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Accepted => None,
            Verdict::Aborted(w) => Some(w),
        }
    }
}

// A fingerprint of a fixed-width window that slides one symbol at a time.
#[derive(Debug, Clone)]
struct Window {
    func: FingerprintFn,
    inv_base: u64,
    top: u64,
    width: usize,
    fp: u64,
}

impl Window {
    // The window T[start..start + width) over 0-based offsets.
    fn new(func: FingerprintFn, bytes: &[u8], start: usize, width: usize) -> Self {
        let m = func.modulus();
        Window {
            func,
            inv_base: m.inverse(func.base()),
            top: func.power(width as u64),
            width,
            fp: func.fp_direct(&bytes[start..start + width]),
        }
    }

    // Moves from T[s..s+w) to T[s+1..s+w+1).
    #[inline]
    fn slide(&mut self, leaving: u8, entering: u8) {
        let m = self.func.modulus();
        let p = m.value();
        let dropped = m.sub(self.fp, m.mul(leaving as u64 % p, self.func.base()));
        self.fp = m.add(m.mul(dropped, self.inv_base), m.mul(entering as u64 % p, self.top));
    }
}

// f, L and R for every window start, produced in order.
struct Slider<'a> {
    bytes: &'a [u8],
    next: usize,
    last: usize,
    full: Window,
    halves: Option<(Window, Window)>,
}

impl<'a> Slider<'a> {
    fn new(func: FingerprintFn, bytes: &'a [u8], width: usize, level: u32) -> Self {
        let halves = (level > 0).then(|| {
            let half = width / 2;
            (Window::new(func, bytes, 0, half), Window::new(func, bytes, half, half))
        });
        Slider { bytes, next: 1, last: bytes.len() - width + 1, full: Window::new(func, bytes, 0, width), halves }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Fingerprints {
    full: u64,
    left: u64,
    right: u64,
}

impl Iterator for Slider<'_> {
    // (1-based start, fingerprints of the window and its halves)
    type Item = (usize, Fingerprints);

    fn next(&mut self) -> Option<Self::Item> {
        let i = self.next;
        if i > self.last {
            return None;
        }
        if i > 1 {
            let b = self.bytes;
            let w = self.full.width;
            self.full.slide(b[i - 2], b[i + w - 2]);
            if let Some((left, right)) = &mut self.halves {
                let h = left.width;
                left.slide(b[i - 2], b[i + h - 2]);
                right.slide(b[i + h - 2], b[i + w - 2]);
            }
        }
        self.next += 1;
        let (left, right) = self.halves.as_ref().map_or((0, 0), |(l, r)| (l.fp, r.fp));
        Some((i, Fingerprints { full: self.full.fp, left, right }))
    }
}

#[derive(Debug, Clone, Copy)]
struct Representative {
    halves: (u64, u64),
    block: usize,
}

type Dictionary = BTreeMap<u64, Representative>;

// Leftmost representative of every distinct block fingerprint at one level,
// plus the representative blocks themselves at level 0.
fn representatives<'b>(
    func: &FingerprintFn,
    bytes: &'b [u8],
    tau: usize,
    level: u32,
) -> (Dictionary, Vec<(u32, &'b [u8])>) {
    let width = tau << level;
    let mut dict = BTreeMap::new();
    let mut patterns = Vec::new();
    for (start, fps) in Slider::new(*func, bytes, width, level).filter(|&(s, _)| s % tau == 0) {
        let block = start / tau;
        dict.entry(fps.full).or_insert_with(|| {
            if level == 0 {
                patterns.push((block as u32, &bytes[start - 1..start - 1 + width]));
            }
            Representative { halves: (fps.left, fps.right), block }
        });
    }
    (dict, patterns)
}

/// Runs the level-by-level tau-goodness check; aborts at the first collision found.
pub fn verify_tau_good(text: &Text, tau: usize, func: &FingerprintFn) -> Result<Verdict> {
    text.check_period(tau)?;
    let n = text.len();
    let bytes = text.as_bytes();

    let mut level = 0u32;
    while tau << level <= n {
        let width = tau << level;

        let (dict, patterns) = representatives(func, bytes, tau, level);
        if dict.is_empty() {
            break;
        }

        let automaton = (level == 0).then(|| AcAutomaton::new(patterns));
        let mut state = match &automaton {
            Some(ac) => ac.feed(ac.start(), &bytes[..tau - 1]),
            None => AcState::ROOT,
        };
        for (i, fps) in Slider::new(*func, bytes, width, level) {
            if let Some(ac) = &automaton {
                // After this the automaton has read T[..=i + tau - 1].
                state = ac.step(state, bytes[i + tau - 2]);
            }
            let Some(rep) = dict.get(&fps.full) else { continue };
            let collision = match &automaton {
                Some(ac) => ac.longest_match(state) != Some(rep.block as u32),
                None => (fps.left, fps.right) != rep.halves,
            };
            if collision {
                return Ok(Verdict::Aborted(Witness { i, block: rep.block, level, tau }));
            }
        }
        level += 1;
    }
    Ok(Verdict::Accepted)
}

/// Checks tau-goodness by enumerating every `(i, j, l)` triple and comparing
/// substrings literally. Cubic-class; a test oracle for small texts.
pub fn brute_force_tau_good(text: &Text, tau: usize, func: &FingerprintFn) -> bool {
    let n = text.len();
    let bytes = text.as_bytes();
    let mut width = tau;
    while tau > 0 && width <= n {
        let fps: Vec<u64> = (0..=n - width).map(|s| func.fp_direct(&bytes[s..s + width])).collect();
        let mut start = tau;
        while start + width <= n + 1 {
            let block = &bytes[start - 1..start - 1 + width];
            for i in 1..=n - width + 1 {
                let same_fp = fps[start - 1] == fps[i - 1];
                let same_str = block == &bytes[i - 1..i - 1 + width];
                if same_fp != same_str {
                    return false;
                }
            }
            start += tau;
        }
        width *= 2;
    }
    true
}

/// A verified index and how many fingerprint functions were drawn to get it.
#[derive(Debug, Clone)]
pub struct VerifiedBuild<'t> {
    pub index: FpLceIndex<'t>,
    pub attempts: u32,
    /// Witnesses that rejected the earlier draws.
    pub rejected: Vec<Witness>,
}

pub const DEFAULT_RETRY_BUDGET: u32 = 16;

/// Draws fingerprint functions modulo 2^61 - 1 until one is tau-good.
pub fn build_verified_index(text: &Text, tau: usize, seed: u64) -> Result<VerifiedBuild<'_>> {
    build_verified_index_with(text, tau, seed, Modulus::MERSENNE_61, DEFAULT_RETRY_BUDGET)
}

/// The fingerprint functions tried, in order, by [`build_verified_index_with`].
pub fn fingerprint_draws(modulus: Modulus, seed: u64) -> impl Iterator<Item = FingerprintFn> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    core::iter::repeat_with(move || FingerprintFn::draw(modulus, seed, &mut rng))
}

pub fn build_verified_index_with(
    text: &Text,
    tau: usize,
    seed: u64,
    modulus: Modulus,
    budget: u32,
) -> Result<VerifiedBuild<'_>> {
    text.check_period(tau)?;
    let mut rejected = Vec::new();
    for (attempt, func) in (1..=budget).zip(fingerprint_draws(modulus, seed)) {
        match verify_tau_good(text, tau, &func)? {
            Verdict::Accepted => {
                let mut index = FpLceIndex::build(text, tau, func)?;
                index.mark_verified();
                return Ok(VerifiedBuild { index, attempts: attempt, rejected });
            }
            Verdict::Aborted(w) => rejected.push(w),
        }
    }
    Err(Error::RetryBudgetExhausted { attempts: budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{naive_lce, CostCounters, LceIndex};
    use rand::Rng;

    fn random_text(rng: &mut ChaCha8Rng, n: usize, sigma: u8) -> Text {
        Text::new((0..n).map(|_| rng.gen_range(0..sigma)).collect::<Vec<_>>())
    }

    #[test]
    fn sliding_values_match_direct_fingerprints() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = random_text(&mut rng, 90, 4);
        let f = FingerprintFn::random(Modulus::SMALL, 3);
        for (width, level) in [(1, 0), (6, 1), (8, 2), (32, 3)] {
            for (i, fps) in Slider::new(f, t.as_bytes(), width, level) {
                let b = t.as_bytes();
                assert_eq!(fps.full, f.fp_direct(&b[i - 1..i - 1 + width]));
                if level > 0 {
                    let h = width / 2;
                    assert_eq!(fps.left, f.fp_direct(&b[i - 1..i - 1 + h]));
                    assert_eq!(fps.right, f.fp_direct(&b[i - 1 + h..i - 1 + width]));
                }
            }
        }
    }

    #[test]
    fn unary_text_is_always_good() {
        let t = Text::new([b'a'; 64]);
        for seed in 0..10 {
            let f = FingerprintFn::random(Modulus::SMALL, seed);
            assert_eq!(verify_tau_good(&t, 4, &f).unwrap(), Verdict::Accepted);
            assert!(brute_force_tau_good(&t, 4, &f));
        }
        let built = build_verified_index_with(&t, 4, 99, Modulus::SMALL, 1).unwrap();
        assert_eq!(built.attempts, 1);
    }

    #[test]
    fn small_modulus_aborts_with_genuine_witnesses() {
        let mut aborted = 0;
        for seed in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let t = random_text(&mut rng, 128, 4);
            let f = FingerprintFn::random(Modulus::SMALL, seed);
            let verdict = verify_tau_good(&t, 4, &f).unwrap();
            assert_eq!(verdict.is_accepted(), brute_force_tau_good(&t, 4, &f));
            if let Verdict::Aborted(w) = verdict {
                aborted += 1;
                assert!(w.confirms(&t, &f), "{w:?}");
            }
        }
        assert!(aborted > 25, "only {aborted} of 50 aborted");
    }

    #[test]
    fn agrees_with_brute_force() {
        for tau in [1, 2, 3, 4, 5, 8] {
            for seed in 0..30 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed * 31 + tau as u64);
                let n = rng.gen_range(tau..100);
                let sigma = [2, 4, 26][seed as usize % 3];
                let t = random_text(&mut rng, n, sigma);
                let f = FingerprintFn::random(Modulus::SMALL, seed);
                let verdict = verify_tau_good(&t, tau, &f).unwrap();
                assert_eq!(verdict.is_accepted(), brute_force_tau_good(&t, tau, &f), "tau={tau} seed={seed} n={n}");
                if let Some(w) = verdict.witness() {
                    assert!(w.confirms(&t, &f));
                }
            }
        }
    }

    #[test]
    fn representative_is_leftmost_block() {
        // Blocks at 2, 4, 6, 8, 10 read "xa", "bz", "za", "bz", "zy".
        let t = Text::from("xxabzzabzzyy");
        let f = FingerprintFn::random(Modulus::MERSENNE_61, 1);
        let (dict, patterns) = representatives(&f, t.as_bytes(), 2, 0);
        assert_eq!(dict.len(), 4);
        assert_eq!(dict[&f.fp_direct(b"bz")].block, 2);
        let ids: Vec<u32> = patterns.iter().map(|&(id, _)| id).collect();
        assert_eq!(ids, [1, 2, 3, 5]);

        let (dict, patterns) = representatives(&f, t.as_bytes(), 2, 1);
        assert!(patterns.is_empty());
        let rep = dict[&f.fp_direct(b"bzza")];
        assert_eq!(rep.block, 2);
        assert_eq!(rep.halves, (f.fp_direct(b"bz"), f.fp_direct(b"za")));
    }

    #[test]
    fn verified_index_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = random_text(&mut rng, 200, 2);
        for tau in [1, 3, 8, 14] {
            let built = build_verified_index(&t, tau, tau as u64).unwrap();
            assert!(built.index.is_verified());
            assert_eq!(built.attempts, 1);
            for i in 1..=t.len() {
                for j in 1..=t.len() {
                    let expect = naive_lce(&t, i, j, &mut CostCounters::default()).unwrap();
                    assert_eq!(built.index.lce(i, j).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn retry_budget_exhaustion_is_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let t = random_text(&mut rng, 256, 26);
        let result = build_verified_index_with(&t, 1, 3, Modulus::SMALL, 2);
        assert_eq!(result.unwrap_err(), Error::RetryBudgetExhausted { attempts: 2 });
    }

    #[test]
    fn rejects_bad_period() {
        let t = Text::from("abc");
        let f = FingerprintFn::random(Modulus::SMALL, 1);
        assert!(verify_tau_good(&t, 4, &f).is_err());
        assert!(verify_tau_good(&t, 0, &f).is_err());
    }
}
