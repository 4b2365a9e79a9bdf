// SPDX-License-Identifier: Apache-2.0

//! LCE queries between a pattern `P` (length `m`) and a text `T` (length `n`).
//!
//! For every sampled text position `q * tau` the index keeps the longest
//! match `A[q]` of that text suffix against any pattern suffix, and a pattern
//! position `B[q]` achieving it. A query scans fewer than `tau` symbols to
//! reach a sampled position `j + k`, then
//!
//! ```text
//! LCE(i, j) = k + min(A[q], LCE_P(i + k, B[q])),   q = (j + k) / tau
//! ```
//!
//! using any single-string index over `P`. Both terms of the minimum are
//! needed: `P[i+k..]` may agree with `P[B[q]..]` for longer than `T[j+k..]`
//! does.

use alloc::vec;
use alloc::vec::Vec;

use crate::lce::scan;
use crate::rmq::SparseMin;
use crate::{
    build_verified_index, CostCounters, CrossLce, DcLceIndex, Error, FpLceIndex, FullLceOracle, LceIndex, NaiveLce,
    Result, Text,
};

/// Which single-string index answers the pattern-side LCE queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerKind {
    Naive,
    Dc { tau: usize },
    FpVerified { tau: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub enum InnerIndex<'p> {
    Naive(NaiveLce<'p>),
    Dc(DcLceIndex<'p>),
    Fp(FpLceIndex<'p>),
}

impl<'p> InnerIndex<'p> {
    pub fn build(pattern: &'p Text, kind: InnerKind) -> Result<Self> {
        Ok(match kind {
            InnerKind::Naive => InnerIndex::Naive(NaiveLce::new(pattern)),
            InnerKind::Dc { tau } => InnerIndex::Dc(DcLceIndex::build(pattern, tau)?),
            InnerKind::FpVerified { tau, seed } => InnerIndex::Fp(build_verified_index(pattern, tau, seed)?.index),
        })
    }
}

impl LceIndex for InnerIndex<'_> {
    fn text_len(&self) -> usize {
        match self {
            InnerIndex::Naive(x) => x.text_len(),
            InnerIndex::Dc(x) => x.text_len(),
            InnerIndex::Fp(x) => x.text_len(),
        }
    }

    fn lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        match self {
            InnerIndex::Naive(x) => x.lce_with(i, j, cost),
            InnerIndex::Dc(x) => x.lce_with(i, j, cost),
            InnerIndex::Fp(x) => x.lce_with(i, j, cost),
        }
    }

    fn space_words(&self) -> usize {
        match self {
            InnerIndex::Naive(x) => x.space_words(),
            InnerIndex::Dc(x) => x.space_words(),
            InnerIndex::Fp(x) => x.space_words(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossIndex<'a> {
    pattern: &'a Text,
    text: &'a Text,
    tau: usize,
    // best[q - 1] = A[q], argmax[q - 1] = B[q] for 1 <= q <= n / tau.
    best: Vec<u32>,
    argmax: Vec<u32>,
    inner: InnerIndex<'a>,
}

impl<'a> CrossIndex<'a> {
    pub fn build(pattern: &'a Text, text: &'a Text, tau: usize, inner: InnerKind) -> Result<Self> {
        pattern.check_nonempty()?;
        text.check_period(tau)?;
        let (best, argmax) = cross_tables(pattern, text, tau);
        Ok(CrossIndex { pattern, text, tau, best, argmax, inner: InnerIndex::build(pattern, inner)? })
    }

    /// Builds from caller-supplied `A` and `B` (1-based entries, `A[q]` at
    /// index `q - 1`). `A` must hold the true maxima and every `B[q]` must
    /// achieve `A[q]`; ties need not follow the smallest-position rule.
    pub fn with_tables(
        pattern: &'a Text,
        text: &'a Text,
        tau: usize,
        best: Vec<u32>,
        argmax: Vec<u32>,
        inner: InnerKind,
    ) -> Result<Self> {
        pattern.check_nonempty()?;
        text.check_period(tau)?;
        let (expect, _) = cross_tables(pattern, text, tau);
        if best.len() != expect.len() || argmax.len() != expect.len() {
            return Err(Error::InvalidCrossTable { entry: best.len().min(argmax.len()) + 1 });
        }
        for q in 1..=expect.len() {
            let b = argmax[q - 1] as usize;
            let achieved = (1..=pattern.len()).contains(&b)
                && scan(pattern.suffix(b), text.suffix(q * tau), &mut CostCounters::default()) as u32 == best[q - 1];
            if best[q - 1] != expect[q - 1] || !achieved {
                return Err(Error::InvalidCrossTable { entry: q });
            }
        }
        Ok(CrossIndex { pattern, text, tau, best, argmax, inner: InnerIndex::build(pattern, inner)? })
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    /// `A[1..=n/tau]`.
    pub fn best(&self) -> &[u32] {
        &self.best
    }

    /// `B[1..=n/tau]`.
    pub fn argmax(&self) -> &[u32] {
        &self.argmax
    }

    pub fn inner(&self) -> &InnerIndex<'a> {
        &self.inner
    }

    pub fn space_words(&self) -> usize {
        self.best.len() + self.argmax.len() + 1 + self.inner.space_words()
    }
}

impl CrossLce for CrossIndex<'_> {
    fn pattern_len(&self) -> usize {
        self.pattern.len()
    }

    fn text_len(&self) -> usize {
        self.text.len()
    }

    fn cross_lce_with(&self, i: usize, j: usize, cost: &mut CostCounters) -> Result<usize> {
        self.pattern.check_pos(i)?;
        self.text.check_pos(j)?;
        let (m, n) = (self.pattern.len(), self.text.len());
        let (p, t) = (self.pattern.as_bytes(), self.text.as_bytes());
        let mut k = 0;
        loop {
            let (a, b) = (i + k, j + k);
            if a > m || b > n {
                return Ok(k);
            }
            if b % self.tau == 0 {
                let q = b / self.tau;
                let rest = self.inner.lce_with(a, self.argmax[q - 1] as usize, cost)?;
                return Ok(k + rest.min(self.best[q - 1] as usize));
            }
            cost.char_comparisons += 1;
            if p[a - 1] != t[b - 1] {
                return Ok(k);
            }
            k += 1;
        }
    }
}

/// `A` and `B` from one full suffix index over `P # T` with an out-of-band `#`.
///
/// The pattern suffixes sharing the longest prefix with a text suffix form a
/// rank interval around it; `B` takes the smallest pattern position there.
pub fn cross_tables(pattern: &Text, text: &Text, tau: usize) -> (Vec<u32>, Vec<u32>) {
    let (m, n) = (pattern.len(), text.len());
    let count = n / tau;
    if count == 0 {
        return (Vec::new(), Vec::new());
    }
    let symbols: Vec<u16> = pattern
        .as_bytes()
        .iter()
        .map(|&c| c as u16)
        .chain(core::iter::once(256))
        .chain(text.as_bytes().iter().map(|&c| c as u16))
        .collect();
    let oracle = FullLceOracle::from_symbols(&symbols);
    let total = symbols.len();

    // Nearest pattern suffix at or before / at or after every rank.
    let is_pattern = |r: usize| oracle.suffix_at_rank(r) < m;
    let mut before = vec![None; total];
    let mut after = vec![None; total];
    for r in 0..total {
        before[r] = if is_pattern(r) { Some(r) } else { r.checked_sub(1).and_then(|x| before[x]) };
    }
    for r in (0..total).rev() {
        after[r] = if is_pattern(r) { Some(r) } else { after.get(r + 1).copied().flatten() };
    }
    let pattern_pos: Vec<u32> =
        (0..total).map(|r| if is_pattern(r) { oracle.suffix_at_rank(r) as u32 } else { u32::MAX }).collect();
    let min_pos = SparseMin::new(&pattern_pos);

    let mut best = Vec::with_capacity(count);
    let mut argmax = Vec::with_capacity(count);
    for q in 1..=count {
        let rt = oracle.rank_of(m + q * tau);
        let lce_to = |r: usize| oracle.lce_between_ranks(r.min(rt), r.max(rt));
        let a = before[rt].map_or(0, lce_to).max(after[rt].map_or(0, lce_to));
        let b = if a == 0 {
            0
        } else {
            // Widest rank interval around rt whose suffixes share a prefix of length a.
            let (mut lo, mut hi) = (0, rt);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if lce_to(mid) >= a {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            let first = lo;
            let (mut lo, mut hi) = (rt, total - 1);
            while lo < hi {
                let mid = (lo + hi).div_ceil(2);
                if lce_to(mid) >= a {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            min_pos.min(first, lo + 1) as usize
        };
        best.push(a as u32);
        argmax.push(b as u32 + 1);
    }
    (best, argmax)
}

/// `A` and `B` by trying every pattern suffix against every sampled text suffix.
pub fn cross_tables_naive(pattern: &Text, text: &Text, tau: usize) -> (Vec<u32>, Vec<u32>) {
    let mut cost = CostCounters::default();
    (1..=text.len() / tau)
        .map(|q| {
            let mut best = (0, 1);
            for j in 1..=pattern.len() {
                let l = scan(pattern.suffix(j), text.suffix(q * tau), &mut cost) as u32;
                if l > best.0 {
                    best = (l, j as u32);
                }
            }
            best
        })
        .unzip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::NaiveCross;
    use proptest::prelude::*;

    const P: &str = "dbcaabcabcaabcac";
    // T[13..=19] = "bcaabcd": the query (2, 13) follows P[2..] for 6 symbols.
    const T: &str = "cacbdbcabcaabcaabcdb";

    #[test]
    fn tables_match_brute_force() {
        let (p, t) = (Text::from(P), Text::from(T));
        assert_eq!(t.len(), 20);
        let idx = CrossIndex::build(&p, &t, 5, InnerKind::Naive).unwrap();
        let (a, b) = cross_tables_naive(&p, &t, 5);
        assert_eq!(idx.best(), a);
        assert_eq!(idx.argmax(), b);
        assert_eq!(idx.best()[2], 4);
        assert_eq!(idx.argmax()[2], 4);
    }

    #[test]
    fn worked_query_takes_the_minimum() {
        let (p, t) = (Text::from(P), Text::from(T));
        let built = CrossIndex::build(&p, &t, 5, InnerKind::Naive).unwrap();
        // Position 11 ties with 4 for A[3]; using it makes the pattern-side LCE exceed A[3].
        let mut argmax = built.argmax().to_vec();
        argmax[2] = 11;
        let idx = CrossIndex::with_tables(&p, &t, 5, built.best().to_vec(), argmax, InnerKind::Dc { tau: 5 }).unwrap();
        let mut inner_cost = CostCounters::default();
        assert_eq!(idx.inner().lce_with(4, 11, &mut inner_cost).unwrap(), 5);
        assert_eq!(idx.best()[2], 4);
        let mut c = CostCounters::default();
        assert_eq!(idx.cross_lce_with(2, 13, &mut c).unwrap(), 6);
        // Two symbols scanned to reach position 15, then one inner query.
        assert_eq!(c.char_comparisons, 2 + inner_cost.char_comparisons);
        assert_eq!(NaiveCross::new(&p, &t).cross_lce(2, 13).unwrap(), 6);
        assert_eq!(without_min(&idx, 2, 13), 7);
    }

    #[test]
    fn with_tables_rejects_non_maxima() {
        let (p, t) = (Text::from(P), Text::from(T));
        let built = CrossIndex::build(&p, &t, 5, InnerKind::Naive).unwrap();
        let mut best = built.best().to_vec();
        best[2] = 3;
        let r = CrossIndex::with_tables(&p, &t, 5, best, built.argmax().to_vec(), InnerKind::Naive);
        assert_eq!(r.unwrap_err(), Error::InvalidCrossTable { entry: 3 });
        let mut argmax = built.argmax().to_vec();
        argmax[2] = 1;
        let r = CrossIndex::with_tables(&p, &t, 5, built.best().to_vec(), argmax, InnerKind::Naive);
        assert_eq!(r.unwrap_err(), Error::InvalidCrossTable { entry: 3 });
    }

    #[test]
    fn self_match_dominates() {
        let t = Text::from("abracadabra");
        let idx = CrossIndex::build(&t, &t, 1, InnerKind::Naive).unwrap();
        for q in 1..=t.len() {
            assert_eq!(idx.best()[q - 1] as usize, t.len() - q + 1);
            let b = idx.argmax()[q - 1] as usize;
            assert_eq!(scan(t.suffix(b), t.suffix(q), &mut CostCounters::default()), t.len() - q + 1);
        }
    }

    #[test]
    fn disjoint_alphabets() {
        let (p, t) = (Text::from("zzzz"), Text::from("aaaaaaaaaaaa"));
        let idx = CrossIndex::build(&p, &t, 3, InnerKind::Naive).unwrap();
        assert_eq!(idx.best(), [0, 0, 0, 0]);
        assert_eq!(idx.argmax(), [1, 1, 1, 1]);
        let mut c = CostCounters::default();
        assert_eq!(idx.cross_lce_with(1, 1, &mut c).unwrap(), 0);
        assert_eq!(c.char_comparisons, 1);
    }

    #[test]
    fn small_example() {
        let (p, t) = (Text::from("abaab"), Text::from("aabab"));
        let idx = CrossIndex::build(&p, &t, 2, InnerKind::Naive).unwrap();
        assert_eq!(idx.cross_lce(1, 2).unwrap(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        let (p, t) = (Text::from("ab"), Text::from("abc"));
        assert_eq!(CrossIndex::build(&Text::from(""), &t, 1, InnerKind::Naive).unwrap_err(), Error::EmptyText);
        assert!(CrossIndex::build(&p, &Text::from(""), 1, InnerKind::Naive).is_err());
        assert!(CrossIndex::build(&p, &t, 4, InnerKind::Naive).is_err());
        assert!(CrossIndex::build(&p, &t, 1, InnerKind::Dc { tau: 3 }).is_err());
        let idx = CrossIndex::build(&p, &t, 1, InnerKind::Naive).unwrap();
        assert!(idx.cross_lce(3, 1).is_err());
        assert!(idx.cross_lce(1, 4).is_err());
    }

    // The query formula with the minimum dropped: wrong whenever B's suffix
    // follows P[i + k..] further than the text does.
    fn without_min(idx: &CrossIndex<'_>, i: usize, j: usize) -> usize {
        let mut c = CostCounters::default();
        let mut k = 0;
        while !(j + k).is_multiple_of(idx.tau) && i + k <= idx.pattern.len() && j + k <= idx.text.len() {
            if idx.pattern.at(i + k) != idx.text.at(j + k) {
                return k;
            }
            k += 1;
        }
        let q = (j + k) / idx.tau;
        k + idx.inner.lce_with(i + k, idx.argmax[q - 1] as usize, &mut c).unwrap()
    }

    proptest! {
        #[test]
        fn matches_naive_cross_scan(
            p in proptest::collection::vec(0u8..2, 1..24),
            t in proptest::collection::vec(0u8..2, 1..60),
            tau_seed in 0usize..5,
        ) {
            let (p, t) = (Text::new(p), Text::new(t));
            let tau = [1, 2, 3, 5, 8][tau_seed].min(t.len());
            let inner = if p.len() >= 2 { InnerKind::Dc { tau: 2 } } else { InnerKind::Naive };
            let idx = CrossIndex::build(&p, &t, tau, inner).unwrap();
            let (a, b) = cross_tables_naive(&p, &t, tau);
            prop_assert_eq!(idx.best(), &a[..]);
            prop_assert_eq!(idx.argmax(), &b[..]);
            let naive = NaiveCross::new(&p, &t);
            for i in 1..=p.len() {
                for j in 1..=t.len() {
                    let mut c = CostCounters::default();
                    prop_assert_eq!(idx.cross_lce_with(i, j, &mut c).unwrap(), naive.cross_lce(i, j).unwrap());
                }
            }
        }
    }
}
