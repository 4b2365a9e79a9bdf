// SPDX-License-Identifier: Apache-2.0

//! Longest common extension (LCE) indexes with a tunable time-space trade-off.
//!
//! Every index answers `LCE(i, j)`, the length of the longest common prefix of
//! the suffixes of a text starting at 1-based positions `i` and `j`. The
//! structures differ in how much they store next to the (read-only) text:
//!
//! * [`DcLceIndex`] samples suffixes through a difference cover modulo `tau`
//!   and answers deterministically after at most `tau` character comparisons.
//! * [`FpLceIndex`] stores one Rabin-Karp fingerprint per `tau`-block and
//!   answers by exponential then descending search over block fingerprints.
//!   Queries are correct with high probability, or always once the
//!   fingerprint function passed [`verifier::verify_tau_good`].
//! * [`CrossIndex`] answers LCE queries between a pattern and a text using
//!   `O(n / tau)` words plus any single-string index over the pattern.
//!
//! The [`apps`] module drives approximate matching, maximal palindromes,
//! tandem repeats and binary range-minimum queries purely through LCE
//! queries, so every index above can power them.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod apps;
pub mod cost;
pub mod dc_index;
pub mod diff_cover;
mod error;
pub mod fingerprint;
pub mod fp_index;
pub mod lce;
pub mod oracle;
pub mod rmq;
pub mod text;
pub mod two_string;
pub mod verifier;

pub use cost::CostCounters;
pub use dc_index::DcLceIndex;
pub use diff_cover::DifferenceCover;
pub use error::{Error, Result};
pub use fingerprint::{FingerprintFn, Modulus};
pub use fp_index::FpLceIndex;
pub use lce::{ConcatCross, CrossLce, LceIndex, NaiveCross};
pub use oracle::{naive_lce, FullLceOracle, NaiveLce};
pub use text::Text;
pub use two_string::{CrossIndex, InnerKind};
pub use verifier::{build_verified_index, verify_tau_good, Verdict, VerifiedBuild};
