// SPDX-License-Identifier: Apache-2.0

//! Algorithms that touch their input only through LCE queries.
//!
//! Each driver is generic over [`LceIndex`](crate::LceIndex) or
//! [`CrossLce`](crate::CrossLce), so any index in the crate can power it,
//! and each comes with a brute-force oracle for testing.

mod matching;
mod palindromes;
mod rmq;
mod tandem;

pub use matching::{approximate_matches_dp, landau_vishkin, MatchReport};
pub use palindromes::{maximal_palindromes, palindromes_by_expansion, PalindromeReport};
pub use rmq::{rmq_via_lce, BinaryRmq};
pub use tandem::{squares_brute_force, tandem_repeats, SquareReport};
