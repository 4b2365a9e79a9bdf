// SPDX-License-Identifier: Apache-2.0

use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong building or querying an index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Indexes are never built over an empty string.
    EmptyText,
    /// A 1-based position outside `1..=len`.
    PositionOutOfRange { pos: usize, len: usize },
    /// `tau` must satisfy `1 <= tau <= n`.
    InvalidPeriod { tau: usize, n: usize },
    /// A residue outside `0..tau`.
    ResidueOutOfRange { residue: usize, tau: usize },
    /// A candidate difference cover misses the difference `missing`.
    NotACover { tau: usize, missing: usize },
    /// The range `[start, start + len)` runs past the end of the text.
    RangeOverflow { start: usize, len: usize, n: usize },
    /// A byte other than 0 or 1 in a binary array.
    NonBinary { pos: usize, byte: u8 },
    /// No tau-good fingerprint function was found within the retry budget.
    RetryBudgetExhausted { attempts: u32 },
    /// The modulus is not an odd prime in the supported range.
    InvalidModulus(u64),
    /// The fingerprint base must lie in `1..p`.
    InvalidBase { base: u64, modulus: u64 },
    /// Explicit cross-index tables disagree with the strings they describe.
    InvalidCrossTable { entry: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::EmptyText => write!(f, "text must not be empty"),
            Error::PositionOutOfRange { pos, len } => {
                write!(f, "position {pos} is outside 1..={len}")
            }
            Error::InvalidPeriod { tau, n } => {
                write!(f, "period {tau} is outside 1..={n}")
            }
            Error::ResidueOutOfRange { residue, tau } => {
                write!(f, "residue {residue} is outside 0..{tau}")
            }
            Error::NotACover { tau, missing } => {
                write!(f, "not a difference cover modulo {tau}: difference {missing} is missing")
            }
            Error::RangeOverflow { start, len, n } => {
                write!(f, "range of length {len} at {start} overflows text of length {n}")
            }
            Error::NonBinary { pos, byte } => {
                write!(f, "byte {byte} at position {pos} is not 0 or 1")
            }
            Error::RetryBudgetExhausted { attempts } => {
                write!(f, "no tau-good fingerprint function found in {attempts} attempts")
            }
            Error::InvalidModulus(p) => write!(f, "unsupported modulus {p}"),
            Error::InvalidBase { base, modulus } => {
                write!(f, "base {base} is outside 1..{modulus}")
            }
            Error::InvalidCrossTable { entry } => {
                write!(f, "cross-index table entry {entry} is not a maximum")
            }
        }
    }
}

impl core::error::Error for Error {}
