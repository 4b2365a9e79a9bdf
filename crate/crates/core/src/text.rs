// SPDX-License-Identifier: Apache-2.0

//! The immutable byte string every index queries into.

use alloc::vec::Vec;

use crate::{Error, Result};

/// An immutable byte string addressed with 1-based positions `1..=n`.
///
/// The text is input, not index state: no index counts it in its space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text { bytes: bytes.into() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The symbol at 1-based position `pos`. Panics when out of range.
    #[inline]
    pub fn at(&self, pos: usize) -> u8 {
        self.bytes[pos - 1]
    }

    /// The suffix starting at 1-based position `pos`; empty when `pos == n + 1`.
    #[inline]
    pub fn suffix(&self, pos: usize) -> &[u8] {
        &self.bytes[pos - 1..]
    }

    pub fn reversed(&self) -> Text {
        let mut bytes = self.bytes.clone();
        bytes.reverse();
        Text { bytes }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Text) -> Text {
        let mut bytes = Vec::with_capacity(self.len() + other.len());
        bytes.extend_from_slice(&self.bytes);
        bytes.extend_from_slice(&other.bytes);
        Text { bytes }
    }

    pub(crate) fn check_pos(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.len() {
            return Err(Error::PositionOutOfRange { pos, len: self.len() });
        }
        Ok(())
    }

    pub(crate) fn check_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(())
    }

    pub(crate) fn check_period(&self, tau: usize) -> Result<()> {
        self.check_nonempty()?;
        if tau == 0 || tau > self.len() {
            return Err(Error::InvalidPeriod { tau, n: self.len() });
        }
        Ok(())
    }
}

impl From<&[u8]> for Text {
    fn from(bytes: &[u8]) -> Self {
        Text::new(bytes)
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes())
    }
}

impl From<Vec<u8>> for Text {
    fn from(bytes: Vec<u8>) -> Self {
        Text::new(bytes)
    }
}

/// Reverses a text; applying it twice is the identity.
pub fn reverse_text(text: &Text) -> Text {
    text.reversed()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse_text(&"abc".into()), Text::from("cba"));
        assert_eq!(reverse_text(&"".into()), Text::from(""));
        assert_eq!(reverse_text(&"abacaba".into()), Text::from("abacaba"));
    }

    #[test]
    fn positions_are_one_based() {
        let t = Text::from("xyz");
        assert_eq!(t.at(1), b'x');
        assert_eq!(t.suffix(3), b"z");
        assert!(t.suffix(4).is_empty());
        assert!(t.check_pos(0).is_err());
        assert!(t.check_pos(4).is_err());
        assert!(t.check_pos(3).is_ok());
    }

    #[test]
    fn period_validation() {
        let t = Text::from("abcd");
        assert_eq!(t.check_period(0), Err(Error::InvalidPeriod { tau: 0, n: 4 }));
        assert_eq!(t.check_period(5), Err(Error::InvalidPeriod { tau: 5, n: 4 }));
        assert!(t.check_period(4).is_ok());
        assert_eq!(Text::from("").check_period(1), Err(Error::EmptyText));
    }
}
