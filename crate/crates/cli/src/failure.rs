// SPDX-License-Identifier: Apache-2.0

use std::fmt;

/// Why a command stopped; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable input, or an invalid request: exit 2.
    Usage(String),
    /// The verifier rejected every fingerprint function it tried: exit 1.
    Aborted(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Aborted(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Aborted(m) => f.write_str(m),
        }
    }
}

impl From<lce_core::Error> for Failure {
    fn from(e: lce_core::Error) -> Self {
        match e {
            lce_core::Error::RetryBudgetExhausted { .. } => Failure::Aborted(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}
