// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use lce_core::Text;

use crate::failure::Failure;

pub fn load(path: &Path, strip_newline: bool) -> Result<Text, Failure> {
    let mut bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    if strip_newline && bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    Ok(Text::new(bytes))
}

/// Maps ASCII `0`/`1` to the bytes 0/1; raw 0/1 bytes pass through.
pub fn binary(text: &Text) -> Result<Text, Failure> {
    text.as_bytes()
        .iter()
        .enumerate()
        .map(|(p, &b)| match b {
            b'0' | 0 => Ok(0),
            b'1' | 1 => Ok(1),
            _ => Err(Failure::Usage(format!("byte {b:#04x} at position {} is not 0 or 1", p + 1))),
        })
        .collect::<Result<Vec<u8>, _>>()
        .map(Text::new)
}
