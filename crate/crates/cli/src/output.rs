// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

use serde_json::Value;

use crate::cli::Format;
use crate::failure::Failure;

/// Writes records as JSON lines or as CSV rows under a header taken from the first record.
pub struct Emitter<W: Write> {
    sink: Sink<W>,
}

enum Sink<W: Write> {
    Json(W),
    Csv { writer: Box<csv::Writer<W>>, header_written: bool },
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        let sink = match format {
            Format::Json => Sink::Json(out),
            Format::Csv => Sink::Csv { writer: Box::new(csv::Writer::from_writer(out)), header_written: false },
        };
        Emitter { sink }
    }

    /// `record` must be a JSON object.
    pub fn emit(&mut self, record: Value) -> Result<(), Failure> {
        let Value::Object(fields) = record else {
            unreachable!("records are objects");
        };
        match &mut self.sink {
            Sink::Json(out) => {
                serde_json::to_writer(&mut *out, &fields).map_err(|e| Failure::Usage(format!("output: {e}")))?;
                out.write_all(b"\n")?;
            }
            Sink::Csv { writer, header_written } => {
                if !*header_written {
                    writer.write_record(fields.keys())?;
                    *header_written = true;
                }
                writer.write_record(fields.values().map(cell))?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<(), Failure> {
        match self.sink {
            Sink::Json(mut out) => out.flush()?,
            Sink::Csv { mut writer, .. } => writer.flush()?,
        }
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// Milliseconds rounded to microseconds, or null when timing is suppressed.
pub fn millis(no_timing: bool, d: std::time::Duration) -> Value {
    if no_timing {
        Value::Null
    } else {
        Value::from((d.as_secs_f64() * 1e6).round() / 1e3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn render(format: Format, records: &[Value]) -> String {
        let mut buf = Vec::new();
        let mut e = Emitter::new(format, &mut buf);
        for r in records {
            e.emit(r.clone()).unwrap();
        }
        e.finish().unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_lines_keep_field_order() {
        let out = render(Format::Json, &[json!({"z": 1, "a": null}), json!({"z": 2, "a": "x"})]);
        assert_eq!(out, "{\"z\":1,\"a\":null}\n{\"z\":2,\"a\":\"x\"}\n");
    }

    #[test]
    fn csv_has_one_header() {
        let out =
            render(Format::Csv, &[json!({"n": 1, "set": [1, 2], "t": null}), json!({"n": 2, "set": [], "t": 0.5})]);
        assert_eq!(out, "n,set,t\n1,1;2,\n2,,0.5\n");
    }

    #[test]
    fn timing_suppression() {
        assert_eq!(millis(true, std::time::Duration::from_millis(3)), Value::Null);
        assert_eq!(millis(false, std::time::Duration::from_micros(1500)), json!(1.5));
    }
}
