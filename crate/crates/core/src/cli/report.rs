//! Versioned JSON envelope for every command's output.

use std::io;

use serde::{Deserialize, Serialize};

pub const TOOL_NAME: &str = "gftcheck";
pub const SCHEMA_VERSION: u32 = 1;

/// Report envelope: tool identity, the full parameter echo, and the payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile<P, R> {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    pub command: String,
    pub params: P,
    pub report: R,
}

impl<P, R> ReportFile<P, R> {
    pub fn new(command: &str, params: P, report: R) -> Self {
        Self {
            tool: TOOL_NAME.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            params,
            report,
        }
    }
}

/// Compact JSON with every float written to 17 significant digits.
struct SeventeenDigits;

impl serde_json::ser::Formatter for SeventeenDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SeventeenDigits);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out).expect("serde_json emits UTF-8"))
}
