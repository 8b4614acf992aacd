//! JSON and text output, and input-file reading with usage errors.

use std::fmt;
use std::path::Path;

use anyhow::Context;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// An error in how the program was invoked (missing or unreadable input
/// file, malformed argument); the binary exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Pretty JSON with a trailing newline: the one byte-stable encoding used
/// by the CLI and the HTTP endpoints.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

/// Reads and parses a JSON file.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {}", path.display()))
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub fn emit_text(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Writes a value as pretty JSON to `out` or stdout.
pub fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> anyhow::Result<()> {
    emit_text(&to_pretty(value), out)
}
