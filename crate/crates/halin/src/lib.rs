//! File formats, DOT export and atomic file output for `halin-core`.
//!
//! All text formats are line based, UTF-8 and deterministic: writing a value
//! twice gives identical bytes, and parsing what was written gives the value
//! back.

pub mod certificate;
pub mod dot;
pub mod edgelist;
pub mod report;
pub mod witness;

use std::io::Write;
use std::path::Path;

pub use halin_core;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] halin_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl FormatError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError::Parse { line, message: message.into() }
    }
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(n, l)| (n + 1, l.trim_end_matches('\r'))).filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token.parse().map_err(|_| FormatError::at(line, format!("expected {what}, found {token:?}")))
}
