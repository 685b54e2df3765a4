//! The two on-disk forms of a Cayley table.
//!
//! JSON: `{"elements": ["e","g"], "table": [[0,1],[1,0]]}`, rows indexed by
//! the left factor. Compact text: the order on the first line, then one row
//! of whitespace-separated indices per line, then an optional
//! `# names: e g` line. Writing either form and reading it back gives the
//! same semigroup, and the written text is a fixed point.

use std::io::Read;
use std::path::Path;

use sha2::{Digest, Sha256};
use subdirect_core::FiniteSemigroup;

use crate::error::{CliError, CliResult};

const NAMES_PREFIX: &str = "# names:";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Json,
    Text,
}

impl TableFormat {
    /// `.txt` and `.tbl` files use the compact form, everything else JSON.
    pub fn for_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("txt" | "tbl") => TableFormat::Text,
            _ => TableFormat::Json,
        }
    }

    pub fn sniff(text: &str) -> Self {
        if text.trim_start().starts_with('{') {
            TableFormat::Json
        } else {
            TableFormat::Text
        }
    }
}

pub fn to_json(s: &FiniteSemigroup) -> String {
    let mut out = String::from("{\"elements\": ");
    out.push_str(&serde_json::to_string(s.names()).expect("names serialize"));
    out.push_str(", \"table\": [");
    for (i, row) in s.rows().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&serde_json::to_string(row).expect("row serializes"));
    }
    out.push_str("]}\n");
    out
}

pub fn from_json(text: &str) -> CliResult<FiniteSemigroup> {
    serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
}

fn default_names(s: &FiniteSemigroup) -> bool {
    s.names().iter().enumerate().all(|(i, n)| *n == i.to_string())
}

pub fn to_text(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if !default_names(s) {
        out.push_str(NAMES_PREFIX);
        for name in s.names() {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> CliResult<FiniteSemigroup> {
    let bad = |msg: String| CliError::Document(msg);
    let mut names = None;
    let mut lines = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix(NAMES_PREFIX) {
            names = Some(rest.split_whitespace().map(String::from).collect::<Vec<_>>());
        } else if !line.is_empty() && !line.starts_with('#') {
            lines.push(line);
        }
    }
    let (first, rows) = lines.split_first().ok_or_else(|| bad("empty table".into()))?;
    let n: usize = first.parse().map_err(|_| bad(format!("expected the order, found {first:?}")))?;
    if rows.len() != n {
        return Err(bad(format!("expected {n} rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|c| c.parse::<usize>().map_err(|_| bad(format!("not an index: {c:?}"))))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    let names = names.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
    if names.len() != n {
        return Err(bad(format!("{} names for {n} elements", names.len())));
    }
    Ok(FiniteSemigroup::new(names, rows)?)
}

pub fn parse_table(text: &str) -> CliResult<FiniteSemigroup> {
    match TableFormat::sniff(text) {
        TableFormat::Json => from_json(text),
        TableFormat::Text => from_text(text),
    }
}

pub fn write_table(s: &FiniteSemigroup, format: TableFormat) -> String {
    match format {
        TableFormat::Json => to_json(s),
        TableFormat::Text => to_text(s),
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::io("<stdin>", e))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
    }
}

/// SHA-256 of the canonical JSON form, hex encoded.
pub fn table_digest(s: &FiniteSemigroup) -> String {
    hex_digest(to_json(s).as_bytes())
}

pub fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use subdirect_core::catalog;

    #[test]
    fn both_forms_round_trip() {
        for entry in catalog::entries() {
            let s = entry.semigroup;
            for format in [TableFormat::Json, TableFormat::Text] {
                let text = write_table(&s, format);
                let back = parse_table(&text).unwrap();
                assert_eq!(back, s, "{} {format:?}", entry.name);
                assert_eq!(write_table(&back, format), text);
            }
        }
    }

    #[test]
    fn text_form() {
        let s = from_text("2\n0 1\n1 0\n# names: e g\n").unwrap();
        assert_eq!(s, catalog::get("Z2").unwrap());
        assert_eq!(to_text(&s), "2\n0 1\n1 0\n# names: e g\n");
        let plain = from_text("2\n0 0\n0 1\n").unwrap();
        assert_eq!(to_text(&plain), "2\n0 0\n0 1\n");
        assert!(matches!(from_text("2\n0 1\n"), Err(CliError::Document(_))));
        assert!(matches!(from_text("2\n1 0\n0 0\n"), Err(CliError::Core(_))));
    }

    #[test]
    fn json_form() {
        let s = from_json(r#"{"elements": ["e","g"], "table": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(to_json(&s), "{\"elements\": [\"e\",\"g\"], \"table\": [[0,1], [1,0]]}\n");
        assert!(from_json(r#"{"elements": ["a"], "table": [[1]]}"#).is_err());
    }
}
