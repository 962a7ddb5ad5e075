//! Embedding certificates.
//!
//! ```text
//! hexprefix cols=2 depth=3
//! b 0 0 <id>
//! ...
//! p 0 0 0 1 : <id> <id> ...
//! ```
//!
//! Branch lines come in pattern-vertex order, path lines in pattern-edge
//! order, and each path is listed from the image of its first vertex.

use std::collections::BTreeMap;

use halin_core::disjoint_paths::Path;
use halin_core::verify::Embedding;
use halin_core::{HexPrefixSpec, VertexId};

use crate::{content_lines, parse_num, FormatError};

pub fn write_certificate(emb: &Embedding) -> String {
    let mut emb = emb.clone();
    emb.canonicalize();
    let mut out = format!("hexprefix cols={} depth={}\n", emb.pattern.cols, emb.pattern.depth);
    for (&(i, j), v) in &emb.branch {
        out.push_str(&format!("b {i} {j} {v}\n"));
    }
    for (&((i, j), (k, l)), path) in &emb.edge_paths {
        out.push_str(&format!("p {i} {j} {k} {l} :"));
        for v in path.iter() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

fn header_field(line: usize, token: Option<&str>, key: &str) -> Result<u32, FormatError> {
    let token = token.ok_or_else(|| FormatError::at(line, format!("missing {key}=")))?;
    let value = token.strip_prefix(key).and_then(|t| t.strip_prefix('=')).ok_or_else(|| {
        FormatError::at(line, format!("expected {key}=<n>, found {token:?}"))
    })?;
    parse_num(line, value, key)
}

pub fn parse_certificate(text: &str) -> Result<Embedding, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| FormatError::at(1, "empty certificate"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("hexprefix") {
        return Err(FormatError::at(line, "expected a hexprefix header"));
    }
    let cols = header_field(line, words.next(), "cols")?;
    let depth = header_field(line, words.next(), "depth")?;
    let pattern = HexPrefixSpec::new(cols, depth).map_err(|e| FormatError::at(line, e.to_string()))?;
    let mut branch = BTreeMap::new();
    let mut edge_paths = BTreeMap::new();
    for (line, l) in lines {
        let mut words = l.split_whitespace();
        match words.next() {
            Some("b") => {
                let nums: Vec<&str> = words.collect();
                if nums.len() != 3 {
                    return Err(FormatError::at(line, "expected b <i> <j> <id>"));
                }
                let i = parse_num(line, nums[0], "a column")?;
                let j = parse_num(line, nums[1], "a row")?;
                let v = VertexId(parse_num(line, nums[2], "a vertex id")?);
                if branch.insert((i, j), v).is_some() {
                    return Err(FormatError::at(line, format!("second image for ({i},{j})")));
                }
            }
            Some("p") => {
                let (head, tail) = l[1..].split_once(':').ok_or_else(|| FormatError::at(line, "missing ':'"))?;
                let nums: Vec<&str> = head.split_whitespace().collect();
                if nums.len() != 4 {
                    return Err(FormatError::at(line, "expected p <i> <j> <i'> <j'> : <ids>"));
                }
                let mut c = [0u32; 4];
                for (slot, token) in c.iter_mut().zip(&nums) {
                    *slot = parse_num(line, token, "a coordinate")?;
                }
                let path = tail
                    .split_whitespace()
                    .map(|t| parse_num(line, t, "a vertex id").map(VertexId))
                    .collect::<Result<Vec<_>, _>>()?;
                if edge_paths.insert(((c[0], c[1]), (c[2], c[3])), Path(path)).is_some() {
                    return Err(FormatError::at(line, "second path for the same edge"));
                }
            }
            _ => return Err(FormatError::at(line, "expected a 'b' or 'p' line")),
        }
    }
    Ok(Embedding { pattern, branch, edge_paths })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "hexprefix cols=1 depth=3\nb 0 0 0\nb 0 1 2\nb 0 2 5\np 0 0 0 1 : 0 2\np 0 1 0 2 : 2 7 5\n";

    #[test]
    fn round_trip_is_bit_exact() {
        let emb = parse_certificate(SMALL).unwrap();
        assert_eq!(emb.edge_paths[&((0, 1), (0, 2))], Path(vec![VertexId(2), VertexId(7), VertexId(5)]));
        assert_eq!(write_certificate(&emb), SMALL);
    }

    #[test]
    fn reversed_paths_are_written_canonically() {
        let emb = parse_certificate(&SMALL.replace(": 2 7 5", ": 5 7 2")).unwrap();
        assert_eq!(write_certificate(&emb), SMALL);
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_certificate("hexprefix cols=0 depth=2\n"), Err(FormatError::Parse { line: 1, .. })));
        assert!(matches!(parse_certificate("hexprefix cols=1 depth=2\nq\n"), Err(FormatError::Parse { line: 2, .. })));
        assert!(matches!(
            parse_certificate("hexprefix cols=1 depth=2\np 0 0 0 1 0 2\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
    }
}
