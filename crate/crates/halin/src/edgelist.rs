//! Edge lists: one `u v` pair of decimal ids per line, `#` comments.
//!
//! The canonical form lists every edge once with the smaller id first, in
//! increasing numeric order of the pairs, without comments.

use std::collections::BTreeSet;

use halin_core::{FiniteGraph, VertexId};

use crate::{content_lines, parse_num, FormatError};

pub fn parse_edge_list(text: &str) -> Result<FiniteGraph, FormatError> {
    let mut g = FiniteGraph::new();
    let mut seen = BTreeSet::new();
    for (line, l) in content_lines(text) {
        let parts: Vec<&str> = l.split(' ').collect();
        if parts.len() != 2 {
            return Err(FormatError::at(line, "expected two ids separated by one space"));
        }
        let u: u64 = parse_num(line, parts[0], "a vertex id")?;
        let v: u64 = parse_num(line, parts[1], "a vertex id")?;
        if u == v {
            return Err(FormatError::at(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::at(line, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(VertexId(u), VertexId(v));
    }
    Ok(g)
}

pub fn write_edge_list(g: &FiniteGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u.0, v.0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = "0 1\n0 2\n1 10\n2 3\n";
        assert_eq!(write_edge_list(&parse_edge_list(text).unwrap()), text);
    }

    #[test]
    fn comments_and_orientation() {
        let g = parse_edge_list("# header\n5 2\n\n2 1\n").unwrap();
        assert_eq!(write_edge_list(&g), "1 2\n2 5\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("3 3\n").unwrap_err().to_string(), "line 1: loop at vertex 3");
        assert_eq!(parse_edge_list("# c\n1 2\n2 1\n").unwrap_err().to_string(), "line 3: duplicate edge 2 1");
        assert!(matches!(parse_edge_list("1  2\n"), Err(FormatError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("1 x\n"), Err(FormatError::Parse { line: 1, .. })));
    }
}
