//! Graphviz export.

use halin_core::{FiniteGraph, VertexId};

/// Undirected DOT text. Vertices are labelled `(i,j)` when `coords` knows
/// them and by id otherwise.
pub fn to_dot(g: &FiniteGraph, coords: impl Fn(VertexId) -> Option<(u64, u64)>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match coords(v) {
            Some((i, j)) => out.push_str(&format!("  {v} [label=\"({i},{j})\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use halin_core::{hex_prefix, HexPrefixSpec};

    #[test]
    fn small_prefix() {
        let g = hex_prefix(HexPrefixSpec::new(2, 3).unwrap());
        let dot = to_dot(&g, |v| Some(halin_core::graph::unpair(v.0)));
        assert_eq!(dot.matches("label=").count(), 6);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("  0 [label=\"(0,0)\"];\n"));
        assert!(dot.starts_with("graph G {\n") && dot.ends_with("}\n"));
    }
}
