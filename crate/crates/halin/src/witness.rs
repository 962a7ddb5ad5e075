//! Thick-end witnesses: a header line, then one ray per line.
//!
//! ```text
//! witness k=2 r=1 R=4 root=0
//! ray 0 1 3 6 10
//! ray 2 4 7 11 16
//! ```

use halin_core::rays::{EndWitness, Ray};
use halin_core::VertexId;

use crate::{content_lines, parse_num, FormatError};

pub fn write_witness(w: &EndWitness) -> String {
    let mut out = format!("witness k={} r={} R={} root={}\n", w.rays.len(), w.equivalence_radius, w.radius, w.root);
    for ray in &w.rays {
        out.push_str("ray");
        for v in &ray.vertices {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_witness(text: &str) -> Result<EndWitness, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| FormatError::at(1, "empty witness"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("witness") {
        return Err(FormatError::at(line, "expected a witness header"));
    }
    let mut field = |key: &str| -> Result<u64, FormatError> {
        let token = words.next().unwrap_or_default();
        let value = token
            .strip_prefix(key)
            .and_then(|t| t.strip_prefix('='))
            .ok_or_else(|| FormatError::at(line, format!("expected {key}=<n>")))?;
        parse_num(line, value, key)
    };
    let k = field("k")? as usize;
    let r = field("r")?;
    let radius = field("R")?;
    let root = VertexId(field("root")?);
    let mut rays = Vec::new();
    for (line, l) in lines {
        let mut words = l.split_whitespace();
        if words.next() != Some("ray") {
            return Err(FormatError::at(line, "expected a 'ray' line"));
        }
        let vertices =
            words.map(|t| parse_num(line, t, "a vertex id").map(VertexId)).collect::<Result<Vec<_>, _>>()?;
        if vertices.is_empty() {
            return Err(FormatError::at(line, "empty ray"));
        }
        rays.push(Ray::frontier(vertices));
    }
    if rays.len() != k {
        return Err(FormatError::at(line, format!("header announces {k} rays, found {}", rays.len())));
    }
    Ok(EndWitness { root, rays, radius, equivalence_radius: r })
}
