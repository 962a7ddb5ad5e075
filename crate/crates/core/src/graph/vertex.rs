use core::fmt;

/// Integer-coded vertex.
///
/// Coordinate families encode `(i, j)` with the Cantor pairing [`pair`], so
/// ids are stable across runs and across the file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for VertexId {
    fn from(id: u64) -> Self {
        VertexId(id)
    }
}

/// Cantor pairing `(i, j) -> (i + j)(i + j + 1)/2 + j`. `None` on overflow.
pub fn pair(i: u64, j: u64) -> Option<u64> {
    let s = i.checked_add(j)?;
    let tri = if s % 2 == 0 {
        (s / 2).checked_mul(s.checked_add(1)?)?
    } else {
        s.checked_mul(s.div_ceil(2))?
    };
    tri.checked_add(j)
}

/// Inverse of [`pair`].
pub fn unpair(z: u64) -> (u64, u64) {
    // largest s with s(s+1)/2 <= z
    let mut s = ((8u128 * z as u128 + 1).isqrt() as u64 - 1) / 2;
    while tri(s + 1).is_some_and(|t| t <= z) {
        s += 1;
    }
    while tri(s).is_none_or(|t| t > z) {
        s -= 1;
    }
    let j = z - tri(s).unwrap_or(0);
    (s - j, j)
}

fn tri(s: u64) -> Option<u64> {
    let v = (s as u128) * (s as u128 + 1) / 2;
    u64::try_from(v).ok()
}
