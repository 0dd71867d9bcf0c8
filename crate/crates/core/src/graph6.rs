//! graph6 encoding of simple graphs.
//!
//! The header gives the vertex count (one byte `63 + n` for `n <= 62`, or
//! `~` followed by three 6-bit bytes up to 258047). The upper triangle of the
//! adjacency matrix follows in column-major order, `x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`, packed six bits per byte with an offset of 63.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

const MAX_SHORT: usize = 62;
const MAX_LONG: usize = 258_047;

/// Decodes one graph6 line. Edges come out in column-major upper-triangle
/// order, which is the order the bits appear in.
pub fn parse_graph6(line: &str) -> Result<Multigraph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Malformed(format!(
            "graph6: byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Malformed("graph6: empty string".into())),
        [126, 126, ..] => {
            return Err(Error::Malformed(
                "graph6: vertex counts above 258047 are not supported".into(),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Malformed("graph6: truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - 63), rest),
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Malformed(format!(
            "graph6: {n} vertices need {expected} data bytes, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for k in bit_count..expected * 6 {
        if bit(k) {
            return Err(Error::Malformed("graph6: nonzero padding bits".into()));
        }
    }
    Multigraph::new(n, edges)
}

/// Encodes a simple graph. Loops and parallel edges cannot be represented.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Precondition(
            "graph6 can only encode simple graphs".into(),
        ));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + 63);
    } else if n <= MAX_LONG {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Error::Precondition(format!(
            "graph6: {n} vertices exceeds {MAX_LONG}"
        )));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; bit_count.div_ceil(6) * 6];
    for &(u, v) in g.edges() {
        let (i, j) = (u.min(v), u.max(v));
        bits[j * (j - 1) / 2 + i] = true;
    }
    for chunk in bits.chunks(6) {
        let byte = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | u8::from(b));
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_vector() {
        let g = Multigraph::new(5, vec![(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        let back = parse_graph6("DQc").unwrap();
        assert_eq!(back.vertex_count(), 5);
        let mut edges = back.edges().to_vec();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn triangle_and_trivial_graphs() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
        assert_eq!(parse_graph6("@").unwrap().vertex_count(), 1);
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), k3);
    }

    #[test]
    fn long_header_round_trip() {
        let n = 70;
        let edges = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Multigraph::new(n, edges).unwrap();
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("B x").is_err());
        // 'B' + 3 bits; the low padding bits must be zero
        assert!(parse_graph6("Bx").is_err());
        let looped = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert!(to_graph6(&looped).is_err());
    }
}
