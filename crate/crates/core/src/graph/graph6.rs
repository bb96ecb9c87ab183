//! graph6 encoding of undirected graphs.
//!
//! Layout: a size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes a single graph6 record (an optional `>>graph6<<` header is stripped).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut base = 0;
    let mut s = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base = HEADER.len();
    }
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b} outside [63, 126]")));
        }
    }
    let (n, body_start) = parse_size(bytes, base)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != nbytes {
        return Err(err(
            base + body_start,
            format!("expected {nbytes} body bytes for n = {n}, found {}", body.len()),
        ));
    }
    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - 63;
        (byte >> (5 - k % 6)) & 1 == 1
    };
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(err(base + body_start + k / 6, "nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

fn parse_size(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let read = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(err(base + bytes.len(), "truncated size prefix"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    match bytes.first() {
        None => Err(err(base, "empty record")),
        Some(&b) if b < 126 => Ok((usize::from(b - 63), 1)),
        Some(_) => {
            if bytes.get(1) == Some(&126) {
                let n = read(2, 6)?;
                if n < 258048 {
                    return Err(err(base, format!("non-canonical 8-byte size prefix for n = {n}")));
                }
                Ok((n, 8))
            } else {
                let n = read(1, 3)?;
                if n < 63 {
                    return Err(err(base, format!("non-canonical 4-byte size prefix for n = {n}")));
                }
                Ok((n, 4))
            }
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every non-empty line of a graph6 file.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let record = line.trim_end_matches(['\n', '\r']);
        if !record.is_empty() {
            out.push(parse_graph6(record).map_err(|e| match e {
                Error::Graph6 { offset: o, message } => Error::Graph6 {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    #[test]
    fn known_records() {
        assert_eq!(parse_graph6("A_").unwrap(), families::complete(2));
        assert_eq!(parse_graph6("Bw").unwrap(), families::complete(3));
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), families::complete(3));
        assert_eq!(write_graph6(&families::complete(2)), "A_");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        // 'A' promises one body byte
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A_x"), Err(Error::Graph6 { .. })));
        // K2 uses one bit; '`' sets a padding bit
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("B w"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn large_order_prefix() {
        let g = families::cycle(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn multi_line_offsets() {
        let gs = read_graph6_lines("A_\nBw\n\n").unwrap();
        assert_eq!(gs.len(), 2);
        match read_graph6_lines("A_\nB!\n") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}
