//! graph6 codec.
//!
//! A record is the order prefix followed by the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte (most significant first) and offset by 63.
//! Orders up to 62 use one prefix byte `n + 63`; orders 63..=258047 use
//! byte 126 followed by three sextets.

use alloc::vec::Vec;

use crate::graph::{Graph, MAX_ORDER};
use crate::Graph6Error;

pub const HEADER: &[u8] = b">>graph6<<";

/// Largest order expressible with the 4-byte size prefix.
pub const MAX_G6_ORDER: usize = 258_047;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    /// Reject nonzero padding bits and non-canonical size prefixes.
    pub strict: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { strict: true }
    }
}

/// Parses one record in strict mode.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    parse_graph6_with(line, ParseOptions::default())
}

pub fn parse_graph6_with(line: &[u8], opts: ParseOptions) -> Result<Graph, Graph6Error> {
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::MalformedByte {
            offset: base + pos,
            byte: body[pos],
        });
    }

    let (n, rest) = if body[0] == 126 {
        if body.get(1) == Some(&126) {
            // 8-byte prefix, orders beyond 258047
            return Err(Graph6Error::UnsupportedOrder(MAX_G6_ORDER + 1));
        }
        if body.len() < 4 {
            return Err(Graph6Error::Length {
                n: 0,
                expected: 4,
                found: body.len(),
            });
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if opts.strict && n < 63 {
            return Err(Graph6Error::NonCanonicalSize(n));
        }
        (n, &body[4..])
    } else {
        ((body[0] - 63) as usize, &body[1..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: rest.len(),
        });
    }
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let pad = expected * 6 - bits;
    if opts.strict && pad > 0 && (rest[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }

    let mut rows = [0u64; MAX_ORDER];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let sextet = rest[k / 6] - 63;
            if (sextet >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(&rows[..n]).expect("order already validated"))
}

/// Canonical graph6 bytes for `g`, without header or newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].iter().map(|&s| s as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn small_records() {
        assert_eq!(parse_graph6(b"Bw").unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6(b"B?").unwrap(), Graph::empty(3).unwrap());
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), b"@");
        assert_eq!(write_graph6(&complete(3).unwrap()), b"Bw");
        // edges 0-1 and 1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40 -> 'g'
        assert_eq!(write_graph6(&path(3).unwrap()), b"Bg");
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(b">>graph6<<Bw").unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6(b">>graph6<<"), Err(Graph6Error::Empty));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b"B "),
            Err(Graph6Error::MalformedByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            parse_graph6(b">>graph6<<B\n"),
            Err(Graph6Error::MalformedByte { offset: 11, byte: b'\n' })
        );
        assert!(matches!(parse_graph6(b"C"), Err(Graph6Error::Length { n: 4, expected: 1, found: 0 })));
        assert!(matches!(parse_graph6(b"Bww"), Err(Graph6Error::Length { .. })));
        // 'x' = 120 -> 111001: the trailing pad bits are nonzero
        assert_eq!(parse_graph6(b"Bx"), Err(Graph6Error::Padding));
        let lenient = ParseOptions { strict: false };
        assert_eq!(parse_graph6_with(b"Bx", lenient).unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::UnsupportedOrder(0)));
    }

    #[test]
    fn extended_size_prefix() {
        let prefixes: [(usize, &[u8]); 3] = [(62, &[125]), (63, &[126, 63, 63, 126]), (64, &[126, 63, 64, 63])];
        for (n, prefix) in prefixes {
            let g = path(n).unwrap();
            let text = write_graph6(&g);
            assert!(text.starts_with(prefix), "n={n}");
            assert_eq!(parse_graph6(&text).unwrap(), g);
        }
        // n = 65 is valid graph6 but exceeds the supported order
        let mut rec = alloc::vec![126u8, 63, 64, 64];
        rec.extend(core::iter::repeat_n(63u8, (65 * 64 / 2usize).div_ceil(6)));
        assert_eq!(parse_graph6(&rec), Err(Graph6Error::UnsupportedOrder(65)));
        // extended form for a small order is non-canonical
        assert_eq!(parse_graph6(b"~??Bw"), Err(Graph6Error::NonCanonicalSize(3)));
    }

    #[test]
    fn edge_count_is_popcount() {
        let g = crate::graph::kite(9, 4).unwrap();
        let text = write_graph6(&g);
        let ones: u32 = text[1..].iter().map(|b| (b - 63).count_ones()).sum();
        assert_eq!(ones as usize, g.edge_count());
    }
}
