//! graph6 encoding and decoding.
//!
//! A graph6 line is a size field followed by the upper-triangle adjacency
//! bits read column by column — (0,1), (0,2), (1,2), (0,3), … — packed into
//! 6-bit groups, most significant bit first, each group stored as one
//! printable byte offset by 63. Sizes below 63 use a single byte `n + 63`;
//! sizes 63..=258047 use `~` followed by three bytes carrying 18 bits.
//! Trailing padding bits must be zero.

use super::{Graph, GraphError};

/// Optional file header; only valid at the very start of a file.
pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";

const OFFSET: u8 = 63;
const MAX_LONG_SIZE: usize = 258_047;

/// Decodes one graph6 line (an optional header prefix is stripped).
pub fn parse_graph6(text: &[u8]) -> Result<Graph, GraphError> {
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let text = trim_eol(text);
    if text.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    for &b in text {
        if !(OFFSET..=126).contains(&b) {
            return Err(GraphError::BadChar(b));
        }
    }
    let (n, payload) = decode_size(text)?;
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let needed = bit_count.div_ceil(6);
    if payload.len() < needed {
        return Err(GraphError::TruncatedPayload);
    }
    let payload = &payload[..needed];

    let mut adjacency = vec![Vec::new(); n];
    let mut bit_index = 0usize;
    let mut pairs = column_pairs(n);
    for &byte in payload {
        let group = byte - OFFSET;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if bit_index < bit_count {
                if bit == 1 {
                    let (i, j) = pairs.next().expect("pair iterator matches bit count");
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                } else {
                    pairs.next();
                }
            } else if bit == 1 {
                return Err(GraphError::NonzeroPadding);
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_adjacency(n, adjacency))
}

/// Encodes a graph as one graph6 line (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else {
        assert!(n <= MAX_LONG_SIZE, "graph too large for graph6");
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for (i, j) in column_pairs(n) {
        group <<= 1;
        if g.has_edge(i, j) {
            group |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(group + OFFSET);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(group + OFFSET);
    }
    out
}

/// Parses a whole graph6 file: one graph per line, optional header on the
/// first line only. Blank lines are skipped.
pub fn read_graph6_file(text: &[u8]) -> Result<Vec<Graph>, GraphError> {
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let mut graphs = Vec::new();
    for line in text.split(|&b| b == b'\n') {
        let line = trim_eol(line);
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line)?);
    }
    Ok(graphs)
}

fn trim_eol(mut line: &[u8]) -> &[u8] {
    while let Some((&last, rest)) = line.split_last() {
        if last == b'\n' || last == b'\r' {
            line = rest;
        } else {
            break;
        }
    }
    line
}

fn decode_size(text: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    match text[0] {
        126 => {
            if text.len() >= 2 && text[1] == 126 {
                // 8-byte size form (n > 258047) is out of scope.
                return Err(GraphError::UnsupportedSize(MAX_LONG_SIZE + 1));
            }
            if text.len() < 4 {
                return Err(GraphError::TruncatedPayload);
            }
            let n = (((text[1] - OFFSET) as usize) << 12)
                | (((text[2] - OFFSET) as usize) << 6)
                | ((text[3] - OFFSET) as usize);
            if n > MAX_LONG_SIZE {
                return Err(GraphError::UnsupportedSize(n));
            }
            Ok((n, &text[4..]))
        }
        b => Ok(((b - OFFSET) as usize, &text[1..])),
    }
}

/// Upper-triangle pairs in graph6 bit order: for each column j, rows 0..j.
fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn k4_is_c_tilde() {
        // All six upper-triangle bits set: 111111 -> 63, 63+63 = 126 = '~'.
        let k4 = FamilySpec::Complete { n: 4 }.generate().unwrap();
        assert_eq!(write_graph6(&k4), b"C~");
        assert_eq!(parse_graph6(b"C~").unwrap(), k4);
    }

    #[test]
    fn four_cycle_is_c_l() {
        // Edges {01,12,23,03} in column order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
        // give bits 101101 = 45, 45+63 = 108 = 'l'.
        let c4 = FamilySpec::Cycle { n: 4 }.generate().unwrap();
        assert_eq!(write_graph6(&c4), b"Cl");
        let parsed = parse_graph6(b"Cl").unwrap();
        assert_eq!(
            parsed.edges().collect::<Vec<_>>(),
            c4.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn single_vertex_is_at_sign() {
        let (g, _) = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(write_graph6(&g), b"@");
        assert_eq!(parse_graph6(b"@").unwrap(), g);
    }

    #[test]
    fn truncated_payload() {
        assert_eq!(
            parse_graph6(b"C").unwrap_err(),
            GraphError::TruncatedPayload
        );
    }

    #[test]
    fn bad_byte() {
        assert_eq!(parse_graph6(b"C\x1f").unwrap_err(), GraphError::BadChar(0x1f));
    }

    #[test]
    fn nonzero_padding() {
        // n=2 needs one payload bit; the remaining five must be zero.
        // 100001 = 33 -> byte 96 = '`'.
        assert_eq!(parse_graph6(b"A`").unwrap_err(), GraphError::NonzeroPadding);
        // 100000 = 32 -> byte 95 = '_' parses as K_2.
        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn header_stripped() {
        let k4 = FamilySpec::Complete { n: 4 }.generate().unwrap();
        assert_eq!(parse_graph6(b">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn long_size_round_trip() {
        let g = FamilySpec::Cycle { n: 100 }.generate().unwrap();
        let bytes = write_graph6(&g);
        assert_eq!(bytes[0], 126);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn file_with_header_and_blank_lines() {
        let text = b">>graph6<<\nC~\n\nCl\n";
        let graphs = read_graph6_file(text).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].edge_count(), 6);
        assert_eq!(graphs[1].edge_count(), 4);
    }
}
