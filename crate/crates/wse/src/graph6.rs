//! graph6 text codec.
//!
//! One graph per line. The leading byte(s) encode the vertex count n
//! (`n + 63` for n <= 62, or `126` followed by three bytes carrying 18 bits
//! for larger n), then the upper triangle of the adjacency matrix packed
//! column-major — bit order (0,1), (0,2), (1,2), (0,3), ... — six bits per
//! byte, each byte offset by 63, zero-padded to a byte boundary.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const EXTENDED: u8 = 126;
/// Optional prefix some tools emit before the first value.
const HEADER: &str = ">>graph6<<";

/// Upper-triangle positions in graph6 bit order.
fn triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|col| (0..col).map(move |row| (row, col)))
}

/// Parses one graph6 line. A `>>graph6<<` prefix and trailing `\n`/`\r\n`
/// are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches('\n').trim_end_matches('\r');
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedHeader {
            reason: "empty line".into(),
        });
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=EXTENDED).contains(&byte) {
            return Err(Error::IllegalCharacter { byte, offset });
        }
    }

    let (n, data) = decode_order(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            n,
            max: MAX_VERTICES,
        });
    }

    let bit_count = n * (n - 1) / 2;
    let want = bit_count.div_ceil(6);
    if data.len() != want {
        return Err(Error::TruncatedBits {
            reason: format!(
                "expected {} data bytes for n={}, found {}",
                want,
                n,
                data.len()
            ),
        });
    }

    let mut adj = vec![0u64; n];
    let mut positions = triangle(n);
    for &byte in data {
        let chunk = byte - OFFSET;
        for bit in 0..6 {
            let set = chunk & (0x20 >> bit) != 0;
            match positions.next() {
                Some((row, col)) => {
                    if set {
                        adj[row] |= 1 << col;
                        adj[col] |= 1 << row;
                    }
                }
                // Past the last real bit: padding must be zero, or the line
                // is not a canonical encoding of any graph.
                None => {
                    if set {
                        return Err(Error::TruncatedBits {
                            reason: "nonzero padding bits".into(),
                        });
                    }
                }
            }
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Writes the canonical graph6 encoding of `g` under its current labeling.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        // 18-bit extended form; n <= MAX_VERTICES keeps it in range.
        out.push(EXTENDED);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }

    let mut chunk = 0u8;
    let mut filled = 0u8;
    for (row, col) in triangle(n) {
        chunk <<= 1;
        if g.has_edge(row, col) {
            chunk |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(chunk + OFFSET);
            chunk = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Splits the size header off and returns `(n, payload bytes)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != EXTENDED {
        return Ok(((bytes[0] - OFFSET) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == EXTENDED {
        // 36-bit form: any such n is far beyond the bitrow ceiling.
        return Err(Error::GraphTooLarge {
            n: usize::MAX,
            max: MAX_VERTICES,
        });
    }
    if bytes.len() < 4 {
        return Err(Error::MalformedHeader {
            reason: "extended size form needs three bytes after '~'".into(),
        });
    }
    let n = (((bytes[1] - OFFSET) as usize) << 12)
        | (((bytes[2] - OFFSET) as usize) << 6)
        | ((bytes[3] - OFFSET) as usize);
    if n <= 62 {
        return Err(Error::MalformedHeader {
            reason: format!("extended size form used for n={n}, which has a short form"),
        });
    }
    Ok((n, &bytes[4..]))
}
