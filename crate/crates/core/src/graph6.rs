//! graph6 codec.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed six bits per
//! byte, most significant bit first, each byte offset by 63. Orders above 62
//! use the four-byte form `126, n₁₇…₁₂, n₁₁…₆, n₅…₀`.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("truncated input: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing bytes")]
    Trailing(usize),
    #[error("sparse6 and digraph6 inputs are not supported")]
    Unsupported,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes `g` as graph6 bytes (no header, no trailing newline).
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
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

pub fn encode_string(g: &Graph) -> String {
    // every byte is in 63..=126
    String::from_utf8(encode(g)).expect("graph6 is ASCII")
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = data {
        data = rest;
    }
    let base = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    match data.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') | Some(b'&') | Some(b';') => return Err(Graph6Error::Unsupported),
        _ => {}
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte {
                byte: b,
                offset: base + i,
            });
        }
    }
    let (n, body) = if data[0] == 126 {
        if data.len() >= 2 && data[1] == 126 {
            // eight-byte form, only meaningful for n >= 258048
            if data.len() < 8 {
                return Err(Graph6Error::Truncated {
                    expected: 8,
                    found: data.len(),
                });
            }
            let n = data[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &data[8..])
        } else {
            if data.len() < 4 {
                return Err(Graph6Error::Truncated {
                    expected: 4,
                    found: data.len(),
                });
            }
            let n = data[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &data[4..])
        }
    } else {
        ((data[0] - 63) as usize, &data[1..])
    };
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Graph6Error::Truncated {
            expected: data.len() - body.len() + need,
            found: data.len(),
        });
    }
    if body.len() > need {
        return Err(Graph6Error::Trailing(body.len() - need));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_encodings() {
        assert_eq!(encode_string(&Graph::complete(1).unwrap()), "@");
        assert_eq!(encode_string(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode_string(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(encode_string(&Graph::empty(0).unwrap()), "?");
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_string(&g), "DQc");
    }

    #[test]
    fn long_form_header() {
        let g = Graph::from_edges(100, &[(0, 99), (17, 64)]).unwrap();
        let enc = encode(&g);
        assert_eq!(&enc[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(decode(&enc).unwrap(), g);
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = decode(b">>graph6<<A_\n").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        assert_eq!(decode(b"DQc\r\n").unwrap().edge_count(), 4);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(b""), Err(Graph6Error::Empty));
        assert_eq!(decode(b"A "), Err(Graph6Error::BadByte { byte: b' ', offset: 1 }));
        assert!(matches!(decode(b"D"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(decode(b"~?"), Err(Graph6Error::Truncated { .. })));
        assert_eq!(decode(b"A__"), Err(Graph6Error::Trailing(1)));
        assert_eq!(decode(b":Fa@x^"), Err(Graph6Error::Unsupported));
        // n = 600 in the four-byte form
        let big = [126u8, 63, 63 + 9, 63 + 24];
        assert_eq!(decode(&big), Err(Graph6Error::Graph(GraphError::OrderTooLarge(600))));
    }
}
