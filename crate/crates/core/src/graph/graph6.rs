//! The short form of the graph6 format (order below 63).
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read column by column, `(0,1), (0,2), (1,2), (0,3), ..`, padded with
//! zeros to a multiple of six bits, and each group of six bits (most
//! significant first) is emitted as `value + 63`.

use super::Graph;
use crate::{Error, Result};

const BIAS: u8 = 63;
const MAX_SHORT_ORDER: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(
            1,
            format!("byte {} at offset {pos} is outside [63, 126]", bytes[pos]),
        ));
    }
    let Some(&first) = bytes.first() else {
        return Err(Error::parse(1, "empty graph6 word"));
    };
    if first == 126 {
        return Err(Error::UnsupportedEncoding(
            "graph6 orders >= 63 (extended form) are not supported".into(),
        ));
    }
    let n = (first - BIAS) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let payload = &bytes[1..];
    let expected = pairs.div_ceil(6);
    if payload.len() < expected {
        return Err(Error::parse(
            1,
            format!(
                "truncated payload: {} bytes for order {n}, expected {expected}",
                payload.len()
            ),
        ));
    }
    if payload.len() > expected {
        return Err(Error::parse(
            1,
            format!(
                "trailing data: {} bytes for order {n}, expected {expected}",
                payload.len()
            ),
        ));
    }

    let bit = |k: usize| (payload[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::UnsupportedEncoding(format!(
            "graph6 short form holds orders up to {MAX_SHORT_ORDER}, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + BIAS);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
