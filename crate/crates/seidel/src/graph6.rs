//! graph6 encoding and decoding, bit-exact per the standard format:
//! header-less printable bytes offset by 63, upper-triangle bits in column
//! order packed big-endian into 6-bit groups, zero padding.

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_VERTEX_CAP};

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        // 63 <= n <= 258047: '~' then 18 bits in three 6-bit groups.
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 line under the default vertex cap.
pub fn decode(line: &str) -> Result<Graph> {
    decode_with_cap(line, DEFAULT_VERTEX_CAP)
}

/// Decodes a graph6 line, rejecting graphs on more than `cap` vertices.
pub fn decode_with_cap(line: &str, cap: usize) -> Result<Graph> {
    let line = line.trim();
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 line".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!(
                "invalid graph6 byte {b:#04x}; bytes must lie in 63..=126"
            )));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Parse(
                "graph6 sizes above 258047 are not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::Parse(
            "graph6 line encodes a graph on 0 vertices".into(),
        ));
    }
    if n > cap {
        return Err(Error::Resource(format!(
            "graph on {n} vertices exceeds the vertex cap {cap}"
        )));
    }
    let nbits = n * (n - 1) / 2;
    let expect = pos + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Parse(format!(
            "graph6 line for {n} vertices must be {expect} bytes, found {}",
            bytes.len()
        )));
    }
    let mut g = Graph::edgeless(n)?;
    let mut group = 0u8;
    let mut left = 0u8;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                group = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if group & 0x20 != 0 {
                g.toggle_edge(i, j);
            }
            group <<= 1;
            left -= 1;
        }
    }
    // Remaining padding bits of the final group must be zero.
    if group & (((1u16 << left) - 1) as u8) << (6 - left) != 0 {
        return Err(Error::Parse("nonzero padding bits in graph6 line".into()));
    }
    Ok(g)
}
