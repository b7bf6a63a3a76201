//! graph6 reader and writer.
//!
//! Layout: size prefix `N(n)`, then the upper triangle of the adjacency
//! matrix column by column (`x01 x02 x12 x03 …`), six bits per byte,
//! each byte offset by 63. The last byte is zero padded.

use aenergy_core::Graph;

use crate::{Error, Result};

const BIAS: u8 = 63;

/// Accepts an optional `>>graph6<<` header and surrounding whitespace.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = read_size(bytes)?;
    let wide = n as u128 * n.saturating_sub(1) as u128 / 2;
    let need = wide.div_ceil(6);
    if body.len() as u128 != need {
        return Err(malformed(format!(
            "{n} vertices need {need} data bytes, found {}",
            body.len()
        )));
    }
    let (bits, need) = (wide as usize, need as usize);

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && (body[need - 1] - BIAS) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(malformed("nonzero padding bits".into()));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = size_prefix(n);
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        let k = v * (v - 1) / 2 + u;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(body.into_iter().map(|b| b + BIAS));
    String::from_utf8(out).expect("graph6 is ascii")
}

fn size_prefix(n: usize) -> Vec<u8> {
    let n = n as u64;
    let groups = |count: u32| (0..count).rev().map(move |i| ((n >> (6 * i)) & 63) as u8 + BIAS);
    if n <= 62 {
        vec![n as u8 + BIAS]
    } else if n <= 258_047 {
        std::iter::once(126).chain(groups(3)).collect()
    } else {
        [126, 126].into_iter().chain(groups(6)).collect()
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let fold = |b: &[u8]| b.iter().fold(0u64, |acc, &x| acc << 6 | (x - BIAS) as u64);
    match bytes {
        [] => Err(malformed("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((fold(&rest[..6]) as usize, &rest[6..])),
        [126, 126, ..] => Err(malformed("truncated 8-byte size".into())),
        [126, rest @ ..] if rest.len() >= 3 => Ok((fold(&rest[..3]) as usize, &rest[3..])),
        [126, ..] => Err(malformed("truncated 4-byte size".into())),
        [b, rest @ ..] => Ok(((b - BIAS) as usize, rest)),
    }
}

fn malformed(msg: String) -> Error {
    Error::MalformedGraph6(msg)
}
