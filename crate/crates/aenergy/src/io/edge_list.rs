//! Plain edge lists: a header line `n m`, then `m` lines `u v` (0-based).
//! Blank lines and `#` comments are skipped.

use aenergy_core::Graph;

use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing `n m` header".into() })?;
    let [n, m] = pair(line, header)?;
    let mut edges = Vec::with_capacity(m.min(1 << 16));
    for (line, text) in lines {
        let [u, v] = pair(line, text)?;
        edges.push((u, v));
    }
    let g = Graph::new(n, edges)?;
    if g.size() != m {
        return Err(Error::EdgeCountMismatch { declared: m, found: g.size() });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let err = |message: String| Error::Parse { line, message };
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(format!("expected two integers, got `{text}`")));
    }
    let num = |t: &str| t.parse::<usize>().map_err(|e| err(format!("`{t}`: {e}")));
    Ok([num(tokens[0])?, num(tokens[1])?])
}
