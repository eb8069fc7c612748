//! Edge-list and graph6 text formats.
//!
//! Edge lists: a header line `n m` followed by `m` lines `u v` (0-based).
//! Blank lines and text after `#` are ignored; a file may hold several
//! records back to back. graph6 follows the standard six-bit encoding, one
//! graph per line, with an optional `>>graph6<<` header.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn significant(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn two_numbers(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, format!("expected {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("`{tok}` is not a non-negative integer")))
    };
    let a = next("two integers")?;
    let b = next("two integers")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

/// Every edge-list record in `text`.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = significant(text);
    let mut out = Vec::new();
    while let Some((hline, header)) = lines.next() {
        let (n, m) = two_numbers(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let (line, body) = lines.next().ok_or_else(|| {
                parse_err(
                    hline,
                    format!("header promises {m} edges but only {k} follow"),
                )
            })?;
            let (u, v) = two_numbers(line, body)?;
            if u >= n || v >= n {
                return Err(parse_err(
                    line,
                    format!("vertex out of range 0..{n} in edge ({u}, {v})"),
                ));
            }
            if u == v {
                return Err(parse_err(line, format!("self-loop at vertex {u}")));
            }
            edges.push((u, v));
        }
        let g =
            Graph::new(n, edges.iter().copied()).map_err(|e| parse_err(hline, e.to_string()))?;
        if g.size() != m {
            return Err(parse_err(hline, "duplicate edges in record"));
        }
        out.push(g);
    }
    Ok(out)
}

/// Exactly one edge-list record.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut gs = parse_edge_lists(text)?;
    match gs.len() {
        1 => Ok(gs.remove(0)),
        0 => Err(parse_err(1, "no graph found")),
        k => Err(parse_err(1, format!("expected one graph, found {k}"))),
    }
}

/// Header plus one line per edge, edges sorted.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
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
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut bits = vec![false; n * n.saturating_sub(1) / 2];
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for &(u, v) in g.edges() {
        bits[v * (v - 1) / 2 + u] = true;
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_graph6(line_no: usize, s: &str) -> Result<Graph> {
    let bytes = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(
            line_no,
            format!("byte {b} is outside the graph6 range 63..=126"),
        ));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes {
        [] => return Err(parse_err(line_no, "empty graph6 string")),
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(parse_err(line_no, "truncated graph6 size"));
            }
            (
                tail[..6].iter().fold(0, |acc, &b| (acc << 6) | val(b)),
                &tail[6..],
            )
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(parse_err(line_no, "truncated graph6 size"));
            }
            (
                tail[..3].iter().fold(0, |acc, &b| (acc << 6) | val(b)),
                &tail[3..],
            )
        }
        [b, tail @ ..] => (val(*b), tail),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if rest.len() != need {
        return Err(parse_err(
            line_no,
            format!(
                "graph6 body has {} bytes, {need} expected for {n} vertices",
                rest.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if (val(rest[idx / 6]) >> (5 - idx % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    if pairs % 6 != 0 && val(rest[need - 1]) & ((1 << (6 - pairs % 6)) - 1) != 0 {
        return Err(parse_err(line_no, "non-zero padding bits in graph6 body"));
    }
    Graph::new(n, edges).map_err(|e| parse_err(line_no, e.to_string()))
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    decode_graph6(1, s.trim())
}

/// One graph per non-blank line; a leading header is allowed on any line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != HEADER)
        .map(|(i, l)| decode_graph6(i + 1, l.trim()))
        .collect()
}

/// Graph6 when every significant line looks like graph6, else edge lists.
pub fn parse_any(text: &str) -> Result<Vec<Graph>> {
    let looks_g6 = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .all(|l| {
            l.starts_with(HEADER)
                || (!l.contains(' ') && !l.starts_with('#') && l.parse::<usize>().is_err())
        });
    if looks_g6 {
        parse_graph6_lines(text)
    } else {
        parse_edge_lists(text)
    }
}
