//! Graph ingestion: graph6, DIMACS and plain edge lists.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// graph6 encoding of `g`, without a trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + BIAS);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let val = |b: &[u8]| b.iter().fold(0usize, |acc, &x| acc << 6 | (x - BIAS) as usize);
    match bytes {
        [] => Err(Error::Graph6Empty),
        [LONG, LONG, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6BadSize);
            }
            let n = val(&rest[..6]);
            if n <= 258_047 {
                return Err(Error::Graph6BadSize);
            }
            Ok((n, 8))
        }
        [LONG, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6BadSize);
            }
            let n = val(&rest[..3]);
            if n <= 62 {
                return Err(Error::Graph6BadSize);
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
    }
}

/// Decode one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let mut bytes = input.strip_prefix(b">>graph6<<").unwrap_or(input);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Error::Graph6Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=LONG).contains(&b))
    {
        return Err(Error::Graph6NonPrintable { offset, byte });
    }
    let (n, skip) = decode_size(bytes)?;
    let data = &bytes[skip..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6Length {
            expected,
            found: data.len(),
        });
    }
    if nbits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6TrailingBits);
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Every non-empty line of a graph6 file.
pub fn parse_graph6_lines(input: &[u8]) -> Result<Vec<Graph>> {
    input
        .split(|&b| b == b'\n')
        .map(|l| l.strip_suffix(b"\r").unwrap_or(l))
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

fn malformed(line: usize, msg: impl Into<String>) -> Error {
    Error::MalformedLine {
        line,
        msg: msg.into(),
    }
}

fn lines(input: &[u8]) -> Result<Vec<(usize, String)>> {
    let text = std::str::from_utf8(input).map_err(|_| malformed(0, "input is not UTF-8"))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

fn parse_usize(tok: Option<&str>, line: usize) -> Result<usize> {
    tok.ok_or_else(|| malformed(line, "missing field"))?
        .parse()
        .map_err(|_| malformed(line, "expected a nonnegative integer"))
}

/// DIMACS: `p edge N M` then `e U V` with 1-based vertices; `c` lines are
/// comments. Duplicate edges collapse.
pub fn parse_dimacs(input: &[u8]) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (ln, l) in lines(input)? {
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(malformed(ln, "duplicate problem line"));
                }
                let kind = tok.next();
                if !matches!(kind, Some("edge" | "col" | "edges")) {
                    return Err(malformed(ln, "expected `p edge N M`"));
                }
                let n = parse_usize(tok.next(), ln)?;
                parse_usize(tok.next(), ln)?;
                g = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = g.as_mut().ok_or_else(|| malformed(ln, "edge before problem line"))?;
                let u = parse_usize(tok.next(), ln)?;
                let v = parse_usize(tok.next(), ln)?;
                add_checked(g, u.wrapping_sub(1), v.wrapping_sub(1), u.max(v), ln)?;
            }
            _ => return Err(malformed(ln, "unrecognized line")),
        }
    }
    g.ok_or_else(|| malformed(0, "missing problem line"))
}

fn add_checked(g: &mut Graph, u: usize, v: usize, shown: usize, _line: usize) -> Result<()> {
    let n = g.n();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange { vertex: shown, n });
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    g.add_edge(u, v);
    Ok(())
}

/// Plain `U V` lines with 0-based vertices; `#` starts a comment. The vertex
/// count is one more than the largest label.
pub fn parse_edgelist(input: &[u8]) -> Result<Graph> {
    let mut edges = Vec::new();
    for (ln, l) in lines(input)? {
        let l = l.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let mut tok = l.split_whitespace();
        let u = parse_usize(tok.next(), ln)?;
        let v = parse_usize(tok.next(), ln)?;
        if tok.next().is_some() {
            return Err(malformed(ln, "expected two vertices"));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Dimacs,
    Edges,
}

impl GraphFormat {
    /// DIMACS if the first line starts with `p` or `c`, an edge list if it
    /// holds two integers, graph6 otherwise.
    pub fn detect(input: &[u8]) -> GraphFormat {
        let text = String::from_utf8_lossy(input);
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        if first.starts_with("p ") || first.starts_with("c ") || first == "c" {
            GraphFormat::Dimacs
        } else if first.split_whitespace().count() >= 2
            && first.split_whitespace().take(2).all(|t| t.parse::<usize>().is_ok())
        {
            GraphFormat::Edges
        } else {
            GraphFormat::Graph6
        }
    }
}

/// Parse all graphs in `input`: one per line for graph6, one per file otherwise.
pub fn parse_graphs(input: &[u8], format: Option<GraphFormat>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| GraphFormat::detect(input)) {
        GraphFormat::Graph6 => parse_graph6_lines(input),
        GraphFormat::Dimacs => Ok(vec![parse_dimacs(input)?]),
        GraphFormat::Edges => Ok(vec![parse_edgelist(input)?]),
    }
}
