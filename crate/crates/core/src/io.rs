// SPDX-License-Identifier: Apache-2.0

//! Text formats: a whitespace edge list (`n m` header, then `u v` lines,
//! 0-based) and graph6.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses the edge-list format. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    let mut builder = GraphBuilder::new(n).map_err(|e| at(header_line, e))?;
    let mut seen = 0usize;
    for (line, content) in lines {
        let [u, v] = parse_pair(line, content)?;
        builder.add_edge(u, v).map_err(|e| at(line, e))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(builder.build())
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got {:?}", content),
        });
    }
    let mut out = [0usize; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a non-negative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

fn at(line: usize, e: Error) -> Error {
    Error::Parse {
        line,
        msg: e.to_string(),
    }
}

/// Writes the edge-list format, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        bytes.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string; the `>>graph6<<` header is optional.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: String| Error::Parse { line: 1, msg };
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#x} outside the graph6 range")));
    }
    let six = |b: u8| usize::from(b - 63);
    let (n, body) = match bytes {
        [] => return Err(bad("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0, |acc, &b| acc << 6 | six(b)), &rest[6..])
        }
        [126, rest @ ..] if rest.len() >= 3 => {
            (rest[..3].iter().fold(0, |acc, &b| acc << 6 | six(b)), &rest[3..])
        }
        [126, ..] => return Err(bad("truncated graph6 size field".into())),
        [first, rest @ ..] => (six(*first), rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut builder = GraphBuilder::new(n).map_err(|e| bad(e.to_string()))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = six(body[k / 6]) >> (5 - k % 6) & 1;
            if bit == 1 {
                builder.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(builder.build())
}

/// Reads either format: a first significant line of two integers selects the
/// edge list, anything else is taken as graph6.
pub fn read_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().all(|f| f.parse::<usize>().is_ok()) => parse_edge_list(text),
        Some(l) => from_graph6(l),
        None => Err(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        }),
    }
}
