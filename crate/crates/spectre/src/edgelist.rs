//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v [w]
//! ```
//!
//! `w` defaults to 1 and a loop is written `u u w`. Writers emit the
//! canonical edge order with every weight in shortest round-trip form, so
//! `read(write(g))` reproduces `g.canonical()` bit for bit.

use std::fmt::Write as _;
use std::path::Path;

use spectre_core::Graph;

use crate::error::{CliError, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing 'n m' header"))?;
    let mut toks = header.split_whitespace();
    let n: usize = field(toks.next(), hl, "vertex count")?;
    let m: usize = field(toks.next(), hl, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hl, "header has extra fields"));
    }

    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        let u: usize = field(toks.next(), ln, "endpoint")?;
        let v: usize = field(toks.next(), ln, "endpoint")?;
        let w: f64 = match toks.next() {
            Some(t) => field(Some(t), ln, "weight")?,
            None => 1.0,
        };
        if toks.next().is_some() {
            return Err(parse_err(ln, "edge line has extra fields"));
        }
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("endpoint outside 0..{n}")));
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(parse_err(
            hl,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn render(g: &Graph) -> String {
    let c = g.canonical();
    let mut out = format!("{} {}\n", c.vertex_count(), c.edge_count());
    for e in c.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}

pub fn read(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse(&text)
}

pub fn write(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, render(g)).map_err(|e| CliError::io(path, e))
}
