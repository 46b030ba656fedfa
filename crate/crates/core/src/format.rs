//! Plain-text graph files.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2
//! l 0
//! ```
//!
//! Exactly one `n <order>` line, first among non-comment lines; then any
//! number of `e <u> <v>` and `l <v>` lines. Indices are 0-based decimal.
//! Anything after `#` is ignored.

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<SelfLoopGraph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut loops = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(tag) = tokens.next() else {
            continue;
        };
        let args: Vec<usize> = tokens
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_error(line_no, format!("expected a vertex index, got `{t}`")))
            })
            .collect::<Result<_>>()?;
        let expect = |count: usize| {
            if args.len() == count {
                Ok(())
            } else {
                Err(parse_error(
                    line_no,
                    format!("`{tag}` takes {count} argument(s), got {}", args.len()),
                ))
            }
        };

        let n = match (tag, order) {
            ("n", None) => {
                expect(1)?;
                if args[0] == 0 {
                    return Err(parse_error(line_no, "order must be positive"));
                }
                order = Some(args[0]);
                continue;
            }
            ("n", Some(_)) => return Err(parse_error(line_no, "duplicate `n` line")),
            (_, None) => return Err(parse_error(line_no, "the `n` line must come first")),
            (_, Some(n)) => n,
        };
        let in_range = |v: usize| {
            if v < n {
                Ok(v)
            } else {
                Err(parse_error(line_no, format!("vertex {v} out of range for order {n}")))
            }
        };
        match tag {
            "e" => {
                expect(2)?;
                edges.push((in_range(args[0])?, in_range(args[1])?));
            }
            "l" => {
                expect(1)?;
                loops.push(in_range(args[0])?);
            }
            other => return Err(parse_error(line_no, format!("unknown directive `{other}`"))),
        }
    }

    let order = order.ok_or_else(|| parse_error(0, "missing `n` line"))?;
    SelfLoopGraph::build(order, &edges, &loops).map_err(|e| parse_error(0, e.to_string()))
}

/// Canonical text: the `n` line, edges sorted, then loops sorted.
pub fn serialize(g: &SelfLoopGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for v in g.loops() {
        out.push_str(&format!("l {v}\n"));
    }
    out
}
