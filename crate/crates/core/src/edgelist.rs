//! Plain-text edge lists.
//!
//! ```text
//! # C4
//! 4 4
//! 1 2
//! 2 3
//! 3 4
//! 1 4
//! ```
//!
//! The header is `n m`, followed by exactly `m` lines of 1-based endpoints.
//! `u == v` is a loop and repeated lines are parallel edges. Lines starting
//! with `#` and blank lines are skipped.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header, line)?;
    let mut g = Multigraph::edgeless(n);
    for (line, body) in lines {
        let [u, v] = parse_pair(body, line)?;
        if g.num_edges() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::Parse {
                line,
                message: format!("endpoint out of range 1..={n}"),
            });
        }
        g.push_edge(u - 1, v - 1)?;
    }
    if g.num_edges() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edges, found {}", g.num_edges()),
        });
    }
    Ok(g)
}

fn parse_pair(body: &str, line: usize) -> Result<[usize; 2]> {
    let mut fields = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a nonnegative integer: {tok:?}"),
        })
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing fields".into(),
        });
    }
    Ok(pair)
}

pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.num_vertices(), g.num_edges());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u() + 1, e.v() + 1);
    }
    out
}

impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_edge_list(s)
    }
}
