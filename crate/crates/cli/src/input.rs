//! Reading graphs and polynomials from files or stdin.

use std::fs;
use std::io::{self, Read};

use gpoly_core::graph6::parse_graph6;
use gpoly_core::{Error, Multigraph};

use crate::Failure;

pub fn read_text(path: &str) -> Result<String, Failure> {
    let res = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    res.map_err(|e| Failure::Io(format!("{path}: {e}")))
}

/// An edge-list document starts with the numeric header `n m`; anything
/// else is read as graph6, one graph per line.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit() || b.is_ascii_whitespace()))
}

/// Graphs in a document, with a bad graph6 line either skipped (reported
/// on stderr) or turned into a parse error carrying its line number.
pub fn parse_graphs(text: &str, source: &str, lenient: bool) -> Result<Vec<Multigraph>, Failure> {
    if looks_like_edge_list(text) {
        return Multigraph::parse_edge_list(text)
            .map(|g| vec![g])
            .map_err(|e| Failure::Core(e).within(source));
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => out.push(g),
            Err(e) => {
                let err = Error::Parse {
                    line: i + 1,
                    message: e.to_string(),
                };
                if lenient {
                    eprintln!("{source}: {err} (skipped)");
                } else {
                    return Err(Failure::Core(err).within(source));
                }
            }
        }
    }
    Ok(out)
}

pub fn load_graphs(path: &str, lenient: bool) -> Result<Vec<Multigraph>, Failure> {
    parse_graphs(&read_text(path)?, path, lenient)
}

pub fn load_one_graph(path: &str) -> Result<Multigraph, Failure> {
    let mut graphs = load_graphs(path, false)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        k => Err(Failure::Core(Error::Malformed(format!(
            "{path}: expected one graph, found {k}"
        )))),
    }
}
