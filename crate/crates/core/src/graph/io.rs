//! Plain-text edge-list files.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! The header is the first non-comment line; exactly `m` edge lines follow.
//! Blank lines and lines starting with `#` are skipped.

use std::fs;
use std::path::Path;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn parse_error(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, text: &str, what: &str) -> Result<(usize, usize), GraphFileError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_error(
            line_no,
            format!("expected two integers for {what}, found {:?}", text.trim()),
        ));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_error(line_no, format!("{s:?} is not a non-negative integer")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header, "the \"n m\" header")?;

    let mut pairs = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, text) in lines {
        if pairs.len() == m {
            return Err(parse_error(line_no, format!("more than the declared {m} edges")));
        }
        pairs.push(parse_pair(line_no, text, "an edge")?);
        last_line = line_no;
    }
    if pairs.len() != m {
        return Err(parse_error(
            last_line,
            format!("header declares {m} edges but {} were given", pairs.len()),
        ));
    }
    Ok(Graph::new(n, &pairs)?)
}

/// Serializes the graph with edges in canonical order. The output always
/// ends in a newline and carries no trailing spaces.
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.0, e.1));
    }
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph, GraphFileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| GraphFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

pub fn write_graph_file(g: &Graph, path: impl AsRef<Path>) -> Result<(), GraphFileError> {
    let path = path.as_ref();
    fs::write(path, format_graph(g)).map_err(|source| GraphFileError::Io {
        path: path.display().to_string(),
        source,
    })
}
