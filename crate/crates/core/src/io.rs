//! SNAP edge-list ingestion.
//!
//! One whitespace-separated pair of non-negative integer labels per line.
//! Lines starting with `#` and blank lines are skipped; LF and CRLF endings
//! are both accepted.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Digraph, IngestStats};

/// Streams `(source, target)` label pairs from an edge-list reader.
pub struct EdgeListReader<R> {
    reader: R,
    line: String,
    line_no: usize,
    failed: bool,
}

impl<R: BufRead> EdgeListReader<R> {
    pub fn new(reader: R) -> Self {
        EdgeListReader {
            reader,
            line: String::new(),
            line_no: 0,
            failed: false,
        }
    }
}

impl<R: BufRead> Iterator for EdgeListReader<R> {
    type Item = Result<(u64, u64)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            self.line.clear();
            match self.reader.read_line(&mut self.line) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e.into()));
                }
            }
            self.line_no += 1;
            let text = self.line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let parsed = parse_pair(text, self.line_no);
            self.failed = parsed.is_err();
            return Some(parsed);
        }
    }
}

fn parse_pair(text: &str, line: usize) -> Result<(u64, u64)> {
    let mut tokens = text.split_whitespace();
    let mut field = |what: &str| -> Result<u64> {
        let tok = tokens.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what} vertex"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{what} vertex {tok:?} is not a non-negative integer"),
        })
    };
    let src = field("source")?;
    let dst = field("target")?;
    if let Some(extra) = tokens.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected extra token {extra:?}"),
        });
    }
    Ok((src, dst))
}

/// Parses every pair of an edge-list stream.
pub fn parse_edge_list<R: Read>(reader: R) -> EdgeListReader<BufReader<R>> {
    EdgeListReader::new(BufReader::new(reader))
}

pub fn read_digraph<R: Read>(reader: R) -> Result<(Digraph, IngestStats)> {
    Digraph::try_from_pairs(parse_edge_list(reader))
}

pub fn load_digraph<P: AsRef<Path>>(path: P) -> Result<(Digraph, IngestStats)> {
    let file = File::open(path)?;
    read_digraph(file)
}
