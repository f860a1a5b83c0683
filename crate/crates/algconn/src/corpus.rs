use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use algconn_core::graph6::{parse_graph6_with, ParseOptions};
use algconn_core::{Graph, Graph6Error};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Graphs from a graph6 stream, one record per line. Blank lines are
/// skipped, trailing `\r` is ignored and each record may carry the
/// `>>graph6<<` header. Line numbers in errors are 1-based.
pub fn read_corpus<R: BufRead>(reader: R, opts: ParseOptions) -> impl Iterator<Item = Result<Graph, CorpusError>> {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(e.into())),
        };
        let rec = line.trim_end_matches(['\r', '\n']);
        if rec.trim().is_empty() {
            return None;
        }
        Some(parse_graph6_with(rec.as_bytes(), opts).map_err(|source| CorpusError::Parse { line: i + 1, source }))
    })
}

pub fn open_corpus(path: &Path, opts: ParseOptions) -> io::Result<impl Iterator<Item = Result<Graph, CorpusError>>> {
    Ok(read_corpus(BufReader::new(File::open(path)?), opts))
}
