//! Reading collections and graphs from JSON and edge-list text.
//!
//! Collections: `{"sets": [[1,2],[2,3]]}`.
//! Graphs: `{"n": 3, "edges": [[1,2],[2,3]]}`, or text with a header line
//! `n <count>` followed by one `u v` pair per line; blank lines and `#`
//! comments are ignored.

use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::{Error, FiniteSet, Graph, Result, SetCollection};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    EdgeList,
}

impl Format {
    /// `.txt` means edge list; anything else is read as JSON.
    pub fn detect(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("txt") => Format::EdgeList,
            _ => Format::Json,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "edge-list" | "edgelist" | "txt" => Ok(Format::EdgeList),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCollection {
    sets: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    n: usize,
    edges: Vec<[u32; 2]>,
}

fn json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn utf8(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses collection JSON. Semantic problems (zero ids, duplicate members)
/// keep their own error kinds; an empty `sets` array is a parse error.
pub fn parse_collection(text: &str) -> Result<SetCollection> {
    let raw: RawCollection = json(text)?;
    if raw.sets.is_empty() {
        return Err(Error::Parse("collection has no sets".into()));
    }
    let sets = raw
        .sets
        .into_iter()
        .map(|s| {
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!(
                    "set {s:?} is not strictly increasing"
                )));
            }
            FiniteSet::new(s)
        })
        .collect::<Result<Vec<_>>>()?;
    SetCollection::new(sets)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Json => {
            let raw: RawGraph = json(text)?;
            Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
        }
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, msg: &str| Error::Parse(format!("line {line}: {msg}"));
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| bad(hl, "bad vertex count"))?,
        _ => return Err(bad(hl, "expected header `n <count>`")),
    };
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let pair: Vec<u32> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(ln, "expected two vertex ids"))?;
        match pair[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(bad(ln, "expected two vertex ids")),
        }
    }
    Graph::new(n, edges)
}

pub fn read_collection(path: &Path) -> Result<(SetCollection, Vec<u8>)> {
    let bytes = read_bytes(path)?;
    let c = parse_collection(utf8(&bytes)?)?;
    Ok((c, bytes))
}

pub fn read_graph(path: &Path, format: Option<Format>) -> Result<(Graph, Vec<u8>)> {
    let bytes = read_bytes(path)?;
    let format = format.unwrap_or_else(|| Format::detect(path));
    let g = parse_graph(utf8(&bytes)?, format)?;
    Ok((g, bytes))
}

/// Parses a vertex list such as `"1,2,3"`.
pub fn parse_vertex_list(text: &str) -> Result<FiniteSet> {
    let ids = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad vertex id {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteSet::new(ids)
}
