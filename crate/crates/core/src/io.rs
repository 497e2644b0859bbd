//! Edge-list text format: the first line holds the vertex count n, followed
//! by n-1 lines "u v" with 1-based labels. The serializer emits edges sorted
//! lexicographically.

use std::path::Path;

use crate::error::{Error, Result};
use crate::tree::{LabeledTree, Vertex};

pub fn parse_tree(text: &str) -> Result<LabeledTree> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: u32 = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("vertex count: {e}")))?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let u: Vertex = it
            .next()
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|e| Error::Parse(format!("edge endpoint: {e}")))?;
        let v: Vertex = it
            .next()
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|e| Error::Parse(format!("edge endpoint: {e}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!(
                "trailing tokens on edge line {line:?}"
            )));
        }
        edges.push((u, v));
    }
    LabeledTree::new(n, edges)
}

pub fn format_tree(t: &LabeledTree) -> String {
    let mut out = format!("{}\n", t.n());
    for &(u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_tree(path: impl AsRef<Path>) -> Result<LabeledTree> {
    parse_tree(&std::fs::read_to_string(path)?)
}

pub fn write_tree(path: impl AsRef<Path>, t: &LabeledTree) -> Result<()> {
    Ok(std::fs::write(path, format_tree(t))?)
}
