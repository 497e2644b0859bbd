//! Pattern shorthand shared by the library and the command line:
//! `vertex`, `edge`, `path:k` (path on k vertices), `star:k` (star with k
//! leaves), `file:<path>` (edge-list file).

use crate::error::{Error, Result};
use crate::io;
use crate::tree::LabeledTree;

pub fn parse(spec: &str) -> Result<LabeledTree> {
    match spec {
        "vertex" => return Ok(LabeledTree::single()),
        "edge" => return Ok(LabeledTree::path(2)),
        _ => {}
    }
    if let Some(k) = spec.strip_prefix("path:") {
        let k: u32 = k.parse().map_err(|_| Error::BadPattern(spec.into()))?;
        if k < 1 {
            return Err(Error::BadPattern(spec.into()));
        }
        return Ok(LabeledTree::path(k));
    }
    if let Some(k) = spec.strip_prefix("star:") {
        let k: u32 = k.parse().map_err(|_| Error::BadPattern(spec.into()))?;
        if k < 1 {
            return Err(Error::BadPattern(spec.into()));
        }
        return Ok(LabeledTree::star(k + 1));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return io::read_tree(path);
    }
    Err(Error::BadPattern(spec.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_forms() {
        assert_eq!(parse("vertex").unwrap().n(), 1);
        assert_eq!(parse("edge").unwrap().edges(), &[(1, 2)]);
        assert_eq!(parse("path:4").unwrap(), LabeledTree::path(4));
        let star3 = parse("star:3").unwrap();
        assert_eq!(star3.n(), 4);
        assert_eq!(star3.max_degree(), 3);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "path", "path:0", "star:", "path:x", "triangle"] {
            assert!(parse(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
