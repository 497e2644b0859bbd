//! Exhaustive enumeration of small labeled trees and of functions on
//! {1, ..., n}. Trees are indexed by their Prüfer codes, so the n^(n-2)
//! trees on n vertices are produced exactly once each.

use crate::joyal::FunctionTable;
use crate::tree::{LabeledTree, Vertex};

/// Every labeled tree on `n` vertices, in Prüfer-code order.
pub fn labeled_trees(n: u32) -> impl Iterator<Item = LabeledTree> {
    let total: u64 = if n <= 2 { 1 } else { (n as u64).pow(n - 2) };
    (0..total).map(move |idx| {
        if n == 1 {
            return LabeledTree::single();
        }
        LabeledTree::from_pruefer(&index_to_code(idx, n)).unwrap()
    })
}

/// Number of labeled trees on `n` vertices: n^(n-2).
pub fn tree_count(n: u32) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n - 2)
    }
}

fn index_to_code(mut idx: u64, n: u32) -> Vec<Vertex> {
    let mut code = Vec::with_capacity(n as usize - 2);
    for _ in 0..n.saturating_sub(2) {
        code.push((idx % n as u64) as u32 + 1);
        idx /= n as u64;
    }
    code
}

/// Every function from {1,...,n} to itself, n^n of them.
pub fn functions(n: u32) -> impl Iterator<Item = FunctionTable> {
    let total = (n as u64).pow(n);
    (0..total).map(move |idx| {
        let mut x = idx;
        let mut values = Vec::with_capacity(n as usize);
        for _ in 0..n {
            values.push((x % n as u64) as u32 + 1);
            x /= n as u64;
        }
        FunctionTable::new(values).unwrap()
    })
}
