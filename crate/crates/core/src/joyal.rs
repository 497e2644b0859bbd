//! The bijection between functions on {1, ..., n} and labeled trees carrying
//! an ordered pair of marks. A function f is read as the functional digraph
//! i -> f(i); its cycle vertices, sorted, dictate a path whose j'th vertex is
//! f(a_j), and every non-cycle vertex keeps its edge {i, f(i)}.

use crate::error::{Error, Result};
use crate::tree::{bfs_from, LabeledTree, Vertex};

/// A total map {1,...,n} -> {1,...,n}, stored as `f[i-1] = f(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    n: u32,
    f: Vec<Vertex>,
}

impl FunctionTable {
    pub fn new(values: Vec<Vertex>) -> Result<Self> {
        let n = values.len() as u32;
        if n == 0 {
            return Err(Error::Parse("function table must not be empty".into()));
        }
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::LabelOutOfRange { label: v, n });
            }
        }
        Ok(FunctionTable { n, f: values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn apply(&self, i: Vertex) -> Vertex {
        self.f[i as usize - 1]
    }

    pub fn values(&self) -> &[Vertex] {
        &self.f
    }

    /// Vertices lying on a cycle of the functional digraph, sorted. This is
    /// the maximal subset on which the function restricts to a bijection.
    pub fn cycle_vertices(&self) -> Vec<Vertex> {
        let n = self.n as usize;
        let mut indeg = vec![0u32; n + 1];
        for &v in &self.f {
            indeg[v as usize] += 1;
        }
        // Peel vertices that cannot lie on a cycle; whatever survives does.
        let mut queue: Vec<Vertex> = (1..=self.n).filter(|&v| indeg[v as usize] == 0).collect();
        let mut off_cycle = vec![false; n + 1];
        while let Some(u) = queue.pop() {
            off_cycle[u as usize] = true;
            let v = self.apply(u);
            indeg[v as usize] -= 1;
            if indeg[v as usize] == 0 {
                queue.push(v);
            }
        }
        (1..=self.n).filter(|&v| !off_cycle[v as usize]).collect()
    }
}

/// A labeled tree with a "left" and a "right" marked vertex (possibly equal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTree {
    pub tree: LabeledTree,
    pub left: Vertex,
    pub right: Vertex,
}

impl MarkedTree {
    pub fn new(tree: LabeledTree, left: Vertex, right: Vertex) -> Result<Self> {
        for mark in [left, right] {
            if mark == 0 || mark > tree.n() {
                return Err(Error::LabelOutOfRange {
                    label: mark,
                    n: tree.n(),
                });
            }
        }
        Ok(MarkedTree { tree, left, right })
    }
}

/// Map a function to its marked tree.
pub fn joyal_tree(f: &FunctionTable) -> MarkedTree {
    let cycle = f.cycle_vertices();
    let path: Vec<Vertex> = cycle.iter().map(|&a| f.apply(a)).collect();
    let mut edges: Vec<(Vertex, Vertex)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    let on_cycle = {
        let mut mask = vec![false; f.n() as usize + 1];
        for &a in &cycle {
            mask[a as usize] = true;
        }
        mask
    };
    for i in 1..=f.n() {
        if !on_cycle[i as usize] {
            edges.push((i, f.apply(i)));
        }
    }
    let tree = LabeledTree::new(f.n(), edges)
        .expect("image of a function under the bijection is always a tree");
    MarkedTree {
        tree,
        left: path[0],
        right: *path.last().unwrap(),
    }
}

/// Recover the function from a marked tree; exact inverse of [`joyal_tree`].
pub fn joyal_inverse(mt: &MarkedTree) -> FunctionTable {
    let n = mt.tree.n();
    let path = mt
        .tree
        .path_between(mt.left, mt.right)
        .expect("marks are validated vertices");
    let mut sorted = path.clone();
    sorted.sort_unstable();

    let mut f = vec![0u32; n as usize];
    // The j'th smallest path vertex maps to the j'th vertex along the path.
    for (j, &a) in sorted.iter().enumerate() {
        f[a as usize - 1] = path[j];
    }
    // Everything else points one step toward the path. BFS parents from a
    // path vertex always point that way.
    let mut on_path = vec![false; n as usize + 1];
    for &p in &path {
        on_path[p as usize] = true;
    }
    let (order, parent) = bfs_from(&mt.tree, mt.left);
    debug_assert_eq!(order.len() as u32, n);
    for &v in &order {
        if !on_path[v as usize] {
            f[v as usize - 1] = parent[v as usize];
        }
    }
    FunctionTable::new(f).expect("reconstructed table is total by construction")
}
