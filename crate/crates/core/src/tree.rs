//! Labeled trees on vertex set {1, ..., n}, the Prüfer codec, edge splits
//! and grafts. Everything here is an immutable value; operations return new
//! trees.

use crate::error::{Error, Result};

/// 1-based vertex label.
pub type Vertex = u32;

/// An undirected tree on vertices 1..=n.
///
/// Invariants enforced at construction: exactly n-1 edges, no self-loops or
/// duplicates, connected (hence acyclic). Edges are stored normalized
/// (smaller endpoint first) and sorted; adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl std::fmt::Debug for LabeledTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LabeledTree(n={}, edges={:?})", self.n, self.edges)
    }
}

impl LabeledTree {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("vertex count must be at least 1".into()));
        }
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            if u == 0 || u > n {
                return Err(Error::LabelOutOfRange { label: u, n });
            }
            if v == 0 || v > n {
                return Err(Error::LabelOutOfRange { label: v, n });
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotATree("duplicate edge".into()));
        }
        if norm.len() as u32 != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges for {} vertices, expected {}",
                norm.len(),
                n,
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n as usize + 1];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        let t = LabeledTree {
            n,
            edges: norm,
            adj,
        };
        // n-1 edges and connectivity together rule out cycles.
        let mut seen = vec![false; n as usize + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let mut count = 0u32;
        while let Some(u) = stack.pop() {
            count += 1;
            for &w in t.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        if count != n {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(t)
    }

    /// The tree on a single vertex.
    pub fn single() -> Self {
        LabeledTree::new(1, []).unwrap()
    }

    /// Path 1-2-...-n.
    pub fn path(n: u32) -> Self {
        LabeledTree::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    /// Star on n vertices total, centered at vertex 1.
    pub fn star(n: u32) -> Self {
        LabeledTree::new(n, (2..=n).map(|i| (1, i))).unwrap()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Normalized edge list, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.adj[v as usize].len() as u32
    }

    pub fn max_degree(&self) -> u32 {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[u as usize].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::LabelOutOfRange {
                label: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// The unique path between two vertices, inclusive of both endpoints.
    pub fn path_between(&self, from: Vertex, to: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let mut parent = vec![0u32; self.n as usize + 1];
        let mut seen = vec![false; self.n as usize + 1];
        let mut queue = std::collections::VecDeque::from([from]);
        seen[from as usize] = true;
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in self.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur as usize];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Decode a Prüfer code into the unique tree with that code. The empty
    /// code decodes to the tree on two vertices.
    pub fn from_pruefer(code: &[Vertex]) -> Result<Self> {
        let n = code.len() as u32 + 2;
        for &c in code {
            if c == 0 || c > n {
                return Err(Error::LabelOutOfRange { label: c, n });
            }
        }
        let mut remaining = vec![0u32; n as usize + 1];
        for &c in code {
            remaining[c as usize] += 1;
        }
        // Repeatedly join the smallest leaf to the next code entry. A heap
        // keeps the scan at O(n log n).
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<u32>> = (1..=n)
            .filter(|&v| remaining[v as usize] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut edges = Vec::with_capacity(n as usize - 1);
        for &c in code {
            let std::cmp::Reverse(leaf) = heap.pop().expect("leaf supply cannot run dry");
            edges.push((leaf, c));
            remaining[c as usize] -= 1;
            if remaining[c as usize] == 0 {
                heap.push(std::cmp::Reverse(c));
            }
        }
        let std::cmp::Reverse(a) = heap.pop().unwrap();
        let std::cmp::Reverse(b) = heap.pop().unwrap();
        edges.push((a, b));
        LabeledTree::new(n, edges)
    }

    /// Encode as a Prüfer code (inverse of [`LabeledTree::from_pruefer`]).
    pub fn to_pruefer(&self) -> Result<Vec<Vertex>> {
        if self.n < 2 {
            return Err(Error::NoPrueferCode);
        }
        let n = self.n as usize;
        let mut degree: Vec<u32> = (0..=n).map(|v| self.adj[v].len() as u32).collect();
        let mut removed = vec![false; n + 1];
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<u32>> = (1..=self.n)
            .filter(|&v| degree[v as usize] == 1)
            .map(std::cmp::Reverse)
            .collect();
        let mut code = Vec::with_capacity(n - 2);
        for _ in 0..n - 2 {
            let std::cmp::Reverse(leaf) = heap.pop().unwrap();
            removed[leaf as usize] = true;
            let &parent = self
                .neighbors(leaf)
                .iter()
                .find(|&&w| !removed[w as usize])
                .unwrap();
            code.push(parent);
            degree[parent as usize] -= 1;
            if degree[parent as usize] == 1 {
                heap.push(std::cmp::Reverse(parent));
            }
        }
        Ok(code)
    }

    /// Remove edge {u,v} and return the two components: first the one
    /// containing `v` rooted at `v`, then the one containing `u` rooted at
    /// `u`. Each side is relabeled to 1..=k and carries the original labels.
    pub fn split_edge(&self, u: Vertex, v: Vertex) -> Result<(SplitSide, SplitSide)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        Ok((self.component_side(v, u), self.component_side(u, v)))
    }

    /// Component of `self` minus edge {root, cut} that contains `root`,
    /// rooted there. Callers guarantee the edge exists.
    fn component_side(&self, root: Vertex, cut: Vertex) -> SplitSide {
        let mut members = Vec::new();
        let mut seen = vec![false; self.n as usize + 1];
        seen[root as usize] = true;
        seen[cut as usize] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            members.push(x);
            for &w in self.neighbors(x) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        let mut relabel = std::collections::HashMap::with_capacity(members.len());
        for (i, &orig) in members.iter().enumerate() {
            relabel.insert(orig, i as u32 + 1);
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| relabel.contains_key(a) && relabel.contains_key(b))
            .map(|(a, b)| (relabel[a], relabel[b]));
        let tree = LabeledTree::new(members.len() as u32, edges).unwrap();
        let rooted = RootedTree::new(tree, relabel[&root]).unwrap();
        SplitSide {
            tree: rooted,
            original: members,
        }
    }

    /// Attach a relabeled copy of `sub` to vertex `at`, either by a direct
    /// edge (`via_path_len == 1`) or through one fresh intermediate vertex
    /// (`via_path_len == 2`). Host labels are preserved; the copy and the
    /// intermediate vertex take the next labels in order.
    pub fn graft(&self, at: Vertex, sub: &RootedTree, via_path_len: u32) -> Result<LabeledTree> {
        self.check_vertex(at)?;
        if via_path_len != 1 && via_path_len != 2 {
            return Err(Error::Parse(format!(
                "graft path length must be 1 or 2, got {via_path_len}"
            )));
        }
        let sub_n = sub.tree().n();
        let n = self.n + sub_n + (via_path_len - 1);
        let mut edges = self.edges.clone();
        let offset = if via_path_len == 2 {
            let mid = self.n + 1;
            edges.push((at, mid));
            edges.push((mid, sub.root() + self.n + 1));
            self.n + 1
        } else {
            edges.push((at, sub.root() + self.n));
            self.n
        };
        edges.extend(
            sub.tree()
                .edges()
                .iter()
                .map(|&(a, b)| (a + offset, b + offset)),
        );
        LabeledTree::new(n, edges)
    }
}

/// One side of an edge split: the rooted component plus the host labels of
/// its vertices (`original[i]` is the host label of vertex i+1).
#[derive(Clone, Debug)]
pub struct SplitSide {
    pub tree: RootedTree,
    pub original: Vec<Vertex>,
}

impl SplitSide {
    /// Host label of the component's root.
    pub fn root_original(&self) -> Vertex {
        self.original[self.tree.root() as usize - 1]
    }
}

/// A tree with a distinguished root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedTree {
    tree: LabeledTree,
    root: Vertex,
}

impl RootedTree {
    pub fn new(tree: LabeledTree, root: Vertex) -> Result<Self> {
        if root == 0 || root > tree.n() {
            return Err(Error::LabelOutOfRange {
                label: root,
                n: tree.n(),
            });
        }
        Ok(RootedTree { tree, root })
    }

    pub fn single() -> Self {
        RootedTree {
            tree: LabeledTree::single(),
            root: 1,
        }
    }

    pub fn tree(&self) -> &LabeledTree {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Vertices in BFS order from the root, with the parent of each (0 for
    /// the root). The orientation away from the root is unique.
    pub fn bfs_order(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        bfs_from(&self.tree, self.root)
    }
}

/// BFS order and parent array for `tree` explored from `start`.
pub(crate) fn bfs_from(tree: &LabeledTree, start: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let n = tree.n() as usize;
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![0u32; n + 1];
    let mut seen = vec![false; n + 1];
    seen[start as usize] = true;
    order.push(start);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = u;
                order.push(w);
            }
        }
    }
    (order, parent)
}

/// A disjoint union of trees; possibly empty.
#[derive(Clone, Debug, Default)]
pub struct Forest {
    pub components: Vec<LabeledTree>,
}

impl Forest {
    pub fn new(components: Vec<LabeledTree>) -> Self {
        Forest { components }
    }

    pub fn empty() -> Self {
        Forest {
            components: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pruefer_decode_examples() {
        let t = LabeledTree::from_pruefer(&[]).unwrap();
        assert_eq!(t.n(), 2);
        assert_eq!(t.edges(), &[(1, 2)]);

        let star = LabeledTree::from_pruefer(&[2, 2]).unwrap();
        assert_eq!(star.n(), 4);
        assert_eq!(star.edges(), &[(1, 2), (2, 3), (2, 4)]);
        assert_eq!(star.degree(2), 3);

        let path = LabeledTree::from_pruefer(&[2, 3]).unwrap();
        assert_eq!(path.edges(), &[(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn pruefer_encode_examples() {
        assert_eq!(LabeledTree::path(2).to_pruefer().unwrap(), vec![]);
        let star = LabeledTree::new(4, [(2, 1), (2, 3), (2, 4)]).unwrap();
        assert_eq!(star.to_pruefer().unwrap(), vec![2, 2]);
        assert_eq!(LabeledTree::path(4).to_pruefer().unwrap(), vec![2, 3]);
        assert!(matches!(
            LabeledTree::single().to_pruefer(),
            Err(Error::NoPrueferCode)
        ));
    }

    #[test]
    fn pruefer_degree_law() {
        // v appears in the code exactly deg(v) - 1 times
        let t = LabeledTree::from_pruefer(&[5, 1, 5, 2, 1]).unwrap();
        let code = t.to_pruefer().unwrap();
        for v in 1..=t.n() {
            let occurrences = code.iter().filter(|&&c| c == v).count() as u32;
            assert_eq!(occurrences, t.degree(v) - 1);
        }
    }

    #[test]
    fn rejects_non_trees() {
        assert!(LabeledTree::new(3, [(1, 2)]).is_err());
        assert!(LabeledTree::new(3, [(1, 2), (1, 2)]).is_err());
        assert!(LabeledTree::new(3, [(1, 1), (2, 3)]).is_err());
        assert!(LabeledTree::new(4, [(1, 2), (3, 4), (1, 2)]).is_err());
        assert!(LabeledTree::new(3, [(1, 2), (1, 4)]).is_err());
    }

    #[test]
    fn split_edge_path() {
        let t = LabeledTree::path(4);
        let (side_v, side_u) = t.split_edge(2, 3).unwrap();
        assert_eq!(side_v.original, vec![3, 4]);
        assert_eq!(side_v.root_original(), 3);
        assert_eq!(side_u.original, vec![1, 2]);
        assert_eq!(side_u.root_original(), 2);
        assert_eq!(side_v.tree.tree().n() + side_u.tree.tree().n(), t.n());
    }

    #[test]
    fn split_edge_star() {
        let t = LabeledTree::star(5);
        let (side_v, side_u) = t.split_edge(1, 4).unwrap();
        assert_eq!(side_v.original, vec![4]);
        assert_eq!(side_u.original, vec![1, 2, 3, 5]);
        assert_eq!(side_u.tree.tree().degree(side_u.tree.root()), 3);
        assert!(t.split_edge(2, 3).is_err());
    }

    #[test]
    fn graft_examples() {
        let host = LabeledTree::single();
        let grafted = host.graft(1, &RootedTree::single(), 1).unwrap();
        assert_eq!(grafted.edges(), &[(1, 2)]);

        // two paths joined through a fresh middle vertex form a path on five
        let p2 = RootedTree::new(LabeledTree::path(2), 1).unwrap();
        let five = LabeledTree::path(2).graft(1, &p2, 2).unwrap();
        assert_eq!(five.n(), 5);
        assert_eq!(five.max_degree(), 2);
        assert_eq!((1..=5).filter(|&v| five.degree(v) == 1).count(), 2);
    }

    #[test]
    fn graft_vertex_count() {
        let host = LabeledTree::path(3);
        let sub = RootedTree::new(LabeledTree::star(4), 1).unwrap();
        for via in [1, 2] {
            let g = host.graft(2, &sub, via).unwrap();
            assert_eq!(g.n(), 3 + 4 + via - 1);
        }
    }

    #[test]
    fn path_between_endpoints() {
        let t = LabeledTree::path(5);
        assert_eq!(t.path_between(1, 5).unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(t.path_between(3, 3).unwrap(), vec![3]);
        assert_eq!(t.path_between(4, 2).unwrap(), vec![4, 3, 2]);
    }
}
