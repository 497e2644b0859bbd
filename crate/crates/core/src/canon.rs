//! Rooted-tree canonical codes and everything built on them: rooted
//! isomorphism tests, per-edge subtree codes, and leaf-pattern detection.
//!
//! The code of a rooted tree is the balanced-parenthesis string obtained by
//! sorting the children's codes lexicographically and wrapping the
//! concatenation in one pair of parentheses. Two rooted trees get equal codes
//! exactly when a root-preserving isomorphism exists.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tree::{LabeledTree, RootedTree, Vertex};

/// Canonical code of a rooted tree, with the vertex count cached.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonCode {
    bytes: Vec<u8>,
    size: u32,
}

impl CanonCode {
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).unwrap()
    }
}

impl std::fmt::Debug for CanonCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonCode({})", self.as_str())
    }
}

impl std::fmt::Display for CanonCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Canonical code of a rooted tree; invariant under relabeling.
pub fn canon(rt: &RootedTree) -> CanonCode {
    component_canon(rt.tree(), rt.root(), None)
}

/// Code of the component of `tree` minus the edge {root, cut} that contains
/// `root`, rooted there. With `cut = None`, the whole tree.
pub(crate) fn component_canon(tree: &LabeledTree, root: Vertex, cut: Option<Vertex>) -> CanonCode {
    let n = tree.n() as usize;
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![0u32; n + 1];
    let mut seen = vec![false; n + 1];
    if let Some(c) = cut {
        seen[c as usize] = true;
    }
    seen[root as usize] = true;
    order.push(root);
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
    let size = order.len() as u32;
    let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n + 1];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut codes[v as usize]);
        children.sort_unstable();
        let total: usize = children.iter().map(|c| c.len()).sum();
        let mut code = Vec::with_capacity(total + 2);
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        if v == root {
            return CanonCode { bytes: code, size };
        }
        codes[parent[v as usize] as usize].push(code);
    }
    unreachable!("root is always last in reverse BFS order")
}

/// True when a root-preserving isomorphism exists.
pub fn rooted_iso(a: &RootedTree, b: &RootedTree) -> bool {
    a.tree().n() == b.tree().n() && canon(a) == canon(b)
}

/// Codes of all 2(n-1) rooted split components. Entry (u,v) is the code of
/// the component of `t` minus {u,v} containing `v`, rooted at `v`.
pub fn edge_subtree_codes(t: &LabeledTree) -> Result<BTreeMap<(Vertex, Vertex), CanonCode>> {
    if t.n() < 2 {
        return Err(Error::NotATree("need at least one edge".into()));
    }
    let mut map = BTreeMap::new();
    for &(u, v) in t.edges() {
        map.insert((u, v), component_canon(t, v, Some(u)));
        map.insert((v, u), component_canon(t, u, Some(v)));
    }
    Ok(map)
}

/// Search for an edge (u,v) whose far side (the component containing v,
/// rooted at v) is root-isomorphic to `r`. Returns the lexicographically
/// smallest such ordered pair.
pub fn has_r_leaf(t: &LabeledTree, r: &RootedTree) -> Result<Option<(Vertex, Vertex)>> {
    if t.n() < 2 {
        return Err(Error::NotATree("need at least one edge".into()));
    }
    let target = canon(r);
    let sizes = directed_component_sizes(t);
    for u in 1..=t.n() {
        for &v in t.neighbors(u) {
            if sizes[&(u, v)] != target.size() {
                continue;
            }
            if component_canon(t, v, Some(u)) == target {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Size of the component containing v after removing {u,v}, for every
/// ordered edge (u,v). One rooted pass; used to prune code comparisons.
fn directed_component_sizes(t: &LabeledTree) -> BTreeMap<(Vertex, Vertex), u32> {
    let rooted = RootedTree::new(t.clone(), 1).unwrap();
    let (order, parent) = rooted.bfs_order();
    let mut sub = vec![1u32; t.n() as usize + 1];
    for &v in order.iter().rev() {
        if v != 1 {
            sub[parent[v as usize] as usize] += sub[v as usize];
        }
    }
    let mut sizes = BTreeMap::new();
    for &(a, b) in t.edges() {
        // one of a,b is the parent of the other
        let (par, child) = if parent[b as usize] == a {
            (a, b)
        } else {
            (b, a)
        };
        sizes.insert((par, child), sub[child as usize]);
        sizes.insert((child, par), t.n() - sub[child as usize]);
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rooted(t: LabeledTree, root: u32) -> RootedTree {
        RootedTree::new(t, root).unwrap()
    }

    /// Root-pinned isomorphism by exhaustive permutation search. Test oracle,
    /// deliberately independent of the canonical code.
    fn perm_iso(a: &RootedTree, b: &RootedTree) -> bool {
        let n = a.tree().n();
        if n != b.tree().n() {
            return false;
        }
        let others: Vec<u32> = (1..=n).filter(|&v| v != a.root()).collect();
        let mut images: Vec<u32> = (1..=n).filter(|&v| v != b.root()).collect();
        let edge_ok = |map: &dyn Fn(u32) -> u32| {
            a.tree()
                .edges()
                .iter()
                .all(|&(x, y)| b.tree().has_edge(map(x), map(y)))
        };
        fn permutations(items: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                permutations(items, k + 1, out);
                items.swap(k, i);
            }
        }
        let mut perms = Vec::new();
        permutations(&mut images, 0, &mut perms);
        perms.into_iter().any(|perm| {
            let map = |x: u32| -> u32 {
                if x == a.root() {
                    b.root()
                } else {
                    let idx = others.iter().position(|&o| o == x).unwrap();
                    perm[idx]
                }
            };
            edge_ok(&map)
        })
    }

    #[test]
    fn single_vertex_minimal_code() {
        let code = canon(&RootedTree::single());
        assert_eq!(code.as_str(), "()");
        assert_eq!(code.size(), 1);
    }

    #[test]
    fn path_root_position_matters() {
        let center = canon(&rooted(LabeledTree::path(3), 2));
        let end = canon(&rooted(LabeledTree::path(3), 1));
        assert_ne!(center, end);
        assert_eq!(center.as_str(), "(()())");
        assert_eq!(end.as_str(), "((()))");
    }

    #[test]
    fn rooted_iso_basics() {
        let p3_end = rooted(LabeledTree::path(3), 1);
        assert!(rooted_iso(&p3_end, &p3_end));
        assert!(rooted_iso(&p3_end, &rooted(LabeledTree::path(3), 3)));
        assert!(!rooted_iso(&p3_end, &rooted(LabeledTree::path(3), 2)));
        assert!(!rooted_iso(&p3_end, &rooted(LabeledTree::path(4), 1)));
    }

    #[test]
    fn canon_matches_permutation_oracle_exhaustively() {
        // all rooted trees on up to 5 vertices, all pairs of equal size
        let mut rooted_trees: Vec<RootedTree> = Vec::new();
        for n in 1u32..=5 {
            for t in crate::enumerate::labeled_trees(n) {
                for root in 1..=n {
                    rooted_trees.push(rooted(t.clone(), root));
                }
            }
        }
        for a in &rooted_trees {
            for b in &rooted_trees {
                if a.tree().n() != b.tree().n() {
                    continue;
                }
                assert_eq!(
                    canon(a) == canon(b),
                    perm_iso(a, b),
                    "canon disagrees with permutation search on {a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn edge_codes_of_a_single_edge() {
        let codes = edge_subtree_codes(&LabeledTree::path(2)).unwrap();
        let dot = canon(&RootedTree::single());
        assert_eq!(codes.len(), 2);
        assert_eq!(codes[&(1, 2)], dot);
        assert_eq!(codes[&(2, 1)], dot);
    }

    #[test]
    fn edge_codes_match_split() {
        let t = LabeledTree::path(4);
        let codes = edge_subtree_codes(&t).unwrap();
        assert_eq!(codes.len(), 6);
        // component {1,2} rooted at 2
        assert_eq!(codes[&(3, 2)], canon(&rooted(LabeledTree::path(2), 2)));
        for &(u, v) in t.edges() {
            let (side_v, side_u) = t.split_edge(u, v).unwrap();
            assert_eq!(codes[&(u, v)], canon(&side_v.tree));
            assert_eq!(codes[&(v, u)], canon(&side_u.tree));
        }
    }

    #[test]
    fn leaf_detection_examples() {
        // a single rooted vertex is a leaf of every tree with an edge
        let dot = RootedTree::single();
        for t in [LabeledTree::path(4), LabeledTree::star(6)] {
            assert!(has_r_leaf(&t, &dot).unwrap().is_some());
        }

        let p2 = rooted(LabeledTree::path(2), 1);
        let witness = has_r_leaf(&LabeledTree::path(4), &p2).unwrap();
        assert_eq!(witness, Some((2, 3)));

        // no split of a 5-vertex star looks like a path of three hanging by
        // its end
        let p3_end = rooted(LabeledTree::path(3), 1);
        assert_eq!(has_r_leaf(&LabeledTree::star(5), &p3_end).unwrap(), None);
    }

    #[test]
    fn grafting_plants_a_leaf() {
        let r = rooted(LabeledTree::star(4), 1);
        let host = LabeledTree::path(6);
        for at in 1..=6 {
            let t = host.graft(at, &r, 1).unwrap();
            assert!(has_r_leaf(&t, &r).unwrap().is_some());
        }
    }
}
