//! Brute-force packing counter used to cross-check the dynamic program:
//! enumerate every subgraph copy of the pattern, build the conflict graph
//! between copies, and count its independent sets by backtracking. Nothing
//! here shares code with the fragment DP.

use num_bigint::BigUint;
use num_traits::One;

use crate::count::Variant;
use crate::error::{Error, Result};
use crate::tree::{bfs_from, LabeledTree, Vertex};

/// Default ceiling on the number of copies the oracle will accept.
pub const DEFAULT_ORACLE_CAP: usize = 5_000;

/// One subgraph copy of the pattern inside the host: its vertex set (sorted)
/// and the host edges it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCopy {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Every subgraph of `host` isomorphic to `pattern`, listed once per
/// subgraph (not once per embedding), sorted by vertex set.
pub fn enumerate_copies(pattern: &LabeledTree, host: &LabeledTree) -> Vec<PatternCopy> {
    if pattern.n() == 1 {
        return (1..=host.n())
            .map(|v| PatternCopy {
                vertices: vec![v],
                edges: vec![],
            })
            .collect();
    }
    if pattern.n() > host.n() {
        return Vec::new();
    }

    // In a tree host, a copy is determined by its vertex set: a connected
    // subgraph on k vertices has exactly the k-1 host edges inside the set.
    let (porder, pparent) = bfs_from(pattern, 1);
    let mut found: std::collections::BTreeSet<Vec<Vertex>> = Default::default();
    let mut image = vec![0u32; pattern.n() as usize + 1];
    let mut used = vec![false; host.n() as usize + 1];

    fn extend(
        depth: usize,
        porder: &[Vertex],
        pparent: &[Vertex],
        host: &LabeledTree,
        image: &mut [u32],
        used: &mut [bool],
        found: &mut std::collections::BTreeSet<Vec<Vertex>>,
    ) {
        if depth == porder.len() {
            let mut set: Vec<Vertex> = porder.iter().map(|&pv| image[pv as usize]).collect();
            set.sort_unstable();
            found.insert(set);
            return;
        }
        let pv = porder[depth];
        let anchor = image[pparent[pv as usize] as usize];
        for &w in host.neighbors(anchor) {
            if !used[w as usize] {
                used[w as usize] = true;
                image[pv as usize] = w;
                extend(depth + 1, porder, pparent, host, image, used, found);
                used[w as usize] = false;
            }
        }
    }

    for start in 1..=host.n() {
        used[start as usize] = true;
        image[porder[0] as usize] = start;
        extend(
            1, &porder, &pparent, host, &mut image, &mut used, &mut found,
        );
        used[start as usize] = false;
    }

    found
        .into_iter()
        .map(|vertices| {
            let mut edges: Vec<(Vertex, Vertex)> = host
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    vertices.binary_search(&a).is_ok() && vertices.binary_search(&b).is_ok()
                })
                .collect();
            edges.sort_unstable();
            debug_assert_eq!(edges.len() + 1, vertices.len());
            PatternCopy { vertices, edges }
        })
        .collect()
}

/// Count packings by explicit enumeration: copies conflict when they share a
/// vertex, and in the induced variant also when a host edge joins them;
/// packings are exactly the independent sets of the conflict graph.
pub fn oracle_count(
    pattern: &LabeledTree,
    host: &LabeledTree,
    variant: Variant,
    cap: usize,
) -> Result<BigUint> {
    let copies = enumerate_copies(pattern, host);
    if copies.len() > cap {
        return Err(Error::OracleCapExceeded {
            copies: copies.len(),
            cap,
        });
    }
    let k = copies.len();

    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); host.n() as usize + 1];
    for (i, c) in copies.iter().enumerate() {
        for &v in &c.vertices {
            covers[v as usize].push(i);
        }
    }
    let mut conflict: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); k];
    let add_pairs = |group_a: &[usize],
                     group_b: &[usize],
                     conflict: &mut Vec<std::collections::BTreeSet<usize>>| {
        for &i in group_a {
            for &j in group_b {
                if i != j {
                    conflict[i].insert(j);
                    conflict[j].insert(i);
                }
            }
        }
    };
    for v in 1..=host.n() {
        let group = &covers[v as usize];
        add_pairs(group, group, &mut conflict);
    }
    if variant == Variant::Induced {
        for &(a, b) in host.edges() {
            add_pairs(&covers[a as usize], &covers[b as usize], &mut conflict);
        }
    }
    let adj: Vec<Vec<usize>> = conflict
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect();

    let alive: Vec<usize> = (0..k).collect();
    Ok(independent_sets(&adj, alive))
}

/// Independent sets of the graph restricted to `alive`, by branching on a
/// maximum-degree vertex and splitting into connected components first.
fn independent_sets(adj: &[Vec<usize>], alive: Vec<usize>) -> BigUint {
    if alive.is_empty() {
        return One::one();
    }
    let in_set: std::collections::BTreeSet<usize> = alive.iter().copied().collect();

    // component split
    let mut seen: std::collections::BTreeSet<usize> = Default::default();
    let mut components: Vec<Vec<usize>> = Vec::new();
    for &s in &alive {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if in_set.contains(&w) && !seen.contains(&w) {
                    seen.insert(w);
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        components.push(comp);
    }
    if components.len() > 1 {
        let mut acc: BigUint = One::one();
        for comp in components {
            acc *= independent_sets(adj, comp);
        }
        return acc;
    }

    let comp = components.pop().unwrap();
    let &pivot = comp
        .iter()
        .max_by_key(|&&u| adj[u].iter().filter(|w| in_set.contains(w)).count())
        .unwrap();
    if adj[pivot].iter().filter(|w| in_set.contains(w)).count() == 0 {
        // edgeless component: each vertex in or out independently
        return BigUint::from(2u32).pow(comp.len() as u32);
    }

    // either pivot is out, or pivot is in and its neighborhood is out
    let without: Vec<usize> = comp.iter().copied().filter(|&u| u != pivot).collect();
    let without_closed: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&u| u != pivot && !adj[pivot].contains(&u))
        .collect();
    independent_sets(adj, without) + independent_sets(adj, without_closed)
}
