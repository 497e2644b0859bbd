//! Randomized invariants: codec roundtrips, relabeling invariance of the
//! canonical code, bijection roundtrips, and cross-backend agreement of the
//! packing counts.

use proptest::prelude::*;

use fmatch::canon::{canon, edge_subtree_codes, has_r_leaf};
use fmatch::count::{count, count_forest, count_mod, Variant};
use fmatch::joyal::{joyal_inverse, joyal_tree, FunctionTable, MarkedTree};
use fmatch::tree::{Forest, LabeledTree, RootedTree, Vertex};

fn arb_pruefer(max_n: u32) -> impl Strategy<Value = Vec<Vertex>> {
    (2..=max_n).prop_flat_map(|n| proptest::collection::vec(1..=n, (n as usize).saturating_sub(2)))
}

fn arb_tree(max_n: u32) -> impl Strategy<Value = LabeledTree> {
    arb_pruefer(max_n).prop_map(|code| LabeledTree::from_pruefer(&code).unwrap())
}

proptest! {
    #[test]
    fn pruefer_roundtrip_code(code in arb_pruefer(8)) {
        let t = LabeledTree::from_pruefer(&code).unwrap();
        prop_assert_eq!(t.to_pruefer().unwrap(), code);
    }

    #[test]
    fn pruefer_roundtrip_tree(t in arb_tree(8)) {
        let back = LabeledTree::from_pruefer(&t.to_pruefer().unwrap()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn pruefer_degree_law(t in arb_tree(9)) {
        let code = t.to_pruefer().unwrap();
        for v in 1..=t.n() {
            let occurrences = code.iter().filter(|&&c| c == v).count() as u32;
            prop_assert_eq!(occurrences, t.degree(v) - 1);
        }
    }

    #[test]
    fn canon_is_relabeling_invariant(t in arb_tree(10), root_pick in 0u32..10, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let root = root_pick % t.n() + 1;
        let mut perm: Vec<u32> = (1..=t.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let relabeled = LabeledTree::new(
            t.n(),
            t.edges().iter().map(|&(u, v)| (perm[u as usize - 1], perm[v as usize - 1])),
        ).unwrap();
        let a = RootedTree::new(t, root).unwrap();
        let b = RootedTree::new(relabeled, perm[root as usize - 1]).unwrap();
        prop_assert_eq!(canon(&a), canon(&b));
    }

    #[test]
    fn joyal_roundtrip_random(values in proptest::collection::vec(1u32..=40, 40)) {
        let f = FunctionTable::new(values).unwrap();
        prop_assert_eq!(joyal_inverse(&joyal_tree(&f)), f);
    }

    #[test]
    fn joyal_marked_roundtrip(t in arb_tree(9), marks in (0u32..9, 0u32..9)) {
        let left = marks.0 % t.n() + 1;
        let right = marks.1 % t.n() + 1;
        let mt = MarkedTree::new(t, left, right).unwrap();
        let back = joyal_tree(&joyal_inverse(&mt));
        prop_assert_eq!(back, mt);
    }

    #[test]
    fn split_edge_partitions_and_reattaches(t in arb_tree(10), pick in any::<u64>()) {
        let edges = t.edges();
        let &(u, v) = &edges[(pick % edges.len() as u64) as usize];
        let (side_v, side_u) = t.split_edge(u, v).unwrap();

        let mut all: Vec<u32> = side_v.original.iter().chain(&side_u.original).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=t.n()).collect::<Vec<_>>());

        // rebuild: relabel each side back to its original labels, add {u,v}
        let mut edges_back: Vec<(u32, u32)> = vec![(u, v)];
        for side in [&side_v, &side_u] {
            edges_back.extend(side.tree.tree().edges().iter().map(|&(a, b)| {
                (side.original[a as usize - 1], side.original[b as usize - 1])
            }));
        }
        let rebuilt = LabeledTree::new(t.n(), edges_back).unwrap();
        prop_assert_eq!(rebuilt, t);
    }

    #[test]
    fn edge_codes_agree_with_per_edge_recomputation(t in arb_tree(9)) {
        let codes = edge_subtree_codes(&t).unwrap();
        prop_assert_eq!(codes.len(), 2 * (t.n() as usize - 1));
        for &(u, v) in t.edges() {
            let (side_v, side_u) = t.split_edge(u, v).unwrap();
            prop_assert_eq!(&codes[&(u, v)], &canon(&side_v.tree));
            prop_assert_eq!(&codes[&(v, u)], &canon(&side_u.tree));
        }
    }

    #[test]
    fn grafting_always_plants_a_witness(host in arb_tree(9), sub in arb_tree(5), at_pick in any::<u32>(), root_pick in any::<u32>()) {
        let at = at_pick % host.n() + 1;
        let root = root_pick % sub.n() + 1;
        let r = RootedTree::new(sub, root).unwrap();
        let grafted = host.graft(at, &r, 1).unwrap();
        prop_assert!(has_r_leaf(&grafted, &r).unwrap().is_some());
    }

    #[test]
    fn modular_backend_matches_exact(
        t in arb_tree(12),
        pattern_pick in 0usize..4,
        m in prop_oneof![Just(2u64), Just(3), Just(4), Just(5), Just(6), Just(7), Just(16)],
        induced in any::<bool>(),
    ) {
        let patterns = [
            LabeledTree::single(),
            LabeledTree::path(2),
            LabeledTree::path(3),
            LabeledTree::star(4),
        ];
        let pattern = &patterns[pattern_pick];
        let variant = if induced { Variant::Induced } else { Variant::Plain };
        let exact = count(pattern, &t, variant);
        let residue = count_mod(pattern, &t, m, variant).unwrap();
        prop_assert_eq!(exact % m, residue.value().into());
    }

    #[test]
    fn forest_count_is_multiplicative(parts in proptest::collection::vec(arb_tree(7), 0..4)) {
        let pattern = LabeledTree::path(2);
        let forest = Forest::new(parts.clone());
        let mut expected = fmatch::BigCount::from(1u32);
        for part in &parts {
            expected *= count(&pattern, part, Variant::Plain);
        }
        prop_assert_eq!(count_forest(&pattern, &forest, Variant::Plain), expected);
    }
}
