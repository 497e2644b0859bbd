//! Constructive machinery for trees that force zero residues.
//!
//! From a pattern F we build chained trees W_t (t copies of F linked along a
//! longest path), read off the starting vertices of pattern copies on the
//! chain, extract the Y_r family, and locate the first index r0 where the
//! packing count of Y_{r0} vanishes modulo m. Hanging enough copies of
//! Y = Y_{r0} off a fresh root then yields a tree Z whose presence as a
//! rooted split component of any host forces the host's packing count to
//! zero modulo m.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{OnceLock, RwLock};

use crate::count::{count_mod, enumerate_copies, BigCount, PatternTable, Variant};
use crate::error::{Error, Result};
use crate::tree::{LabeledTree, RootedTree, Vertex};

/// A longest path of the pattern together with the sizes of the subtrees
/// hanging off each path vertex once all path edges are removed.
#[derive(Clone, Debug)]
pub struct Spine {
    /// Path vertices u_1 ... u_{l+1} (labels of the pattern).
    pub path: Vec<Vertex>,
    /// Diameter of the pattern; `path.len() - 1`.
    pub l: u32,
    /// `b[i]` = size of the subtree containing `path[i]`; sums to the pattern size.
    pub b: Vec<u32>,
}

/// Deterministic longest-path decomposition: double sweep starting at vertex
/// 1, ties broken toward the smallest label and then the lexicographically
/// smallest vertex sequence.
pub fn spine(pattern: &LabeledTree) -> Spine {
    let n = pattern.n();
    if n == 1 {
        return Spine {
            path: vec![1],
            l: 0,
            b: vec![1],
        };
    }
    let far = |from: Vertex| -> Vec<u32> {
        let mut dist = vec![u32::MAX; n as usize + 1];
        dist[from as usize] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &w in pattern.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    };
    let dist1 = far(1);
    let ecc1 = (1..=n).map(|v| dist1[v as usize]).max().unwrap();
    let a = (1..=n).find(|&v| dist1[v as usize] == ecc1).unwrap();
    let dist_a = far(a);
    let diameter = (1..=n).map(|v| dist_a[v as usize]).max().unwrap();
    let path = (1..=n)
        .filter(|&v| dist_a[v as usize] == diameter)
        .map(|b| pattern.path_between(a, b).unwrap())
        .min()
        .unwrap();

    let on_path: HashSet<Vertex> = path.iter().copied().collect();
    let b = path
        .iter()
        .map(|&u| {
            let mut size = 0u32;
            let mut stack = vec![u];
            let mut seen: HashSet<Vertex> = on_path.clone();
            seen.remove(&u);
            seen.insert(u);
            while let Some(x) = stack.pop() {
                size += 1;
                for &w in pattern.neighbors(x) {
                    if !on_path.contains(&w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            size
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(b.iter().sum::<u32>(), n);
    debug_assert_eq!(*b.last().unwrap(), 1);
    Spine {
        path,
        l: diameter,
        b,
    }
}

/// `t` copies of the pattern linked along the spine. The plain variant
/// identifies the last spine vertex of one copy with the first of the next;
/// the induced variant joins them by an edge instead.
#[derive(Clone, Debug)]
pub struct ChainedTree {
    /// The chain, rooted at the first copy of the first spine vertex.
    pub rooted: RootedTree,
    /// Labels of the spine path, in order; `spine[i]` is spine index i+1.
    pub spine: Vec<Vertex>,
    pub t: u32,
    pub variant: Variant,
}

pub fn build_w(pattern: &LabeledTree, t: u32, variant: Variant) -> Result<ChainedTree> {
    if t < 1 {
        return Err(Error::IndexOutOfRange(t as i64));
    }
    if variant == Variant::Plain && pattern.n() == 1 {
        return Err(Error::SingleVertexPattern);
    }
    let sp = spine(pattern);
    let fp = &sp.path;

    let mut next = 0u32;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut spine_labels: Vec<Vertex> = Vec::new();
    let mut prev_tail: Option<Vertex> = None;
    for copy in 0..t {
        let mut map = vec![0u32; pattern.n() as usize + 1];
        if variant == Variant::Plain {
            if let Some(tail) = prev_tail {
                map[fp[0] as usize] = tail;
            }
        }
        for v in 1..=pattern.n() {
            if map[v as usize] == 0 {
                next += 1;
                map[v as usize] = next;
            }
        }
        edges.extend(
            pattern
                .edges()
                .iter()
                .map(|&(x, y)| (map[x as usize], map[y as usize])),
        );
        match variant {
            Variant::Plain => {
                let skip = if copy == 0 { 0 } else { 1 };
                spine_labels.extend(fp.iter().skip(skip).map(|&p| map[p as usize]));
            }
            Variant::Induced => {
                if let Some(tail) = prev_tail {
                    edges.push((tail, map[fp[0] as usize]));
                }
                spine_labels.extend(fp.iter().map(|&p| map[p as usize]));
            }
        }
        prev_tail = Some(map[*fp.last().unwrap() as usize]);
    }
    let expected_len = match variant {
        Variant::Plain => sp.l * t + 1,
        Variant::Induced => t * (sp.l + 1),
    };
    debug_assert_eq!(spine_labels.len() as u32, expected_len);
    let tree = LabeledTree::new(next, edges)?;
    let rooted = RootedTree::new(tree, spine_labels[0])?;
    Ok(ChainedTree {
        rooted,
        spine: spine_labels,
        t,
        variant,
    })
}

/// Spine indices (1-based) at which some copy of the pattern starts, i.e.
/// the smallest spine index any copy touches; sorted. Found by exhaustive
/// copy enumeration on the chain.
pub fn starting_vertices(pattern: &LabeledTree, t: u32, variant: Variant) -> Result<Vec<u32>> {
    let w = build_w(pattern, t, variant)?;
    starting_vertices_of(pattern, &w)
}

fn starting_vertices_of(pattern: &LabeledTree, w: &ChainedTree) -> Result<Vec<u32>> {
    let index_of: HashMap<Vertex, u32> = w
        .spine
        .iter()
        .enumerate()
        .map(|(i, &lab)| (lab, i as u32 + 1))
        .collect();
    let mut starts = BTreeSet::new();
    for copy in enumerate_copies(pattern, w.rooted.tree()) {
        let first = copy
            .vertices
            .iter()
            .filter_map(|v| index_of.get(v))
            .min()
            .copied()
            .ok_or_else(|| {
                Error::ConstructionBug("a pattern copy avoids the chain spine entirely".into())
            })?;
        starts.insert(first);
    }
    Ok(starts.into_iter().collect())
}

/// Copy count used when analyzing the starting-vertex pattern.
const ANALYSIS_COPIES: u32 = 4;

/// Number of starting vertices with spine index in [1, l+1]; the lag of the
/// packing-count recurrence. Self-checks the expected shift-periodicity and
/// the closed-form total before answering.
pub fn compute_d(pattern: &LabeledTree, variant: Variant) -> Result<u32> {
    let sp = spine(pattern);
    let starts = starting_vertices(pattern, ANALYSIS_COPIES, variant)?;
    check_start_structure(&sp, &starts, ANALYSIS_COPIES, variant)
}

fn check_start_structure(sp: &Spine, starts: &[u32], t: u32, variant: Variant) -> Result<u32> {
    let l = sp.l;
    let d = starts.iter().filter(|&&i| i <= l + 1).count() as u32;
    let period = match variant {
        Variant::Plain => l,
        Variant::Induced => l + 1,
    };
    let set: BTreeSet<u32> = starts.iter().copied().collect();
    for &i in starts {
        if i <= (t - 2) * period + 1 && !set.contains(&(i + period)) {
            return Err(Error::ConstructionBug(format!(
                "starting vertex {i} does not repeat at shift {period}"
            )));
        }
    }
    let expected = match variant {
        Variant::Plain => 1 + (t - 1) * (d - 1),
        Variant::Induced => (t - 1) * d + 1,
    };
    if starts.len() as u32 != expected {
        return Err(Error::ConstructionBug(format!(
            "{} starting vertices on the chain, expected {expected}",
            starts.len()
        )));
    }
    Ok(d)
}

/// The r'th member of the extraction family: the minimal subpath of the
/// chain's spine containing the last r starting vertices, together with all
/// pendant descendants of its vertices, rooted at the subpath's top.
pub fn build_yr(pattern: &LabeledTree, r: u64, variant: Variant) -> Result<RootedTree> {
    let d = compute_d(pattern, variant)?;
    build_yr_with_d(pattern, r, variant, d)
}

fn build_yr_with_d(pattern: &LabeledTree, r: u64, variant: Variant, d: u32) -> Result<RootedTree> {
    if r < 1 {
        return Err(Error::IndexOutOfRange(r as i64));
    }
    let per_copy = match variant {
        Variant::Plain => (d - 1) as u64,
        Variant::Induced => d as u64,
    };
    let t = 1 + (r - 1).div_ceil(per_copy);
    if t.saturating_mul(pattern.n() as u64) > (u32::MAX / 2) as u64 {
        return Err(Error::Parse(format!(
            "extraction index {r} requires a chain of {t} copies; too large to build"
        )));
    }
    let w = build_w(pattern, t as u32, variant)?;
    let starts = starting_vertices_of(pattern, &w)?;
    if (starts.len() as u64) < r {
        return Err(Error::ConstructionBug(format!(
            "chain of {t} copies has only {} starting vertices, need {r}",
            starts.len()
        )));
    }
    let lo = starts[starts.len() - r as usize];
    let hi = *starts.last().unwrap();

    let spine_set: HashSet<Vertex> = w.spine.iter().copied().collect();
    let tree = w.rooted.tree();
    let mut members: Vec<Vertex> = Vec::new();
    for idx in lo..=hi {
        let s = w.spine[idx as usize - 1];
        // s plus its pendant subtrees (never through another spine vertex)
        let mut stack = vec![s];
        let mut seen: HashSet<Vertex> = HashSet::from([s]);
        while let Some(x) = stack.pop() {
            members.push(x);
            for &nb in tree.neighbors(x) {
                if !spine_set.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
    }
    members.sort_unstable();
    let rank: HashMap<Vertex, u32> = members
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    let edges = tree
        .edges()
        .iter()
        .filter(|(x, y)| rank.contains_key(x) && rank.contains_key(y))
        .map(|(x, y)| (rank[x], rank[y]));
    let sub = LabeledTree::new(members.len() as u32, edges)?;
    RootedTree::new(sub, rank[&w.spine[lo as usize - 1]])
}

/// Packing counts of the extraction family, with the recurrence they satisfy
/// verified on the computed range.
#[derive(Clone, Debug)]
pub struct GSequence {
    pub variant: Variant,
    /// Starting-vertex count in the first spine window.
    pub d: u32,
    /// Lag of the recurrence g(r) = g(r-1) + g(r-order).
    pub order: u32,
    /// `values[i]` is the count for index i+1.
    pub values: Vec<BigCount>,
}

/// Count packings in Y_1 ... Y_{r_max} directly and verify the shift
/// recurrence on the whole computed range.
pub fn g_sequence(pattern: &LabeledTree, r_max: u32, variant: Variant) -> Result<GSequence> {
    if r_max < 1 {
        return Err(Error::IndexOutOfRange(r_max as i64));
    }
    let d = compute_d(pattern, variant)?;
    let order = recurrence_order(d, variant);
    let table = PatternTable::new(pattern);
    let mut values: Vec<BigCount> = Vec::with_capacity(r_max as usize);
    for r in 1..=r_max {
        let y = build_yr_with_d(pattern, r as u64, variant, d)?;
        values.push(table.count(y.tree(), variant));
    }
    for r in (order as usize + 1)..=(r_max as usize) {
        let expect = &values[r - 2] + &values[r - 1 - order as usize];
        if values[r - 1] != expect {
            return Err(Error::ConstructionBug(format!(
                "count sequence violates its recurrence at index {r}: {} != {expect}",
                values[r - 1]
            )));
        }
    }
    Ok(GSequence {
        variant,
        d,
        order,
        values,
    })
}

fn recurrence_order(d: u32, variant: Variant) -> u32 {
    match variant {
        Variant::Plain => d,
        Variant::Induced => d + 1,
    }
}

/// First index past the seed range whose extraction has a packing count
/// divisible by m. The seeds (indices 1..=order) are obtained by direct
/// modular counting and only feed the recurrence; the search inspects the
/// iterated values r = order+1, order+2, ... The sequence is periodic modulo
/// m with period at most m^order, so a hit is guaranteed within that many
/// steps and the search is capped there.
pub fn find_r0(pattern: &LabeledTree, m: u64, variant: Variant) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let d = compute_d(pattern, variant)?;
    let order = recurrence_order(d, variant);
    let table = PatternTable::new(pattern);

    let mut window: VecDeque<u64> = VecDeque::with_capacity(order as usize);
    for r in 1..=order {
        let y = build_yr_with_d(pattern, r as u64, variant, d)?;
        let res = table.count_mod(y.tree(), m, variant)?;
        window.push_back(res.value());
    }

    let cap = (m as u128)
        .checked_pow(order)
        .unwrap_or(u128::MAX)
        .saturating_add(order as u128);
    let mut r = order as u64;
    loop {
        r += 1;
        if r as u128 > cap {
            return Err(Error::ResidueSearchExceeded(cap));
        }
        let next = ((*window.back().unwrap() as u128 + *window.front().unwrap() as u128)
            % m as u128) as u64;
        if next == 0 {
            return Ok(r);
        }
        window.pop_front();
        window.push_back(next);
    }
}

type YCacheKey = (u32, Vec<(Vertex, Vertex)>, u64, Variant);

fn y_cache() -> &'static RwLock<HashMap<YCacheKey, RootedTree>> {
    static CACHE: OnceLock<RwLock<HashMap<YCacheKey, RootedTree>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// A rooted tree whose packing count is divisible by m: the extraction at
/// the index [`find_r0`] returns. The count is re-checked before the result
/// is returned, and results are cached per (pattern, m, variant).
pub fn build_y(pattern: &LabeledTree, m: u64, variant: Variant) -> Result<RootedTree> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let key: YCacheKey = (pattern.n(), pattern.edges().to_vec(), m, variant);
    if let Some(y) = y_cache().read().unwrap().get(&key) {
        return Ok(y.clone());
    }
    let r0 = find_r0(pattern, m, variant)?;
    let y = build_yr(pattern, r0, variant)?;
    let check = count_mod(pattern, y.tree(), m, variant)?;
    if !check.is_zero() {
        return Err(Error::ConstructionBug(format!(
            "count of the r0={r0} extraction is {} mod {m}, expected 0",
            check.value()
        )));
    }
    y_cache().write().unwrap().insert(key, y.clone());
    Ok(y)
}

/// The nullifying tree: a fresh root with enough copies of the zero-residue
/// tree hanging off it that any copy of the pattern covering the hosting
/// edge must leave at least one copy untouched. Plain: maxdeg(F)+1 copies,
/// each joined to the root by an edge. Induced: maxdeg(F)+2 copies, one
/// joined by an edge and the rest through a fresh middle vertex each.
pub fn build_z(pattern: &LabeledTree, m: u64, variant: Variant) -> Result<RootedTree> {
    let y = build_y(pattern, m, variant)?;
    let delta = pattern.max_degree();
    let mut z = LabeledTree::single();
    match variant {
        Variant::Plain => {
            for _ in 0..=delta {
                z = z.graft(1, &y, 1)?;
            }
        }
        Variant::Induced => {
            z = z.graft(1, &y, 1)?;
            for _ in 0..=delta {
                z = z.graft(1, &y, 2)?;
            }
        }
    }
    RootedTree::new(z, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count;
    use num_traits::Zero;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn spine_examples() {
        let sp = spine(&LabeledTree::path(2));
        assert_eq!((sp.l, sp.b.clone()), (1, vec![1, 1]));

        let sp = spine(&LabeledTree::path(3));
        assert_eq!((sp.l, sp.b.clone()), (2, vec![1, 1, 1]));

        // star on four vertices: the center keeps one pendant leaf
        let sp = spine(&LabeledTree::star(4));
        assert_eq!(sp.l, 2);
        assert_eq!(sp.b, vec![1, 2, 1]);

        let sp = spine(&LabeledTree::single());
        assert_eq!((sp.l, sp.b.clone()), (0, vec![1]));
    }

    #[test]
    fn spine_size_identity() {
        for pattern in [
            LabeledTree::path(5),
            LabeledTree::star(6),
            LabeledTree::from_pruefer(&[2, 3, 2, 5]).unwrap(),
        ] {
            let sp = spine(&pattern);
            assert_eq!(sp.b.iter().sum::<u32>(), pattern.n());
            assert_eq!(1 + sp.b[..sp.l as usize].iter().sum::<u32>(), pattern.n());
        }
    }

    #[test]
    fn chain_shapes() {
        let w = build_w(&LabeledTree::path(2), 3, Variant::Plain).unwrap();
        assert_eq!(w.rooted.tree().n(), 4);
        assert_eq!(w.rooted.tree().max_degree(), 2);
        assert_eq!(w.spine.len(), 4);

        let w = build_w(&LabeledTree::single(), 4, Variant::Induced).unwrap();
        assert_eq!(w.rooted.tree().n(), 4);
        assert_eq!(w.rooted.tree().max_degree(), 2);

        let w = build_w(&LabeledTree::path(2), 1, Variant::Plain).unwrap();
        assert_eq!(w.rooted.tree().edges(), &[(1, 2)]);

        assert!(build_w(&LabeledTree::single(), 3, Variant::Plain).is_err());
        assert!(build_w(&LabeledTree::path(2), 0, Variant::Plain).is_err());
    }

    #[test]
    fn chain_vertex_counts() {
        let star = LabeledTree::star(4);
        for t in 1..=5 {
            let plain = build_w(&star, t, Variant::Plain).unwrap();
            assert_eq!(plain.rooted.tree().n(), t * 4 - (t - 1));
            let induced = build_w(&star, t, Variant::Induced).unwrap();
            assert_eq!(induced.rooted.tree().n(), t * 4);
        }
    }

    #[test]
    fn starting_vertex_examples() {
        // edges of a path: every spine index except the last starts a copy
        let starts = starting_vertices(&LabeledTree::path(2), 4, Variant::Plain).unwrap();
        assert_eq!(starts, vec![1, 2, 3, 4]);

        let starts = starting_vertices(&LabeledTree::path(3), 4, Variant::Plain).unwrap();
        assert_eq!(starts, (1..=7).collect::<Vec<_>>());

        let starts = starting_vertices(&LabeledTree::single(), 4, Variant::Induced).unwrap();
        assert_eq!(starts, vec![1, 2, 3, 4]);
    }

    #[test]
    fn starting_vertex_totals_match_closed_forms() {
        for pattern in [
            LabeledTree::path(2),
            LabeledTree::path(3),
            LabeledTree::star(4),
        ] {
            let d = compute_d(&pattern, Variant::Plain).unwrap();
            for t in 2..=6u32 {
                let starts = starting_vertices(&pattern, t, Variant::Plain).unwrap();
                assert_eq!(starts.len() as u32, 1 + (t - 1) * (d - 1), "plain, t={t}");
            }
            let d = compute_d(&pattern, Variant::Induced).unwrap();
            for t in 2..=6u32 {
                let starts = starting_vertices(&pattern, t, Variant::Induced).unwrap();
                assert_eq!(starts.len() as u32, (t - 1) * d + 1, "induced, t={t}");
            }
        }
    }

    #[test]
    fn lag_examples() {
        assert_eq!(compute_d(&LabeledTree::path(2), Variant::Plain).unwrap(), 2);
        assert_eq!(compute_d(&LabeledTree::path(3), Variant::Plain).unwrap(), 3);
        assert_eq!(
            compute_d(&LabeledTree::single(), Variant::Induced).unwrap(),
            1
        );
        assert_eq!(compute_d(&LabeledTree::star(4), Variant::Plain).unwrap(), 2);
    }

    #[test]
    fn extraction_examples() {
        // for a path pattern the extractions are paths
        for r in 1..=6u64 {
            let y = build_yr(&LabeledTree::path(2), r, Variant::Plain).unwrap();
            assert_eq!(y.tree().n() as u64, r);
            assert!(y.tree().max_degree() <= 2);

            let y = build_yr(&LabeledTree::single(), r, Variant::Induced).unwrap();
            assert_eq!(y.tree().n() as u64, r);
        }
        // index d recovers the pattern itself
        let y = build_yr(&LabeledTree::path(2), 2, Variant::Plain).unwrap();
        assert_eq!(y.tree().edges(), LabeledTree::path(2).edges());

        // star pattern, index d: the pattern again, rooted at a leaf
        let y = build_yr(&LabeledTree::star(4), 2, Variant::Plain).unwrap();
        assert!(crate::canon::rooted_iso(
            &y,
            &RootedTree::new(LabeledTree::star(4), 2).unwrap()
        ));
        assert_eq!(
            count(&LabeledTree::star(4), y.tree(), Variant::Plain),
            big(2)
        );
    }

    #[test]
    fn extra_vertex_extraction_induced() {
        // index d+1 is the pattern plus one extra vertex at the spine tail
        let d = compute_d(&LabeledTree::path(2), Variant::Induced).unwrap();
        let y = build_yr(&LabeledTree::path(2), (d + 1) as u64, Variant::Induced).unwrap();
        assert_eq!(y.tree().n(), 3);
    }

    #[test]
    fn g_sequence_fibonacci() {
        let gs = g_sequence(&LabeledTree::path(2), 10, Variant::Plain).unwrap();
        assert_eq!(gs.d, 2);
        assert_eq!(gs.order, 2);
        let expect: Vec<BigCount> = [1u64, 2, 3, 5, 8, 13, 21, 34, 55, 89]
            .iter()
            .map(|&v| big(v))
            .collect();
        assert_eq!(gs.values, expect);

        let gs = g_sequence(&LabeledTree::single(), 8, Variant::Induced).unwrap();
        assert_eq!(gs.d, 1);
        assert_eq!(gs.order, 2);
        let expect: Vec<BigCount> = [2u64, 3, 5, 8, 13, 21, 34, 55]
            .iter()
            .map(|&v| big(v))
            .collect();
        assert_eq!(gs.values, expect);
    }

    #[test]
    fn g_sequence_boundary_values() {
        // counts are 1 strictly below the lag and 2 at it
        for pattern in [LabeledTree::path(3), LabeledTree::star(4)] {
            let gs = g_sequence(&pattern, 8, Variant::Plain).unwrap();
            for r in 1..gs.d {
                assert_eq!(gs.values[r as usize - 1], big(1));
            }
            assert_eq!(gs.values[gs.d as usize - 1], big(2));
        }
    }

    #[test]
    fn first_zero_index_examples() {
        assert_eq!(
            find_r0(&LabeledTree::path(2), 2, Variant::Plain).unwrap(),
            5
        );
        assert_eq!(
            find_r0(&LabeledTree::path(2), 3, Variant::Plain).unwrap(),
            3
        );
        assert_eq!(
            find_r0(&LabeledTree::single(), 2, Variant::Induced).unwrap(),
            4
        );
    }

    #[test]
    fn first_zero_index_is_minimal_past_the_seeds() {
        for m in [2u64, 3, 5, 6] {
            let r0 = find_r0(&LabeledTree::path(3), m, Variant::Plain).unwrap();
            let gs = g_sequence(&LabeledTree::path(3), r0 as u32, Variant::Plain).unwrap();
            assert!(r0 > gs.order as u64);
            for r in (gs.order as u64 + 1)..r0 {
                let v = &gs.values[r as usize - 1] % m;
                assert!(!v.is_zero(), "earlier zero at {r} for modulus {m}");
            }
            assert!((&gs.values[r0 as usize - 1] % m).is_zero());
        }
    }

    #[test]
    fn zero_residue_trees() {
        let y = build_y(&LabeledTree::path(2), 2, Variant::Plain).unwrap();
        assert_eq!(y.tree().n(), 5);
        assert_eq!(
            count(&LabeledTree::path(2), y.tree(), Variant::Plain),
            big(8)
        );

        let y = build_y(&LabeledTree::single(), 2, Variant::Induced).unwrap();
        assert_eq!(y.tree().n(), 4);
        assert_eq!(
            count(&LabeledTree::single(), y.tree(), Variant::Induced),
            big(8)
        );

        let y = build_y(&LabeledTree::path(3), 2, Variant::Plain).unwrap();
        assert!(
            count_mod(&LabeledTree::path(3), y.tree(), 2, Variant::Plain)
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn zero_residue_holds_for_prime_power_moduli() {
        for (pattern, variant) in [
            (LabeledTree::path(3), Variant::Plain),
            (LabeledTree::star(4), Variant::Plain),
            (LabeledTree::path(2), Variant::Induced),
        ] {
            for m in [2u64, 3, 4, 6, 9] {
                let y = build_y(&pattern, m, variant).unwrap();
                assert!(
                    count_mod(&pattern, y.tree(), m, variant).unwrap().is_zero(),
                    "{pattern:?} {variant:?} mod {m}"
                );
            }
        }
    }

    #[test]
    fn nullifier_sizes() {
        let z = build_z(&LabeledTree::path(2), 2, Variant::Plain).unwrap();
        assert_eq!(z.tree().n(), 11);
        assert_eq!(z.root(), 1);
        assert_eq!(z.tree().degree(1), 2);

        let z = build_z(&LabeledTree::single(), 2, Variant::Induced).unwrap();
        assert_eq!(z.tree().n(), 10);
        assert_eq!(z.tree().degree(1), 2);
    }

    #[test]
    fn nullifier_forces_zero_residue() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for (pattern, variant, m) in [
            (LabeledTree::path(2), Variant::Plain, 2u64),
            (LabeledTree::path(3), Variant::Plain, 3),
            (LabeledTree::single(), Variant::Induced, 4),
        ] {
            let z = build_z(&pattern, m, variant).unwrap();
            for _ in 0..5 {
                let code: Vec<u32> = (0..18).map(|_| rng.random_range(1..=20)).collect();
                let host = LabeledTree::from_pruefer(&code).unwrap();
                let at = rng.random_range(1..=host.n());
                let grafted = host.graft(at, &z, 1).unwrap();
                let res = count_mod(&pattern, &grafted, m, variant).unwrap();
                assert!(res.is_zero(), "{pattern:?} {variant:?} mod {m}");
            }
        }
    }
}
