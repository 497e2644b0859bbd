//! Counting packings of a pattern tree F into a host tree T.
//!
//! A packing ("F-matching") is a set of pairwise vertex-disjoint subgraph
//! copies of F; the empty set counts. The induced variant additionally
//! forbids host edges joining covered vertices of two distinct copies.
//!
//! The count is computed by a fragment-class dynamic program that counts
//! subgraph copies directly, with no division by automorphism counts, so the
//! same recursion runs over exact big integers and over Z/mZ for any m.
//!
//! States per host vertex v, processed leaves-up:
//! - closed_free: v uncovered, every copy below v complete;
//! - closed_covered: v covered by a copy complete inside v's subtree;
//! - open(c): v covered, playing the root of a fragment of class c whose
//!   copy continues through v's parent.
//!
//! A copy whose topmost host vertex is v assigns one fragment of F to each
//! participating child of v. Summing over root-position orbits of F and
//! extracting the child contribution as the coefficient of a fragment-class
//! multiset counts every subgraph copy exactly once: the multiset coefficient
//! merges assignments that differ only by which same-class fragment went to
//! which child, and root positions with equal rooted codes are merged up
//! front.

mod oracle;

pub use oracle::{enumerate_copies, oracle_count, PatternCopy, DEFAULT_ORACLE_CAP};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::canon::{canon, component_canon, CanonCode};
use crate::error::{Error, Result};
use crate::tree::{bfs_from, Forest, LabeledTree, RootedTree, Vertex};

/// Exact count; arbitrary precision.
pub type BigCount = BigUint;

/// Which packings to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    Induced,
}

/// A count reduced modulo m, with the modulus carried along.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueCount {
    value: u64,
    modulus: u64,
}

impl ResidueCount {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(ResidueCount {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl std::fmt::Display for ResidueCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Rooted component of the pattern minus one edge: the piece of F - {x,p}
/// containing x, rooted at x. Fragments with equal canonical codes share a
/// class id; ids are ranks in the sorted code order.
#[derive(Clone, Debug)]
pub struct Fragment {
    /// Ordered pattern edge (x, p): the fragment hangs at x, the copy
    /// continues through p.
    pub source: (Vertex, Vertex),
    pub rooted: RootedTree,
    pub class: usize,
}

/// All 2(|F|-1) fragments of a pattern, ordered by source edge.
pub fn fragments_of(pattern: &LabeledTree) -> Vec<Fragment> {
    PatternTable::new(pattern).fragments
}

/// Pattern-side precomputation shared by every host evaluation: fragment
/// classes, root-position orbits, and the multiset-coefficient layout.
/// Immutable after construction; cheap to share across threads.
pub struct PatternTable {
    pattern: LabeledTree,
    fragments: Vec<Fragment>,
    class_codes: Vec<CanonCode>,
    /// Mixed-radix layout of the coefficient table: per-class capacity and
    /// stride, plus precomputed target indices.
    caps: Vec<u32>,
    strides: Vec<usize>,
    table_len: usize,
    /// Table index of each class's child multiset: the open-state target.
    class_targets: Vec<usize>,
    /// Table index of each root-position orbit's neighbor multiset.
    role_targets: Vec<usize>,
}

impl PatternTable {
    pub fn new(pattern: &LabeledTree) -> Self {
        let n = pattern.n();

        // Fragment per ordered edge; classes by sorted distinct code.
        let mut raw: Vec<((Vertex, Vertex), RootedTree, CanonCode)> = Vec::new();
        for &(u, v) in pattern.edges() {
            for (x, p) in [(v, u), (u, v)] {
                let (side_x, _) = pattern.split_edge(p, x).expect("edge of the pattern");
                let code = canon(&side_x.tree);
                raw.push(((x, p), side_x.tree, code));
            }
        }
        raw.sort_by_key(|(source, _, _)| *source);
        let mut codes: Vec<CanonCode> = raw.iter().map(|(_, _, c)| c.clone()).collect();
        codes.sort_unstable();
        codes.dedup();
        let class_of = |code: &CanonCode| codes.binary_search(code).unwrap();
        let fragments: Vec<Fragment> = raw
            .into_iter()
            .map(|(source, rooted, code)| Fragment {
                source,
                rooted,
                class: class_of(&code),
            })
            .collect();
        let n_classes = codes.len();

        // Class id of fragment (x, p), addressable by the ordered edge.
        let mut frag_class = std::collections::HashMap::new();
        for fr in &fragments {
            frag_class.insert(fr.source, fr.class);
        }

        // Per class: the multiset (as per-class counts) of the fragment
        // root's child fragments.
        let class_multisets: Vec<Vec<u32>> = (0..n_classes)
            .map(|ci| {
                let rep = fragments.iter().find(|fr| fr.class == ci).unwrap();
                let (x, p) = rep.source;
                let mut counts = vec![0u32; n_classes];
                for &z in pattern.neighbors(x) {
                    if z != p {
                        counts[frag_class[&(z, x)]] += 1;
                    }
                }
                counts
            })
            .collect();

        // Root positions of the pattern, merged by rooted code: positions
        // with equal codes are related by a pattern automorphism and would
        // otherwise count the same copy twice. Per orbit, the multiset of
        // the position's neighbor fragments.
        let mut seen_role_codes: Vec<CanonCode> = Vec::new();
        let mut role_multisets: Vec<Vec<u32>> = Vec::new();
        for y in 1..=n {
            let code = component_canon(pattern, y, None);
            if seen_role_codes.contains(&code) {
                continue;
            }
            seen_role_codes.push(code);
            let mut counts = vec![0u32; n_classes];
            for &z in pattern.neighbors(y) {
                counts[frag_class[&(z, y)]] += 1;
            }
            role_multisets.push(counts);
        }

        let mut caps = vec![0u32; n_classes];
        for target in class_multisets.iter().chain(role_multisets.iter()) {
            for (cap, &t) in caps.iter_mut().zip(target) {
                *cap = (*cap).max(t);
            }
        }
        let mut strides = vec![0usize; n_classes];
        let mut table_len = 1usize;
        for (c, &cap) in caps.iter().enumerate() {
            strides[c] = table_len;
            table_len *= cap as usize + 1;
        }
        let index_of = |counts: &[u32]| -> usize {
            counts
                .iter()
                .enumerate()
                .map(|(c, &k)| strides[c] * k as usize)
                .sum()
        };
        let class_targets = class_multisets.iter().map(|m| index_of(m)).collect();
        let role_targets = role_multisets.iter().map(|m| index_of(m)).collect();

        PatternTable {
            pattern: pattern.clone(),
            fragments,
            class_codes: codes,
            caps,
            strides,
            table_len,
            class_targets,
            role_targets,
        }
    }

    pub fn pattern(&self) -> &LabeledTree {
        &self.pattern
    }

    pub fn fragment_classes(&self) -> usize {
        self.class_codes.len()
    }

    pub fn class_code(&self, class: usize) -> &CanonCode {
        &self.class_codes[class]
    }

    /// Exact number of packings of the pattern into `host`.
    pub fn count(&self, host: &LabeledTree, variant: Variant) -> BigCount {
        self.run(host, variant, &Exact)
    }

    /// The same count reduced modulo `m`, computed natively in Z/mZ.
    pub fn count_mod(&self, host: &LabeledTree, m: u64, variant: Variant) -> Result<ResidueCount> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        let value = self.run(host, variant, &Modular { m });
        ResidueCount::new(value, m)
    }

    fn run<A: CountArith>(&self, host: &LabeledTree, variant: Variant, arith: &A) -> A::Value {
        let n = host.n() as usize;
        let n_classes = self.class_codes.len();
        let (order, parent) = bfs_from(host, 1);
        let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
        for &v in order.iter().skip(1) {
            children[parent[v as usize] as usize].push(v);
        }

        let mut closed_free: Vec<A::Value> = vec![arith.zero(); n + 1];
        let mut closed_covered: Vec<A::Value> = vec![arith.zero(); n + 1];
        let mut open: Vec<Vec<A::Value>> = vec![Vec::new(); n + 1];

        for &v in order.iter().rev() {
            let vi = v as usize;

            // coefficient table over fragment-class multisets
            let mut table: Vec<A::Value> = vec![arith.zero(); self.table_len];
            table[0] = arith.one();
            let mut free = arith.one();

            for &w in &children[vi] {
                let wi = w as usize;
                let mut any_closed = arith.zero();
                arith.add_assign(&mut any_closed, &closed_free[wi]);
                arith.add_assign(&mut any_closed, &closed_covered[wi]);
                // free parent tolerates covered children in both variants;
                // a covered parent tolerates them only in the plain variant
                let closed_term = match variant {
                    Variant::Plain => any_closed.clone(),
                    Variant::Induced => closed_free[wi].clone(),
                };
                free = arith.mul(&free, &any_closed);

                // multiply the table by (closed_term + sum_c open_w[c] x_c);
                // descending order keeps the smaller indices unmodified until
                // they have been read
                for i in (0..self.table_len).rev() {
                    let mut acc = arith.mul(&table[i], &closed_term);
                    for c in 0..n_classes {
                        let digit = (i / self.strides[c]) % (self.caps[c] as usize + 1);
                        if digit > 0 {
                            let prev = &table[i - self.strides[c]];
                            let contrib = arith.mul(prev, &open[wi][c]);
                            arith.add_assign(&mut acc, &contrib);
                        }
                    }
                    table[i] = acc;
                }
            }

            closed_free[vi] = free;
            let mut covered = arith.zero();
            for &target in &self.role_targets {
                arith.add_assign(&mut covered, &table[target]);
            }
            closed_covered[vi] = covered;
            open[vi] = self
                .class_targets
                .iter()
                .map(|&target| table[target].clone())
                .collect();

            // children's state vectors are dead now
            for &w in &children[vi] {
                open[w as usize] = Vec::new();
            }
        }

        let root = order[0] as usize;
        let mut total = arith.zero();
        arith.add_assign(&mut total, &closed_free[root]);
        arith.add_assign(&mut total, &closed_covered[root]);
        total
    }
}

/// Exact number of (induced) packings of `pattern` into `host`, including
/// the empty packing.
pub fn count(pattern: &LabeledTree, host: &LabeledTree, variant: Variant) -> BigCount {
    PatternTable::new(pattern).count(host, variant)
}

/// `count` reduced modulo `m`, computed without big integers.
pub fn count_mod(
    pattern: &LabeledTree,
    host: &LabeledTree,
    m: u64,
    variant: Variant,
) -> Result<ResidueCount> {
    PatternTable::new(pattern).count_mod(host, m, variant)
}

/// Product of per-component counts; 1 for the empty forest.
pub fn count_forest(pattern: &LabeledTree, forest: &Forest, variant: Variant) -> BigCount {
    let table = PatternTable::new(pattern);
    let mut acc: BigCount = One::one();
    for component in &forest.components {
        acc *= table.count(component, variant);
    }
    acc
}

/// Modular version of [`count_forest`].
pub fn count_forest_mod(
    pattern: &LabeledTree,
    forest: &Forest,
    m: u64,
    variant: Variant,
) -> Result<ResidueCount> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let table = PatternTable::new(pattern);
    let mut acc = 1 % m;
    for component in &forest.components {
        let part = table.count_mod(component, m, variant)?;
        acc = ((acc as u128 * part.value() as u128) % m as u128) as u64;
    }
    ResidueCount::new(acc, m)
}

/// Arithmetic the packing recursion is generic over. The recursion uses only
/// addition and multiplication, so any commutative semiring works; exact big
/// integers and Z/mZ are the two backends provided.
trait CountArith {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add_assign(&self, a: &mut Self::Value, b: &Self::Value);
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
}

struct Exact;

impl CountArith for Exact {
    type Value = BigUint;

    fn zero(&self) -> BigUint {
        Zero::zero()
    }

    fn one(&self) -> BigUint {
        One::one()
    }

    fn add_assign(&self, a: &mut BigUint, b: &BigUint) {
        *a += b;
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
}

struct Modular {
    m: u64,
}

impl CountArith for Modular {
    type Value = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.m
    }

    fn add_assign(&self, a: &mut u64, b: &u64) {
        *a = ((*a as u128 + *b as u128) % self.m as u128) as u64;
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }
}
