//! Counting packings of a fixed pattern tree into labeled trees.
//!
//! A packing of a pattern F into a host G is a set of pairwise vertex
//! disjoint subgraph copies of F (the empty set included); the induced
//! variant also forbids host edges between covered vertices of distinct
//! copies. With F an edge this is the Hosoya index, with F a vertex the
//! induced variant is the Merrifield-Simmons index.
//!
//! The crate provides:
//! - the tree substrate: Prüfer codec, marked-tree bijection with functions,
//!   edge splits and grafts ([`tree`], [`joyal`]);
//! - rooted canonical codes and leaf-pattern detection ([`mod@canon`]);
//! - exact and modular packing counts with a brute-force oracle ([`mod@count`]);
//! - construction of trees whose presence as a rooted split component forces
//!   the packing count to vanish modulo m ([`construct`]);
//! - reproducible Monte Carlo experiments over uniform random labeled trees
//!   ([`experiment`]).

pub mod canon;
pub mod construct;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod experiment;
pub mod io;
pub mod joyal;
pub mod pattern;
pub mod tree;

pub use canon::{canon, edge_subtree_codes, has_r_leaf, rooted_iso, CanonCode};
pub use count::{
    count, count_forest, count_forest_mod, count_mod, enumerate_copies, fragments_of, oracle_count,
    BigCount, Fragment, PatternTable, ResidueCount, Variant,
};
pub use error::{Error, Result};
pub use joyal::{joyal_inverse, joyal_tree, FunctionTable, MarkedTree};
pub use tree::{Forest, LabeledTree, RootedTree, SplitSide, Vertex};
