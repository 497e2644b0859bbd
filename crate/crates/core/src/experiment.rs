//! Monte Carlo machinery: uniform random labeled trees, residue-distribution
//! experiments, leaf-pattern frequency estimates, and the edge statistic on
//! random functions that links the two.
//!
//! Reproducibility contract: a root seed plus a trial index determines each
//! trial's generator (one cipher stream per trial), trials are aggregated in
//! index order, and reports are bit-identical for any worker count.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canon, has_r_leaf};
use crate::count::{PatternTable, Variant};
use crate::error::{Error, Result};
use crate::joyal::{joyal_tree, FunctionTable};
use crate::pattern;
use crate::tree::{LabeledTree, RootedTree, Vertex};

/// How to draw a uniform labeled tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampler {
    /// Decode n-2 i.i.d. labels.
    Pruefer,
    /// Push a uniform function through the marked-tree bijection and drop
    /// the marks; every unmarked tree has exactly n^2 preimages, so the
    /// result is uniform too.
    Joyal,
}

impl Sampler {
    pub fn sample(self, n: u32, rng: &mut impl Rng) -> Result<LabeledTree> {
        if n == 0 {
            return Err(Error::NotATree("vertex count must be at least 1".into()));
        }
        match self {
            Sampler::Pruefer => {
                if n == 1 {
                    return Ok(LabeledTree::single());
                }
                let code: Vec<Vertex> = (0..n - 2).map(|_| rng.random_range(1..=n)).collect();
                LabeledTree::from_pruefer(&code)
            }
            Sampler::Joyal => {
                let values: Vec<Vertex> = (0..n).map(|_| rng.random_range(1..=n)).collect();
                let f = FunctionTable::new(values)?;
                Ok(joyal_tree(&f).tree)
            }
        }
    }
}

impl std::str::FromStr for Sampler {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pruefer" => Ok(Sampler::Pruefer),
            "joyal" => Ok(Sampler::Joyal),
            other => Err(Error::Parse(format!("unknown sampler {other:?}"))),
        }
    }
}

/// Uniform random labeled tree on n vertices.
pub fn sample_tree(n: u32, rng: &mut impl Rng, sampler: Sampler) -> Result<LabeledTree> {
    sampler.sample(n, rng)
}

/// The generator for one trial: one cipher stream per trial index under a
/// shared key, so trials are independent and order-free.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Parameters of a residue experiment.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrialConfig {
    pub n: u32,
    pub m: u64,
    /// Pattern shorthand: `vertex | edge | path:k | star:k | file:<path>`.
    pub pattern: String,
    pub variant: Variant,
    pub trials: u64,
    pub seed: u64,
    pub sampler: Sampler,
    /// Worker count; 0 means "whatever the global pool has".
    pub threads: usize,
}

/// Aggregated result of a residue experiment.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: TrialConfig,
    /// `histogram[r]` = number of trials with residue r; sums to trials.
    pub histogram: Vec<u64>,
    pub fraction_zero: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
    pub seed: u64,
    pub wall_ms: u64,
}

/// Per-trial residues of the packing count, in trial order.
pub fn residue_trials(cfg: &TrialConfig) -> Result<Vec<u64>> {
    if cfg.n == 0 || cfg.trials == 0 {
        return Err(Error::Parse("need n >= 1 and trials >= 1".into()));
    }
    if cfg.m == 0 {
        return Err(Error::ZeroModulus);
    }
    let pattern = pattern::parse(&cfg.pattern)?;
    let table = PatternTable::new(&pattern);

    let run = |trial: u64| -> Result<u64> {
        let mut rng = trial_rng(cfg.seed, trial);
        let tree = cfg.sampler.sample(cfg.n, &mut rng)?;
        Ok(table.count_mod(&tree, cfg.m, cfg.variant)?.value())
    };

    if cfg.threads == 1 {
        (0..cfg.trials).map(run).collect()
    } else {
        let work = || (0..cfg.trials).into_par_iter().map(run).collect();
        match cfg.threads {
            0 => work(),
            k => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Parse(format!("thread pool: {e}")))?
                .install(work),
        }
    }
}

/// Run the experiment and aggregate residues into a report.
pub fn residue_experiment(cfg: &TrialConfig) -> Result<ExperimentReport> {
    let start = Instant::now();
    let residues = residue_trials(cfg)?;
    aggregate_report(cfg, &residues, start.elapsed().as_millis() as u64)
}

/// Fold per-trial residues into a report. Aggregation is a fixed-order fold,
/// so equal residue vectors give byte-equal reports.
pub fn aggregate_report(
    cfg: &TrialConfig,
    residues: &[u64],
    wall_ms: u64,
) -> Result<ExperimentReport> {
    // the report carries one histogram bucket per residue class
    if cfg.m > 1_000_000 {
        return Err(Error::Parse(format!(
            "modulus {} is too large to histogram; use the per-trial dump",
            cfg.m
        )));
    }
    let mut histogram = vec![0u64; cfg.m as usize];
    for &r in residues {
        histogram[r as usize] += 1;
    }
    let zeros = histogram[0];
    let (wilson_low, wilson_high) = wilson_interval(zeros, cfg.trials);
    Ok(ExperimentReport {
        config: cfg.clone(),
        histogram,
        fraction_zero: zeros as f64 / cfg.trials as f64,
        wilson_low,
        wilson_high,
        seed: cfg.seed,
        wall_ms,
    })
}

/// Result of a leaf-pattern frequency estimate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RLeafReport {
    pub n: u32,
    pub r_size: u32,
    pub trials: u64,
    pub seed: u64,
    pub present: u64,
    pub frequency: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
    pub wall_ms: u64,
}

/// Fraction of uniform random trees on n vertices having `r` as a rooted
/// split component.
pub fn rleaf_experiment(r: &RootedTree, n: u32, trials: u64, seed: u64) -> Result<RLeafReport> {
    if n < r.tree().n() + 1 {
        return Err(Error::Parse(format!(
            "host size {n} cannot exhibit a component of size {}",
            r.tree().n()
        )));
    }
    if trials == 0 {
        return Err(Error::Parse("need trials >= 1".into()));
    }
    let start = Instant::now();
    let mut present = 0u64;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let tree = Sampler::Pruefer.sample(n, &mut rng)?;
        if has_r_leaf(&tree, r)?.is_some() {
            present += 1;
        }
    }
    let (wilson_low, wilson_high) = wilson_interval(present, trials);
    Ok(RLeafReport {
        n,
        r_size: r.tree().n(),
        trials,
        seed,
        present,
        frequency: present as f64 / trials as f64,
        wilson_low,
        wilson_high,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// Number of directed edges u -> f(u) such that u lies on no cycle and the
/// in-tree of u (u plus everything that reaches it, rooted at u) is
/// root-isomorphic to `r`. Whenever this is positive, the tree image of f
/// has an `r`-component split off by the edge {f(u), u}.
pub fn x_statistic(f: &FunctionTable, r: &RootedTree) -> u64 {
    let n = f.n();
    let target = canon(r);
    let want = target.size() as usize;

    let mut on_cycle = vec![false; n as usize + 1];
    for v in f.cycle_vertices() {
        on_cycle[v as usize] = true;
    }
    let mut preimages: Vec<Vec<Vertex>> = vec![Vec::new(); n as usize + 1];
    for i in 1..=n {
        preimages[f.apply(i) as usize].push(i);
    }

    let mut count = 0u64;
    for u in 1..=n {
        if on_cycle[u as usize] {
            continue;
        }
        // nothing on a cycle can reach u, so the in-tree is clean by
        // construction; collect it, bailing out past the target size
        let mut members = vec![u];
        let mut head = 0;
        while head < members.len() && members.len() <= want {
            let x = members[head];
            head += 1;
            members.extend(preimages[x as usize].iter().copied());
        }
        if members.len() != want {
            continue;
        }
        let mut sorted = members.clone();
        sorted.sort_unstable();
        let rank = |v: Vertex| (sorted.binary_search(&v).unwrap() + 1) as u32;
        let edges = members
            .iter()
            .filter(|&&w| w != u)
            .map(|&w| (rank(w), rank(f.apply(w))));
        let in_tree = LabeledTree::new(want as u32, edges).expect("in-tree is a tree");
        let rooted = RootedTree::new(in_tree, rank(u)).unwrap();
        if canon(&rooted) == target {
            count += 1;
        }
    }
    count
}

/// 95% Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let spread = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    (
        ((center - spread) / denom).max(0.0),
        ((center + spread) / denom).min(1.0),
    )
}
