//! Command-line front end. Exit codes: 0 success, 1 internal invariant
//! violation, 2 rejected input or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fmatch::construct::{build_y, build_z, find_r0, g_sequence};
use fmatch::count::{count, count_mod, oracle_count, Variant, DEFAULT_ORACLE_CAP};
use fmatch::enumerate::labeled_trees;
use fmatch::experiment::{
    aggregate_report, residue_experiment, residue_trials, rleaf_experiment, wilson_interval,
    Sampler, TrialConfig,
};
use fmatch::joyal::{joyal_inverse, joyal_tree, FunctionTable};
use fmatch::tree::RootedTree;
use fmatch::{io, pattern, Error};

#[derive(Parser)]
#[command(
    name = "fmatch",
    version,
    about = "Count pattern-tree packings in trees, build nullifying trees, and run random-tree experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SamplerArg {
    Pruefer,
    Joyal,
}

impl From<SamplerArg> for Sampler {
    fn from(s: SamplerArg) -> Sampler {
        match s {
            SamplerArg::Pruefer => Sampler::Pruefer,
            SamplerArg::Joyal => Sampler::Joyal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count packings of a pattern in a tree read from a file
    Count {
        /// Pattern: `vertex | edge | path:<k> | star:<k> | file:<path>`
        #[arg(long = "F")]
        pattern: String,
        /// Host tree, edge-list format
        #[arg(long)]
        tree: PathBuf,
        /// Count induced packings instead of plain ones
        #[arg(long)]
        induced: bool,
        /// Reduce modulo m (computed natively in modular arithmetic)
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Build the zero-residue tree Y and the nullifying tree Z for a pattern
    /// and modulus, and write their edge lists
    Nullify {
        #[arg(long = "F")]
        pattern: String,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        induced: bool,
        /// Directory for Y.txt and Z.txt
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Print the packing counts of the extraction family and the lag of the
    /// recurrence they satisfy
    Recurrence {
        #[arg(long = "F")]
        pattern: String,
        #[arg(long)]
        induced: bool,
        /// Largest index to count
        #[arg(long, default_value_t = 12)]
        rmax: u32,
    },
    /// Sample random trees and histogram the packing count modulo m
    Montecarlo {
        #[arg(long = "F")]
        pattern: String,
        #[arg(long)]
        n: u32,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        induced: bool,
        /// Worker threads; 0 = default pool
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = SamplerArg::Pruefer)]
        sampler: SamplerArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also write the JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate how often a random tree has the given rooted tree as a
    /// split component
    Rleaf {
        /// Rooted component pattern (same grammar as --F)
        #[arg(long = "R")]
        pattern: String,
        /// Root label inside that pattern
        #[arg(long, default_value_t = 1)]
        root: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a function through the marked-tree bijection and check the
    /// roundtrip
    Joyal {
        /// Comma-separated values f(1),...,f(n)
        #[arg(long)]
        func: String,
    },
    /// Cross-check the counting backends against the brute-force oracle on
    /// all small trees
    Selftest {
        /// Largest host size to enumerate exhaustively
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
}

fn main() -> ExitCode {
    // die quietly when the read end of a pipe goes away (`fmatch ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_invariant_violation() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn variant_of(induced: bool) -> Variant {
    if induced {
        Variant::Induced
    } else {
        Variant::Plain
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Count {
            pattern,
            tree,
            induced,
            modulus,
        } => {
            let f = pattern::parse(&pattern)?;
            let host = io::read_tree(&tree)?;
            let variant = variant_of(induced);
            match modulus {
                Some(m) => println!("{}", count_mod(&f, &host, m, variant)?.value()),
                None => println!("{}", count(&f, &host, variant)),
            }
            Ok(())
        }
        Command::Nullify {
            pattern,
            modulus,
            induced,
            out,
        } => {
            let f = pattern::parse(&pattern)?;
            let variant = variant_of(induced);
            let r0 = find_r0(&f, modulus, variant)?;
            let y = build_y(&f, modulus, variant)?;
            let z = build_z(&f, modulus, variant)?;
            println!("r0 = {r0}");
            println!("|Y| = {}", y.tree().n());
            println!("|Z| = {}", z.tree().n());
            std::fs::create_dir_all(&out)?;
            let y_path = out.join("Y.txt");
            let z_path = out.join("Z.txt");
            io::write_tree(&y_path, y.tree())?;
            io::write_tree(&z_path, z.tree())?;
            println!("Y root = {} -> {}", y.root(), y_path.display());
            println!("Z root = {} -> {}", z.root(), z_path.display());
            Ok(())
        }
        Command::Recurrence {
            pattern,
            induced,
            rmax,
        } => {
            let f = pattern::parse(&pattern)?;
            let gs = g_sequence(&f, rmax, variant_of(induced))?;
            println!("d = {}", gs.d);
            println!("order = {}", gs.order);
            for (i, v) in gs.values.iter().enumerate() {
                println!("g({}) = {}", i + 1, v);
            }
            // g_sequence fails hard on any violation, so reaching this point
            // certifies the whole printed range
            println!("recurrence verified = true");
            Ok(())
        }
        Command::Montecarlo {
            pattern,
            n,
            modulus,
            trials,
            seed,
            induced,
            threads,
            sampler,
            format,
            out,
        } => {
            let cfg = TrialConfig {
                n,
                m: modulus,
                pattern,
                variant: variant_of(induced),
                trials,
                seed,
                sampler: sampler.into(),
                threads,
            };
            if format == Format::Csv {
                let start = std::time::Instant::now();
                let residues = residue_trials(&cfg)?;
                println!("trial_index,residue");
                for (i, r) in residues.iter().enumerate() {
                    println!("{i},{r}");
                }
                if let Some(path) = &out {
                    let report =
                        aggregate_report(&cfg, &residues, start.elapsed().as_millis() as u64)?;
                    std::fs::write(path, serde_json::to_string_pretty(&report).unwrap())?;
                }
                return Ok(());
            }
            let report = residue_experiment(&cfg)?;
            if let Some(path) = &out {
                std::fs::write(path, serde_json::to_string_pretty(&report).unwrap())?;
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => {
                    println!(
                        "pattern={} variant={:?} n={} mod={} trials={} seed={} sampler={:?}",
                        report.config.pattern,
                        report.config.variant,
                        report.config.n,
                        report.config.m,
                        report.config.trials,
                        report.seed,
                        report.config.sampler,
                    );
                    for (r, c) in report.histogram.iter().enumerate() {
                        println!("residue {r}: {c}");
                    }
                    println!(
                        "fraction_zero = {:.6} wilson95 = [{:.6}, {:.6}] wall_ms = {}",
                        report.fraction_zero, report.wilson_low, report.wilson_high, report.wall_ms
                    );
                }
                Format::Csv => unreachable!(),
            }
            Ok(())
        }
        Command::Rleaf {
            pattern,
            root,
            n,
            trials,
            seed,
            format,
            out,
        } => {
            let rt = RootedTree::new(pattern::parse(&pattern)?, root)?;
            let report = rleaf_experiment(&rt, n, trials, seed)?;
            if let Some(path) = &out {
                std::fs::write(path, serde_json::to_string_pretty(&report).unwrap())?;
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                _ => println!(
                    "n={} r_size={} trials={} seed={} present={} frequency={:.6} wilson95=[{:.6}, {:.6}]",
                    report.n,
                    report.r_size,
                    report.trials,
                    report.seed,
                    report.present,
                    report.frequency,
                    report.wilson_low,
                    report.wilson_high,
                ),
            }
            Ok(())
        }
        Command::Joyal { func } => {
            let values = func
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("function value: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let f = FunctionTable::new(values)?;
            let mt = joyal_tree(&f);
            println!("n = {}", mt.tree.n());
            println!("left = {}", mt.left);
            println!("right = {}", mt.right);
            print!("{}", io::format_tree(&mt.tree));
            if joyal_inverse(&mt) == f {
                println!("roundtrip = ok");
                Ok(())
            } else {
                Err(Error::ConstructionBug(
                    "bijection roundtrip mismatch".into(),
                ))
            }
        }
        Command::Selftest { max_n } => selftest(max_n),
    }
}

fn oracle_cap() -> usize {
    std::env::var("FMATCH_ORACLE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

fn selftest(max_n: u32) -> Result<(), Error> {
    let cap = oracle_cap();
    let patterns = [
        ("vertex", pattern::parse("vertex")?),
        ("edge", pattern::parse("edge")?),
        ("path:3", pattern::parse("path:3")?),
        ("star:3", pattern::parse("star:3")?),
    ];
    let moduli = [2u64, 3, 5, 7, 16];
    let mut instances = 0u64;
    for n in 1..=max_n {
        for host in labeled_trees(n) {
            for (name, f) in &patterns {
                for variant in [Variant::Plain, Variant::Induced] {
                    let dp = count(f, &host, variant);
                    let brute = oracle_count(f, &host, variant, cap)?;
                    if dp != brute {
                        return Err(Error::ConstructionBug(format!(
                            "count {dp} != oracle {brute} for pattern {name}, host {host:?}, {variant:?}"
                        )));
                    }
                    for &m in &moduli {
                        let res = count_mod(f, &host, m, variant)?;
                        if &dp % m != res.value().into() {
                            return Err(Error::ConstructionBug(format!(
                                "modular backend disagrees for pattern {name}, host {host:?}, m={m}"
                            )));
                        }
                    }
                    instances += 1;
                }
            }
        }
        println!("selftest: host size {n} done");
    }
    // spot-check the confidence interval helper against a hand value
    let (lo, hi) = wilson_interval(190, 200);
    if !(lo < 0.95 && 0.95 < hi) {
        return Err(Error::ConstructionBug("confidence interval off".into()));
    }
    println!("selftest: {instances} instances checked, all backends agree");
    Ok(())
}
