//! Command-line surface: enumeration, counting with oracle cross-checks,
//! the staircase benchmark, canonical testing from stdin, primitive
//! invariants and graph generation.

use std::io::BufRead;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orbigen::catalog;
use orbigen::enum_tree::{CanonicalBfs, EnumStats, GenerationConfig, Mode};
use orbigen::galois;
use orbigen::graphs;
use orbigen::group::{DEFAULT_DESK_BOUND, DEFAULT_ORDER_BOUND};
use orbigen::oracle;
use orbigen::perm::IntVec;
use orbigen::PermutationGroup;

#[derive(Parser)]
#[command(
    name = "orbigen",
    about = "Enumerate integer vectors up to a permutation group action",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the canonical vectors for a group and constraints
    Enumerate {
        #[command(flatten)]
        source: GroupSource,
        #[command(flatten)]
        constraints: ConstraintArgs,
        /// Append a statistics record after the vectors
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the number of canonical vectors
    Count {
        #[command(flatten)]
        source: GroupSource,
        #[command(flatten)]
        constraints: ConstraintArgs,
        /// Cross-check against an independent counting oracle
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
    },
    /// Staircase benchmark over a set of groups, CSV on stdout
    Bench {
        /// "degree5", "small", or a file with one catalog name or group
        /// file path per line
        #[arg(long, default_value = "degree5")]
        group_set: String,
    },
    /// Read vectors from stdin (comma-separated entries), print true/false
    CanonicalTest {
        #[command(flatten)]
        source: GroupSource,
    },
    /// Stabilizer refinement chain and a polynomial with stabilizer
    /// exactly the group
    PrimitiveInvariant {
        #[command(flatten)]
        source: GroupSource,
        /// Cap on the degree of refinement vectors
        #[arg(long)]
        degree_cap: Option<u32>,
    },
    /// Graphs on unlabeled nodes via the pair action
    Graphs {
        #[arg(long)]
        nodes: usize,
        /// Print only the count
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print one incidence vector per isomorphism class
        #[arg(long)]
        list: bool,
        /// Count multigraphs with exactly this many edges instead
        #[arg(long, conflicts_with_all = ["count", "list"])]
        multigraph_edges: Option<u32>,
        /// Render vectors as edge lists like "1-2 1-3"
        #[arg(long, requires = "list")]
        edges: bool,
    },
}

#[derive(Args)]
struct GroupSource {
    /// Group file: a "degree n" header, then one generator per line in
    /// cycle notation
    #[arg(long, conflicts_with = "named")]
    group: Option<PathBuf>,
    /// Catalog name: trivialN, cyclicN, dihedralN, symmetricN,
    /// alternatingN, frobenius20, pairsN
    #[arg(long)]
    named: Option<String>,
}

impl GroupSource {
    fn resolve(&self) -> anyhow::Result<PermutationGroup> {
        match (&self.group, &self.named) {
            (Some(path), None) => catalog::load_group_file(path)
                .with_context(|| format!("loading group file {}", path.display())),
            (None, Some(name)) => Ok(catalog::named(name)?),
            _ => bail!("exactly one of --group and --named is required"),
        }
    }
}

#[derive(Args)]
struct ConstraintArgs {
    /// Only vectors of exactly this degree
    #[arg(long, conflicts_with = "max_degree")]
    degree: Option<u32>,
    /// All vectors of degree at most this
    #[arg(long)]
    max_degree: Option<u32>,
    /// Upper bound on every entry
    #[arg(long)]
    max_part: Option<u32>,
    /// Componentwise ceiling v_i <= n - i
    #[arg(long, conflicts_with = "ceiling")]
    staircase: bool,
    /// Componentwise ceiling, comma-separated entries
    #[arg(long)]
    ceiling: Option<String>,
}

impl ConstraintArgs {
    fn config<'g>(&self, group: &'g PermutationGroup) -> anyhow::Result<GenerationConfig<'g>> {
        let mode = match (self.degree, self.max_degree) {
            (Some(d), None) => Mode::ByDegree(d),
            (None, Some(d)) => Mode::UpToDegree(d),
            (None, None) => Mode::All,
            _ => unreachable!("clap enforces the conflict"),
        };
        let mut cfg = GenerationConfig::new(group, mode);
        if let Some(p) = self.max_part {
            cfg = cfg.with_max_part(p);
        }
        if self.staircase {
            cfg = cfg.under_staircase();
        }
        if let Some(text) = &self.ceiling {
            cfg = cfg.with_ceiling(parse_vector(text)?);
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Burnside,
}

/// The trailing statistics record of an enumeration run.
#[derive(Serialize)]
struct StatsRecord {
    canonicals: u64,
    tests: u64,
    skipped: u64,
    total_orbit_sizes: u64,
    total_explored: u64,
    err: f64,
    ratio: f64,
    complexity: f64,
}

impl StatsRecord {
    fn from_stats(stats: &EnumStats) -> Self {
        StatsRecord {
            canonicals: stats.canonicals_total(),
            tests: stats.tests,
            skipped: stats.skipped,
            total_orbit_sizes: stats.total_orbit_sizes,
            total_explored: stats.total_explored,
            err: stats.err(),
            ratio: stats.ratio(),
            complexity: stats.complexity(),
        }
    }

    fn print(&self, format: Format) -> anyhow::Result<()> {
        match format {
            Format::Plain => {
                println!("canonicals={}", self.canonicals);
                println!("tests={}", self.tests);
                println!("skipped={}", self.skipped);
                println!("total_orbit_sizes={}", self.total_orbit_sizes);
                println!("total_explored={}", self.total_explored);
                println!("err={}", self.err);
                println!("ratio={}", self.ratio);
                println!("complexity={}", self.complexity);
            }
            Format::Json => println!("{}", serde_json::to_string(self)?),
            Format::Csv => {
                println!(
                    "canonicals,tests,skipped,total_orbit_sizes,total_explored,err,ratio,complexity"
                );
                println!(
                    "{},{},{},{},{},{},{},{}",
                    self.canonicals,
                    self.tests,
                    self.skipped,
                    self.total_orbit_sizes,
                    self.total_explored,
                    self.err,
                    self.ratio,
                    self.complexity
                );
            }
        }
        Ok(())
    }
}

fn parse_vector(text: &str) -> anyhow::Result<IntVec> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| anyhow!("invalid vector entry {part:?}"))
        })
        .collect()
}

fn render_vector(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Degree bound for the brute-force searches over S_n, overridable via
/// ORBIGEN_DESK_BOUND.
fn desk_bound() -> anyhow::Result<usize> {
    match std::env::var("ORBIGEN_DESK_BOUND") {
        Ok(text) => text
            .parse()
            .map_err(|_| anyhow!("ORBIGEN_DESK_BOUND must be a positive integer, got {text:?}")),
        Err(_) => Ok(DEFAULT_DESK_BOUND),
    }
}

fn main() {
    match run(Cli::parse()) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Enumerate {
            source,
            constraints,
            stats,
            format,
        } => {
            let group = source.resolve()?;
            let cfg = constraints.config(&group)?;
            if stats {
                let mut it = CanonicalBfs::with_stats(cfg)?;
                for v in it.by_ref() {
                    println!("{}", render_vector(&v));
                }
                StatsRecord::from_stats(it.stats()).print(format)?;
            } else {
                for v in CanonicalBfs::new(cfg)? {
                    println!("{}", render_vector(&v));
                }
            }
            Ok(0)
        }
        Command::Count {
            source,
            constraints,
            oracle,
        } => {
            let group = source.resolve()?;
            let cfg = constraints.config(&group)?;
            let count = orbigen::enum_tree::count_canonicals(cfg.clone())?;
            match oracle {
                None => {
                    println!("{count}");
                    Ok(0)
                }
                Some(Oracle::Burnside) => {
                    let max_part = cfg.max_part.ok_or_else(|| {
                        anyhow!("the burnside oracle needs --max-part (no ceiling support)")
                    })?;
                    if cfg.ceiling.is_some() {
                        bail!("the burnside oracle needs --max-part (no ceiling support)");
                    }
                    let degree = match cfg.mode {
                        Mode::ByDegree(d) => Some(d),
                        Mode::All => None,
                        Mode::UpToDegree(_) => {
                            bail!("the burnside oracle supports --degree or unrestricted runs")
                        }
                    };
                    let expected =
                        oracle::burnside_count(&group, max_part, degree, DEFAULT_ORDER_BOUND)?;
                    println!("{count}");
                    println!("burnside={expected}");
                    if count == expected {
                        Ok(0)
                    } else {
                        eprintln!("oracle mismatch: enumeration {count}, burnside {expected}");
                        Ok(2)
                    }
                }
            }
        }
        Command::Bench { group_set } => run_bench(&group_set),
        Command::CanonicalTest { source } => {
            let group = source.resolve()?;
            let chain = group.chain();
            let stdin = std::io::stdin();
            let mut bad_lines = 0;
            for (lineno, line) in stdin.lock().lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match parse_vector(&line) {
                    Ok(v) if v.len() == group.degree() => {
                        println!("{}", orbigen::canonical::is_canonical(&v, chain));
                    }
                    Ok(v) => {
                        eprintln!(
                            "line {}: expected {} entries, found {}",
                            lineno + 1,
                            group.degree(),
                            v.len()
                        );
                        bad_lines += 1;
                    }
                    Err(e) => {
                        eprintln!("line {}: {e}", lineno + 1);
                        bad_lines += 1;
                    }
                }
            }
            Ok(if bad_lines == 0 { 0 } else { 1 })
        }
        Command::PrimitiveInvariant { source, degree_cap } => {
            let group = source.resolve()?;
            let chain = galois::minimal_primitive_invariant(&group, degree_cap, desk_bound()?)?;
            for step in &chain.steps {
                println!(
                    "degree={} vector={} aut={} cumulative={}",
                    step.vector.iter().sum::<u32>(),
                    render_vector(&step.vector),
                    step.orbit_stabilizer.order(),
                    step.cumulative.order()
                );
            }
            let p = galois::assemble_primitive_polynomial(&chain)?;
            println!("polynomial: {p}");
            Ok(0)
        }
        Command::Graphs {
            nodes,
            count,
            list,
            multigraph_edges,
            edges,
        } => {
            if let Some(d) = multigraph_edges {
                println!("{}", graphs::count_multigraphs(nodes, d)?);
            } else if list {
                for v in graphs::enumerate_graphs(nodes)? {
                    if edges {
                        println!("{}", graphs::edge_list(nodes, &v)?);
                    } else {
                        println!("{}", render_vector(&v));
                    }
                }
            } else {
                let _ = count; // counting is the default
                println!("{}", graphs::count_unlabeled_graphs(nodes, desk_bound()?)?);
            }
            Ok(0)
        }
    }
}

fn bench_groups(group_set: &str) -> anyhow::Result<Vec<(String, PermutationGroup)>> {
    match group_set {
        "degree5" => Ok(catalog::degree5_benchmark()),
        "small" => Ok(catalog::bundled_groups(5)?),
        path => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading group set {path}"))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|entry| {
                    let group = catalog::named(entry)
                        .or_else(|_| catalog::load_group_file(entry.as_ref()))
                        .with_context(|| format!("group set entry {entry:?}"))?;
                    Ok((entry.to_string(), group))
                })
                .collect()
        }
    }
}

/// Staircase run per group; one CSV row each. Failures go to stderr and
/// taint the exit status without stopping the sweep.
fn run_bench(group_set: &str) -> anyhow::Result<i32> {
    let groups = bench_groups(group_set)?;
    println!(
        "group,degree,order,index,canonicals,tests,skipped,total_orbit_sizes,total_explored,err,ratio,complexity,wall_ms"
    );
    let mut failures = 0;
    for (name, group) in groups {
        let start = Instant::now();
        let cfg = GenerationConfig::new(&group, Mode::All).under_staircase();
        let stats = match CanonicalBfs::with_stats(cfg) {
            Ok(it) => it.into_stats(),
            Err(e) => {
                eprintln!("{name}: {e}");
                failures += 1;
                continue;
            }
        };
        let wall_ms = start.elapsed().as_millis();
        let n = group.degree();
        let factorial: u64 = (1..=n as u64).product();
        let record = StatsRecord::from_stats(&stats);
        println!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            name,
            n,
            group.order(),
            factorial / group.order(),
            record.canonicals,
            record.tests,
            record.skipped,
            record.total_orbit_sizes,
            record.total_explored,
            record.err,
            record.ratio,
            record.complexity,
            wall_ms
        );
    }
    Ok(if failures == 0 { 0 } else { 1 })
}
