//! Graph acquisition for the CLI: exhaustive enumeration, graph6 files,
//! seeded random generators, and the shared abort-vs-skip error policy.

use std::fs;
use std::io::Read;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};

use wse::corpus::{
    enumerate_connected, read_graph6_stream, sample_connected_gnp, sample_random_tree,
};
use wse::graph6::write_graph6;
use wse::rng::GeneratorSeed;
use wse::Graph;

/// Reaction to a bad input item: an unparsable line or a graph that fails
/// a command precondition (disconnected, too small).
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ErrorPolicy {
    /// Stop with an operational error (exit status 2)
    Abort,
    /// Report the problem on standard error and continue without the item
    Skip,
}

/// Exactly one graph source per invocation.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct SourceSelector {
    /// Every isomorphism class of connected graphs on N vertices (N <= 8)
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,

    /// graph6 lines from PATH; "-" reads standard input
    #[arg(long, value_name = "PATH")]
    pub file: Option<String>,

    /// Connected Erdős–Rényi samples on N vertices (needs --p and --seed)
    #[arg(long, value_name = "N", requires = "p", requires = "seed")]
    pub gnp: Option<usize>,

    /// Uniform random labeled trees on N vertices (needs --seed)
    #[arg(long, value_name = "N", requires = "seed")]
    pub tree: Option<usize>,
}

/// Source selection plus the generator and error-policy knobs.
#[derive(Args)]
pub struct SourceArgs {
    #[command(flatten)]
    pub selector: SourceSelector,

    /// Edge probability as an exact rational, e.g. 1/2 (gnp only)
    #[arg(long, value_name = "NUM/DEN", value_parser = parse_ratio)]
    pub p: Option<(u64, u64)>,

    /// Generator seed, a decimal 64-bit unsigned integer
    #[arg(long, value_name = "SEED")]
    pub seed: Option<u64>,

    /// How many graphs to sample; seeds advance SEED, SEED+1, ... (gnp/tree)
    #[arg(long, value_name = "K", default_value_t = 1)]
    pub count: u64,

    /// Reaction to unparsable lines and precondition failures
    #[arg(long, value_enum, default_value = "abort")]
    pub on_error: ErrorPolicy,
}

fn parse_ratio(text: &str) -> Result<(u64, u64), String> {
    let (num, den) = text
        .split_once('/')
        .ok_or_else(|| "expected NUM/DEN, e.g. 1/2".to_string())?;
    let num: u64 = num.parse().map_err(|e| format!("numerator: {e}"))?;
    let den: u64 = den.parse().map_err(|e| format!("denominator: {e}"))?;
    Ok((num, den))
}

impl SourceArgs {
    /// Flags that only make sense for some sources are rejected loudly
    /// instead of being ignored.
    fn validate(&self) -> Result<()> {
        let sampled = self.selector.gnp.is_some() || self.selector.tree.is_some();
        if self.p.is_some() && self.selector.gnp.is_none() {
            bail!("--p only applies to --gnp");
        }
        if self.seed.is_some() && !sampled {
            bail!("--seed only applies to --gnp and --tree");
        }
        if self.count != 1 && !sampled {
            bail!("--count only applies to --gnp and --tree");
        }
        if self.count == 0 {
            bail!("--count must be at least 1");
        }
        Ok(())
    }
}

/// Materializes the configured source into graphs, applying the error
/// policy to unparsable file lines.
pub fn load_graphs(args: &SourceArgs) -> Result<Vec<Graph>> {
    args.validate()?;
    let sel = &args.selector;
    if let Some(n) = sel.enumerate {
        return enumerate_connected(n, true).with_context(|| format!("--enumerate {n}"));
    }
    if let Some(path) = &sel.file {
        return read_file_graphs(path, args.on_error);
    }

    let seed0 = args.seed.expect("clap enforces --seed for samplers");
    let mut graphs = Vec::new();
    for i in 0..args.count {
        let seed = GeneratorSeed(seed0.wrapping_add(i));
        let sample = if let Some(n) = sel.gnp {
            let (num, den) = args.p.expect("clap enforces --p for --gnp");
            sample_connected_gnp(n, num, den, seed)
        } else {
            let n = sel.tree.expect("exactly one source is set");
            sample_random_tree(n, seed)
        };
        graphs.push(sample.with_context(|| format!("sample {i} (seed {})", seed.0))?);
    }
    Ok(graphs)
}

fn read_file_graphs(path: &str, policy: ErrorPolicy) -> Result<Vec<Graph>> {
    let (label, text) = if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        ("<stdin>".to_string(), text)
    } else {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        (path.to_string(), text)
    };

    let mut graphs = Vec::new();
    for (line, item) in read_graph6_stream(&text) {
        match item {
            Ok(g) => graphs.push(g),
            Err(e) => match policy {
                ErrorPolicy::Abort => bail!("{label}:{line}: {e}"),
                ErrorPolicy::Skip => eprintln!("warning: {label}:{line}: {e} (line skipped)"),
            },
        }
    }
    Ok(graphs)
}

/// Drops graphs for which `reason` returns a rejection message, honoring
/// the error policy: `Abort` turns the first rejection into an error.
pub fn apply_guard(
    graphs: Vec<Graph>,
    policy: ErrorPolicy,
    reason: impl Fn(&Graph) -> Option<String>,
) -> Result<Vec<Graph>> {
    let mut kept = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.into_iter().enumerate() {
        match reason(&g) {
            None => kept.push(g),
            Some(why) => {
                let label = write_graph6(&g);
                match policy {
                    ErrorPolicy::Abort => bail!("graph {} ({label}): {why}", i + 1),
                    ErrorPolicy::Skip => {
                        eprintln!("warning: graph {} ({label}): {why} (skipped)", i + 1)
                    }
                }
            }
        }
    }
    Ok(kept)
}

/// Guard for commands that need connected inputs of at least `min` vertices.
pub fn connected_with_min_order(min: usize) -> impl Fn(&Graph) -> Option<String> {
    move |g| {
        if !g.is_connected() {
            Some("not connected".to_string())
        } else if g.n() < min {
            Some(format!("{} vertices; need at least {min}", g.n()))
        } else {
            None
        }
    }
}
