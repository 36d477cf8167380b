//! wse: batch checks of the Wiener-minus-eccentricity invariant under
//! edge contraction.
//!
//! Every subcommand reads graphs from one source (exhaustive enumeration,
//! a graph6 file, or a seeded generator), runs its check on each item, and
//! emits one record per item plus a one-line run summary. Check failures
//! for proved facts exit 1 (they indicate a bug in this library); bound
//! violations from the `conjecture2` probe are findings and exit 0;
//! operational problems exit 2.

mod report;
mod source;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use report::{
    emit, summary_line, ChainRow, Conjecture2Row, LemmaRow, OutputFormat, SummaryRow, VerifyRow,
};
use source::{apply_guard, connected_with_min_order, load_graphs, ErrorPolicy, SourceArgs};
use wse::contraction::{contract_chain, ChainStrategy};
use wse::graph6::write_graph6;
use wse::metrics::invariant_summary;
use wse::rng::GeneratorSeed;
use wse::verify::{
    check_conjecture2, check_contraction_inequality, lemma_suite, Conjecture2Record, LemmaReport,
    VerificationRecord,
};
use wse::Edge;

#[derive(Parser)]
#[command(
    name = "wse",
    version,
    about = "Graph contraction checks for the Wiener-minus-eccentricity invariant"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that W - ε never increases under any single edge contraction
    Verify(RunArgs),
    /// Check the supporting distance/eccentricity lemmas edge by edge
    Lemmas(RunArgs),
    /// Probe the radius >= 4 upper bound; violations are findings, not errors
    Conjecture2(RunArgs),
    /// Contract one graph down to K2, reporting W - ε at every step
    Chain(ChainArgs),
    /// Emit the source graphs as graph6 lines
    Gen(GenArgs),
    /// Per-graph invariants: order, size, Wiener index, eccentricities
    Summary(RunArgs),
}

/// Flags shared by the record-stream commands.
#[derive(Args)]
struct CommonArgs {
    /// Record stream format
    #[arg(long, value_enum, default_value = "jsonl")]
    output: OutputFormat,

    /// Stop emitting records after the first failing one
    #[arg(long)]
    fail_fast: bool,

    /// Worker threads; 0 means one per available core
    #[arg(
        long,
        env = "WSE_PARALLELISM",
        default_value_t = 1,
        value_name = "WORKERS"
    )]
    parallelism: usize,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    run: CommonArgs,
}

#[derive(Args)]
struct ChainArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    run: CommonArgs,

    /// Edge selection policy for successive contractions
    #[arg(long, value_enum, default_value = "first-edge")]
    strategy: StrategyArg,

    /// Seed for the random strategy's edge choices
    #[arg(long, value_name = "SEED")]
    strategy_seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum StrategyArg {
    /// Lexicographically first edge
    FirstEdge,
    /// Seeded uniform edge choice
    Random,
    /// Edge at the highest-degree endpoint
    MaxDegree,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: SourceArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Lemmas(args) => cmd_lemmas(args),
        Command::Conjecture2(args) => cmd_conjecture2(args),
        Command::Chain(args) => cmd_chain(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Summary(args) => cmd_summary(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// A downstream consumer closing stdout early (`wse gen ... | head`) is a
/// request to stop, not an operational failure.
fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain().any(|cause| {
        if let Some(io) = cause.downcast_ref::<std::io::Error>() {
            return io.kind() == std::io::ErrorKind::BrokenPipe;
        }
        // serde_json wraps write failures without exposing them as source().
        if let Some(json) = cause.downcast_ref::<serde_json::Error>() {
            return json.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe);
        }
        false
    })
}

/// Builds the worker pool; 0 threads means one per available core.
fn worker_pool(parallelism: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .context("building the worker pool")
}

/// With --fail-fast, keeps records only up to and including the first
/// failing one; the run summary then reflects the truncated stream.
fn truncate_at_failure<T>(rows: Vec<T>, fail_fast: bool, failing: impl Fn(&T) -> bool) -> Vec<T> {
    if !fail_fast {
        return rows;
    }
    match rows.iter().position(failing) {
        Some(i) => rows.into_iter().take(i + 1).collect(),
        None => rows,
    }
}

/// Work items for the per-edge commands, in source order.
fn edge_work(graphs: &[wse::Graph]) -> Vec<(usize, Edge)> {
    graphs
        .iter()
        .enumerate()
        .flat_map(|(i, g)| g.edges().map(move |e| (i, e)))
        .collect()
}

fn cmd_verify(args: &RunArgs) -> Result<u8> {
    let graphs = load_graphs(&args.source)?;
    let graphs = apply_guard(graphs, args.source.on_error, connected_with_min_order(3))?;
    let work = edge_work(&graphs);
    let pool = worker_pool(args.run.parallelism)?;
    let records: Vec<VerificationRecord> = pool.install(|| {
        work.par_iter()
            .map(|&(i, e)| {
                check_contraction_inequality(&graphs[i], e)
                    .expect("inputs are guarded to connected graphs on >= 3 vertices")
            })
            .collect()
    });
    let records = truncate_at_failure(records, args.run.fail_fast, |r| !r.pass);
    let rows: Vec<VerifyRow> = records.iter().map(VerifyRow::from).collect();
    emit(args.run.output, &rows)?;

    let failed = rows.iter().filter(|r| !r.pass).count();
    let spread = match (
        rows.iter().map(|r| r.delta).min(),
        rows.iter().map(|r| r.delta).max(),
    ) {
        (Some(lo), Some(hi)) => format!("delta min {lo} max {hi}"),
        _ => "no records".to_string(),
    };
    summary_line(
        args.run.output,
        &format!(
            "verify: {} contractions on {} graphs; {} passed, {failed} failed; {spread}",
            rows.len(),
            graphs.len(),
            rows.len() - failed
        ),
    );
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_lemmas(args: &RunArgs) -> Result<u8> {
    let graphs = load_graphs(&args.source)?;
    let graphs = apply_guard(graphs, args.source.on_error, connected_with_min_order(3))?;
    let work = edge_work(&graphs);
    let pool = worker_pool(args.run.parallelism)?;
    let suites: Vec<Vec<LemmaReport>> = pool.install(|| {
        work.par_iter()
            .map(|&(i, e)| {
                lemma_suite(&graphs[i], e)
                    .expect("inputs are guarded to connected graphs on >= 3 vertices")
            })
            .collect()
    });
    let reports: Vec<LemmaReport> = suites.into_iter().flatten().collect();
    let reports = truncate_at_failure(reports, args.run.fail_fast, |r| !r.holds);
    let rows: Vec<LemmaRow> = reports.iter().map(LemmaRow::from).collect();
    emit(args.run.output, &rows)?;

    let failed = rows.iter().filter(|r| !r.holds).count();
    summary_line(
        args.run.output,
        &format!(
            "lemmas: {} checks on {} graphs; {} held, {failed} failed",
            rows.len(),
            graphs.len(),
            rows.len() - failed
        ),
    );
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_conjecture2(args: &RunArgs) -> Result<u8> {
    let graphs = load_graphs(&args.source)?;
    let graphs = apply_guard(graphs, args.source.on_error, connected_with_min_order(1))?;
    let pool = worker_pool(args.run.parallelism)?;
    let measured: Vec<Option<Conjecture2Record>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| check_conjecture2(g).expect("inputs are guarded to connected graphs"))
            .collect()
    });
    let skipped = measured.iter().filter(|r| r.is_none()).count();
    let records: Vec<Conjecture2Record> = measured.into_iter().flatten().collect();
    let records = truncate_at_failure(records, args.run.fail_fast, |r| !r.within_bound);
    let rows: Vec<Conjecture2Row> = records.iter().map(Conjecture2Row::from).collect();
    emit(args.run.output, &rows)?;

    let equalities = rows.iter().filter(|r| r.equality).count();
    let violations = rows.iter().filter(|r| !r.within_bound).count();
    summary_line(
        args.run.output,
        &format!(
            "conjecture2: checked {} graphs with radius >= 4, skipped {skipped}; \
             {equalities} equality cases, {violations} violations",
            rows.len()
        ),
    );
    if violations > 0 {
        eprintln!("FINDING: {violations} graph(s) exceed the bound; findings do not fail the run");
    }
    Ok(0)
}

fn cmd_chain(args: &ChainArgs) -> Result<u8> {
    let strategy = match (args.strategy, args.strategy_seed) {
        (StrategyArg::FirstEdge, None) => ChainStrategy::FirstEdge,
        (StrategyArg::MaxDegree, None) => ChainStrategy::MaxDegreeEndpoint,
        (StrategyArg::Random, Some(seed)) => ChainStrategy::Random(GeneratorSeed(seed)),
        (StrategyArg::Random, None) => bail!("--strategy random needs --strategy-seed"),
        (_, Some(_)) => bail!("--strategy-seed only applies to --strategy random"),
    };
    let graphs = load_graphs(&args.source)?;
    let graphs = apply_guard(graphs, args.source.on_error, connected_with_min_order(2))?;
    if graphs.len() != 1 {
        bail!(
            "chain needs exactly one input graph; the source produced {}",
            graphs.len()
        );
    }
    let steps = contract_chain(&graphs[0], strategy).expect("guarded: connected on >= 2 vertices");

    // The theorem says each step is non-increasing; an increase is a bug.
    let violation = steps.windows(2).position(|w| w[1].wse > w[0].wse);
    let cut = match (args.run.fail_fast, violation) {
        (true, Some(i)) => i + 2,
        _ => steps.len(),
    };
    let rows: Vec<ChainRow> = steps[..cut]
        .iter()
        .enumerate()
        .map(|(i, s)| ChainRow::new(i, s))
        .collect();
    emit(args.run.output, &rows)?;

    match violation {
        None => {
            summary_line(
                args.run.output,
                &format!(
                    "chain: {} steps, wse {} -> {}, non-increasing",
                    rows.len(),
                    steps.first().expect("chains are nonempty").wse,
                    steps.last().expect("chains are nonempty").wse
                ),
            );
            Ok(0)
        }
        Some(i) => {
            summary_line(
                args.run.output,
                &format!(
                    "chain: {} steps emitted; wse INCREASED at step {} ({} -> {})",
                    rows.len(),
                    i + 1,
                    steps[i].wse,
                    steps[i + 1].wse
                ),
            );
            Ok(1)
        }
    }
}

fn cmd_gen(args: &GenArgs) -> Result<u8> {
    let graphs = load_graphs(&args.source)?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for g in &graphs {
        writeln!(out, "{}", write_graph6(g))?;
    }
    out.flush()?;
    Ok(0)
}

fn cmd_summary(args: &RunArgs) -> Result<u8> {
    let graphs = load_graphs(&args.source)?;
    let total = graphs.len();
    // Disconnected inputs are always reported and skipped here, independent
    // of --on-error: the invariants are undefined for them.
    let graphs = apply_guard(graphs, ErrorPolicy::Skip, connected_with_min_order(1))?;
    let skipped = total - graphs.len();
    let pool = worker_pool(args.run.parallelism)?;
    let rows: Vec<SummaryRow> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| SummaryRow::new(g, &invariant_summary(g).expect("guarded connected")))
            .collect()
    });
    emit(args.run.output, &rows)?;
    summary_line(
        args.run.output,
        &format!("summary: {} graphs, {skipped} skipped", rows.len()),
    );
    Ok(0)
}
