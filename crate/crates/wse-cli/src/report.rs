//! Record rows and the three output sinks.
//!
//! Every command's record stream has a fixed schema carried by one row
//! type: JSONL emits one object per line, CSV emits a header row plus one
//! record per line with identical fields, and the human format renders a
//! readable line per record. Run summaries go to standard error for the
//! machine formats so standard output stays parseable.

use std::io::{self, Write};

use anyhow::Result;
use serde::Serialize;

use wse::contraction::ChainStep;
use wse::graph6::write_graph6;
use wse::metrics::InvariantSummary;
use wse::verify::{Conjecture2Record, LemmaReport, VerificationRecord};
use wse::Graph;

/// Record stream format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// One JSON object per line; run summary on standard error
    Jsonl,
    /// Header row plus one record per line; run summary on standard error
    Csv,
    /// Readable lines with the run summary at the end, all on stdout
    Human,
}

/// One row of a record stream: serializable for JSONL and CSV, plus a
/// human rendering. `HEADER` lists the CSV columns in field order.
pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn human(&self) -> String;
}

/// Writes the whole record stream to standard output in the given format.
pub fn emit<R: Row>(format: OutputFormat, rows: &[R]) -> Result<()> {
    let mut out = io::BufWriter::new(io::stdout().lock());
    emit_to(&mut out, format, rows)?;
    out.flush()?;
    Ok(())
}

/// Writer-generic body of [`emit`].
pub fn emit_to<R: Row>(out: &mut impl Write, format: OutputFormat, rows: &[R]) -> Result<()> {
    match format {
        OutputFormat::Jsonl => {
            for row in rows {
                serde_json::to_writer(&mut *out, row)?;
                out.write_all(b"\n")?;
            }
        }
        OutputFormat::Csv => {
            let mut wtr = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(&mut *out);
            wtr.write_record(R::HEADER)?;
            for row in rows {
                wtr.serialize(row)?;
            }
            wtr.flush()?;
        }
        OutputFormat::Human => {
            for row in rows {
                writeln!(out, "{}", row.human())?;
            }
        }
    }
    Ok(())
}

/// Prints the one-line run summary on the stream the format reserves for
/// it: stdout for human output, stderr for the machine formats.
pub fn summary_line(format: OutputFormat, text: &str) {
    match format {
        OutputFormat::Human => println!("{text}"),
        _ => eprintln!("{text}"),
    }
}

/// One edge contraction checked against the W − ε inequality.
#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub graph: String,
    pub edge: String,
    pub wse_before: i64,
    pub wse_after: i64,
    pub delta: i64,
    pub pass: bool,
}

impl From<&VerificationRecord> for VerifyRow {
    fn from(r: &VerificationRecord) -> Self {
        VerifyRow {
            graph: r.graph.clone(),
            edge: r.edge.to_string(),
            wse_before: r.wse_before,
            wse_after: r.wse_after,
            delta: r.delta,
            pass: r.pass,
        }
    }
}

impl Row for VerifyRow {
    const HEADER: &'static [&'static str] =
        &["graph", "edge", "wse_before", "wse_after", "delta", "pass"];

    fn human(&self) -> String {
        format!(
            "{} contract {}: wse {} -> {} (delta {}) {}",
            self.graph,
            self.edge,
            self.wse_before,
            self.wse_after,
            self.delta,
            if self.pass { "ok" } else { "FAIL" }
        )
    }
}

/// One lemma checked on one (graph, edge) pair.
#[derive(Debug, Serialize)]
pub struct LemmaRow {
    pub graph: String,
    pub edge: String,
    pub lemma: String,
    pub holds: bool,
    pub witness: Option<String>,
}

impl From<&LemmaReport> for LemmaRow {
    fn from(r: &LemmaReport) -> Self {
        LemmaRow {
            graph: r.graph.clone(),
            edge: r.edge.to_string(),
            lemma: r.lemma.name().to_string(),
            holds: r.holds,
            witness: r.witness.clone(),
        }
    }
}

impl Row for LemmaRow {
    const HEADER: &'static [&'static str] = &["graph", "edge", "lemma", "holds", "witness"];

    fn human(&self) -> String {
        match &self.witness {
            None => format!("{} {} {}: ok", self.graph, self.edge, self.lemma),
            Some(w) => format!("{} {} {}: FAIL ({w})", self.graph, self.edge, self.lemma),
        }
    }
}

/// One radius >= 4 graph measured against the cubic upper bound.
#[derive(Debug, Serialize)]
pub struct Conjecture2Row {
    pub graph: String,
    pub n: usize,
    pub radius: u32,
    pub wse: i64,
    pub bound: i64,
    pub within_bound: bool,
    pub equality: bool,
    pub is_path: bool,
}

impl From<&Conjecture2Record> for Conjecture2Row {
    fn from(r: &Conjecture2Record) -> Self {
        Conjecture2Row {
            graph: r.graph.clone(),
            n: r.n,
            radius: r.radius,
            wse: r.wse,
            bound: r.bound,
            within_bound: r.within_bound,
            equality: r.equality,
            is_path: r.is_path,
        }
    }
}

impl Row for Conjecture2Row {
    const HEADER: &'static [&'static str] = &[
        "graph",
        "n",
        "radius",
        "wse",
        "bound",
        "within_bound",
        "equality",
        "is_path",
    ];

    fn human(&self) -> String {
        let mut line = format!(
            "{} n={} radius={}: wse {} bound {} {}",
            self.graph,
            self.n,
            self.radius,
            self.wse,
            self.bound,
            if self.within_bound {
                "within"
            } else {
                "VIOLATION"
            }
        );
        if self.equality {
            line.push_str(" equality");
        }
        if self.is_path {
            line.push_str(" path");
        }
        line
    }
}

/// One step of a contraction chain; step 0 is the uncontracted input.
#[derive(Debug, Serialize)]
pub struct ChainRow {
    pub step: usize,
    pub graph: String,
    pub wse: i64,
}

impl ChainRow {
    pub fn new(step: usize, s: &ChainStep) -> Self {
        ChainRow {
            step,
            graph: s.graph6.clone(),
            wse: s.wse,
        }
    }
}

impl Row for ChainRow {
    const HEADER: &'static [&'static str] = &["step", "graph", "wse"];

    fn human(&self) -> String {
        format!("step {}: {} wse {}", self.step, self.graph, self.wse)
    }
}

/// Invariant bundle for one graph.
#[derive(Debug, Serialize)]
pub struct SummaryRow {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub total_ecc: u64,
    pub wse: i64,
    pub radius: u32,
    pub diameter: u32,
}

impl SummaryRow {
    pub fn new(g: &Graph, s: &InvariantSummary) -> Self {
        SummaryRow {
            graph: write_graph6(g),
            n: g.n(),
            m: g.edge_count(),
            wiener: s.wiener,
            total_ecc: s.total_ecc,
            wse: s.wse,
            radius: s.radius,
            diameter: s.diameter,
        }
    }
}

impl Row for SummaryRow {
    const HEADER: &'static [&'static str] = &[
        "graph",
        "n",
        "m",
        "wiener",
        "total_ecc",
        "wse",
        "radius",
        "diameter",
    ];

    fn human(&self) -> String {
        format!(
            "{}: n={} m={} wiener={} total_ecc={} wse={} radius={} diameter={}",
            self.graph,
            self.n,
            self.m,
            self.wiener,
            self.total_ecc,
            self.wse,
            self.radius,
            self.diameter
        )
    }
}
