//! `tribound`: JSONL reports over graph6 input.

mod commands;
mod input;
mod record;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map};
use tribound_core::enumerate::{enumerate, ClassConstraints, ENUMERATION_MAX_ORDER};
use tribound_core::extremal::{extremal_sweep, low_degree_spot_check};
use tribound_core::to_graph6;
use tribound_core::verify::{Ratio, Theorem};

use commands::{Check, Task};
use input::{Builtin, Input, Source};
use record::{Invariants, Status, Summary, VerdictRecord};

/// Graphs handed to the worker pool at a time.
const BATCH: usize = 1024;

#[derive(Parser)]
#[command(name = "tribound", version, about = "Exact invariants and bound checks for small graphs")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// n, m, degrees, alpha, beta, omega and chi with witnesses.
    Invariants(SourceArgs),
    /// Check the bounds (or the chi-binding corollary) on each graph.
    Verify {
        #[arg(long, value_enum, default_value = "both")]
        theorem: TheoremArg,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Gallai-Edmonds decomposition, its verification and the proof ledger.
    Decompose(SourceArgs),
    /// The order-13 sweep of 4-regular triangle-free graphs.
    Extremal {
        #[arg(long, default_value_t = 13)]
        n: usize,
        /// Random low-degree graphs for the alpha >= 5 spot check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print the graph6 lines of an isomorph-free enumeration.
    Generate(ClassArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
    Corollary,
}

impl TheoremArg {
    fn check(self) -> Check {
        match self {
            TheoremArg::One => Check::Bounds(&[Theorem::One]),
            TheoremArg::Two => Check::Bounds(&[Theorem::Two]),
            TheoremArg::Both => Check::Bounds(&Theorem::BOTH),
            TheoremArg::Corollary => Check::Corollary,
        }
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Use a built-in graph instead of stdin.
    #[arg(long, value_enum, conflicts_with = "enumerate")]
    builtin: Option<Builtin>,
    /// Enumerate the class given by the class flags instead of reading stdin.
    #[arg(long)]
    enumerate: bool,
    #[command(flatten)]
    class: ClassArgs,
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long)]
    triangle_free: bool,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Only d-regular graphs.
    #[arg(long)]
    regular: Option<usize>,
    #[arg(long)]
    connected: bool,
}

impl ClassArgs {
    fn constraints(&self) -> Result<ClassConstraints, String> {
        let c = ClassConstraints {
            min_order: self.min_n,
            max_order: self.max_n,
            triangle_free: self.triangle_free,
            max_degree: self.max_degree,
            connected: self.connected,
            regular_degree: self.regular,
            min_degree: None,
        };
        c.validate().map_err(|e| e.to_string())?;
        if c.max_order > ENUMERATION_MAX_ORDER {
            return Err(format!("--max-n must be at most {ENUMERATION_MAX_ORDER}"));
        }
        Ok(c)
    }
}

impl SourceArgs {
    fn source(&self) -> Result<Source, String> {
        Ok(match (self.builtin, self.enumerate) {
            (Some(b), _) => Source::Builtin(b),
            (None, true) => Source::Enumerate(self.class.constraints()?),
            (None, false) => Source::Stdin,
        })
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let result = match &cli.command {
        Command::Invariants(s) => run_task(Task::Invariants, s, workers),
        Command::Verify { theorem, source } => run_task(Task::Verify(theorem.check()), source, workers),
        Command::Decompose(s) => run_task(Task::Decompose, s, workers),
        Command::Extremal { n, samples, seed } => run_extremal(*n, *samples, *seed, workers),
        Command::Generate(c) => run_generate(c),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Usage(msg)) => usage_error(msg),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => usage_error(e),
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(serde::Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

fn emit(out: &mut impl Write, value: &impl serde::Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn run_task(task: Task, args: &SourceArgs, workers: usize) -> Result<i32, Failure> {
    let source = args.source().map_err(Failure::Usage)?;
    let inputs = source.inputs().map_err(Failure::Usage)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut summary = Summary::new(task.name(), task.reports_bounds());
    let mut batch = Vec::with_capacity(BATCH);
    let mut seq = 0;
    let mut inputs = inputs.peekable();
    while inputs.peek().is_some() {
        batch.clear();
        for item in inputs.by_ref().take(BATCH) {
            batch.push((seq, item?));
            seq += 1;
        }
        let records: Vec<VerdictRecord> = pool.install(|| {
            batch
                .par_iter()
                .map(|(seq, input)| {
                    let start = Instant::now();
                    let mut record = match input {
                        Input::Graph { text, graph } => task.run(text.clone(), graph),
                        Input::Bad { text, error } => VerdictRecord {
                            decode_error: true,
                            ..VerdictRecord::error(task.name(), text.clone(), error)
                        },
                    };
                    record.seq = *seq;
                    record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
                    record
                })
                .collect()
        });
        for r in &records {
            summary.add(r);
            emit(&mut out, r)?;
        }
    }
    emit(&mut out, &SummaryLine { summary: &summary })?;
    out.flush()?;
    Ok(summary.exit_code())
}

fn run_extremal(n: usize, samples: usize, seed: u64, workers: usize) -> Result<i32, Failure> {
    let report = extremal_sweep(n, workers).map_err(|e| Failure::Usage(e.to_string()))?;
    let spot = low_degree_spot_check(samples, seed);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut summary = Summary::new("extremal", true);
    for (seq, entry) in report.extremal.iter().enumerate() {
        let tight = entry.first_equality && entry.second_equality && entry.beta == 6;
        let g = entry.label.to_graph();
        let (lhs, rhs) = entry.first_scaled;
        let record = VerdictRecord {
            seq,
            invariants: Some(Invariants {
                alpha: Some(entry.alpha),
                beta: Some(entry.beta),
                ..Invariants::basic(&g)
            }),
            report: Some(serde_json::to_value(entry).expect("serializes")),
            status: if tight { Status::Pass } else { Status::Fail },
            slack: Some(Ratio::new(lhs - rhs, 4)),
            equality: entry.first_equality,
            ..VerdictRecord::new("extremal", entry.label.to_string())
        };
        summary.add(&record);
        emit(&mut out, &record)?;
    }
    let mut extra = Map::new();
    extra.insert("examined".into(), json!(report.examined));
    extra.insert("g13_label".into(), json!(report.g13_label));
    extra.insert("g13_found".into(), json!(report.g13_found));
    extra.insert("all_tight".into(), json!(report.all_tight));
    extra.insert("spot_check".into(), json!(spot));
    summary.extra = Some(extra);
    emit(&mut out, &SummaryLine { summary: &summary })?;
    out.flush()?;
    let ok = report.g13_found && report.all_tight && spot.counterexamples.is_empty();
    Ok(if ok { summary.exit_code() } else { 1 })
}

fn run_generate(args: &ClassArgs) -> Result<i32, Failure> {
    let c = args.constraints().map_err(Failure::Usage)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for g in enumerate(&c).map_err(|e| Failure::Usage(e.to_string()))? {
        writeln!(out, "{}", to_graph6(&g))?;
    }
    out.flush()?;
    Ok(0)
}
