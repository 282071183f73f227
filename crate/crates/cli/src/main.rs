//! `heaprank`: command-line access to heaps of pieces and their rank
//! criteria.
//!
//! Exit codes: 0 when the property holds, 1 when it fails, 2 for input
//! errors, 3 when a criterion's hypotheses are not met.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use heaprank::format::{parse_coxeter, word_line, HeapFile};
use heaprank::rank::minimal_balanced_subintervals;
use heaprank::report;
use heaprank::{
    balanced_interval_criterion, census, classify, concurrency_from_coxeter, enumerate_fc_heaps,
    is_fc_heap, label_criterion, rank, s_set, CoxeterGraph, Error, Heap, IntervalVerdict,
};

#[derive(Parser)]
#[command(
    name = "heaprank",
    version,
    about = "Rank functions on heaps of pieces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a rank function or an unranked certificate.
    Check(HeapArgs),
    /// Decide rankedness from minimal balanced subintervals.
    #[command(visible_aliases = ["thm211", "interval-criterion"])]
    Thm221(HeapArgs),
    /// Decide rankedness of an FC heap from S-set labels.
    #[command(visible_alias = "label-criterion")]
    Thm323(HeapCoxeterArgs),
    /// Check that a heap is the heap of a fully commutative element.
    FcCheck(HeapCoxeterArgs),
    /// List minimal balanced subintervals with their S-sets.
    Intervals(HeapArgs),
    /// Decide whether a Coxeter group is FC-finite.
    Classify { coxeter: PathBuf },
    /// List FC heaps by canonical word.
    Enumerate(EnumerateArgs),
    /// Count FC heaps, and ranked FC heaps, per size.
    Census(EnumerateArgs),
    /// Hasse diagram in DOT.
    Dot(HeapArgs),
    /// Canonical word of a heap.
    Canonical(HeapArgs),
}

#[derive(clap::Args)]
struct HeapArgs {
    heap: PathBuf,
    /// Take the alphabet from this Coxeter graph when the heap file has no
    /// `pieces` line.
    #[arg(long)]
    coxeter: Option<PathBuf>,
}

#[derive(clap::Args)]
struct HeapCoxeterArgs {
    heap: PathBuf,
    #[arg(long)]
    coxeter: PathBuf,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    #[arg(long)]
    coxeter: PathBuf,
    /// Largest heap size; required unless the group is FC-finite.
    #[arg(long)]
    max_size: Option<usize>,
}

/// Error carried to `main` together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    /// Unmet hypotheses become an `ERROR` report with code 3; everything
    /// else is an input error.
    fn from(e: Error) -> Self {
        let report = match &e {
            Error::CircuitInConcurrencySubgraph(circuit) => report::circuit_report(circuit),
            Error::NotFcFinite => "ERROR not-fc-finite\n".to_string(),
            Error::NotFcHeap => "ERROR not-fc-heap\n".to_string(),
            Error::BoundRequired => "ERROR bound-required\n".to_string(),
            _ => {
                return Failure {
                    code: 2,
                    message: e.to_string(),
                }
            }
        };
        Failure {
            code: 3,
            message: report,
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_coxeter(path: &Path) -> Result<CoxeterGraph, Failure> {
    parse_coxeter(&read(path)?).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_heap(path: &Path, coxeter: Option<&CoxeterGraph>) -> Result<Heap, Failure> {
    let in_file = |e: Error| match e {
        Error::Parse { .. } => Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        },
        other => other.into(),
    };
    let file = HeapFile::parse(&read(path)?).map_err(in_file)?;
    let fallback = coxeter.map(|g| Arc::new(concurrency_from_coxeter(g)));
    file.build(fallback).map_err(in_file)
}

fn heap_from(args: &HeapArgs) -> Result<Heap, Failure> {
    let g = args.coxeter.as_deref().map(load_coxeter).transpose()?;
    load_heap(&args.heap, g.as_ref())
}

fn heap_and_group(args: &HeapCoxeterArgs) -> Result<(Heap, CoxeterGraph), Failure> {
    let g = load_coxeter(&args.coxeter)?;
    Ok((load_heap(&args.heap, Some(&g))?, g))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check(args) => {
            let heap = heap_from(&args)?;
            let outcome = rank(&heap);
            Ok((report::rank_report(&heap, &outcome), outcome.is_ranked()))
        }
        Command::Thm221(args) => {
            let heap = heap_from(&args)?;
            let verdict = balanced_interval_criterion(&heap)?;
            Ok((
                report::interval_verdict_report(&heap, &verdict),
                matches!(verdict, IntervalVerdict::Ranked),
            ))
        }
        Command::Thm323(args) => {
            let (heap, g) = heap_and_group(&args)?;
            let verdict = label_criterion(&heap, &g)?;
            Ok((
                report::label_verdict_report(&heap, &verdict),
                verdict.is_ranked(),
            ))
        }
        Command::FcCheck(args) => {
            let (heap, g) = heap_and_group(&args)?;
            let check = is_fc_heap(&heap, &g)?;
            Ok((report::fc_report(&heap, &check), check.is_fc()))
        }
        Command::Intervals(args) => {
            let heap = heap_from(&args)?;
            let mut out = String::new();
            for iv in minimal_balanced_subintervals(&heap) {
                out.push_str(&report::sset_line(&heap, &s_set(&heap, &iv)?));
                out.push('\n');
            }
            Ok((out, true))
        }
        Command::Classify { coxeter } => {
            let c = classify(&load_coxeter(&coxeter)?);
            Ok((report::classification_report(&c), c.is_fc_finite()))
        }
        Command::Enumerate(args) => {
            let g = load_coxeter(&args.coxeter)?;
            let mut out = String::new();
            for heap in enumerate_fc_heaps(&g, args.max_size)? {
                out.push_str(&word_line(&heap));
                out.push('\n');
            }
            Ok((out, true))
        }
        Command::Census(args) => {
            let g = load_coxeter(&args.coxeter)?;
            Ok((census(&g, args.max_size)?.to_tsv(), true))
        }
        Command::Dot(args) => Ok((report::to_dot(&heap_from(&args)?), true)),
        Command::Canonical(args) => Ok((format!("{}\n", word_line(&heap_from(&args)?)), true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, holds)) => {
            print!("{out}");
            ExitCode::from(if holds { 0 } else { 1 })
        }
        Err(Failure { code, message }) => {
            if code == 3 {
                print!("{message}");
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
