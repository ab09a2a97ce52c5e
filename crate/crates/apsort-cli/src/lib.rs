//! Command-line front end for the associative permutation sorter.
//!
//! Subcommands: `sort` (sort a key file), `bench` (benchmark matrix with a
//! verified CSV), `verify` (check that one file is a sorted permutation of
//! another), `trace` (per-phase snapshots of the first iteration).
//!
//! Exit codes: 0 success, 1 verify mismatch, 2 malformed input, 3
//! key-range violation, 4 benchmark verification failure.

pub mod bench;
pub mod io;
pub mod trace;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use apsort::dataset::Distribution;
use apsort::word::MAX_KEY;
use apsort::{verify, KeyedList};
use bench::Algo;
use io::Format;
use trace::Phase;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_MISMATCH: u8 = 1;
pub const EXIT_MALFORMED_INPUT: u8 = 2;
pub const EXIT_KEY_RANGE: u8 = 3;
pub const EXIT_BENCH_FAILURE: u8 = 4;

/// Maximum list size the trace command will render.
pub const TRACE_LIMIT: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "apsort", version, about = "In-place associative permutation sort toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DistArg {
    Uniform,
    WorstCase,
    BestCase,
    Sorted,
    Reverse,
    AllEqual,
}

impl From<DistArg> for Distribution {
    fn from(d: DistArg) -> Self {
        match d {
            DistArg::Uniform => Distribution::Uniform,
            DistArg::WorstCase => Distribution::WorstCase,
            DistArg::BestCase => Distribution::BestCase,
            DistArg::Sorted => Distribution::Sorted,
            DistArg::Reverse => Distribution::Reverse,
            DistArg::AllEqual => Distribution::AllEqual,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sort a key file.
    Sort {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Attach original indices as payloads and write them in a second
        /// column (text output only).
        #[arg(long)]
        payload_index: bool,
        /// Accept keys spanning the full 64-bit range.
        #[arg(long)]
        full_universe: bool,
    },
    /// Run a benchmark matrix and write a verified CSV.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "uniform")]
        dist: DistArg,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, value_enum, value_delimiter = ',',
              default_values_t = [Algo::Apsort, Algo::Radix, Algo::Bucket, Algo::Comparison])]
        algos: Vec<Algo>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Check that a candidate file is a sorted permutation of the input.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print per-phase snapshots of the first binding-loop iteration.
    Trace {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        phase: Option<Phase>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Sort { input, output, format, payload_index, full_universe } => {
            cmd_sort(&input, &output, format, payload_index, full_universe)
        }
        Command::Bench { n, dist, beta, algos, trials, seed, csv } => {
            cmd_bench(n, dist.into(), beta, &algos, trials, seed, &csv)
        }
        Command::Verify { input, candidate, format } => cmd_verify(&input, &candidate, format),
        Command::Trace { input, phase, format } => cmd_trace(&input, phase, format),
    }
}

fn cmd_sort(
    input: &std::path::Path,
    output: &std::path::Path,
    format: Format,
    payload_index: bool,
    full_universe: bool,
) -> u8 {
    if payload_index && format == Format::Binary {
        eprintln!("apsort: --payload-index requires text output");
        return EXIT_MALFORMED_INPUT;
    }
    let keys = match io::read_keys(input, format) {
        Ok(keys) => keys,
        Err(e) => {
            eprintln!("apsort: {e}");
            return EXIT_MALFORMED_INPUT;
        }
    };
    if !full_universe {
        if let Some(&bad) = keys.iter().find(|&&k| k > MAX_KEY) {
            eprintln!("apsort: key {bad} exceeds 2^63 - 1; rerun with --full-universe");
            return EXIT_KEY_RANGE;
        }
    }
    if payload_index {
        let indices: Vec<usize> = (0..keys.len()).collect();
        let mut list = KeyedList::with_payloads(keys, indices);
        if full_universe {
            list.sort_full_universe();
        } else if list.sort().is_err() {
            return EXIT_KEY_RANGE;
        }
        let result = io::write_keys_with_indices(
            output,
            list.keys(),
            list.payloads().expect("payloads attached"),
        );
        if let Err(e) = result {
            eprintln!("apsort: {e}");
            return EXIT_MALFORMED_INPUT;
        }
    } else {
        let mut list = KeyedList::new(keys);
        if full_universe {
            list.sort_full_universe();
        } else if list.sort().is_err() {
            return EXIT_KEY_RANGE;
        }
        if let Err(e) = io::write_keys(output, format, list.keys()) {
            eprintln!("apsort: {e}");
            return EXIT_MALFORMED_INPUT;
        }
    }
    EXIT_OK
}

fn cmd_bench(
    n: usize,
    dist: Distribution,
    beta: f64,
    algos: &[Algo],
    trials: usize,
    seed: u64,
    csv: &std::path::Path,
) -> u8 {
    let rows = match bench::run(n, dist, beta, algos, trials, seed) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("apsort: {e}");
            return EXIT_BENCH_FAILURE;
        }
    };
    if let Err(e) = std::fs::write(csv, bench::to_csv(&rows)) {
        eprintln!("apsort: {}: {e}", csv.display());
        return EXIT_MALFORMED_INPUT;
    }
    for row in &rows {
        eprintln!(
            "{} n={} trial={} {:.3} ms{}",
            row.algo,
            row.n,
            row.trial,
            row.millis,
            row.iterations.map(|i| format!(" ({i} iterations)")).unwrap_or_default()
        );
    }
    EXIT_OK
}

fn cmd_verify(input: &std::path::Path, candidate: &std::path::Path, format: Format) -> u8 {
    let original = match io::read_keys(input, format) {
        Ok(keys) => keys,
        Err(e) => {
            eprintln!("apsort: {e}");
            return EXIT_MALFORMED_INPUT;
        }
    };
    let output = match io::read_keys(candidate, format) {
        Ok(keys) => keys,
        Err(e) => {
            eprintln!("apsort: {e}");
            return EXIT_MALFORMED_INPUT;
        }
    };
    if original.len() != output.len() {
        eprintln!(
            "apsort: length mismatch: input has {} keys, candidate has {}",
            original.len(),
            output.len()
        );
        return EXIT_VERIFY_MISMATCH;
    }
    let result = verify(&original, &output, None);
    match result.first_violation() {
        None => EXIT_OK,
        Some(violation) => {
            eprintln!("apsort: {violation}");
            EXIT_VERIFY_MISMATCH
        }
    }
}

fn cmd_trace(input: &std::path::Path, phase: Option<Phase>, format: Format) -> u8 {
    let keys = match io::read_keys(input, format) {
        Ok(keys) => keys,
        Err(e) => {
            eprintln!("apsort: {e}");
            return EXIT_MALFORMED_INPUT;
        }
    };
    if keys.len() > TRACE_LIMIT {
        eprintln!("apsort: trace supports at most {TRACE_LIMIT} keys, got {}", keys.len());
        return EXIT_MALFORMED_INPUT;
    }
    if let Some(&bad) = keys.iter().find(|&&k| k > MAX_KEY) {
        eprintln!("apsort: key {bad} exceeds 2^63 - 1");
        return EXIT_KEY_RANGE;
    }
    for snapshot in trace::first_iteration(&keys) {
        if phase.is_none() || phase == Some(snapshot.phase) {
            println!("{}", snapshot.rendered());
            let c = snapshot.counters;
            eprintln!(
                "# {:?}: n_d={} n_c={} n_d'={} delta={} delta'={}",
                snapshot.phase, c.nodes, c.idles, c.deferred, c.interval_min, c.deferred_min
            );
        }
    }
    EXIT_OK
}
