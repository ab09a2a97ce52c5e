//! Benchmark matrix runner.
//!
//! Each algorithm sorts its own copy of every generated dataset; every
//! output is verified before its timing is reported, and timing wraps the
//! sort call only. Rows are written as CSV with the fixed schema
//! `algo,n,m,dist,trial,seed,millis,iterations,verified`.

use std::fmt::Write as _;
use std::time::Instant;

use apsort::baselines;
use apsort::dataset::{generate, DatasetSpec, Distribution};
use apsort::{verify, KeyedList};

/// Algorithms the benchmark can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algo {
    /// Associative permutation sort.
    Apsort,
    /// LSD radix sort, byte digits.
    Radix,
    /// Bucket sort, n buckets.
    Bucket,
    /// Platform comparison sort.
    Comparison,
}

impl Algo {
    pub fn name(&self) -> &'static str {
        match self {
            Algo::Apsort => "apsort",
            Algo::Radix => "radix",
            Algo::Bucket => "bucket",
            Algo::Comparison => "comparison",
        }
    }
}

/// One benchmark measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algo: &'static str,
    pub n: usize,
    pub m: u64,
    pub dist: &'static str,
    pub trial: usize,
    pub seed: u64,
    pub millis: f64,
    /// Binding-loop iterations; `None` for the baselines.
    pub iterations: Option<usize>,
    pub verified: bool,
}

pub const CSV_HEADER: &str = "algo,n,m,dist,trial,seed,millis,iterations,verified";

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let iterations = r.iterations.map(|i| i.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{:.3},{},{}",
            r.algo, r.n, r.m, r.dist, r.trial, r.seed, r.millis, iterations, r.verified
        )
        .expect("writing to string");
    }
    out
}

/// An unverified benchmark run.
#[derive(Debug)]
pub struct BenchFailure {
    pub algo: &'static str,
    pub trial: usize,
    pub violation: &'static str,
}

impl std::fmt::Display for BenchFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} trial {} failed verification: {}", self.algo, self.trial, self.violation)
    }
}

impl std::error::Error for BenchFailure {}

/// Runs `trials` datasets through every algorithm. Trial `t` uses seed
/// `seed + t`; all algorithms of a trial sort copies of the same keys.
pub fn run(
    n: usize,
    distribution: Distribution,
    beta: f64,
    algos: &[Algo],
    trials: usize,
    seed: u64,
) -> Result<Vec<BenchRow>, Box<dyn std::error::Error>> {
    let mut rows = Vec::new();
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(trial as u64);
        let spec = DatasetSpec { n, distribution, beta, seed: trial_seed };
        let keys = generate(&spec)?;
        let m = match (keys.iter().min(), keys.iter().max()) {
            (Some(&min), Some(&max)) => max - min + 1,
            _ => 0,
        };
        for &algo in algos {
            let mut work = keys.clone();
            let mut iterations = None;
            let millis;
            match algo {
                Algo::Apsort => {
                    let mut list = KeyedList::new(std::mem::take(&mut work));
                    let start = Instant::now();
                    let iters = list.sort_with(|_| {})?;
                    millis = start.elapsed().as_secs_f64() * 1e3;
                    iterations = Some(iters);
                    work = list.into_parts().0;
                }
                Algo::Radix => {
                    let start = Instant::now();
                    baselines::lsd_radix_sort(&mut work);
                    millis = start.elapsed().as_secs_f64() * 1e3;
                }
                Algo::Bucket => {
                    let start = Instant::now();
                    baselines::bucket_sort(&mut work);
                    millis = start.elapsed().as_secs_f64() * 1e3;
                }
                Algo::Comparison => {
                    let start = Instant::now();
                    baselines::comparison_sort(&mut work);
                    millis = start.elapsed().as_secs_f64() * 1e3;
                }
            }
            let result = verify(&keys, &work, None);
            if let Some(violation) = result.first_violation() {
                return Err(Box::new(BenchFailure { algo: algo.name(), trial, violation }));
            }
            rows.push(BenchRow {
                algo: algo.name(),
                n,
                m,
                dist: distribution.name(),
                trial,
                seed: trial_seed,
                millis,
                iterations,
                verified: true,
            });
        }
    }
    Ok(rows)
}
