//! Deterministic dataset generators for benchmarks and tests.
//!
//! Generation is reproducible across platforms and languages: the PRNG is
//! SplitMix64 with the constants written out below, and bounded draws use
//! the multiply-shift reduction `(x * range) >> 64`.

use crate::word;

/// SplitMix64 generator.
///
/// Constants: increment `0x9E3779B97F4A7C15`, mix multipliers
/// `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`, shifts 30/27/31.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, bound)` via multiply-shift; `bound` must be
    /// positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Key distributions the generator can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    /// Uniform draws from `[0, beta * n)`.
    Uniform,
    /// `key_j = j * n`: exactly one in-interval key per binding-loop
    /// iteration, driving the iteration count to `n`.
    WorstCase,
    /// `n - 1` keys in `[0, n - 1]` plus a single key `>= n`, shuffled:
    /// everything but one key is sorted in the first iteration.
    BestCase,
    /// Already ascending: `key_j = j`.
    Sorted,
    /// Descending: `key_j = n - 1 - j`.
    Reverse,
    /// Every key equals the seed value (masked below `2^63`).
    AllEqual,
}

impl Distribution {
    pub fn name(&self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::WorstCase => "worst_case",
            Distribution::BestCase => "best_case",
            Distribution::Sorted => "sorted",
            Distribution::Reverse => "reverse",
            Distribution::AllEqual => "all_equal",
        }
    }
}

/// Description of a generated dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetSpec {
    pub n: usize,
    pub distribution: Distribution,
    /// Range factor: uniform keys are drawn from `[0, beta * n)`. Ignored
    /// by the other distributions.
    pub beta: f64,
    pub seed: u64,
}

/// Error from an invalid dataset description.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DatasetError {
    #[error("uniform distribution requires beta >= 1, got {0}")]
    InvalidBeta(f64),
    #[error("generated keys would exceed 2^63 - 1 (n = {n}, distribution = {distribution})")]
    RangeOverflow { n: usize, distribution: &'static str },
}

/// Generates the keys described by `spec`. Deterministic: identical specs
/// produce identical keys.
pub fn generate(spec: &DatasetSpec) -> Result<Vec<u64>, DatasetError> {
    let n = spec.n;
    let mut rng = SplitMix64::new(spec.seed);
    match spec.distribution {
        Distribution::Uniform => {
            if spec.beta < 1.0 {
                return Err(DatasetError::InvalidBeta(spec.beta));
            }
            let m = (spec.beta * n as f64).round() as u64;
            if m > word::MAX_KEY {
                return Err(DatasetError::RangeOverflow { n, distribution: "uniform" });
            }
            Ok((0..n).map(|_| if m == 0 { 0 } else { rng.below(m) }).collect())
        }
        Distribution::WorstCase => {
            let stride = n as u64;
            if n > 0 && (n as u64 - 1).checked_mul(stride).map_or(true, |k| k > word::MAX_KEY) {
                return Err(DatasetError::RangeOverflow { n, distribution: "worst_case" });
            }
            Ok((0..n as u64).map(|j| j * stride).collect())
        }
        Distribution::BestCase => {
            if n == 0 {
                return Ok(Vec::new());
            }
            let big = 2 * n as u64;
            if big > word::MAX_KEY {
                return Err(DatasetError::RangeOverflow { n, distribution: "best_case" });
            }
            let mut keys: Vec<u64> = (0..n - 1).map(|_| rng.below(n as u64)).collect();
            keys.push(big);
            shuffle(&mut keys, &mut rng);
            Ok(keys)
        }
        Distribution::Sorted => Ok((0..n as u64).collect()),
        Distribution::Reverse => Ok((0..n as u64).rev().collect()),
        Distribution::AllEqual => Ok(vec![spec.seed & word::MAX_KEY; n]),
    }
}

/// `n` raw words spanning the whole range `[0, 2^64)`, for the
/// full-universe path.
pub fn full_universe(n: usize, seed: u64) -> Vec<u64> {
    let mut rng = SplitMix64::new(seed);
    (0..n).map(|_| rng.next_u64()).collect()
}

fn shuffle(keys: &mut [u64], rng: &mut SplitMix64) {
    for i in (1..keys.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        keys.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_case_emits_stride_n() {
        let spec = DatasetSpec { n: 4, distribution: Distribution::WorstCase, beta: 1.0, seed: 0 };
        assert_eq!(generate(&spec).unwrap(), vec![0, 4, 8, 12]);
    }

    #[test]
    fn all_equal_repeats_the_seed_value() {
        let spec = DatasetSpec { n: 3, distribution: Distribution::AllEqual, beta: 1.0, seed: 5 };
        assert_eq!(generate(&spec).unwrap(), vec![5, 5, 5]);
    }

    #[test]
    fn uniform_respects_the_range() {
        let spec =
            DatasetSpec { n: 100, distribution: Distribution::Uniform, beta: 1.0, seed: 7 };
        let keys = generate(&spec).unwrap();
        assert_eq!(keys.len(), 100);
        assert!(keys.iter().all(|&k| k < 100));
    }

    #[test]
    fn uniform_rejects_beta_below_one() {
        let spec =
            DatasetSpec { n: 10, distribution: Distribution::Uniform, beta: 0.5, seed: 0 };
        assert_eq!(generate(&spec).unwrap_err(), DatasetError::InvalidBeta(0.5));
    }

    #[test]
    fn generation_is_deterministic() {
        for distribution in [
            Distribution::Uniform,
            Distribution::BestCase,
            Distribution::WorstCase,
            Distribution::Sorted,
            Distribution::Reverse,
            Distribution::AllEqual,
        ] {
            let spec = DatasetSpec { n: 50, distribution, beta: 2.0, seed: 99 };
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
    }

    #[test]
    fn best_case_has_one_large_key() {
        let spec = DatasetSpec { n: 16, distribution: Distribution::BestCase, beta: 1.0, seed: 3 };
        let keys = generate(&spec).unwrap();
        assert_eq!(keys.len(), 16);
        assert_eq!(keys.iter().filter(|&&k| k >= 16).count(), 1);
    }

    #[test]
    fn empty_datasets() {
        for distribution in [Distribution::Uniform, Distribution::WorstCase, Distribution::BestCase] {
            let spec = DatasetSpec { n: 0, distribution, beta: 1.0, seed: 1 };
            assert!(generate(&spec).unwrap().is_empty());
        }
    }
}
