//! The binding loop and the public sorting entry points.
//!
//! [`KeyedList::sort`] repeatedly runs one five-phase iteration on the
//! unsorted suffix: the practiced interval of each iteration lands sorted
//! at the front of the suffix and the deferred keys shrink the suffix for
//! the next round. The minimum of the next suffix is already known from
//! the deferred-minimum tracked while practicing, so only the maximum is
//! re-scanned.

use std::ops::Range;
use std::time::{Duration, Instant};

use crate::phases::{self, IterationCounters};
use crate::word;

/// Error returned when a key needs the tag bit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SortError {
    /// A key occupies bit 63, which is reserved for tagging. Use
    /// [`KeyedList::sort_full_universe`] for keys spanning the whole word.
    #[error("key {key} at index {index} uses the tag bit; sort accepts keys below 2^63")]
    KeyOutOfRange { index: usize, key: u64 },
}

/// Summary of one sort run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortReport {
    /// Number of binding-loop iterations.
    pub iterations: usize,
    /// Counter snapshot of every iteration, in order.
    pub per_iteration: Vec<IterationCounters>,
    /// Wall-clock time of the sort call.
    pub elapsed: Duration,
    /// Whether the output keys are non-decreasing.
    pub verified: bool,
}

/// A buffer of keys with an optional parallel payload buffer.
///
/// This is the only O(n) storage in the system: every phase mutates it in
/// place. Structural moves on the keys are mirrored on the payloads, so a
/// payload stays attached to its key across the sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyedList<P = ()> {
    keys: Vec<u64>,
    payloads: Option<Vec<P>>,
}

impl KeyedList<()> {
    /// A keys-only list.
    pub fn new(keys: Vec<u64>) -> Self {
        KeyedList { keys, payloads: None }
    }
}

impl<P> KeyedList<P> {
    /// A list of keys with one payload per key.
    ///
    /// Panics if the lengths differ.
    pub fn with_payloads(keys: Vec<u64>, payloads: Vec<P>) -> Self {
        assert_eq!(keys.len(), payloads.len(), "keys and payloads must have equal length");
        KeyedList { keys, payloads: Some(payloads) }
    }

    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn payloads(&self) -> Option<&[P]> {
        self.payloads.as_deref()
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn into_parts(self) -> (Vec<u64>, Option<Vec<P>>) {
        (self.keys, self.payloads)
    }

    /// Sorts the list, calling `visit` once per binding-loop iteration.
    ///
    /// Returns the iteration count. This entry point performs no dynamic
    /// allocation; all auxiliary state is a fixed number of words.
    pub fn sort_with(&mut self, visit: impl FnMut(&IterationCounters)) -> Result<usize, SortError> {
        binding_loop(&mut self.keys, self.payloads.as_deref_mut(), visit)
    }

    /// Sorts the list and collects a per-iteration report.
    pub fn sort(&mut self) -> Result<SortReport, SortError> {
        let start = Instant::now();
        let mut per_iteration = Vec::new();
        let iterations = self.sort_with(|c| per_iteration.push(*c))?;
        let elapsed = start.elapsed();
        let verified = self.keys.is_sorted();
        Ok(SortReport { iterations, per_iteration, elapsed, verified })
    }

    /// Partitions the list in place into keys below `2^63` followed by
    /// keys at or above, subtracts `2^63` from the upper part, and returns
    /// the boundary. The partition is unstable; payload moves are
    /// mirrored.
    pub fn split_universe(&mut self) -> usize {
        split_universe(&mut self.keys, self.payloads.as_deref_mut())
    }

    /// Sorts keys spanning the full word range `[0, 2^64)`: splits the
    /// universe, sorts both halves, and restores the upper half's offset.
    pub fn sort_full_universe(&mut self) -> SortReport {
        let start = Instant::now();
        let boundary = self.split_universe();
        // Both halves are below 2^63 now, so neither sort can fail.
        let (lo_keys, hi_keys) = self.keys.split_at_mut(boundary);
        let (lo_pay, hi_pay) = match self.payloads.as_deref_mut() {
            Some(p) => {
                let (a, b) = p.split_at_mut(boundary);
                (Some(a), Some(b))
            }
            None => (None, None),
        };
        let mut per_iteration = Vec::new();
        let mut collect = |c: &IterationCounters| per_iteration.push(*c);
        let lo_iters = binding_loop(lo_keys, lo_pay, &mut collect).expect("keys below 2^63");
        let hi_iters = binding_loop(hi_keys, hi_pay, &mut collect).expect("keys below 2^63");
        for w in hi_keys.iter_mut() {
            *w += word::TAG;
        }
        let elapsed = start.elapsed();
        let verified = self.keys.is_sorted();
        SortReport {
            iterations: lo_iters + hi_iters,
            per_iteration,
            elapsed,
            verified,
        }
    }
}

/// The binding loop over raw buffers. Keys must stay below `2^63`.
pub fn binding_loop<P>(
    keys: &mut [u64],
    mut payloads: Option<&mut [P]>,
    mut visit: impl FnMut(&IterationCounters),
) -> Result<usize, SortError> {
    if let Some(index) = keys.iter().position(|&k| k > word::MAX_KEY) {
        return Err(SortError::KeyOutOfRange { index, key: keys[index] });
    }
    let n = keys.len();
    if n == 0 {
        return Ok(0);
    }
    let mut offset = 0;
    let mut iterations = 0;
    // First iteration scans for the minimum; afterwards the deferred
    // minimum of the previous iteration is the next delta.
    let mut delta = *keys.iter().min().expect("non-empty");
    loop {
        let tail = &mut keys[offset..];
        let deferred_min_init = *tail.iter().max().expect("non-empty");
        let tail_pay = payloads.as_deref_mut().map(|p| &mut p[offset..]);
        let counters = phases::sort_interval(tail, tail_pay, delta, deferred_min_init);
        iterations += 1;
        visit(&counters);
        offset += counters.practiced();
        if counters.deferred == 0 {
            break;
        }
        delta = counters.deferred_min;
    }
    Ok(iterations)
}

/// In-place unstable partition into `S1 < 2^63 <= S2`; the upper part is
/// shifted down by `2^63`. Returns the boundary index.
pub fn split_universe<P>(keys: &mut [u64], mut payloads: Option<&mut [P]>) -> usize {
    let mut lo = 0;
    let mut hi = keys.len();
    while lo < hi {
        if keys[lo] <= word::MAX_KEY {
            lo += 1;
        } else {
            hi -= 1;
            keys.swap(lo, hi);
            if let Some(p) = payloads.as_deref_mut() {
                p.swap(lo, hi);
            }
        }
    }
    for w in keys[lo..].iter_mut() {
        *w -= word::TAG;
    }
    lo
}

/// Groups the words by the top `ceil(log2 n)` bits of their low 63 bits.
///
/// One pass of the technique with the derived high bits as keys: the
/// output is grouped by high-bits value in ascending group order, each
/// group contiguous with arbitrary internal order. Returns the group
/// ranges. No recursion into groups is performed.
pub fn sort_by_high_bits(keys: &mut [u64]) -> Vec<Range<usize>> {
    let n = keys.len();
    debug_assert!(keys.iter().all(|&w| !word::is_node(w)), "tagged input word");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![0..1];
    }
    let bits = usize::BITS - (n - 1).leading_zeros(); // ceil(log2 n)
    let shift = (word::WORD_BITS - 1) - bits;
    // The derived keys are sorted with the full original words riding
    // along as payloads; a node releases its word, so the word itself must
    // travel on the payload channel to survive.
    let mut derived: Vec<u64> = keys.iter().map(|&w| w >> shift).collect();
    binding_loop(&mut derived, Some(keys), |_| {}).expect("derived keys below 2^63");
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..n {
        if derived[i] != derived[i - 1] {
            groups.push(start..i);
            start = i;
        }
    }
    groups.push(start..n);
    groups
}
