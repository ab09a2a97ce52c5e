//! The five in-place phases of one sorting iteration.
//!
//! One iteration handles the *practiced interval* `[delta, delta + n - 1]`
//! of an `n`-element view, where `delta` is the view minimum:
//!
//! 1. [`practice`] maps every in-interval key to its slot, creating one
//!    tagged node per distinct key whose record counts the other
//!    occurrences (*idle keys*).
//! 2. [`accumulate`] turns the counts into cumulative positions: each
//!    record becomes the last slot of its key's run in the sorted prefix.
//! 3. [`repractice`] hands each idle key a *ticket* (its exact sorted
//!    position) from its node, counting the record down; records end at
//!    the run starts.
//! 4. [`permute`] rearranges the view with nested cycle-leader runs:
//!    tickets land on their own slots, nodes land on their run starts with
//!    their former slot stored as the retrieval cue, deferred keys move to
//!    the tail.
//! 5. [`restore`] decodes every node back into its key and copies it over
//!    the tickets that follow it.
//!
//! After the five phases the first `n_d + n_c` slots hold the sorted
//! in-interval keys and the tail holds the deferred keys in arbitrary
//! order. All phases run in place; the only auxiliary state is a handful
//! of counters and indices.

use crate::hash;
use crate::word;

/// Per-iteration counters of the binding loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IterationCounters {
    /// Number of nodes created, i.e. distinct practiced keys (n_d).
    pub nodes: usize,
    /// Number of idle keys practiced, i.e. repeated occurrences (n_c).
    pub idles: usize,
    /// Number of keys deferred past the interval (n_d').
    pub deferred: usize,
    /// Minimum key of the interval (the delta of this iteration).
    pub interval_min: u64,
    /// Running minimum of the deferred keys (the delta of the next
    /// iteration). Equals the view maximum when nothing was deferred.
    pub deferred_min: u64,
}

impl IterationCounters {
    /// Number of elements sorted by this iteration.
    pub fn practiced(&self) -> usize {
        self.nodes + self.idles
    }
}

#[inline(always)]
fn swap_pair<P>(keys: &mut [u64], payloads: &mut Option<&mut [P]>, a: usize, b: usize) {
    keys.swap(a, b);
    if let Some(p) = payloads.as_deref_mut() {
        p.swap(a, b);
    }
}

/// Practices every key of the interval `[delta, delta + n - 1]`.
///
/// The first occurrence of each distinct key turns the word at its slot
/// into a node; the displaced occupant moves to the practicing position and
/// the two payloads swap, so the node carries the creating element's
/// payload. Further occurrences only increment the node's record and stay
/// idle. Deferred keys are counted and their minimum is tracked starting
/// from `deferred_min` (initialized by the caller to the view maximum).
///
/// No input word may be tagged; this is checked in debug builds.
pub fn practice<P>(
    keys: &mut [u64],
    mut payloads: Option<&mut [P]>,
    delta: u64,
    deferred_min: u64,
) -> IterationCounters {
    let n = keys.len();
    debug_assert!(payloads.as_ref().map_or(true, |p| p.len() == n));
    debug_assert!(keys.iter().all(|&w| !word::is_node(w)), "tagged input word");
    let mut counters = IterationCounters {
        interval_min: delta,
        deferred_min,
        ..IterationCounters::default()
    };
    let mut i = 0;
    while i < n {
        let w = keys[i];
        if word::is_node(w) {
            i += 1;
            continue;
        }
        match hash::slot(w, delta, n) {
            None => {
                counters.deferred += 1;
                counters.deferred_min = counters.deferred_min.min(w);
                i += 1;
            }
            Some(j) if word::is_node(keys[j]) => {
                // Another occurrence: count it on the node, leave it idle.
                keys[j] += 1;
                counters.idles += 1;
                i += 1;
            }
            Some(j) => {
                // First occurrence: create the node at its slot, move the
                // displaced occupant here. Positions at or before the scan
                // have already been handled, so skip past them.
                keys[i] = keys[j];
                keys[j] = word::node(0);
                if let Some(p) = payloads.as_deref_mut() {
                    p.swap(i, j);
                }
                if j <= i {
                    i += 1;
                }
                counters.nodes += 1;
            }
        }
    }
    counters
}

/// Sums the node records from left to right.
///
/// With a running total `j` starting at 0, each record `r` becomes `r + j`
/// and `j` advances past the node's own slot to `r + j + 1`. Each record
/// then equals the last position of its key's run in the sorted prefix.
pub fn accumulate(keys: &mut [u64]) {
    let mut next = 0u64;
    for w in keys.iter_mut() {
        if word::is_node(*w) {
            let rec = word::record(*w) + next;
            *w = word::node(rec);
            next = rec + 1;
        }
    }
}

/// Re-practices the idle keys from right to left.
///
/// Each idle key is overwritten with its node's current record (its
/// ticket) and the record counts down by one. Afterwards the node records
/// and tickets together tile `{0, .., n_d + n_c - 1}` and each record
/// equals the start of its key's run.
pub fn repractice(keys: &mut [u64], delta: u64) {
    let n = keys.len();
    for i in (0..n).rev() {
        let w = keys[i];
        if word::is_node(w) {
            continue;
        }
        if let Some(j) = hash::slot(w, delta, n) {
            let ticket = word::record(keys[j]);
            keys[i] = ticket;
            keys[j] = word::node(ticket - 1);
        }
    }
}

/// Permutes the view so every practiced element reaches its sorted
/// position and the deferred keys collect at the tail.
///
/// The outer scan covers `[0, n_d + n_c)` and reactivates only untagged
/// words: a ticket is swapped to its own slot, a deferred key to the next
/// free tail slot. Whenever a swap deposits a node at the scan position an
/// inner cycle-leader run moves nodes to their record positions, encoding
/// each node's former slot into its record as the retrieval cue; the run
/// closes when a node's target is the scan position itself. Every swap is
/// mirrored on the payloads.
pub fn permute<P>(keys: &mut [u64], mut payloads: Option<&mut [P]>, counters: &IterationCounters) {
    let n = keys.len();
    let practiced = counters.practiced();
    let mut tail = practiced;
    let mut i = 0;
    #[cfg(debug_assertions)]
    let mut guard = 0usize;
    while i < practiced {
        #[cfg(debug_assertions)]
        {
            guard += 1;
            debug_assert!(guard <= 6 * n + 8, "permute did not terminate: phase contract violated");
        }
        let w = keys[i];
        if word::is_node(w) {
            i += 1;
            continue;
        }
        if w == i as u64 {
            // A ticket already on its own slot is final.
            i += 1;
            continue;
        }
        // Former slot of whatever lands at the scan position next.
        let mut former;
        if (w as u64) < n as u64 {
            let j = w as usize;
            swap_pair(keys, &mut payloads, i, j);
            former = j;
        } else {
            swap_pair(keys, &mut payloads, i, tail);
            former = tail;
            tail += 1;
        }
        // Inner cycle-leader run over nodes.
        while word::is_node(keys[i]) {
            let target = word::record(keys[i]) as usize;
            swap_pair(keys, &mut payloads, i, target);
            keys[target] = word::node(former as u64);
            if target == i {
                break;
            }
            former = target;
        }
    }
    debug_assert!(tail <= n);
}

/// Restores the original key values over the permuted prefix.
///
/// Each node's record is its former slot; the inverse hash decodes it back
/// to the key, which overwrites the node and every ticket up to the next
/// node. The prefix `[0, n_d + n_c)` then holds the ascending sorted
/// in-interval keys with no word tagged. Payloads are already in place.
pub fn restore(keys: &mut [u64], delta: u64, practiced: usize) {
    let mut current = 0u64;
    for i in 0..practiced {
        let w = keys[i];
        if word::is_node(w) {
            current = hash::key_for(word::record(w) as usize, delta);
            keys[i] = current;
        } else {
            debug_assert!(i > 0, "prefix must start with a node");
            keys[i] = current;
        }
    }
}

/// Runs all five phases on one view: the sorted in-interval keys end up in
/// the first `n_d + n_c` slots, the deferred keys in the tail.
pub fn sort_interval<P>(
    keys: &mut [u64],
    mut payloads: Option<&mut [P]>,
    delta: u64,
    deferred_min: u64,
) -> IterationCounters {
    let counters = practice(keys, payloads.as_deref_mut(), delta, deferred_min);
    accumulate(keys);
    repractice(keys, delta);
    permute(keys, payloads.as_deref_mut(), &counters);
    restore(keys, delta, counters.practiced());
    counters
}
