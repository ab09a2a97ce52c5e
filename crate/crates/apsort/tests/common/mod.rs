//! Shared test support: multiplicity-based invariant checkers for every
//! phase, built only from the original input view. Independent of the
//! implementation path they check.

use std::collections::BTreeMap;

use apsort::phases::IterationCounters;
use apsort::word;

/// Facts about one interval view derived by direct counting on the
/// original keys.
pub struct ViewFacts {
    pub delta: u64,
    pub len: usize,
    /// Multiplicity of every in-interval key.
    pub counts: BTreeMap<u64, usize>,
    /// Out-of-interval keys, unordered.
    pub deferred: Vec<u64>,
}

impl ViewFacts {
    pub fn new(view: &[u64], delta: u64) -> Self {
        let len = view.len();
        let mut counts = BTreeMap::new();
        let mut deferred = Vec::new();
        for &k in view {
            assert!(k >= delta);
            if k - delta < len as u64 {
                *counts.entry(k).or_insert(0usize) += 1;
            } else {
                deferred.push(k);
            }
        }
        ViewFacts { delta, len, counts, deferred }
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn idles(&self) -> usize {
        self.counts.values().map(|c| c - 1).sum()
    }

    pub fn practiced(&self) -> usize {
        self.distinct() + self.idles()
    }

    /// Start position of key `k`'s run in the sorted prefix.
    pub fn run_start(&self, k: u64) -> usize {
        self.counts.range(..k).map(|(_, c)| c).sum()
    }

    /// Last position of key `k`'s run in the sorted prefix.
    pub fn run_last(&self, k: u64) -> usize {
        self.run_start(k) + self.counts[&k] - 1
    }

    pub fn sorted_in_interval(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&k, &c) in &self.counts {
            out.extend(std::iter::repeat(k).take(c));
        }
        out
    }
}

pub fn multiset(keys: &[u64]) -> Vec<u64> {
    let mut m = keys.to_vec();
    m.sort_unstable();
    m
}

/// Post-practice: one node per distinct key at its slot with record =
/// multiplicity - 1; idle occurrences untagged with original values;
/// counters consistent.
pub fn check_post_practice(facts: &ViewFacts, state: &[u64], c: &IterationCounters) {
    assert_eq!(state.len(), facts.len);
    assert_eq!(c.nodes, facts.distinct(), "n_d mismatch");
    assert_eq!(c.idles, facts.idles(), "n_c mismatch");
    assert_eq!(c.deferred, facts.deferred.len(), "n_d' mismatch");
    assert_eq!(c.nodes + c.idles + c.deferred, facts.len, "counter sum != view length");
    if let Some(&min_deferred) = facts.deferred.iter().min() {
        assert_eq!(c.deferred_min, min_deferred, "deferred minimum mismatch");
    }

    let mut record_sum = 0u64;
    let mut untagged_in = Vec::new();
    let mut untagged_out = Vec::new();
    for (p, &w) in state.iter().enumerate() {
        if word::is_node(w) {
            let key = p as u64 + facts.delta;
            let count = *facts.counts.get(&key).unwrap_or_else(|| {
                panic!("node at slot {p} for absent key {key}");
            });
            assert_eq!(word::record(w) as usize, count - 1, "record != multiplicity - 1");
            record_sum += word::record(w);
        } else if w - facts.delta < facts.len as u64 {
            untagged_in.push(w);
        } else {
            untagged_out.push(w);
        }
    }
    let tagged = state.iter().filter(|&&w| word::is_node(w)).count();
    assert_eq!(tagged, c.nodes, "tagged word count != n_d");
    assert_eq!(record_sum as usize, c.idles, "sum of records != n_c");

    // Untagged in-interval words are exactly the non-first occurrences.
    let mut expected_idles = Vec::new();
    for (&k, &count) in &facts.counts {
        expected_idles.extend(std::iter::repeat(k).take(count - 1));
    }
    assert_eq!(multiset(&untagged_in), expected_idles, "idle multiset mismatch");
    assert_eq!(multiset(&untagged_out), multiset(&facts.deferred), "deferred multiset mismatch");
}

/// Post-accumulate: every node record is the last position of its key's
/// run; untagged words unchanged as a multiset.
pub fn check_post_accumulate(facts: &ViewFacts, state: &[u64]) {
    for (p, &w) in state.iter().enumerate() {
        if word::is_node(w) {
            let key = p as u64 + facts.delta;
            assert_eq!(
                word::record(w) as usize,
                facts.run_last(key),
                "record is not the last run position of key {key}"
            );
        }
    }
}

/// Post-repractice: records are run starts, tickets fall inside their runs,
/// and records plus tickets tile {0, .., n_d + n_c - 1}.
pub fn check_post_repractice(facts: &ViewFacts, state: &[u64]) {
    let practiced = facts.practiced();
    let mut values = Vec::new();
    for (p, &w) in state.iter().enumerate() {
        if word::is_node(w) {
            let key = p as u64 + facts.delta;
            assert_eq!(
                word::record(w) as usize,
                facts.run_start(key),
                "record is not the run start of key {key}"
            );
            values.push(word::record(w) as usize);
        } else if w < facts.len as u64 {
            // A ticket: it must lie inside the run of some key, strictly
            // after the run start.
            let t = w as usize;
            let owner = facts
                .counts
                .keys()
                .find(|&&k| facts.run_start(k) < t && t <= facts.run_last(k))
                .unwrap_or_else(|| panic!("ticket {t} inside no run"));
            let _ = owner;
            values.push(t);
        }
    }
    values.sort_unstable();
    assert_eq!(values, (0..practiced).collect::<Vec<_>>(), "records + tickets do not tile");
}

/// Post-permute: prefix positions hold their own ticket or the node whose
/// key's run starts there; the tail is the deferred multiset.
pub fn check_post_permute(facts: &ViewFacts, state: &[u64]) {
    let practiced = facts.practiced();
    for (p, &w) in state.iter().take(practiced).enumerate() {
        if word::is_node(w) {
            let key = word::record(w) + facts.delta;
            assert!(facts.counts.contains_key(&key), "cue decodes to absent key {key}");
            assert_eq!(facts.run_start(key), p, "node not at run start of key {key}");
        } else {
            assert_eq!(w as usize, p, "ticket not on its own slot");
        }
    }
    assert_eq!(
        multiset(&state[practiced..]),
        multiset(&facts.deferred),
        "tail is not the deferred multiset"
    );
}

/// Post-restore: prefix equals the counting-sorted in-interval keys, no
/// word tagged.
pub fn check_post_restore(facts: &ViewFacts, state: &[u64]) {
    let practiced = facts.practiced();
    assert!(state.iter().take(practiced).all(|&w| !word::is_node(w)));
    assert_eq!(&state[..practiced], &facts.sorted_in_interval()[..], "restored prefix mismatch");
}

/// Explicit cycle decomposition of the post-repractice target permutation:
/// asserts that no cycle of length > 1 consists of nodes only.
pub fn check_no_node_only_cycles(state: &[u64]) {
    for (start, &w) in state.iter().enumerate() {
        if !word::is_node(w) {
            continue;
        }
        let mut cursor = start;
        let mut hops = 0usize;
        loop {
            let target = word::record(state[cursor]) as usize;
            hops += 1;
            assert!(hops <= state.len(), "target chain longer than the list");
            if target == start {
                assert_eq!(hops, 1, "node-only cycle of length {hops} starting at {start}");
                break;
            }
            if !word::is_node(state[target]) {
                break;
            }
            cursor = target;
        }
    }
}

/// Runs the binding loop phase by phase, applying every checker on every
/// iteration, and finally compares the result with the oracle.
pub fn check_all_phases(keys: &[u64]) {
    let mut work = keys.to_vec();
    let n = work.len();
    let mut offset = 0;
    let mut delta = match work.iter().min() {
        Some(&d) => d,
        None => return,
    };
    loop {
        let view = &mut work[offset..];
        let facts = ViewFacts::new(view, delta);
        let deferred_min_init = *view.iter().max().expect("non-empty view");

        let counters = apsort::practice::<()>(view, None, delta, deferred_min_init);
        check_post_practice(&facts, view, &counters);
        apsort::accumulate(view);
        check_post_accumulate(&facts, view);
        apsort::repractice(view, delta);
        check_post_repractice(&facts, view);
        check_no_node_only_cycles(view);
        apsort::permute::<()>(view, None, &counters);
        check_post_permute(&facts, view);
        apsort::restore(view, delta, counters.practiced());
        check_post_restore(&facts, view);

        offset += counters.practiced();
        if counters.deferred == 0 {
            break;
        }
        delta = counters.deferred_min;
    }
    assert_eq!(offset, n);
    assert_eq!(work, apsort::baselines::oracle_sort(keys));
}
