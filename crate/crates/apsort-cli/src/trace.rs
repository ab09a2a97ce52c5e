//! Phase-by-phase snapshots of the first binding-loop iteration.

use apsort::phases::{self, IterationCounters};
use apsort::word;

/// The five phases of one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Phase {
    Practice,
    Accumulate,
    Repractice,
    Permute,
    Restore,
}

pub const ALL_PHASES: [Phase; 5] =
    [Phase::Practice, Phase::Accumulate, Phase::Repractice, Phase::Permute, Phase::Restore];

/// The list state after one phase of the first iteration. Words render as
/// `node(R)` or decimal values; the rendering round-trips to the exact
/// word values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseSnapshot {
    pub phase: Phase,
    pub words: Vec<u64>,
    pub counters: IterationCounters,
}

impl PhaseSnapshot {
    pub fn rendered(&self) -> String {
        word::render_words(&self.words)
    }
}

/// Runs the first iteration over a copy of `keys`, snapshotting the list
/// after every phase. Empty input yields no snapshots.
pub fn first_iteration(keys: &[u64]) -> Vec<PhaseSnapshot> {
    if keys.is_empty() {
        return Vec::new();
    }
    let mut work = keys.to_vec();
    let delta = *work.iter().min().expect("non-empty");
    let deferred_min = *work.iter().max().expect("non-empty");
    let mut snapshots = Vec::with_capacity(5);
    let mut snap = |phase: Phase, words: &[u64], counters: IterationCounters| {
        snapshots.push(PhaseSnapshot { phase, words: words.to_vec(), counters });
    };

    let counters = phases::practice::<()>(&mut work, None, delta, deferred_min);
    snap(Phase::Practice, &work, counters);
    phases::accumulate(&mut work);
    snap(Phase::Accumulate, &work, counters);
    phases::repractice(&mut work, delta);
    snap(Phase::Repractice, &work, counters);
    phases::permute::<()>(&mut work, None, &counters);
    snap(Phase::Permute, &work, counters);
    phases::restore(&mut work, delta, counters.practiced());
    snap(Phase::Restore, &work, counters);
    snapshots
}
